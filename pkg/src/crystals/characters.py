"""Independent character-formula oracle.

Weyl dimension, Freudenthal weight multiplicities, Klimyk tensor
decomposition, branching by character stripping, and weight membership.
Everything is exact integer arithmetic.  The Weyl vector rho is never
materialized: all formulas go through pairings with simple coroots, using
<rho, coroot_i> = 1 (so reductive data with central directions need no
half-integer lattice).

This module is deliberately independent of the path-model crystal engine;
the two must agree and the test suite enforces that.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .root_data import (
    InputError,
    InternalError,
    RootDatum,
    check_weight,
    dominant_representative,
    dominance_leq,
    is_dominant,
    levi_datum,
    pairing,
    positive_roots,
    root_coords,
)


@dataclass
class CharacterTable:
    highest_weight: tuple
    mults: dict = field(default_factory=dict)  # weight -> positive multiplicity

    @property
    def dimension(self):
        return sum(self.mults.values())

    def to_json(self):
        return {
            "highest_weight": list(self.highest_weight),
            "table": [{"mu": list(w), "mult": m} for w, m in sorted(self.mults.items())],
        }


def _require_dominant(rd, lam, levi=None):
    lam = check_weight(rd, lam)
    indices = rd.index_set if levi is None else levi
    for i in indices:
        if pairing(rd, lam, i) < 0:
            raise InputError(f"weight {lam} is not dominant: <.,coroot_{i}> < 0")
    return lam


@functools.cache
def _symmetrizer(rd: RootDatum):
    """Minimal positive integers d with d_p a_pq = d_q a_qp (per position)."""
    from fractions import Fraction
    from math import lcm

    l = len(rd.index_set)
    a = [[sum(x * y for x, y in zip(alpha, cor)) for alpha in rd.simple_roots]
         for cor in rd.simple_coroots]
    d = [None] * l
    for start in range(l):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            p = stack.pop()
            for q in range(l):
                if a[p][q] != 0 and p != q and d[q] is None:
                    d[q] = d[p] * a[p][q] / a[q][p]
                    stack.append(q)
    denom = lcm(*(x.denominator for x in d)) if l else 1
    vals = [x * denom for x in d]
    from math import gcd
    g = 0
    for x in vals:
        g = gcd(g, x.numerator)
    return tuple(int(x / g) for x in vals) if l else ()


def weyl_dim(rd: RootDatum, lam, levi=None):
    """dim V^lam = prod over positive coroots of <lam+rho, cor>/<rho, cor>."""
    sub = rd if levi is None else levi_datum(rd, levi)
    lam = _require_dominant(sub, lam)
    num = den = 1
    pair_plus1 = [pairing(sub, lam, i) + 1 for i in sub.index_set]
    for pr in positive_roots(sub):
        num *= sum(c * p for c, p in zip(pr.coroot_coords, pair_plus1))
        den *= sum(pr.coroot_coords)
    if num % den:
        raise InternalError("Weyl dimension is not an integer")
    return num // den


@functools.lru_cache(maxsize=64)
def _freudenthal(sub: RootDatum, lam):
    simple_roots = sub.simple_roots
    simple_coroots = sub.simple_coroots
    l = len(sub.index_set)
    d_sym = _symmetrizer(sub)
    lam_pair = [sum(x * y for x, y in zip(lam, cor)) for cor in simple_coroots]

    # enumerate the support {nu : dominant rep of nu <= lam} by walking down
    # simple roots from lam; membership via an incremental dominant walk
    nvec = {lam: (0,) * l}
    member = {lam: True}
    dom_of = {lam: lam}
    queue = [lam]
    while queue:
        nu = queue.pop()
        base = nvec[nu]
        for p in range(l):
            alpha = simple_roots[p]
            child = tuple(x - a for x, a in zip(nu, alpha))
            if child in member:
                continue
            n = list(base)
            n[p] += 1
            w = list(child)
            m = n[:]
            while True:
                for q in range(l):
                    c = sum(x * y for x, y in zip(w, simple_coroots[q]))
                    if c < 0:
                        aq = simple_roots[q]
                        for k in range(len(w)):
                            w[k] -= c * aq[k]
                        m[q] += c
                        break
                else:
                    break
            ok = all(x >= 0 for x in m)
            member[child] = ok
            if ok:
                nvec[child] = tuple(n)
                dom_of[child] = tuple(w)
                queue.append(child)

    support = sorted(nvec, key=lambda nu: (sum(nvec[nu]), nu))
    pos = positive_roots(sub)
    # weighting covector for (., alpha): dot with sum_p c_p d_p coroot_p
    wvecs = []
    for pr in pos:
        acc = [0] * sub.rank
        for p, c in enumerate(pr.root_coords):
            if c:
                cd = c * d_sym[p]
                cor = simple_coroots[p]
                for k in range(sub.rank):
                    acc[k] += cd * cor[k]
        wvecs.append((pr.root, tuple(acc)))

    mults = {}
    stables = [dict() for _ in pos]
    for nu in support:
        if nu == lam:
            mults[lam] = 1
            for st in stables:
                st[lam] = 0
            continue
        rhs = 0
        for (alpha, wvec), st in zip(wvecs, stables):
            up = tuple(x + a for x, a in zip(nu, alpha))
            s = 0
            mup = mults.get(up)
            if mup is not None:
                s = st[up] + mup * sum(x * y for x, y in zip(up, wvec))
            st[nu] = s
            rhs += s
        nu_pair = [sum(x * y for x, y in zip(nu, cor)) for cor in simple_coroots]
        if all(x >= 0 for x in nu_pair):
            n = nvec[nu]
            delta = sum(n[p] * d_sym[p] * (lam_pair[p] + nu_pair[p] + 2) for p in range(l))
            if delta <= 0 or (2 * rhs) % delta:
                raise InternalError("Freudenthal recursion produced a non-integer")
            mults[nu] = (2 * rhs) // delta
        else:
            mults[nu] = mults[dom_of[nu]]

    table = CharacterTable(lam, mults)
    if table.dimension != weyl_dim(sub, lam):
        raise InternalError("Freudenthal total does not match the Weyl dimension")
    return table


def freudenthal(rd: RootDatum, lam, levi=None):
    """Exact weight multiplicities of V^lam by the Freudenthal recursion."""
    sub = rd if levi is None else levi_datum(rd, levi)
    lam = _require_dominant(sub, lam)
    return _freudenthal(sub, lam)


def klimyk(rd: RootDatum, lam1, lam2, levi=None):
    """Decomposition of V^lam1 (x) V^lam2 as {highest weight: multiplicity}.

    For each weight nu of V^lam2 the vector lam1+nu is moved to the dominant
    chamber under the rho-shifted action (v -> s_i(v) - alpha_i); singular
    vectors drop out, signs accumulate.
    """
    sub = rd if levi is None else levi_datum(rd, levi)
    lam1 = _require_dominant(sub, lam1)
    lam2 = _require_dominant(sub, lam2)
    table = freudenthal(sub, lam2)
    out = {}
    indices = sub.index_set
    for nu in sorted(table.mults):
        m = table.mults[nu]
        v = tuple(x + y for x, y in zip(lam1, nu))
        sign = 1
        for _ in range(1_000_000):
            step = None
            for i in indices:
                c = pairing(sub, v, i) + 1
                if c == 0:
                    sign = 0
                    break
                if c < 0:
                    step = (sub.pos(i), c)
                    break
            if sign == 0 or step is None:
                break
            p, c = step
            alpha = sub.simple_roots[p]
            v = tuple(x - c * a for x, a in zip(v, alpha))
            sign = -sign
        else:
            raise InternalError("dominant chamber walk did not terminate")
        if sign:
            out[v] = out.get(v, 0) + sign * m
    out = {w: c for w, c in out.items() if c}
    if any(c < 0 for c in out.values()):
        raise InternalError("Klimyk accumulation left a negative multiplicity")
    return dict(sorted(out.items()))


def branch_by_characters(rd: RootDatum, lam, levi):
    """Branching multiplicities by character stripping: repeatedly remove the
    full Levi character of an L-maximal L-dominant weight of the remainder.
    Independent of the crystal engine (same BranchResult shape as branch)."""
    from .branching import BranchResult  # local import breaks the module cycle

    levi = tuple(sorted(levi))
    lam = _require_dominant(rd, lam)
    sub = levi_datum(rd, levi)
    remaining = dict(freudenthal(rd, lam).mults)
    levi_pos = [rd.index_set.index(i) for i in levi]
    levi_ht = {}
    for nu in remaining:
        n = root_coords(rd, tuple(a - b for a, b in zip(lam, nu)))
        levi_ht[nu] = sum(n[p] for p in levi_pos)
    table = {}
    while remaining:
        # minimal Levi-height of lam - nu picks an L-maximal weight, and an
        # L-maximal weight of a W_L-invariant remainder is L-dominant
        best = min(remaining, key=lambda nu: (levi_ht[nu], tuple(-x for x in nu)))
        if not is_dominant(rd, best, levi):
            raise InternalError("L-maximal remainder weight is not L-dominant")
        n_nu = remaining[best]
        if n_nu <= 0:
            raise InternalError("character stripping produced a nonpositive multiplicity")
        for w, m in freudenthal(sub, best).mults.items():
            have = remaining.get(w, 0) - n_nu * m
            if have < 0:
                raise InternalError("character stripping went negative")
            if have:
                remaining[w] = have
            else:
                remaining.pop(w, None)
        table[best] = n_nu
    return BranchResult(levi=levi, table=dict(sorted(table.items())))


def is_weight(rd: RootDatum, lam, mu, levi=None):
    """True iff mu is a weight of V^lam.  Computed two independent ways
    (dominance test and Freudenthal membership) which must agree."""
    sub = rd if levi is None else levi_datum(rd, levi)
    lam = _require_dominant(sub, lam)
    mu = check_weight(sub, mu)
    dom, _ = dominant_representative(sub, mu)
    by_dominance = dominance_leq(sub, dom, lam)
    by_mult = mu in freudenthal(sub, lam).mults
    if by_dominance != by_mult:
        raise InternalError("weight-membership methods disagree "
                            f"(dominance={by_dominance}, multiplicity={by_mult})")
    return by_dominance
