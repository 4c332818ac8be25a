"""Restriction to a Levi subgroup: branching tables, the ceiling weight,
filtered branching-support sets, the component-pairing bijection, and
string-structure certificates.

Branching multiplicities are computed by counting Levi-highest crystal
elements; the character-stripping oracle in `characters` recomputes them
along an independent route, and the two must agree.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import characters
from .crystal_graph import build_crystal, decompose
from .reports import CheckReport
from .root_data import (
    InputError,
    InternalError,
    RootDatum,
    central_class,
    check_weight,
    dominance_leq,
    levi_datum,
    root_coords,
)


@dataclass
class BranchResult:
    levi: tuple
    table: dict  # L-dominant weight -> multiplicity >= 1

    def to_json(self):
        return {
            "levi": list(self.levi),
            "table": [{"nu": list(w), "mult": m} for w, m in sorted(self.table.items())],
        }


def branch(rd: RootDatum, lam, levi, max_elements=None) -> BranchResult:
    """Restriction of B(lam) to the Levi on `levi`: the multiplicity of the
    L-irreducible with highest weight nu is the number of Levi-highest
    elements of weight nu."""
    levi = tuple(sorted(levi))
    for i in levi:
        rd.pos(i)
    c = build_crystal(rd, lam, max_elements=max_elements)
    return BranchResult(levi=levi, table=decompose(c, levi))


def levi_ceiling(rd: RootDatum, lam, mu, levi):
    """The ceiling weight mu + sum over the Levi indices of n_i alpha_i,
    where lam - mu = sum n_i alpha_i over the full index set.  Requires
    mu <= lam (the difference must be a nonnegative integer root
    combination; otherwise the corresponding slice is empty)."""
    lam = check_weight(rd, lam)
    mu = check_weight(rd, mu)
    levi = tuple(sorted(levi))
    coords = root_coords(rd, tuple(a - b for a, b in zip(lam, mu)))
    if coords is None or not all(isinstance(c, int) and c >= 0 for c in coords):
        raise InputError(f"{mu} is not below {lam} in the dominance order")
    out = list(mu)
    for i in levi:
        p = rd.pos(i)
        n = coords[p]
        alpha = rd.simple_roots[p]
        for k in range(rd.rank):
            out[k] += n * alpha[k]
    return tuple(out)


def branching_support(rd: RootDatum, lam, levi, mu=None, theta=None, max_elements=None):
    """The set of L-highest weights appearing in the restriction of B(lam),
    optionally filtered: by a weight mu (keep nu whose L-module contains mu)
    or by a central class theta (keep nu in that class).  Sorted list."""
    if mu is not None and theta is not None:
        raise InputError("pass at most one of mu and theta")
    levi = tuple(sorted(levi))
    table = branch(rd, lam, levi, max_elements=max_elements).table
    out = []
    for nu in table:
        if mu is not None and not characters.is_weight(rd, nu, mu, levi=levi):
            continue
        if theta is not None and central_class(rd, nu, levi) != theta:
            continue
        out.append(nu)
    return sorted(out)


def _levi_components(c, levi):
    """Partition of a crystal graph into Levi components; returns
    (component id per element, list of components as element lists)."""
    comp = [None] * len(c)
    comps = []
    for x in c.ids():
        if comp[x] is not None:
            continue
        cid = len(comps)
        stack = [x]
        comp[x] = cid
        members = [x]
        while stack:
            y = stack.pop()
            for i in levi:
                for z in (c.e(y, i), c.f(y, i)):
                    if z is not None and comp[z] is None:
                        comp[z] = cid
                        members.append(z)
                        stack.append(z)
        comps.append(sorted(members))
    return comp, comps


def _transport_component(c, levi, head, target):
    """Unique Levi-crystal isomorphism from the component of `head` onto the
    freshly built target crystal, by operator-word transport."""
    images = {head: target.highest}
    queue = [head]
    while queue:
        x = queue.pop()
        img = images[x]
        for i in levi:
            for move in ("f", "e"):
                y = c.f(x, i) if move == "f" else c.e(x, i)
                if y is None:
                    continue
                t = target.f(img, i) if move == "f" else target.e(img, i)
                if t is None:
                    raise InternalError("component transport left the target crystal")
                if y in images:
                    if images[y] != t:
                        raise InternalError("component transport is inconsistent")
                else:
                    images[y] = t
                    queue.append(y)
    return images


def component_bijection_check(rd: RootDatum, lam, mu, levi, max_elements=None) -> CheckReport:
    """Certify that the mu-weight fiber of B(lam) is the disjoint union,
    over L-highest weights nu, of n_nu copies of the mu-fiber of the Levi
    crystal B_L(nu), and build the explicit pairing.

    Geometric index sets are represented only by cardinalities and crystal
    labels here; no varieties are computed.
    """
    levi = tuple(sorted(levi))
    mu = check_weight(rd, mu)
    c = build_crystal(rd, lam, max_elements=max_elements)
    sub = levi_datum(rd, levi)
    report = CheckReport(name=f"component pairing at weight {mu}")
    comp, comps = _levi_components(c, levi)

    heads = []
    for members in comps:
        hs = [x for x in members
              if all(c.e(x, i) is None for i in levi)]
        if len(hs) != 1:
            report.add(f"component {members[:3]}... has {len(hs)} Levi-highest elements")
            heads.append(None)
        else:
            heads.append(hs[0])

    # slot components by their highest weight, in deterministic order
    slots = {}
    by_nu = {}
    for cid, head in enumerate(heads):
        if head is None:
            continue
        nu = c.weight(head)
        slots[cid] = by_nu.setdefault(nu, 0)
        by_nu[nu] += 1

    levi_fibers = {}
    transports = {}
    for cid, head in enumerate(heads):
        if head is None:
            continue
        nu = c.weight(head)
        if nu not in levi_fibers:
            target = build_crystal(sub, nu, max_elements=max_elements)
            fiber = sorted(x for x in target.ids() if target.weight(x) == mu)
            levi_fibers[nu] = (target, {x: k for k, x in enumerate(fiber)})
        transports[cid] = _transport_component(c, levi, head, levi_fibers[nu][0])

    table = []
    seen = set()
    for x in sorted(y for y in c.ids() if c.weight(y) == mu):
        cid = comp[x]
        if heads[cid] is None:
            continue
        nu = c.weight(heads[cid])
        pos = levi_fibers[nu][1].get(transports[cid][x])
        report.checked += 1
        if pos is None:
            report.add(f"element {x} lands outside the Levi mu-fiber")
            continue
        key = (nu, slots[cid], pos)
        if key in seen:
            report.add(f"pairing repeats the slot {key}")
        seen.add(key)
        table.append([x, [list(nu), slots[cid], pos]])

    fiber_size = sum(1 for y in c.ids() if c.weight(y) == mu)
    expected = sum(by_nu[nu] * len(levi_fibers[nu][1]) for nu in by_nu if nu in levi_fibers)
    report.checked += 1
    if fiber_size != expected or len(seen) != fiber_size:
        report.add(f"cardinalities differ: |B(lam)_mu| = {fiber_size}, "
                   f"paired total = {expected}")
    report.details = {
        "fiber_size": fiber_size,
        "multiplicities": {str(list(nu)): n for nu, n in sorted(by_nu.items())},
        "bijection": table,
    }
    return report


def string_structure_check(c, i) -> CheckReport:
    """Certify that the {i}-components of a crystal graph are strings: linear
    chains on which the operators move one step, each weight occurring at
    most once, with lengths telescoping the coroot pairing."""
    report = CheckReport(name=f"string structure for index {i}")
    rd = c.datum
    pos = rd.pos(i)
    alpha = rd.simple_roots[pos]
    cor = rd.simple_coroots[pos]
    weights = c.weights
    eps, phi = c.eps[i], c.phi[i]
    emap, fmap = c.e_map[i], c.f_map[i]
    covered = 0
    for head in c.ids():
        if emap[head] is not None:
            continue
        chain = [head]
        y = head
        while True:
            fy = fmap[y]
            if fy is None:
                break
            y = fy
            chain.append(y)
            if len(chain) > len(c):
                report.add(f"string at {head} does not close")
                return report
        covered += len(chain)
        length = len(chain) - 1
        top = weights[head]
        report.checked += 1
        if length != sum(a * b for a, b in zip(top, cor)):
            report.add(f"string length at {head} does not telescope the pairing")
        seen_weights = set()
        for depth, y in enumerate(chain):
            expected = tuple(t - depth * a for t, a in zip(top, alpha))
            report.checked += 1
            w = weights[y]
            if w != expected:
                report.add(f"weight along the string at {y} is off")
            if w in seen_weights:
                report.add(f"weight {w} repeats inside one string")
            seen_weights.add(w)
            if eps[y] != depth or phi[y] != length - depth:
                report.add(f"string position statistics wrong at {y}")
            up = emap[y]
            if (up is None) != (depth == 0) or (up is not None and up != chain[depth - 1]):
                report.add(f"raising step inside the string wrong at {y}")
    if covered != len(c):
        report.add(f"strings cover {covered} of {len(c)} elements")
    return report


def embedding_bounds_check(rd: RootDatum, lam, mu, levi, max_elements=None) -> CheckReport:
    """Certify the dominance bounds mu <=_L nu <=_L ceiling for every nu in
    the mu-filtered branching support, and report where either bound is
    strict (the ceiling need not be reached, and mu need not be a weight of
    every L-module above it)."""
    levi = tuple(sorted(levi))
    ceiling = levi_ceiling(rd, lam, mu, levi)
    report = CheckReport(name=f"embedding bounds for mu={mu}")
    table = branch(rd, lam, levi, max_elements=max_elements).table
    mu_filtered = [nu for nu in table if characters.is_weight(rd, nu, mu, levi=levi)]
    for nu in mu_filtered:
        report.checked += 1
        if not dominance_leq(rd, mu, nu, levi):
            report.add(f"mu is not <=_L {nu}")
        if not dominance_leq(rd, nu, ceiling, levi):
            report.add(f"{nu} is not <=_L the ceiling {ceiling}")
    above_mu = [nu for nu in table if dominance_leq(rd, mu, nu, levi)]
    first_gap = sorted(set(above_mu) - set(mu_filtered))
    report.details = {
        "ceiling": list(ceiling),
        "support": [list(nu) for nu in sorted(mu_filtered)],
        "gap_witnesses": [list(nu) for nu in first_gap],
        "ceiling_reached": ceiling in above_mu,
        "ceiling_is_weight_of_ambient": characters.is_weight(rd, lam, ceiling),
    }
    return report
