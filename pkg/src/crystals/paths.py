"""Littelmann root operators on piecewise-linear rational paths.

A path from the origin is the sequence of displacement vectors of its
maximal linear pieces.  That normal form is invariant under
reparametrization, so structural equality is crystal-element equality; it
is also the deduplication key during graph generation.

Representation: a pair (den, segments) where den is a positive integer,
segments is a tuple of integer tuples, and the actual displacement of
piece j is segments[j] / den, with gcd(den, all coordinates) = 1 and no
two consecutive positively parallel pieces.  All operator arithmetic is
exact integer arithmetic at the common scale; rationals only appear at
the JSON boundary.

The raising operator cuts at t1 = min{t : h(t) = m} and
t0 = max{t <= t1 : h(t) = m+1}, where h(t) = <path(t), coroot_i> and m is
the minimum of h (attained at breakpoints); the piece between the cuts is
reflected by s_i and the tail is translated by alpha_i.  The lowering
operator mirrors this with t0 = max{t : h(t) = m} and
t1 = min{t >= t0 : h(t) = m+1}, translating the tail by -alpha_i.  There
is no tolerance anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .root_data import InputError, RootDatum, check_weight, pairing

Path = tuple  # (den, segments)

EMPTY = (1, ())


def _positively_parallel(a, b):
    k = next((j for j, x in enumerate(a) if x != 0), None)
    if k is None or b[k] == 0 or (a[k] > 0) != (b[k] > 0):
        return False
    ak, bk = a[k], b[k]
    return all(x * bk == y * ak for x, y in zip(a, b))


def _normalize_scaled(den, segments):
    out = []
    for seg in segments:
        if not any(seg):
            continue
        if out and _positively_parallel(out[-1], seg):
            out[-1] = tuple(x + y for x, y in zip(out[-1], seg))
        else:
            out.append(tuple(seg))
    if not out:
        return EMPTY
    if den > 1:
        g = den
        for seg in out:
            for x in seg:
                g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            out = [tuple(x // g for x in seg) for seg in out]
            den //= g
    return (den, tuple(out))


def normalize_path(segments):
    """Canonical form of a path given by rational displacement vectors."""
    fracs = [[Fraction(x) for x in seg] for seg in segments]
    den = 1
    for seg in fracs:
        for x in seg:
            den = den * x.denominator // gcd(den, x.denominator)
    scaled = [tuple(int(x * den) for x in seg) for seg in fracs]
    return _normalize_scaled(den, scaled)


def path_segments(path):
    """Displacement vectors as exact rationals (ints where integral)."""
    den, segs = path
    if den == 1:
        return [tuple(seg) for seg in segs]
    out = []
    for seg in segs:
        out.append(tuple(x // den if x % den == 0 else Fraction(x, den) for x in seg))
    return out


def straight_path(rd: RootDatum, lam):
    """The highest-weight path: one straight segment to lam (empty for
    lam = 0).  Rejects non-dominant lam."""
    lam = check_weight(rd, lam)
    for i in rd.index_set:
        if pairing(rd, lam, i) < 0:
            raise InputError(f"weight {lam} is not dominant: <.,coroot_{i}> < 0")
    return _normalize_scaled(1, (lam,))


def path_weight(rd: RootDatum, path):
    """Endpoint of the path; must be an integral weight."""
    den, segs = path
    end = [0] * rd.rank
    for seg in segs:
        for k, x in enumerate(seg):
            end[k] += x
    if any(x % den for x in end):
        raise InputError("path endpoint is not integral (foreign path)")
    return tuple(x // den for x in end)


def _breakpoint_values(rd, path, i):
    """Values of h at the breakpoints, scaled by den."""
    cor = rd.simple_coroots[rd.pos(i)]
    h = [0]
    acc = 0
    for seg in path[1]:
        acc += sum(a * b for a, b in zip(seg, cor))
        h.append(acc)
    return h


class StringData(NamedTuple):
    epsilon: int
    phi: int
    min_value: int
    t0: Fraction | None  # raising-cut times in the equal-duration
    t1: Fraction | None  # parametrization; None when the raise is undefined


def _stats(den, h, what="path"):
    m = min(h)
    end = h[-1]
    if m % den or end % den:
        raise InputError(f"{what} has a non-integral pairing minimum or endpoint "
                         "(foreign path)")
    return m, (-m) // den, (end - m) // den


def _latest_at(h, target, stop):
    """Latest (segment, num, den) position <= breakpoint `stop` with
    h = target; fraction num/den is reduced and inside [0, 1]."""
    for t in range(stop - 1, -1, -1):
        ha, hb = h[t], h[t + 1]
        if hb == target:
            return (t, 1, 1)
        if (ha < target < hb) or (hb < target < ha):
            num, d = target - ha, hb - ha
            if d < 0:
                num, d = -num, -d
            g = gcd(num, d)
            return (t, num // g, d // g)
        if ha == target:
            return (t, 0, 1)
    return None


def _earliest_at(h, target, start):
    """Earliest (segment, num, den) position >= breakpoint `start` with
    h = target."""
    for t in range(start, len(h) - 1):
        ha, hb = h[t], h[t + 1]
        if ha == target:
            return (t, 0, 1)
        if (ha < target < hb) or (hb < target < ha):
            num, d = target - ha, hb - ha
            if d < 0:
                num, d = -num, -d
            g = gcd(num, d)
            return (t, num // g, d // g)
        if hb == target:
            return (t, 1, 1)
    return None


def string_data(rd: RootDatum, path, i):
    """(epsilon_i, phi_i, min h, t0, t1): epsilon_i = -min h, phi_i =
    h(1) - min h, plus the raising-operator cut times (in the
    equal-duration parametrization) when epsilon_i > 0."""
    den = path[0]
    h = _breakpoint_values(rd, path, i)
    m, eps, phi = _stats(den, h)
    t0 = t1 = None
    if eps > 0:
        k = len(path[1])
        j1 = h.index(m)
        t, num, d = _latest_at(h, m + den, j1)
        t1 = Fraction(j1, k)
        t0 = Fraction(t * d + num, k * d)
    return StringData(eps, phi, m // den, t0, t1)


def _reflect_segment(rd, p, seg):
    c = sum(x * y for x, y in zip(seg, rd.simple_coroots[p]))
    if c == 0:
        return seg
    alpha = rd.simple_roots[p]
    return tuple(x - c * a for x, a in zip(seg, alpha))


def _assemble(rd, p, den, before, mid, after):
    return _normalize_scaled(
        den, before + [_reflect_segment(rd, p, d) for d in mid] + after)


def _raise_scaled(rd, p, path, h, m):
    den, segs = path
    if m > -den:
        return None
    j1 = h.index(m)
    cut = _latest_at(h, m + den, j1)
    if cut is None:
        raise InputError("pairing function never reaches m+1 (foreign path)")
    t, num, q = cut
    if q > 1:
        den *= q
        segs = [tuple(x * q for x in seg) for seg in segs]
    else:
        segs = list(segs)
    before = segs[:t]
    if num == 0:
        mid = segs[t:j1]
    elif num == q:
        before = segs[:t + 1]
        mid = segs[t + 1:j1]
    else:
        full = segs[t]
        head = tuple(x * num // q for x in full)
        before = before + [head]
        mid = [tuple(x - y for x, y in zip(full, head))] + segs[t + 1:j1]
    return _assemble(rd, p, den, before, mid, segs[j1:])


def _lower_scaled(rd, p, path, h, m):
    den, segs = path
    if h[-1] - m < den:
        return None
    j0 = len(h) - 1 - h[::-1].index(m)
    cut = _earliest_at(h, m + den, j0)
    if cut is None:
        raise InputError("pairing function never reaches m+1 (foreign path)")
    t, num, q = cut
    if q > 1:
        den *= q
        segs = [tuple(x * q for x in seg) for seg in segs]
    else:
        segs = list(segs)
    before = segs[:j0]
    mid = segs[j0:t]
    if num == 0:
        after = segs[t:]
    elif num == q:
        mid = mid + [segs[t]]
        after = segs[t + 1:]
    else:
        full = segs[t]
        head = tuple(x * num // q for x in full)
        mid = mid + [head]
        after = [tuple(x - y for x, y in zip(full, head))] + segs[t + 1:]
    return _assemble(rd, p, den, before, mid, after)


def root_operator(rd: RootDatum, path, i, direction):
    """Apply e_i ("raise") or f_i ("lower") to the path; None when
    undefined.  Raising shifts the endpoint by +alpha_i, lowering by
    -alpha_i; the two are mutually inverse wherever defined."""
    if direction not in ("raise", "lower"):
        raise InputError(f"direction must be 'raise' or 'lower', got {direction!r}")
    p = rd.pos(i)
    den = path[0]
    h = _breakpoint_values(rd, path, i)
    m, _, _ = _stats(den, h)
    if direction == "raise":
        return _raise_scaled(rd, p, path, h, m)
    return _lower_scaled(rd, p, path, h, m)


def raise_path(rd, path, i):
    return root_operator(rd, path, i, "raise")


def lower_path(rd, path, i):
    return root_operator(rd, path, i, "lower")


# ---------------------------------------------------------------------------
# serialization: equal-duration segments, rationals as "p/q" strings

def _frac_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def path_to_json(path):
    segs = path_segments(path)
    k = len(segs)
    return [
        {"dir": [_frac_str(x * k) for x in seg], "dur": _frac_str(Fraction(1, k))}
        for seg in segs
    ]


def path_from_json(data):
    segs = []
    for item in data:
        dur = Fraction(item["dur"])
        segs.append(tuple(Fraction(x) * dur for x in item["dir"]))
    return normalize_path(segs)
