"""Concrete low-rank checks run end to end against the library.

These are brute-force computations that do not touch the crystal engine
except where they deliberately cross-validate it: a symbolic determinant
identity for the GL2 slice family, the PGL3 repellent dimension, the GL4
ceiling-weight escape, and an explicit 9-dimensional GL3 computation with
elementary matrices.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import characters
from .branching import branch, embedding_bounds_check, levi_ceiling
from .reports import CheckReport
from .root_data import (
    InputError,
    RootDatum,
    build_datum,
    check_weight,
    dominance_leq,
    dominant_representative,
    root_coords,
)


def repellent_dim(rd: RootDatum, lam, mu):
    """Dimension of the repellent stratum for the weight pair (lam, mu):
    the height sum n_1 + ... + n_l of lam - mu = sum n_i alpha_i.  Errors
    when the difference leaves the nonnegative integer root cone (the
    stratum is empty there)."""
    lam = check_weight(rd, lam)
    mu = check_weight(rd, mu)
    coords = root_coords(rd, tuple(a - b for a, b in zip(lam, mu)))
    if coords is None or not all(isinstance(c, int) and c >= 0 for c in coords):
        raise InputError(f"{mu} is not below {lam} in the dominance order")
    return sum(coords)


# ---------------------------------------------------------------------------
# integer polynomials in z with opaque linear parameters

@dataclass(frozen=True)
class Lin:
    """Integer-linear expression const + sum coeff * parameter."""
    const: int = 0
    terms: tuple = ()  # sorted ((name, coeff), ...)

    @classmethod
    def of(cls, value):
        if isinstance(value, Lin):
            return value
        if isinstance(value, int):
            return cls(const=value)
        if isinstance(value, str):
            return cls(const=0, terms=((value, 1),))
        raise InputError(f"cannot coerce {value!r} to a linear expression")

    def __add__(self, other):
        other = Lin.of(other)
        acc = dict(self.terms)
        for name, c in other.terms:
            acc[name] = acc.get(name, 0) + c
        terms = tuple(sorted((n, c) for n, c in acc.items() if c))
        return Lin(self.const + other.const, terms)

    def __neg__(self):
        return Lin(-self.const, tuple((n, -c) for n, c in self.terms))

    def __sub__(self, other):
        return self + (-Lin.of(other))

    def __mul__(self, other):
        other = Lin.of(other)
        if self.terms and other.terms:
            raise InputError("product of two parameter-dependent expressions")
        if other.terms:
            self, other = other, self
        k = other.const
        return Lin(self.const * k, tuple((n, c * k) for n, c in self.terms))

    def is_zero(self):
        return self.const == 0 and not self.terms

    def parameters(self):
        return {n for n, _ in self.terms}


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in z, ascending coefficients, Lin entries, no trailing zeros."""
    coeffs: tuple = ()

    @classmethod
    def of(cls, values):
        cs = [Lin.of(v) for v in values]
        while cs and cs[-1].is_zero():
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def monomial(cls, coeff, power):
        return cls.of([0] * power + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(n):
            a = self.coeffs[k] if k < len(self.coeffs) else Lin()
            b = other.coeffs[k] if k < len(other.coeffs) else Lin()
            out.append(a + b)
        return IntPoly.of(out)

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [Lin() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for a, ca in enumerate(self.coeffs):
            for b, cb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ca * cb
        return IntPoly.of(out)

    def parameters(self):
        out = set()
        for c in self.coeffs:
            out |= c.parameters()
        return out


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def gl2_slice_check(n_total, m) -> CheckReport:
    """For lam = N e_1 and mu = (N-m) e_1 + m e_2 over GL2, certify the
    repellent matrix family [[z^(N-m), 0], [C, z^m]] with deg C <= m-1:
    its determinant is identically z^N, it has exactly m free parameters,
    that count equals the repellent dimension, and mu is a weight of the
    ambient module.  m > N is rejected (the weight condition fails)."""
    if m < 0 or n_total < 0:
        raise InputError("N and m must be nonnegative")
    if m > n_total:
        raise InputError(f"m = {m} exceeds N = {n_total}: mu is not a weight there")
    rd = build_datum("GL2")
    lam = (n_total, 0)
    mu = (n_total - m, m)
    report = CheckReport(name=f"GL2 slice family N={n_total} m={m}")
    c_poly = IntPoly.of([f"c{k}" for k in range(m)])
    matrix = [
        [IntPoly.monomial(1, n_total - m), IntPoly()],
        [c_poly, IntPoly.monomial(1, m)],
    ]
    det = _det2(matrix)
    report.checked += 1
    if det != IntPoly.monomial(1, n_total):
        report.add(f"det is not z^{n_total}: {det}")
    params = sorted(det.parameters() | c_poly.parameters())
    report.checked += 1
    if len(params) != m:
        report.add(f"free parameter count {len(params)} != m = {m}")
    dim = repellent_dim(rd, lam, mu)
    report.checked += 1
    if dim != m:
        report.add(f"repellent dimension {dim} != m = {m}")
    report.checked += 1
    if not characters.is_weight(rd, lam, mu):
        report.add(f"{mu} should be a weight of the module with highest weight {lam}")
    report.details = {"parameters": params, "repellent_dim": dim}
    return report


# ---------------------------------------------------------------------------
# explicit GL3 computation in C^3 (x) Lambda^2 C^3

_WEDGE = ((1, 2), (1, 3), (2, 3))


def _basis():
    return [(i, jk) for i in (1, 2, 3) for jk in _WEDGE]


def _wedge(a, b):
    if a == b:
        return None, 0
    return ((a, b), 1) if a < b else ((b, a), -1)


def _apply_elementary(a, b, vec):
    """Action of the elementary matrix E_ab (v_b -> v_a) on a vector in
    C^3 (x) Lambda^2 C^3, given as {basis element: coefficient}."""
    out = {}

    def add(key, c):
        if c:
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]

    for (i, (j, k)), c in vec.items():
        if i == b:
            add((a, (j, k)), c)
        if j == b:
            pair, sign = _wedge(a, k)
            if pair:
                add((i, pair), c * sign)
        if k == b:
            pair, sign = _wedge(j, a)
            if pair:
                add((i, pair), c * sign)
    return out


def _weight_of_basis(elt):
    i, (j, k) = elt
    w = [0, 0, 0]
    for t in (i, j, k):
        w[t - 1] += 1
    return tuple(w)


def _contraction_matrix():
    """v_i (x) (v_j ^ v_k) -> v_i ^ v_j ^ v_k in the line Lambda^3; returns
    the 1 x 9 integer matrix over the basis order."""
    row = []
    for i, (j, k) in _basis():
        if i in (j, k):
            row.append(0)
        else:
            rest = sorted((i, j, k))
            perm = (i, j, k)
            # sign of the permutation sorting (i, j, k)
            sign = 1
            lst = list(perm)
            for a in range(3):
                for b in range(a + 1, 3):
                    if lst[a] > lst[b]:
                        lst[a], lst[b] = lst[b], lst[a]
                        sign = -sign
            row.append(sign if rest == [1, 2, 3] else 0)
    return row


def gl3_branch_vector_check() -> CheckReport:
    """The vector 2 v3 (x) (v1 ^ v2) + v2 (x) (v1 ^ v3) - v1 (x) (v2 ^ v3)
    inside C^3 (x) Lambda^2 C^3: a Levi-stable line of weight (1,1,1) in the
    top component of highest weight (2,1,0), while (0,2,1) is below it in
    the Levi order yet is not a weight of that Levi module."""
    rd = build_datum("GL3")
    lam, nu, mu = (2, 1, 0), (1, 1, 1), (0, 2, 1)
    levi = (1,)
    report = CheckReport(name="GL3 branch vector")
    vec = {(3, (1, 2)): 2, (2, (1, 3)): 1, (1, (2, 3)): -1}

    report.checked += 1
    if any(_weight_of_basis(b) != nu for b in vec):
        report.add("the vector is not a weight vector of weight (1,1,1)")

    for a, b in ((1, 2), (2, 1)):  # raising and lowering along alpha_1
        report.checked += 1
        if _apply_elementary(a, b, vec):
            report.add(f"E_{a}{b} does not annihilate the vector")

    row = _contraction_matrix()
    basis = _basis()
    contracted = sum(row[basis.index(b)] * c for b, c in vec.items())
    report.checked += 1
    if contracted != 0:
        report.add("the vector is not in the kernel of the contraction")
    rank = 1 if any(row) else 0
    kernel_dim = len(basis) - rank
    top_dim = characters.weyl_dim(rd, lam)
    report.checked += 1
    if not (rank == 1 and kernel_dim == top_dim and kernel_dim + rank == 9):
        report.add(f"summand dimensions are off: kernel {kernel_dim}, rank {rank}, "
                   f"top component {top_dim}")

    table = branch(rd, lam, levi).table
    report.checked += 1
    if table.get(nu) != 1:
        report.add(f"branching table lacks {nu} with multiplicity 1: {table}")

    report.checked += 1
    if not (dominance_leq(rd, mu, nu, levi) and mu != nu):
        report.add(f"{mu} is not strictly below {nu} in the Levi order")
    report.checked += 1
    if characters.is_weight(rd, nu, mu, levi=levi):
        report.add(f"{mu} must not be a weight of the Levi module at {nu}")
    report.checked += 1
    if not characters.is_weight(rd, lam, mu):
        report.add(f"{mu} must be a weight of the ambient module at {lam}")
    report.details = {"weight": list(nu), "branch_table": {str(k): v for k, v in sorted(table.items())}}
    return report


# ---------------------------------------------------------------------------
# aggregate runner

@dataclass
class ExamplesReport:
    entries: list = field(default_factory=list)

    @property
    def ok(self):
        return all(e["status"] == "pass" for e in self.entries)

    def to_json(self):
        return {"ok": self.ok, "entries": self.entries}

    def render_table(self):
        lines = []
        for e in self.entries:
            lines.append(f"{e['status'].upper():4} {e['example']:24} "
                         f"{e['location']:32} {e['seconds']:.3f}s")
        lines.append(("PASS" if self.ok else "FAIL") + " worked examples")
        return "\n".join(lines)


def _entry(name, location, fn):
    start = time.perf_counter()
    try:
        details = fn()
        status, info = "pass", details
    except Exception as exc:  # a failing check is report content, not a crash
        status, info = "fail", {"error": f"{type(exc).__name__}: {exc}"}
    return {
        "example": name,
        "location": location,
        "status": status,
        "seconds": round(time.perf_counter() - start, 3),
        "details": info,
    }


def _gl2_family():
    reports = []
    for n_total in range(9):
        for m in range(n_total + 1):
            r = gl2_slice_check(n_total, m)
            if not r.ok:
                raise AssertionError("; ".join(r.violations))
            reports.append((n_total, m))
    try:
        gl2_slice_check(2, 3)
        raise AssertionError("m > N was not rejected")
    except InputError:
        pass
    rd = build_datum("GL2")
    for n_total in range(1, 9):
        mu = (-1, n_total + 1)  # m = N + 1
        if characters.is_weight(rd, (n_total, 0), mu):
            raise AssertionError(f"{mu} must not be a weight for N={n_total}")
    return {"pairs_checked": len(reports), "rejected": "m=N+1 cases"}


def _pgl3_case():
    rd = build_datum("PGL3")
    lam, mu = (1, 0), (0, -1)  # fundamental coweight and the negated other one
    dim = repellent_dim(rd, lam, mu)
    if dim != 2:
        raise AssertionError(f"repellent dimension is {dim}, expected 2")
    if repellent_dim(rd, lam, lam) != 0:
        raise AssertionError("the point stratum must have dimension 0")
    return {"dim": dim}


def _gl4_case():
    rd = build_datum("GL4")
    lam, mu, levi = (2, 0, 0, -2), (0, -1, 1, 0), (1, 3)
    coords = root_coords(rd, tuple(a - b for a, b in zip(lam, mu)))
    if coords != (2, 3, 2):
        raise AssertionError(f"root coordinates of lam - mu are {coords}")
    ceiling = levi_ceiling(rd, lam, mu, levi)
    if ceiling != (2, -3, 3, -2):
        raise AssertionError(f"ceiling weight is {ceiling}")
    dom, word = dominant_representative(rd, ceiling)
    if dom != (3, 2, -2, -3):
        raise AssertionError(f"dominant representative is {dom}")
    if not (dominance_leq(rd, lam, dom) and dom != lam):
        raise AssertionError("the dominant representative must exceed lam strictly")
    if characters.is_weight(rd, lam, ceiling):
        raise AssertionError("the ceiling weight must not be a weight of the module")
    return {"ceiling": list(ceiling), "dominant_rep": list(dom),
            "word_length": len(word)}


def _embedding_cases():
    rd4 = build_datum("GL4")
    r1 = embedding_bounds_check(rd4, (2, 0, 0, -2), (0, -1, 1, 0), (1, 3))
    if not r1.ok:
        raise AssertionError("; ".join(r1.violations))
    if r1.details["ceiling_is_weight_of_ambient"]:
        raise AssertionError("GL4 case: the ceiling must escape the weight support")
    rd3 = build_datum("GL3")
    r2 = embedding_bounds_check(rd3, (2, 1, 0), (0, 2, 1), (1,))
    if not r2.ok:
        raise AssertionError("; ".join(r2.violations))
    if [1, 1, 1] not in r2.details["gap_witnesses"]:
        raise AssertionError("GL3 case: (1,1,1) must witness the strict inclusion")
    return {"gl4": r1.details, "gl3": r2.details}


def run_examples() -> ExamplesReport:
    """Run every worked example; any failure makes the aggregate fail."""
    report = ExamplesReport()
    report.entries.append(_entry(
        "gl2-slices", "GL2 slice matrix family", _gl2_family))
    report.entries.append(_entry(
        "pgl3-repellent", "PGL3 repellent dimension", _pgl3_case))
    report.entries.append(_entry(
        "gl4-ceiling", "GL4 ceiling-weight escape", _gl4_case))
    report.entries.append(_entry(
        "gl3-branch-vector", "GL3 Levi-stable line", lambda: _check_ok(gl3_branch_vector_check())))
    report.entries.append(_entry(
        "levi-embedding-bounds", "Levi dominance bounds", _embedding_cases))
    return report


def _check_ok(r: CheckReport):
    if not r.ok:
        raise AssertionError("; ".join(r.violations))
    return r.details
