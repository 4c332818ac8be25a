"""Tensor products of crystals, retractions, and the closed-family
certificate.

The tensor rules act on the left factor when the left raising capacity
wins:

    e_i(b (x) b') = e_i b (x) b'  if eps_i(b) >  phi_i(b'), else b (x) e_i b'
    f_i(b (x) b') = f_i b (x) b'  if eps_i(b) >= phi_i(b'), else b (x) f_i b'

    eps_i(b (x) b') = max(eps_i(b'), eps_i(b) - phi_i(b') + eps_i(b'))
    phi_i(b (x) b') = max(phi_i(b),  phi_i(b') - eps_i(b) + phi_i(b))

No other convention is supported; the closed-form statistics are
cross-checked against measured string lengths by check_normal_crystal.

The retraction B(lam1) (x) B(lam2) -> B(lam1+lam2) maps the component of
the top pair by lowering-word transport (the unique isomorphism between
isomorphic connected normal crystals) and everything else to zero; the
embedding is its section.
"""
from __future__ import annotations

from dataclasses import dataclass

from .crystal_graph import Crystal, build_crystal
from .reports import CheckReport
from .root_data import InputError, InternalError


class TensorCrystal:
    """Crystal structure on all pairs (b, b') of two crystals over one
    datum.  Element id = id(b) * len(second) + id(b')."""

    __slots__ = ("b1", "b2", "datum", "n", "weights", "eps", "phi", "e_map", "f_map")

    def __init__(self, b1, b2):
        if b1.datum != b2.datum:
            raise InputError("tensor factors must share a root datum")
        self.b1, self.b2 = b1, b2
        self.datum = b1.datum
        n1, n2 = len(b1), len(b2)
        self.n = n1 * n2
        self.weights = [None] * self.n
        self.eps, self.phi, self.e_map, self.f_map = {}, {}, {}, {}
        for x in range(n1):
            wx = b1.weight(x)
            base = x * n2
            for y in range(n2):
                wy = b2.weight(y)
                self.weights[base + y] = tuple(a + b for a, b in zip(wx, wy))
        for i in self.datum.index_set:
            ee = [None] * self.n
            ff = [None] * self.n
            ep = [0] * self.n
            ph = [0] * self.n
            for x in range(n1):
                e1, p1 = b1.epsilon(x, i), b1.phi_val(x, i)
                ex, fx = b1.e(x, i), b1.f(x, i)
                base = x * n2
                for y in range(n2):
                    e2, p2 = b2.epsilon(y, i), b2.phi_val(y, i)
                    z = base + y
                    ep[z] = max(e2, e1 - p2 + e2)
                    ph[z] = max(p1, p2 - e1 + p1)
                    if e1 > p2:
                        ee[z] = ex * n2 + y if ex is not None else None
                    else:
                        ey = b2.e(y, i)
                        ee[z] = base + ey if ey is not None else None
                    if e1 >= p2:
                        ff[z] = fx * n2 + y if fx is not None else None
                    else:
                        fy = b2.f(y, i)
                        ff[z] = base + fy if fy is not None else None
            self.eps[i], self.phi[i] = ep, ph
            self.e_map[i], self.f_map[i] = ee, ff

    @property
    def index_set(self):
        return self.datum.index_set

    def __len__(self):
        return self.n

    def ids(self):
        return range(self.n)

    def pack(self, x, y):
        return x * len(self.b2) + y

    def unpack(self, z):
        return divmod(z, len(self.b2))

    def weight(self, x):
        return self.weights[x]

    def epsilon(self, x, i):
        return self.eps[i][x]

    def phi_val(self, x, i):
        return self.phi[i][x]

    def e(self, x, i):
        return self.e_map[i][x]

    def f(self, x, i):
        return self.f_map[i][x]

    @property
    def top(self):
        """The pair of highest elements (weight lam1 + lam2)."""
        return self.pack(self.b1.highest, self.b2.highest)


def tensor(b1: Crystal, b2: Crystal) -> TensorCrystal:
    return TensorCrystal(b1, b2)


@dataclass
class CrystalMap:
    """Map source -> target u {0}; assignment[x] is a target id or None."""
    source: object
    target: object
    assignment: tuple

    def __call__(self, x):
        return self.assignment[x]

    def to_json(self):
        return {"assignment": [[x, self.assignment[x]] for x in range(len(self.assignment))]}


def retraction(b1: Crystal, b2: Crystal, max_elements=None) -> CrystalMap:
    """The tensor-product retraction p: B(lam1) (x) B(lam2) ->
    B(lam1+lam2) u {0}.

    The connected component of the top pair is carried to B(lam1+lam2) by
    transporting operator words from the highest elements; if two words ever
    disagree, or a word leaves the target, the construction fails loudly.
    All other elements go to zero.  The source tensor crystal is available
    as .source, the built B(lam1+lam2) as .target.
    """
    t = tensor(b1, b2)
    total = tuple(a + b for a, b in zip(b1.hw, b2.hw))
    target = build_crystal(b1.datum, total, max_elements=max_elements)
    assignment = [None] * len(t)
    top = t.top
    assignment[top] = target.highest
    queue = [top]
    while queue:
        x = queue.pop()
        img = assignment[x]
        for i in t.index_set:
            for move in ("f", "e"):
                y = t.f(x, i) if move == "f" else t.e(x, i)
                if y is None:
                    continue
                img_y = target.f(img, i) if move == "f" else target.e(img, i)
                if img_y is None:
                    raise InternalError(
                        f"retraction transport left the target along {move}_{i}")
                if assignment[y] is None:
                    assignment[y] = img_y
                    queue.append(y)
                elif assignment[y] != img_y:
                    raise InternalError(
                        f"retraction transport is inconsistent at element {y}")
    hit = [a for a in assignment if a is not None]
    if sorted(hit) != list(range(len(target))):
        raise InternalError("retraction section is not a bijection onto the target")
    return CrystalMap(source=t, target=target, assignment=tuple(assignment))


def verify_morphism(m: CrystalMap, strict=False) -> CheckReport:
    """Check the crystal-morphism conditions:

      (a) the map commutes with wt, eps_i, phi_i wherever it is nonzero;
      (b), (c) it commutes with e_i / f_i wherever source and image edges
          both stay nonzero;
      strict: full commutation including the zero cases (p(0) = 0).
    """
    src, tgt = m.source, m.target
    report = CheckReport(name="crystal-morphism conditions")
    for x in src.ids():
        px = m(x)
        if px is not None:
            report.checked += 1
            if src.weight(x) != tgt.weight(px):
                report.add(f"(a) wt differs at {x}")
            for i in src.index_set:
                if src.epsilon(x, i) != tgt.epsilon(px, i) or \
                        src.phi_val(x, i) != tgt.phi_val(px, i):
                    report.add(f"(a) eps/phi differ at {x}, index {i}")
        for i in src.index_set:
            for move in ("e", "f"):
                y = src.e(x, i) if move == "e" else src.f(x, i)
                py = m(y) if y is not None else None
                t_side = None
                if px is not None:
                    t_side = tgt.e(px, i) if move == "e" else tgt.f(px, i)
                report.checked += 1
                if strict:
                    if py != t_side:
                        report.add(f"strict {move}_{i} commutation fails at {x}")
                else:
                    if px is not None and py is not None and t_side != py:
                        report.add(f"({'b' if move == 'e' else 'c'}) fails at {x}, {i}")
    return report


@dataclass
class ClosedFamilyCertificate:
    retraction: CrystalMap
    embedding: CrystalMap
    report: CheckReport

    @property
    def ok(self):
        return self.report.ok


def closed_family_certificate(rd, lam1, lam2, max_elements=None) -> ClosedFamilyCertificate:
    """Build the retraction p and invert it on its section to the embedding
    iota: B(lam1+lam2) -> B(lam1) (x) B(lam2); verify that p is a strict
    morphism, iota an injective strict morphism, and p o iota = id."""
    b1 = build_crystal(rd, lam1, max_elements=max_elements)
    b2 = build_crystal(rd, lam2, max_elements=max_elements)
    p = retraction(b1, b2, max_elements=max_elements)
    target = p.target
    section = [None] * len(target)
    for x, px in enumerate(p.assignment):
        if px is not None:
            if section[px] is not None:
                raise InternalError("retraction image is not single-valued on the section")
            section[px] = x
    iota = CrystalMap(source=target, target=p.source, assignment=tuple(section))
    report = CheckReport(name=f"closed-family certificate {lam1} , {lam2}")
    report.merge(verify_morphism(p, strict=True))
    report.merge(verify_morphism(iota, strict=True))
    for y in target.ids():
        report.checked += 1
        if iota(y) is None or p(iota(y)) != y:
            report.add(f"p(iota({y})) != {y}")
    report.details = {
        "tensor_size": len(p.source),
        "component_size": len(target),
        "zero_fiber": len(p.source) - len(target),
    }
    return ClosedFamilyCertificate(retraction=p, embedding=iota, report=report)
