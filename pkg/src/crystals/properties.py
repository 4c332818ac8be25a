"""Seeded randomized invariant suite behind `crystals verify properties`.

Every sample is drawn from one random.Random(seed) instance and every
container is iterated in sorted order, so the rendered report is
byte-identical across runs with the same arguments.  No timings appear in
the output.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import characters
from .branching import branch, string_structure_check
from .crystal_graph import build_crystal, character, check_normal_crystal, decompose
from .reports import CheckReport
from .root_data import (
    build_datum,
    cartan_matrix,
    central_class,
    dominant_representative,
    apply_word,
    langlands_dual,
    pairing,
    reflect,
    root_coords,
)
from .tensor import closed_family_certificate, tensor

DEFAULT_DATA = ("A1", "A2", "B2", "G2", "GL2", "GL3")
_CRYSTAL_DIM_CAP = 400
_TENSOR_DIM_CAP = 2500


def _random_weight(rng, rd, bound):
    return tuple(rng.randint(-bound, bound) for _ in range(rd.rank))


def _random_dominant(rng, rd, height, dim_cap):
    for _ in range(60):
        lam, _ = dominant_representative(rd, _random_weight(rng, rd, height))
        if characters.weyl_dim(rd, lam) <= dim_cap:
            return lam
    return tuple(0 for _ in range(rd.rank))


def _lattice_checks(rng, rd, max_height, report):
    for _ in range(25):
        v = _random_weight(rng, rd, max_height + 2)
        for i in rd.index_set:
            report.checked += 2
            if reflect(rd, reflect(rd, v, i), i) != v:
                report.add(f"reflection is not involutive at {v}, {i}")
            if pairing(rd, reflect(rd, v, i), i) != -pairing(rd, v, i):
                report.add(f"pairing does not flip sign at {v}, {i}")
        dom, word = dominant_representative(rd, v)
        report.checked += 3
        if any(pairing(rd, dom, i) < 0 for i in rd.index_set):
            report.add(f"dominant representative of {v} is not dominant")
        if apply_word(rd, dom, word) != v:
            report.add(f"reflection word does not replay to {v}")
        if dominant_representative(rd, dom)[0] != dom:
            report.add(f"dominant representative is not idempotent at {dom}")
        coeffs = [rng.randint(-max_height, max_height) for _ in rd.index_set]
        combo = [0] * rd.rank
        for c, alpha in zip(coeffs, rd.simple_roots):
            for k in range(rd.rank):
                combo[k] += c * alpha[k]
        report.checked += 1
        if root_coords(rd, tuple(combo)) != tuple(coeffs):
            report.add(f"root coordinates do not round-trip at {coeffs}")
    dual = langlands_dual(rd)
    a, b = cartan_matrix(rd), cartan_matrix(dual)
    report.checked += 2
    if langlands_dual(dual) != rd:
        report.add("duality is not involutive")
    if tuple(tuple(row) for row in zip(*a)) != b:
        report.add("dual Cartan matrix is not the transpose")


def _quotient_checks(rng, rd, max_height, report):
    if not rd.index_set:
        return
    for _ in range(12):
        size = rng.randint(1, len(rd.index_set))
        levi = tuple(sorted(rng.sample(rd.index_set, size)))
        mu = _random_weight(rng, rd, max_height + 1)
        shift = [0] * rd.rank
        for i in levi:
            c = rng.randint(-2, 2)
            alpha = rd.simple_roots[rd.pos(i)]
            for k in range(rd.rank):
                shift[k] += c * alpha[k]
        nu = tuple(a + b for a, b in zip(mu, shift))
        report.checked += 1
        if central_class(rd, mu, levi) != central_class(rd, nu, levi):
            report.add(f"classes differ after a Levi root shift at {mu}")
        other = _random_weight(rng, rd, max_height + 1)
        coords = root_coords(rd, tuple(a - b for a, b in zip(mu, other)), levi)
        same = coords is not None and all(isinstance(c, int) for c in coords)
        report.checked += 1
        if same != (central_class(rd, mu, levi) == central_class(rd, other, levi)):
            report.add(f"class equality disagrees with integer coordinates at {mu}, {other}")
        report.checked += 1
        a = central_class(rd, mu, levi) + central_class(rd, other, levi)
        if a != central_class(rd, tuple(x + y for x, y in zip(mu, other)), levi):
            report.add("central classes do not add")


def _crystal_checks(rng, rd, max_height, report):
    for _ in range(3):
        lam = _random_dominant(rng, rd, max_height, _CRYSTAL_DIM_CAP)
        c = build_crystal(rd, lam)
        table = characters.freudenthal(rd, lam)
        report.checked += 2
        if character(c) != dict(sorted(table.mults.items())):
            report.add(f"character differs from the recursion oracle at {lam}")
        if len(c) != characters.weyl_dim(rd, lam):
            report.add(f"element count differs from the Weyl dimension at {lam}")
        report.merge(check_normal_crystal(c))
        for i in rd.index_set:
            report.merge(string_structure_check(c, i))
        mu = rng.choice(sorted(table.mults)) if table.mults else lam
        probe = _random_weight(rng, rd, max_height + 1)
        for m in (mu, probe):
            inside = m in table.mults
            report.checked += 1
            try:
                if characters.is_weight(rd, lam, m) != inside:
                    report.add(f"weight membership disagrees with the character at {m}")
            except Exception as exc:
                report.add(f"is_weight failed at {m}: {exc}")


def _tensor_checks(rng, rd, max_height, report):
    lam1 = _random_dominant(rng, rd, max_height, 60)
    lam2 = _random_dominant(rng, rd, max_height, 60)
    if characters.weyl_dim(rd, lam1) * characters.weyl_dim(rd, lam2) > _TENSOR_DIM_CAP:
        lam2 = tuple(0 for _ in range(rd.rank))
    b1 = build_crystal(rd, lam1)
    b2 = build_crystal(rd, lam2)
    t = tensor(b1, b2)
    report.merge(check_normal_crystal(t))
    report.checked += 1
    if decompose(t, rd.index_set) != characters.klimyk(rd, lam1, lam2):
        report.add(f"tensor decomposition differs from the oracle at {lam1}, {lam2}")
    conv = {}
    for w1, m1 in character(b1).items():
        for w2, m2 in character(b2).items():
            w = tuple(a + b for a, b in zip(w1, w2))
            conv[w] = conv.get(w, 0) + m1 * m2
    report.checked += 1
    if dict(sorted(conv.items())) != character(t):
        report.add(f"tensor character is not the convolution at {lam1}, {lam2}")
    cert = closed_family_certificate(rd, lam1, lam2)
    report.merge(cert.report)
    report.checked += 1
    zero = sum(1 for a in cert.retraction.assignment if a is None)
    expected = len(b1) * len(b2) - characters.weyl_dim(
        rd, tuple(a + b for a, b in zip(lam1, lam2)))
    if zero != expected:
        report.add(f"zero fiber has size {zero}, expected {expected}")


def _branch_checks(rng, rd, max_height, report):
    if not rd.index_set:
        return
    lam = _random_dominant(rng, rd, max_height, _CRYSTAL_DIM_CAP)
    size = rng.randint(0, len(rd.index_set))
    levi = tuple(sorted(rng.sample(rd.index_set, size)))
    got = branch(rd, lam, levi)
    oracle = characters.branch_by_characters(rd, lam, levi)
    report.checked += 1
    if got.table != oracle.table:
        report.add(f"branching differs from character stripping at {lam}, {levi}")
    total = characters.weyl_dim(rd, lam)
    report.checked += 1
    if sum(m * characters.weyl_dim(rd, nu, levi=levi) for nu, m in got.table.items()) != total:
        report.add(f"branching sum rule fails at {lam}, {levi}")
    c = build_crystal(rd, lam)
    fibers = character(c)
    for mu, mult in fibers.items():
        rhs = sum(m * characters.freudenthal(rd, nu, levi=levi).mults.get(mu, 0)
                  for nu, m in got.table.items())
        report.checked += 1
        if rhs != mult:
            report.add(f"weight-fiber identity fails at mu={mu}")
    from .branching import _levi_components
    _, comps = _levi_components(c, levi)
    for members in comps:
        classes = {central_class(rd, c.weight(x), levi) for x in members}
        report.checked += 1
        if len(classes) != 1:
            report.add("central class varies inside one Levi component")


@dataclass
class PropertiesReport:
    seed: int
    max_height: int
    reports: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.reports)

    def to_json(self):
        return {
            "seed": self.seed,
            "max_height": self.max_height,
            "ok": self.ok,
            "reports": [r.to_json() for r in self.reports],
        }

    def render_text(self):
        lines = [f"property suite: seed={self.seed} max-height={self.max_height}"]
        for r in self.reports:
            lines.append(str(r))
        lines.append(("PASS" if self.ok else "FAIL")
                     + f" property suite ({sum(r.checked for r in self.reports)} checks)")
        return "\n".join(lines)


def run_properties(seed=42, max_height=3, data=DEFAULT_DATA) -> PropertiesReport:
    rng = random.Random(seed)
    out = PropertiesReport(seed=seed, max_height=max_height)
    for name in data:
        rd = build_datum(name)
        report = CheckReport(name=f"invariants over {name}")
        _lattice_checks(rng, rd, max_height, report)
        _quotient_checks(rng, rd, max_height, report)
        _crystal_checks(rng, rd, max_height, report)
        _tensor_checks(rng, rd, max_height, report)
        _branch_checks(rng, rd, max_height, report)
        out.reports.append(report)
    return out
