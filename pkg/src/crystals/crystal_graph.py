"""Finite crystal graphs: generation, characters, decomposition, axioms.

A Crystal is the closure of the straight dominant path under the lowering
operators, stored as a labeled graph with one forward map per simple-root
index (the e-maps are the inverses).  Element order is the canonical sort
of the path encodings, so two builds of the same data are identical.

`decompose` and `check_normal_crystal` work against a small duck-typed
graph contract -- attributes `datum`, `index_set`, `weights`, and the
per-index arrays `eps`, `phi`, `e_map`, `f_map`, plus `ids()`/`__len__` --
so tensor products, Levi restrictions and hand-built graphs reuse them;
Crystal, TensorCrystal and DictCrystal all carry accessor methods on top.
"""
from __future__ import annotations

import os

from .characters import weyl_dim
from .paths import (
    path_to_json,
    path_weight,
    straight_path,
    string_data,
    _breakpoint_values,
    _lower_scaled,
    _raise_scaled,
)
from .reports import CheckReport
from .root_data import (
    DEFAULT_MAX_ELEMENTS,
    GuardError,
    InputError,
    InternalError,
    RootDatum,
    check_weight,
)


def resolve_guard(max_elements):
    if max_elements is not None:
        if max_elements <= 0:
            raise InputError("max_elements must be positive")
        return max_elements
    env = os.environ.get("CRYSTALS_MAX_ELEMENTS")
    return int(env) if env else DEFAULT_MAX_ELEMENTS


class Crystal:
    """Connected highest-weight crystal B(lam) over a root datum."""

    __slots__ = ("datum", "hw", "elements", "weights", "eps", "phi",
                 "f_map", "e_map", "highest", "_ids")

    def __init__(self, datum, hw, elements, weights, eps, phi, f_map, e_map, highest):
        self.datum = datum
        self.hw = hw
        self.elements = elements    # tuple of canonical paths, sorted
        self.weights = weights      # tuple of integer weight tuples
        self.eps = eps              # {i: list[int]}
        self.phi = phi
        self.f_map = f_map          # {i: list[int | None]}
        self.e_map = e_map
        self.highest = highest
        self._ids = {p: n for n, p in enumerate(elements)}

    @property
    def index_set(self):
        return self.datum.index_set

    def __len__(self):
        return len(self.elements)

    def ids(self):
        return range(len(self.elements))

    def id_of(self, path):
        return self._ids[path]

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


def build_crystal(rd: RootDatum, lam, max_elements=None):
    """Generate B(lam) by breadth-first closure of the straight path under
    every lowering operator.  Raises GuardError when the element guard is
    exceeded and InputError for non-dominant lam."""
    limit = resolve_guard(max_elements)
    lam = check_weight(rd, lam)
    p0 = straight_path(rd, lam)
    index_set = rd.index_set
    # sparse coroots: most named data have one or two nonzero entries
    sparse = {i: tuple((k, c) for k, c in enumerate(rd.simple_coroots[rd.pos(i)]) if c)
              for i in index_set}
    positions = {i: rd.pos(i) for i in index_set}

    paths = [p0]
    ids = {p0: 0}
    eps = {i: [] for i in index_set}
    phi = {i: [] for i in index_set}
    f_tmp = {i: [] for i in index_set}

    cursor = 0
    while cursor < len(paths):
        x = paths[cursor]
        cursor += 1
        den, segs = x
        for i in index_set:
            cor = sparse[i]
            h = [0]
            acc = 0
            for seg in segs:
                for k, c in cor:
                    acc += seg[k] * c
                h.append(acc)
            m = min(h)
            if m % den or h[-1] % den:
                raise InternalError("generated path left the integral class")
            e_val = (-m) // den
            p_val = (h[-1] - m) // den
            eps[i].append(e_val)
            phi[i].append(p_val)
            if p_val >= 1:
                fx = _lower_scaled(rd, positions[i], x, h, m)
                tid = ids.get(fx)
                if tid is None:
                    tid = len(paths)
                    if tid >= limit:
                        raise GuardError(
                            f"crystal for highest weight {lam} exceeded the "
                            f"element guard ({limit})")
                    ids[fx] = tid
                    paths.append(fx)
                f_tmp[i].append(tid)
            else:
                f_tmp[i].append(None)

    # canonical element order: sort by path encoding and remap everything
    order = sorted(range(len(paths)), key=paths.__getitem__)
    rank_of = [0] * len(paths)
    for new, old in enumerate(order):
        rank_of[old] = new
    elements = tuple(paths[old] for old in order)
    weights = tuple(path_weight(rd, p) for p in elements)
    f_map, e_map = {}, {}
    for i in index_set:
        col = f_tmp[i]
        f_new = [None] * len(paths)
        e_new = [None] * len(paths)
        for old, tgt in enumerate(col):
            if tgt is not None:
                f_new[rank_of[old]] = rank_of[tgt]
        for src, tgt in enumerate(f_new):
            if tgt is not None:
                e_new[tgt] = src
        f_map[i] = f_new
        e_map[i] = e_new
        eps[i] = [eps[i][old] for old in order]
        phi[i] = [phi[i][old] for old in order]

    highest = rank_of[0]
    sources = [x for x in range(len(elements))
               if all(eps[i][x] == 0 for i in index_set)]
    if sources != [highest] or weights[highest] != lam:
        raise InternalError("generated graph does not have a unique source at lam")
    dim = weyl_dim(rd, lam)
    if len(elements) != dim:
        raise InternalError(
            f"crystal for {lam} has {len(elements)} elements, Weyl dimension is {dim}")
    return Crystal(rd, lam, elements, weights, eps, phi, f_map, e_map, highest)


# ---------------------------------------------------------------------------
# generic graph operations (Crystal, TensorCrystal, DictCrystal, ...)

def character(c):
    """Weight multiplicities {mu: count}, sorted by weight."""
    out = {}
    for w in c.weights:
        out[w] = out.get(w, 0) + 1
    return dict(sorted(out.items()))


def decompose(c, levi):
    """Highest-weight decomposition over the index subset `levi`: counts the
    elements killed by every e_i, i in levi, grouped by weight.  With the
    full index set on a tensor product this is the irreducible
    decomposition; with the empty set it is the character."""
    emaps = [c.e_map[i] for i in levi]
    out = {}
    for x in c.ids():
        if all(em[x] is None for em in emaps):
            w = c.weights[x]
            out[w] = out.get(w, 0) + 1
    return dict(sorted(out.items()))


def check_normal_crystal(c, recompute_operators=False):
    """Certify the crystal axioms on a graph:

      (a) phi_i - eps_i = <wt, coroot_i> everywhere;
      (b) the weight drops by alpha_i along f-edges; the unit statistics
          steps are certified through the string walk below;
      (c) the e- and f-maps are mutually inverse partial bijections;
      normality: eps_i / phi_i equal the exact raising/lowering string
      positions through every element.

    With recompute_operators=True (path crystals only) every stored edge and
    statistic is recomputed from the path operators and compared.
    """
    rd = c.datum
    report = CheckReport(name="normal-crystal axioms")
    n = len(c)
    weights = c.weights
    for i in c.index_set:
        pos = rd.pos(i)
        alpha = rd.simple_roots[pos]
        cor = rd.simple_coroots[pos]
        eps, phi = c.eps[i], c.phi[i]
        emap, fmap = c.e_map[i], c.f_map[i]
        heads = []
        for x in range(n):
            ex, fx = emap[x], fmap[x]
            report.checked += 1
            wx = weights[x]
            if phi[x] - eps[x] != sum(a * b for a, b in zip(wx, cor)):
                report.add(f"(a) fails at element {x}, index {i}")
            if fx is not None:
                wf = weights[fx]
                if any(a - b != al for a, b, al in zip(wx, wf, alpha)):
                    report.add(f"(b) weight step wrong on f_{i} at {x}")
                if emap[fx] != x:
                    report.add(f"(c) e_{i}(f_{i}({x})) != {x}")
            if ex is not None and fmap[ex] != x:
                report.add(f"(c) f_{i}(e_{i}({x})) != {x}")
            if ex is None:
                heads.append(x)
        # normality and the unit steps of (b): walk every i-string
        seen = 0
        for head in heads:
            chain = [head]
            y = head
            while True:
                fy = fmap[y]
                if fy is None:
                    break
                y = fy
                chain.append(y)
                if len(chain) > n:
                    report.add(f"f_{i} chain from {head} does not terminate")
                    break
            length = len(chain) - 1
            for depth, y in enumerate(chain):
                if eps[y] != depth or phi[y] != length - depth:
                    report.add(f"normality fails at element {y}, index {i}")
            seen += len(chain)
        if seen != n:
            report.add(f"i-strings for index {i} cover {seen} of {n} elements")
    if recompute_operators:
        if not isinstance(c, Crystal):
            raise InputError("operator recomputation needs a path crystal")
        for x in c.ids():
            path = c.elements[x]
            for i in c.index_set:
                sd = string_data(rd, path, i)
                report.checked += 1
                if sd.epsilon != c.epsilon(x, i) or sd.phi != c.phi_val(x, i):
                    report.add(f"stored statistics differ from the path at {x}, {i}")
                h = _breakpoint_values(rd, path, i)
                m = min(h)
                fx = _lower_scaled(rd, rd.pos(i), path, h, m)
                stored = c.f(x, i)
                if (fx is None) != (stored is None) or \
                        (fx is not None and c.id_of(fx) != stored):
                    report.add(f"stored f_{i} edge differs from the operator at {x}")
                ex = _raise_scaled(rd, rd.pos(i), path, h, m)
                stored = c.e(x, i)
                if (ex is None) != (stored is None) or \
                        (ex is not None and c.id_of(ex) != stored):
                    report.add(f"stored e_{i} edge differs from the operator at {x}")
    return report


class DictCrystal:
    """Mutable crystal graph over explicit dictionaries; used for ad-hoc
    graphs and mutation tests.  Same read interface as Crystal."""

    def __init__(self, datum, weights, eps, phi, e_map, f_map):
        self.datum = datum
        self.weights = list(weights)
        self.eps = {i: list(v) for i, v in eps.items()}
        self.phi = {i: list(v) for i, v in phi.items()}
        self.e_map = {i: list(v) for i, v in e_map.items()}
        self.f_map = {i: list(v) for i, v in f_map.items()}

    @classmethod
    def from_crystal(cls, c):
        return cls(c.datum,
                   [c.weight(x) for x in c.ids()],
                   {i: [c.epsilon(x, i) for x in c.ids()] for i in c.index_set},
                   {i: [c.phi_val(x, i) for x in c.ids()] for i in c.index_set},
                   {i: [c.e(x, i) for x in c.ids()] for i in c.index_set},
                   {i: [c.f(x, i) for x in c.ids()] for i in c.index_set})

    @property
    def index_set(self):
        return self.datum.index_set

    def __len__(self):
        return len(self.weights)

    def ids(self):
        return range(len(self.weights))

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


# ---------------------------------------------------------------------------
# exports

def crystal_to_json(c):
    elements = []
    for x in c.ids():
        entry = {"id": x, "weight": list(c.weight(x))}
        if isinstance(c, Crystal):
            entry["path"] = path_to_json(c.elements[x])
        elif hasattr(c, "unpack"):
            entry["pair"] = list(c.unpack(x))
        elements.append(entry)
    edges = []
    for i in sorted(c.index_set):
        for x in c.ids():
            y = c.f(x, i)
            if y is not None:
                edges.append({"from": x, "to": y, "label": i})
    data = {
        "datum": c.datum.descriptor(),
        "elements": elements,
        "edges": edges,
    }
    if hasattr(c, "hw"):
        data["highest_weight"] = list(c.hw)
    return data


def crystal_to_dot(c):
    lines = ["digraph crystal {"]
    for x in c.ids():
        label = "(" + ", ".join(str(v) for v in c.weight(x)) + ")"
        lines.append(f'  n{x} [label="{label}"];')
    for i in sorted(c.index_set):
        for x in c.ids():
            y = c.f(x, i)
            if y is not None:
                lines.append(f'  n{x} -> n{y} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
