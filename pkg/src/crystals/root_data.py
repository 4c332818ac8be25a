"""Reductive root data: lattice arithmetic, Weyl reflections, dominance
orders, quotient classes and Langlands duality.

Weights are plain integer tuples in an ambient lattice basis.  Simple
coroots are stored in the dual basis, so the pairing <v, coroot_i> is the
standard dot product; this fixes all sign conventions in one place.

Basis conventions for the named data:
  * GL(n): the epsilon basis, alpha_i = e_i - e_{i+1} on both sides.
  * named semisimple types (A1..A4, B2, B3, C2, C3, D4, G2, F4): the
    fundamental-weight basis, so coroot_i is the i-th dual basis vector and
    alpha_j is the j-th column of the Cartan matrix.
  * PGL3: its coweight lattice is the SL3 weight lattice, so the datum is
    laid out exactly like A2 (crystals built from it are SL3-crystals for
    the dual group); SL3 is the Langlands-dual layout on the root lattice.
  * products (e.g. "GL2xGL2"): block-diagonal, with simple-root indices
    offset by the ambient rank of the preceding factors, so GL2xGL2 has
    index set {1, 3} exactly like the corresponding Levi of GL4.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import rational_inverse, rational_rank, smith_normal_form

DEFAULT_MAX_ELEMENTS = 1_000_000

Weight = tuple  # integer tuple in ambient coordinates


class InputError(ValueError):
    """Invalid datum, weight, index or argument combination."""


class GuardError(RuntimeError):
    """An element guard was exceeded while generating a crystal."""


class InternalError(RuntimeError):
    """A certified invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class RootDatum:
    name: str
    rank: int
    index_set: tuple
    simple_roots: tuple    # tuple of integer tuples, parallel to index_set
    simple_coroots: tuple  # same shape, dual basis coordinates

    def __post_init__(self):
        l = len(self.index_set)
        if len(self.simple_roots) != l or len(self.simple_coroots) != l:
            raise InputError("index_set, simple_roots and simple_coroots must have equal length")
        if l > self.rank:
            raise InputError("more simple roots than the ambient rank")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank or not all(isinstance(x, int) for x in v):
                raise InputError("root/coroot vectors must be integer tuples of length rank")
        if len(set(self.index_set)) != l:
            raise InputError("repeated indices in index_set")
        if l:
            if rational_rank(list(self.simple_roots)) != l:
                raise InputError("simple roots are linearly dependent")
            if rational_rank(list(self.simple_coroots)) != l:
                raise InputError("simple coroots are linearly dependent")
        a = cartan_matrix(self)
        for p in range(l):
            if a[p][p] != 2:
                raise InputError("Cartan matrix needs 2 on the diagonal")
            for q in range(l):
                if p != q:
                    if a[p][q] > 0:
                        raise InputError("off-diagonal Cartan entries must be <= 0")
                    if (a[p][q] == 0) != (a[q][p] == 0):
                        raise InputError("Cartan zero pattern must be symmetric")

    def pos(self, i):
        try:
            return self.index_set.index(i)
        except ValueError:
            raise InputError(f"index {i} not in index set {self.index_set}") from None

    def descriptor(self):
        return {
            "name": self.name,
            "rank": self.rank,
            "index_set": list(self.index_set),
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
        }


@functools.cache
def cartan_matrix(rd: RootDatum):
    """Matrix a[p][q] = <alpha_q, coroot_p> over positions in index_set."""
    return tuple(
        tuple(sum(x * y for x, y in zip(alpha, cor)) for alpha in rd.simple_roots)
        for cor in rd.simple_coroots
    )


# ---------------------------------------------------------------------------
# named data

def _cartan_series(kind, l):
    a = [[2 * (i == j) for j in range(l)] for i in range(l)]
    for i in range(l - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if kind == "B":   # last root short: <alpha_{l-1}, coroot_l> = -2
        a[l - 1][l - 2] = -2
    elif kind == "C":
        a[l - 2][l - 1] = -2
    elif kind == "D":
        a[l - 1][l - 2] = a[l - 2][l - 1] = 0
        a[l - 1][l - 3] = a[l - 3][l - 1] = -1
    return a


_NAMED_CARTAN = {
    "A1": _cartan_series("A", 1), "A2": _cartan_series("A", 2),
    "A3": _cartan_series("A", 3), "A4": _cartan_series("A", 4),
    "B2": _cartan_series("B", 2), "B3": _cartan_series("B", 3),
    "C2": _cartan_series("C", 2), "C3": _cartan_series("C", 3),
    "D4": _cartan_series("D", 4),
    # a[i][j] = <alpha_j, coroot_i>; alpha_1 short for G2, alpha_3/alpha_4 short for F4
    "G2": [[2, -3], [-1, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
}

_DUAL_NAME = {
    "B2": "C2", "C2": "B2", "B3": "C3", "C3": "B3",
    "PGL3": "SL3", "SL3": "PGL3",
}


def _from_cartan(name, a):
    """Semisimple datum in the fundamental-weight basis: coroot_i = e_i,
    alpha_j = j-th column of the Cartan matrix."""
    l = len(a)
    roots = tuple(tuple(a[i][j] for i in range(l)) for j in range(l))
    coroots = tuple(tuple(int(i == j) for j in range(l)) for i in range(l))
    return RootDatum(name=name, rank=l, index_set=tuple(range(1, l + 1)),
                     simple_roots=roots, simple_coroots=coroots)


def _gl_datum(n):
    roots = tuple(
        tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n))
        for i in range(n - 1)
    )
    return RootDatum(name=f"GL{n}", rank=n, index_set=tuple(range(1, n)),
                     simple_roots=roots, simple_coroots=roots)


def _sl3_datum():
    # root-lattice basis: alpha_j = e_j, coroot_i = i-th row of the A2 Cartan
    a = _NAMED_CARTAN["A2"]
    roots = tuple(tuple(int(i == j) for j in range(2)) for i in range(2))
    coroots = tuple(tuple(a[i]) for i in range(2))
    return RootDatum(name="SL3", rank=2, index_set=(1, 2),
                     simple_roots=roots, simple_coroots=coroots)


def _single_datum(name):
    if name in _NAMED_CARTAN:
        return _from_cartan(name, _NAMED_CARTAN[name])
    if name.startswith("GL"):
        try:
            n = int(name[2:])
        except ValueError:
            raise InputError(f"unknown datum name {name!r}") from None
        if n < 1:
            raise InputError(f"unknown datum name {name!r}")
        return _gl_datum(n)
    if name == "PGL3":
        d = _from_cartan("PGL3", _NAMED_CARTAN["A2"])
        return d
    if name == "SL3":
        return _sl3_datum()
    raise InputError(f"unknown datum name {name!r}")


def _product_datum(names):
    factors = [_single_datum(n) for n in names]
    rank = sum(f.rank for f in factors)
    roots, coroots, indices = [], [], []
    offset = 0
    for f in factors:
        for i, alpha, cor in zip(f.index_set, f.simple_roots, f.simple_coroots):
            indices.append(i + offset)
            roots.append((0,) * offset + alpha + (0,) * (rank - offset - f.rank))
            coroots.append((0,) * offset + cor + (0,) * (rank - offset - f.rank))
        offset += f.rank
    return RootDatum(name="x".join(names), rank=rank, index_set=tuple(indices),
                     simple_roots=tuple(roots), simple_coroots=tuple(coroots))


def build_datum(spec):
    """Build a RootDatum from a compact name ("A2", "GL4", "GL2xGL2"), or an
    explicit {"rank", "simple_roots", "simple_coroots", "name"} mapping.

    Validates the Cartan axioms, linear independence, and (via the positive
    root closure) finiteness of the root system.
    """
    if isinstance(spec, RootDatum):
        return spec
    if isinstance(spec, str):
        parts = spec.split("x")
        if any(not p for p in parts):
            raise InputError(f"malformed datum name {spec!r}")
        rd = _single_datum(parts[0]) if len(parts) == 1 else _product_datum(parts)
    elif isinstance(spec, dict):
        try:
            rank = int(spec["rank"])
            roots = tuple(tuple(int(x) for x in v) for v in spec["simple_roots"])
            coroots = tuple(tuple(int(x) for x in v) for v in spec["simple_coroots"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed datum descriptor: {exc}") from None
        index_set = tuple(spec.get("index_set", range(1, len(roots) + 1)))
        rd = RootDatum(name=str(spec.get("name", "custom")), rank=rank,
                       index_set=index_set, simple_roots=roots, simple_coroots=coroots)
    else:
        raise InputError(f"datum descriptor must be a name or a mapping, got {type(spec).__name__}")
    positive_roots(rd)  # raises on non-finite Cartan data
    return rd


def levi_datum(rd: RootDatum, levi):
    """Sub-datum on the index subset `levi`, keeping the original labels."""
    levi = tuple(sorted(levi))
    pos = [rd.pos(i) for i in levi]
    if levi == rd.index_set:
        return rd
    return RootDatum(
        name=f"{rd.name}|{','.join(map(str, levi))}",
        rank=rd.rank,
        index_set=levi,
        simple_roots=tuple(rd.simple_roots[p] for p in pos),
        simple_coroots=tuple(rd.simple_coroots[p] for p in pos),
    )


# ---------------------------------------------------------------------------
# lattice arithmetic

def check_weight(rd: RootDatum, v):
    if len(v) != rd.rank:
        raise InputError(f"weight {v} has length {len(v)}, datum rank is {rd.rank}")
    return tuple(v)


def pairing(rd: RootDatum, v, i):
    """<v, coroot_i> as an exact integer (rational for rational vectors)."""
    cor = rd.simple_coroots[rd.pos(i)]
    return sum(x * y for x, y in zip(v, cor))


def reflect(rd: RootDatum, v, i):
    """Simple reflection s_i(v) = v - <v, coroot_i> alpha_i."""
    p = rd.pos(i)
    c = sum(x * y for x, y in zip(v, rd.simple_coroots[p]))
    if c == 0:
        return tuple(v)
    alpha = rd.simple_roots[p]
    return tuple(x - c * a for x, a in zip(v, alpha))


def apply_word(rd: RootDatum, v, word):
    """Apply s_{word[0]} s_{word[1]} ... s_{word[-1]} to v, rightmost first."""
    for i in reversed(word):
        v = reflect(rd, v, i)
    return v


def dominant_representative(rd: RootDatum, v, levi=None):
    """Dominant representative of v in its W_I orbit, with a reflection word.

    Returns (w, word) where w is I-dominant, word = (i_1, ..., i_k) lists the
    reflections in the order they were applied to v, and
    apply_word(rd, w, word) == v.
    """
    indices = rd.index_set if levi is None else tuple(levi)
    pos = [(i, rd.pos(i)) for i in indices]
    w = list(v)
    word = []
    while True:
        for i, p in pos:
            c = sum(x * y for x, y in zip(w, rd.simple_coroots[p]))
            if c < 0:
                alpha = rd.simple_roots[p]
                for k in range(rd.rank):
                    w[k] -= c * alpha[k]
                word.append(i)
                break
        else:
            return tuple(w), tuple(word)


@functools.cache
def _coords_solver(rd: RootDatum, indices):
    """Solver data for expressing vectors over {alpha_i : i in indices}:
    (independent ambient coordinates, inverted pivot block, columns)."""
    pos = [rd.pos(i) for i in indices]
    cols = [rd.simple_roots[p] for p in pos]
    if not cols:
        return (), (), ()
    # rows of the r x l matrix with the alpha as columns; keep l independent ones
    mat = [[cols[j][k] for j in range(len(cols))] for k in range(rd.rank)]
    chosen = []
    rank_rows = []
    for k in range(rd.rank):
        trial = rank_rows + [mat[k]]
        if rational_rank(trial) == len(trial):
            rank_rows.append(mat[k])
            chosen.append(k)
        if len(chosen) == len(cols):
            break
    inv = rational_inverse(rank_rows)
    inv = tuple(tuple(x if x.denominator != 1 else x.numerator for x in row) for row in inv)
    return tuple(chosen), inv, tuple(cols)


def root_coords(rd: RootDatum, v, levi=None):
    """Coefficients (c_i) with v = sum c_i alpha_i over `levi`, or None if v
    is outside the rational span.  Entries are ints where integral."""
    indices = rd.index_set if levi is None else tuple(levi)
    chosen, inv, cols = _coords_solver(rd, indices)
    if not cols:
        return () if all(x == 0 for x in v) else None
    sub = [v[k] for k in chosen]
    coeffs = [sum(a * b for a, b in zip(row, sub)) for row in inv]
    # consistency on the full ambient vector
    for k in range(rd.rank):
        if sum(c * col[k] for c, col in zip(coeffs, cols)) != v[k]:
            return None
    return tuple(c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
                 for c in coeffs)


def dominance_leq(rd: RootDatum, a, b, levi=None):
    """a <= b in the dominance order over `levi`: b - a is a nonnegative
    integer combination of the simple roots alpha_i, i in levi."""
    diff = tuple(x - y for x, y in zip(b, a))
    coords = root_coords(rd, diff, levi)
    if coords is None:
        return False
    return all(isinstance(c, int) and c >= 0 for c in coords)


def is_dominant(rd: RootDatum, v, levi=None):
    indices = rd.index_set if levi is None else levi
    return all(pairing(rd, v, i) >= 0 for i in indices)


def height(rd: RootDatum, v, levi=None):
    """Sum of simple-root coefficients of v over `levi` (None if outside)."""
    coords = root_coords(rd, v, levi)
    return None if coords is None else sum(coords)


# ---------------------------------------------------------------------------
# positive roots

@dataclass(frozen=True)
class PosRoot:
    root: tuple          # ambient coordinates
    coroot: tuple        # dual coordinates
    root_coords: tuple   # coefficients over the simple roots (index_set order)
    coroot_coords: tuple


_CLOSURE_GUARD = 10_000


@functools.cache
def positive_roots(rd: RootDatum):
    """All positive roots of the subsystem spanned by index_set, with their
    coroots, via closure under simple reflections.  Deterministic order
    (by height, then root vector).  Raises InputError if the closure does
    not terminate (non-finite Cartan data)."""
    l = len(rd.index_set)
    seen = {}
    for p in range(l):
        coords = tuple(int(p == q) for q in range(l))
        seen[rd.simple_roots[p]] = PosRoot(rd.simple_roots[p], rd.simple_coroots[p],
                                           coords, coords)
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for pr in frontier:
            for p in range(l):
                c = sum(x * y for x, y in zip(pr.root, rd.simple_coroots[p]))
                if c >= 0:
                    continue  # reflection raises only when the pairing is negative
                root = tuple(x - c * a for x, a in zip(pr.root, rd.simple_roots[p]))
                if root in seen:
                    continue
                d = sum(x * y for x, y in zip(rd.simple_roots[p], pr.coroot))
                coroot = tuple(x - d * a for x, a in zip(pr.coroot, rd.simple_coroots[p]))
                rc = list(pr.root_coords)
                rc[p] -= c
                cc = list(pr.coroot_coords)
                cc[p] -= d
                new = PosRoot(root, coroot, tuple(rc), tuple(cc))
                seen[root] = new
                nxt.append(new)
                if len(seen) > _CLOSURE_GUARD:
                    raise InputError("positive-root closure does not terminate; "
                                     "Cartan data is not of finite type")
        frontier = nxt
    out = sorted(seen.values(), key=lambda pr: (sum(pr.root_coords), pr.root))
    return tuple(out)


def langlands_dual(rd: RootDatum):
    """Datum with roots and coroots exchanged; Cartan matrix transposes."""
    if rd.name in _DUAL_NAME:
        name = _DUAL_NAME[rd.name]
    elif rd.name.startswith("dual(") and rd.name.endswith(")"):
        name = rd.name[5:-1]
    elif rd.name.startswith("GL") or rd.name.startswith("A"):
        name = rd.name  # self-dual layouts
    else:
        name = f"dual({rd.name})"
    return RootDatum(name=name, rank=rd.rank, index_set=rd.index_set,
                     simple_roots=rd.simple_coroots, simple_coroots=rd.simple_roots)


# ---------------------------------------------------------------------------
# quotient by the Levi root span (character lattice of the dual Levi center)

@dataclass(frozen=True)
class QuotientClass:
    datum_name: str
    levi: tuple
    representative: tuple
    key: tuple        # canonical reduced coordinates: equal iff classes equal
    structure: tuple  # SNF diagonal entries of the Levi root span

    def __add__(self, other):
        if not isinstance(other, QuotientClass):
            return NotImplemented
        if (self.datum_name, self.levi) != (other.datum_name, other.levi):
            raise InputError("cannot add classes over different quotients")
        rep = tuple(x + y for x, y in zip(self.representative, other.representative))
        key = _reduce_key(rep, self.structure, _SNF_CACHE[(self.datum_name, self.levi)])
        return QuotientClass(self.datum_name, self.levi, rep, key, self.structure)

    def __eq__(self, other):
        return (isinstance(other, QuotientClass)
                and (self.datum_name, self.levi, self.key) ==
                    (other.datum_name, other.levi, other.key))

    def __hash__(self):
        return hash((self.datum_name, self.levi, self.key))


_SNF_CACHE = {}


def _snf_data(rd: RootDatum, levi):
    cache_key = (rd.name, levi)
    if cache_key not in _SNF_CACHE:
        pos = [rd.pos(i) for i in levi]
        if pos:
            mat = [[rd.simple_roots[p][k] for p in pos] for k in range(rd.rank)]
        else:
            mat = [[0] for _ in range(rd.rank)]  # zero span
        d, u, _ = smith_normal_form(mat)
        diag = tuple(d[t][t] if t < len(d[0]) else 0 for t in range(rd.rank))
        _SNF_CACHE[cache_key] = (tuple(tuple(row) for row in u), diag)
    return _SNF_CACHE[cache_key]


def _reduce_key(rep, diag, snf):
    u, _ = snf
    y = [sum(a * b for a, b in zip(row, rep)) for row in u]
    return tuple(yk % dk if dk else yk for yk, dk in zip(y, diag))


def central_class(rd: RootDatum, mu, levi):
    """Class of mu in Lambda / Z-span{alpha_i : i in levi} -- the character
    of the dual Levi center acting on anything of weight mu.  Two weights
    get equal classes iff their difference is an integer combination of the
    Levi simple roots; classes add."""
    levi = tuple(sorted(levi))
    for i in levi:
        rd.pos(i)
    mu = check_weight(rd, mu)
    snf = _snf_data(rd, levi)
    key = _reduce_key(mu, snf[1], snf)
    return QuotientClass(rd.name, levi, mu, key, snf[1])
