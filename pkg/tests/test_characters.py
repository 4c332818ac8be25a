import random

import pytest

from crystals import (
    InputError,
    branch_by_characters,
    build_datum,
    dominant_representative,
    freudenthal,
    is_weight,
    klimyk,
    levi_datum,
    weyl_dim,
)


def test_weyl_dim_values():
    a1 = build_datum("A1")
    for m in (0, 1, 5, 17):
        assert weyl_dim(a1, (m,)) == m + 1
    assert weyl_dim(build_datum("A2"), (1, 1)) == 8
    assert weyl_dim(build_datum("G2"), (1, 0)) == 7
    assert weyl_dim(build_datum("G2"), (0, 1)) == 14
    assert weyl_dim(build_datum("B2"), (1, 0)) == 5
    assert weyl_dim(build_datum("B2"), (0, 1)) == 4
    assert weyl_dim(build_datum("C2"), (1, 0)) == 4
    assert weyl_dim(build_datum("A3"), (0, 1, 0)) == 6
    assert weyl_dim(build_datum("A3"), (1, 0, 1)) == 15
    # the (2,1,0) module of GL3 is eight dimensional; 15 belongs to (3,1,0)
    assert weyl_dim(build_datum("GL3"), (2, 1, 0)) == 8
    assert weyl_dim(build_datum("GL3"), (3, 1, 0)) == 15
    assert weyl_dim(build_datum("GL4"), (2, 0, 0, -2)) == 84
    with pytest.raises(InputError):
        weyl_dim(build_datum("A2"), (-1, 0))


def test_freudenthal_tables():
    a1 = build_datum("A1")
    assert freudenthal(a1, (2,)).mults == {(2,): 1, (0,): 1, (-2,): 1}
    a2 = build_datum("A2")
    adj = freudenthal(a2, (1, 1)).mults
    assert adj[(0, 0)] == 2
    assert sum(adj.values()) == 8
    assert set(adj) == {(1, 1), (2, -1), (-1, 2), (0, 0), (-2, 1), (1, -2), (-1, -1)}
    gl3 = build_datum("GL3")
    t = freudenthal(gl3, (2, 1, 0)).mults
    assert t[(1, 1, 1)] == 2
    assert sum(t.values()) == 8
    assert all(m == 1 for w, m in t.items() if w != (1, 1, 1))


def test_freudenthal_sum_rule_random():
    rng = random.Random(3)
    for name in ("A2", "B2", "G2", "GL3", "GL2xGL2"):
        rd = build_datum(name)
        for _ in range(4):
            lam, _ = dominant_representative(
                rd, tuple(rng.randint(-3, 3) for _ in range(rd.rank)))
            t = freudenthal(rd, lam)
            assert t.dimension == weyl_dim(rd, lam)
            assert t.mults[lam] == 1


def test_klimyk_values():
    a1 = build_datum("A1")
    assert klimyk(a1, (1,), (1,)) == {(2,): 1, (0,): 1}
    assert klimyk(a1, (3,), (0,)) == {(3,): 1}
    a2 = build_datum("A2")
    assert klimyk(a2, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}
    g2 = build_datum("G2")
    seven_squared = klimyk(g2, (1, 0), (1, 0))
    assert seven_squared == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 1}
    assert sum(m * weyl_dim(g2, w) for w, m in seven_squared.items()) == 49


def test_klimyk_symmetry_and_dimension():
    rng = random.Random(9)
    for name in ("A2", "B2", "GL3"):
        rd = build_datum(name)
        for _ in range(4):
            lam1, _ = dominant_representative(
                rd, tuple(rng.randint(-2, 2) for _ in range(rd.rank)))
            lam2, _ = dominant_representative(
                rd, tuple(rng.randint(-2, 2) for _ in range(rd.rank)))
            parts = klimyk(rd, lam1, lam2)
            assert parts == klimyk(rd, lam2, lam1)
            assert sum(m * weyl_dim(rd, w) for w, m in parts.items()) == \
                weyl_dim(rd, lam1) * weyl_dim(rd, lam2)
            assert all(m > 0 for m in parts.values())


def test_branch_by_characters():
    gl3 = build_datum("GL3")
    table = branch_by_characters(gl3, (2, 1, 0), (1,)).table
    assert table == {(2, 1, 0): 1, (2, 0, 1): 1, (1, 1, 1): 1, (1, 0, 2): 1}
    a2 = build_datum("A2")
    adj = branch_by_characters(a2, (1, 1), (1,)).table
    assert adj == {(2, -1): 1, (1, 1): 1, (1, -2): 1, (0, 0): 1}
    assert sum(m * weyl_dim(a2, nu, levi=(1,)) for nu, m in adj.items()) == 8
    full = branch_by_characters(gl3, (2, 1, 0), (1, 2)).table
    assert full == {(2, 1, 0): 1}
    empty = branch_by_characters(gl3, (2, 1, 0), ()).table
    assert empty == freudenthal(gl3, (2, 1, 0)).mults


def test_is_weight():
    gl4 = build_datum("GL4")
    lam = (2, 0, 0, -2)
    assert is_weight(gl4, lam, lam)
    assert not is_weight(gl4, lam, (2, -3, 3, -2))
    gl2 = build_datum("GL2")
    for n in range(7):
        for m in range(n + 3):
            assert is_weight(gl2, (n, 0), (n - m, m)) == (m <= n)
    # over a Levi datum: the determinant line has a single weight
    gl3 = build_datum("GL3")
    sub = levi_datum(gl3, (1,))
    assert is_weight(sub, (1, 1, 1), (1, 1, 1))
    assert not is_weight(sub, (1, 1, 1), (0, 2, 1))
