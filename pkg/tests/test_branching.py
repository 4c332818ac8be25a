import random

import pytest

from crystals import (
    DictCrystal,
    InputError,
    branch,
    branch_by_characters,
    branching_support,
    build_crystal,
    build_datum,
    central_class,
    character,
    component_bijection_check,
    dominant_representative,
    embedding_bounds_check,
    freudenthal,
    levi_ceiling,
    string_structure_check,
    weyl_dim,
)


def test_branch_trivial_modes():
    gl3 = build_datum("GL3")
    lam = (2, 1, 0)
    assert branch(gl3, lam, (1, 2)).table == {lam: 1}
    assert branch(gl3, lam, ()).table == character(build_crystal(gl3, lam))
    table = branch(gl3, lam, (1,)).table
    assert table[(1, 1, 1)] == 1
    assert table == branch_by_characters(gl3, lam, (1,)).table


def test_levi_ceiling():
    gl4 = build_datum("GL4")
    lam, mu = (2, 0, 0, -2), (0, -1, 1, 0)
    assert levi_ceiling(gl4, lam, mu, (1, 3)) == (2, -3, 3, -2)
    assert levi_ceiling(gl4, lam, mu, (1, 2, 3)) == lam
    assert levi_ceiling(gl4, lam, mu, ()) == mu
    with pytest.raises(InputError):
        levi_ceiling(gl4, mu, lam, (1, 3))  # difference leaves the cone


def test_branching_support_filters():
    gl3 = build_datum("GL3")
    lam, levi = (2, 1, 0), (1,)
    full = branching_support(gl3, lam, levi)
    assert full == sorted(branch(gl3, lam, levi).table)
    # (0,2,1) is below (1,1,1) in the Levi order but the determinant line
    # has no other weight, so the mu-filter drops it
    mu_set = branching_support(gl3, lam, levi, mu=(0, 2, 1))
    assert mu_set == [(2, 0, 1)]
    top = branching_support(gl3, lam, levi, mu=lam)
    assert top == [lam]
    # the central classes partition the support
    classes = {}
    for nu in full:
        classes.setdefault(central_class(gl3, nu, levi), []).append(nu)
    union = []
    for theta, part in classes.items():
        filtered = branching_support(gl3, lam, levi, theta=theta)
        assert filtered == sorted(part)
        union.extend(filtered)
    assert sorted(union) == full
    with pytest.raises(InputError):
        branching_support(gl3, lam, levi, mu=lam, theta=central_class(gl3, lam, levi))


def test_component_bijection_instances():
    gl4 = build_datum("GL4")
    report = component_bijection_check(gl4, (2, 0, 0, -2), (0, -1, 1, 0), (1, 3))
    assert report.ok, report.violations
    assert report.details["fiber_size"] == len(report.details["bijection"])
    a2 = build_datum("A2")
    report2 = component_bijection_check(a2, (1, 1), (0, 0), (1,))
    assert report2.ok
    assert report2.details["fiber_size"] == 2
    # the full Levi reduces the identity to the weight fiber itself
    report3 = component_bijection_check(a2, (1, 1), (0, 0), (1, 2))
    assert report3.ok
    assert report3.details["fiber_size"] == 2


def test_string_structure():
    a1 = build_datum("A1")
    c = build_crystal(a1, (4,))
    rep = string_structure_check(c, 1)
    assert rep.ok
    g2 = build_datum("G2")
    c2 = build_crystal(g2, (1, 0))
    for i in g2.index_set:
        assert string_structure_check(c2, i).ok
    # relabeling one edge from i to j breaks the string structure
    broken = DictCrystal.from_crystal(c2)
    x = next(x for x in broken.ids() if broken.f_map[1][x] is not None)
    broken.f_map[2][x], broken.f_map[1][x] = broken.f_map[1][x], None
    assert not (string_structure_check(broken, 1).ok
                and string_structure_check(broken, 2).ok)


def test_embedding_bounds_reference_instances():
    gl4 = build_datum("GL4")
    r1 = embedding_bounds_check(gl4, (2, 0, 0, -2), (0, -1, 1, 0), (1, 3))
    assert r1.ok, r1.violations
    assert r1.details["ceiling"] == [2, -3, 3, -2]
    assert not r1.details["ceiling_is_weight_of_ambient"]
    gl3 = build_datum("GL3")
    r2 = embedding_bounds_check(gl3, (2, 1, 0), (0, 2, 1), (1,))
    assert r2.ok, r2.violations
    assert r2.details["gap_witnesses"] == [[1, 1, 1]]
    # full Levi with dominant mu: ceiling equals lam and the bounds close up
    r3 = embedding_bounds_check(gl3, (2, 1, 0), (1, 1, 1), (1, 2))
    assert r3.ok
    assert tuple(r3.details["ceiling"]) == (2, 1, 0)
    assert r3.details["ceiling_reached"]


def test_weight_fiber_identity_random():
    rng = random.Random(23)
    for name in ("A2", "B2", "GL3"):
        rd = build_datum(name)
        for _ in range(3):
            lam, _ = dominant_representative(
                rd, tuple(rng.randint(-2, 2) for _ in range(rd.rank)))
            size = rng.randint(0, len(rd.index_set))
            levi = tuple(sorted(rng.sample(rd.index_set, size)))
            got = branch(rd, lam, levi)
            assert got.table == branch_by_characters(rd, lam, levi).table
            assert sum(m * weyl_dim(rd, nu, levi=levi)
                       for nu, m in got.table.items()) == weyl_dim(rd, lam)
            fibers = character(build_crystal(rd, lam))
            for mu, mult in fibers.items():
                rhs = sum(m * freudenthal(rd, nu, levi=levi).mults.get(mu, 0)
                          for nu, m in got.table.items())
                assert rhs == mult
