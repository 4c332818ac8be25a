import json

import pytest

from crystals import (
    DictCrystal,
    GuardError,
    InputError,
    build_crystal,
    build_datum,
    character,
    check_normal_crystal,
    crystal_to_dot,
    crystal_to_json,
    decompose,
    freudenthal,
    weyl_dim,
)


def test_rank_one_chain():
    a1 = build_datum("A1")
    c = build_crystal(a1, (2,))
    assert len(c) == 3
    assert sorted(c.weight(x) for x in c.ids()) == [(-2,), (0,), (2,)]
    assert character(c) == {(-2,): 1, (0,): 1, (2,): 1}
    # single f-chain from the highest element
    x = c.highest
    seen = [c.weight(x)]
    while c.f(x, 1) is not None:
        x = c.f(x, 1)
        seen.append(c.weight(x))
    assert seen == [(2,), (0,), (-2,)]


def test_trivial_crystal():
    c = build_crystal(build_datum("GL2xGL2"), (0, 0, 0, 0))
    assert len(c) == 1
    assert character(c) == {(0, 0, 0, 0): 1}


def test_gl3_example_against_oracle():
    gl3 = build_datum("GL3")
    c = build_crystal(gl3, (2, 1, 0))
    assert len(c) == weyl_dim(gl3, (2, 1, 0)) == 8
    assert character(c) == dict(sorted(freudenthal(gl3, (2, 1, 0)).mults.items()))
    assert character(c)[(1, 1, 1)] == 2


def test_decompose_modes():
    gl3 = build_datum("GL3")
    c = build_crystal(gl3, (2, 1, 0))
    assert decompose(c, gl3.index_set) == {(2, 1, 0): 1}
    assert decompose(c, ()) == character(c)
    assert decompose(c, (1,))[(1, 1, 1)] == 1


def test_axioms_and_operator_recheck():
    for name, lam in (("A1", (3,)), ("A2", (1, 1)), ("B2", (1, 1)),
                      ("G2", (1, 0)), ("GL4", (2, 0, 0, -2))):
        rd = build_datum(name)
        c = build_crystal(rd, lam)
        report = check_normal_crystal(c, recompute_operators=True)
        assert report.ok, report.violations


def test_mutation_detection():
    a2 = build_datum("A2")
    c = build_crystal(a2, (1, 1))
    broken = DictCrystal.from_crystal(c)
    # delete one f-edge: its inverse e-edge survives, so (c) must fire
    x = next(x for x in broken.ids() if broken.f_map[1][x] is not None)
    broken.f_map[1][x] = None
    report = check_normal_crystal(broken)
    assert not report.ok
    broken2 = DictCrystal.from_crystal(c)
    broken2.weights[0] = tuple(w + 1 for w in broken2.weights[0])
    assert not check_normal_crystal(broken2).ok


def test_guard():
    a1 = build_datum("A1")
    with pytest.raises(GuardError) as err:
        build_crystal(a1, (5,), max_elements=2)
    assert "(5,)" in str(err.value)
    with pytest.raises(InputError):
        build_crystal(a1, (-2,))
    with pytest.raises(InputError):
        build_crystal(a1, (1, 0))  # rank mismatch


def test_deterministic_rebuild():
    g2 = build_datum("G2")
    a = crystal_to_json(build_crystal(g2, (1, 1)))
    b = crystal_to_json(build_crystal(g2, (1, 1)))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_exports():
    a1 = build_datum("A1")
    c = build_crystal(a1, (1,))
    data = crystal_to_json(c)
    assert data["highest_weight"] == [1]
    assert len(data["elements"]) == 2
    assert data["edges"] == [{"from": 1, "to": 0, "label": 1}]
    assert all("path" in e for e in data["elements"])
    dot = crystal_to_dot(c)
    assert dot.startswith("digraph crystal {")
    assert '[label="1"]' in dot
    assert 'n1 -> n0' in dot
