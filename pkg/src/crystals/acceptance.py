"""Exhaustive oracle sweep backing the acceptance suite.

For each listed datum, every dominant highest weight with Weyl dimension
up to the cap is enumerated (GL(n) weights are normalized to last
coordinate zero: central shifts translate the whole picture), the crystal
is built once, and three independent certificates run on it: exact
character equality against the recursion oracle, the normal-crystal
axioms, and the string-structure check per index.  Tasks fan out over a
process pool when more than one job is requested.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from . import characters
from .branching import string_structure_check
from .crystal_graph import build_crystal, character, check_normal_crystal
from .root_data import build_datum

SWEEP_DATA = ("A1", "A2", "A3", "B2", "C2", "G2", "GL2", "GL3", "GL4")
EXTRA_WEIGHTS = (("GL4", (2, 0, 0, -2)),)  # non-normalized reference instance
DEFAULT_DIM_CAP = 5000


def _coeff_basis(rd):
    """Generators of the dominant monoid used for enumeration: fundamental
    weights for the semisimple layouts, partial-sum vectors for GL(n)."""
    if len(rd.index_set) == rd.rank:
        return [tuple(int(i == j) for j in range(rd.rank)) for i in range(rd.rank)]
    if rd.name.startswith("GL"):
        n = rd.rank
        return [tuple(1 if j <= k else 0 for j in range(n)) for k in range(n - 1)]
    raise ValueError(f"no dominant enumeration rule for datum {rd.name}")


def dominant_weights_upto(datum_name, dim_cap):
    """All normalized dominant weights of the datum with Weyl dimension at
    most dim_cap, in deterministic order.  The Weyl dimension is strictly
    monotone in every generator coefficient, which makes the pruning
    complete."""
    rd = build_datum(datum_name)
    gens = _coeff_basis(rd)
    out = []

    def rec(lam, k):
        if k == len(gens):
            out.append(lam)
            return
        cur = lam
        while True:
            if characters.weyl_dim(rd, cur) > dim_cap:
                break
            rec(cur, k + 1)
            cur = tuple(a + g for a, g in zip(cur, gens[k]))

    zero = tuple(0 for _ in range(rd.rank))
    if characters.weyl_dim(rd, zero) <= dim_cap:
        rec(zero, 0)
    return sorted(out)


def sweep_task(datum_name, lam):
    """Build B(lam) once and run the three per-crystal certificates."""
    rd = build_datum(datum_name)
    c = build_crystal(rd, lam)
    failures = []
    table = characters.freudenthal(rd, lam)
    if character(c) != dict(sorted(table.mults.items())):
        failures.append("character differs from the recursion oracle")
    if len(c) != characters.weyl_dim(rd, lam):
        failures.append("element count differs from the Weyl dimension")
    axioms = check_normal_crystal(c)
    if not axioms.ok:
        failures.append("axioms: " + "; ".join(axioms.violations[:3]))
    for i in rd.index_set:
        strings = string_structure_check(c, i)
        if not strings.ok:
            failures.append(f"strings[{i}]: " + "; ".join(strings.violations[:3]))
    return {
        "datum": datum_name,
        "lam": lam,
        "dim": len(c),
        "failures": failures,
    }


def _run_one(job):
    return sweep_task(*job)


def run_sweep(dim_cap=DEFAULT_DIM_CAP, data=SWEEP_DATA, jobs=None):
    """Run the exhaustive sweep; returns a summary dict with any failures.

    jobs=None uses CRYSTALS_ACCEPT_JOBS or the CPU count; jobs=1 stays in
    process.  Aggregation is sorted, so the summary is deterministic
    regardless of scheduling.
    """
    tasks = []
    for name in data:
        for lam in dominant_weights_upto(name, dim_cap):
            tasks.append((name, lam))
    for name, lam in EXTRA_WEIGHTS:
        if name in data and characters.weyl_dim(build_datum(name), lam) <= dim_cap:
            tasks.append((name, lam))
    tasks.sort()
    if jobs is None:
        jobs = int(os.environ.get("CRYSTALS_ACCEPT_JOBS", 0)) or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=16))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda r: (r["datum"], r["lam"]))
    failures = [r for r in results if r["failures"]]
    return {
        "dim_cap": dim_cap,
        "data": list(data),
        "crystals": len(results),
        "elements": sum(r["dim"] for r in results),
        "per_datum": {
            name: sum(1 for r in results if r["datum"] == name) for name in data
        },
        "failures": [
            {"datum": r["datum"], "lam": list(r["lam"]), "failures": r["failures"]}
            for r in failures
        ],
    }
