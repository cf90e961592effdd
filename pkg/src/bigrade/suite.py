"""Seeded random regression suite over small monomial ideals.

Each check is a theorem from the underlying theory; any violation indicates a
bug, so the suite reports violating ideals rather than raising mid-run.  Used
both by `bigrade suite` and the acceptance tests.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor

from .errors import InternalCheckFailed
from .filtration import ass_quotients, dimension_filtration, mgrade_constancy, sequentially_cm
from .homology import Subquotient, depth_module
from .invariants import analyze, cd, cd_prime, grade, mgrade
from .local_cohomology import generalized_cm, lc_report
from .rings import (
    MonomialIdeal,
    RingSpec,
    associated_primes,
    dim_quotient,
    minimal_generators,
    prime_ideal,
    sum_ideal,
)


def random_ideal(rng: random.Random, max_m=3, max_n=3, max_exp=2, max_gens=6,
                 char=0) -> MonomialIdeal:
    """A random proper nonzero monomial ideal in a random small bigraded ring."""
    while True:
        m = rng.randint(1, max_m)
        n = rng.randint(1, max_n)
        ring = RingSpec(m, n, char)
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            g = tuple(
                rng.choice([0, 0, 1, rng.randint(1, max_exp)])
                for _ in range(m + n)
            )
            if any(g):
                gens.append(g)
        if gens:
            return ring, minimal_generators(ring, gens)


def check_instance(ring: RingSpec, I: MonomialIdeal) -> list:
    """All property checks on one ideal; returns the names of failed checks."""
    failures = []
    Z = ring.y_block()
    P = ring.x_block()

    def run(name, fn):
        try:
            if fn() is False:
                failures.append(name)
        except InternalCheckFailed:
            failures.append(name)

    rep = analyze(I, Z)  # raises InternalCheckFailed on a chain violation
    ass = associated_primes(I)

    # cd(Q, S/I) = dim S/(P+I)
    PI = sum_ideal(I, prime_ideal(ring, P))
    run("cd_eq_dim_mod_P", lambda: rep.cd == (0 if PI.is_unit else dim_quotient(PI)))

    # grade(Q) <= dim - cd(P), with equality for Cohen-Macaulay modules
    cd_P = cd(Subquotient.cyclic(I), P)
    run("grade_le_dim_minus_cd_opposite", lambda: rep.grade <= rep.dim - cd_P)
    if rep.cm_ordinary:
        run("grade_eq_dim_minus_cd_when_cm", lambda: rep.grade == rep.dim - cd_P)

    # grade 0 iff some associated prime contains the whole axis
    run("grade0_iff_ass_contains_axis", lambda: (rep.grade == 0) == any(Z <= p for p in ass))

    # mgrade(Q) = n - (max y-height over Ass)
    run(
        "mgrade_from_ass_heights",
        lambda: rep.mgrade == ring.n - max(len(p & Z) for p in ass),
    )

    # grade/mgrade degeneracies
    run("mgrade1_forces_grade1", lambda: rep.mgrade != 1 or rep.grade == 1)
    run("grade0_iff_mgrade0", lambda: (rep.grade == 0) == (rep.mgrade == 0))

    if not I.is_zero:
        # the ladder's Ass identities and step partition are asserted inside
        run("ladder_ass_identities", lambda: dimension_filtration(I, Z) is not None)
        run("step_ass_partition", lambda: ass_quotients(dimension_filtration(I, Z)) is not None)

        seq = sequentially_cm(I, Z)
        run("seqcm_implies_maxdepth", lambda: not seq["verdict"] or rep.maximal_depth)
        run("ladder_mgrade_constant", lambda: mgrade_constancy(I, Z))
        if seq["verdict"]:
            ladder = seq["ladder"]
            run(
                "seqcm_step_grades",
                lambda: all(
                    grade(Subquotient(ring, J_i, I), Z) == rep.grade
                    for J_i, _ in ladder.steps
                ),
            )

    # ordinary CM implies maximal depth w.r.t. both axes
    if rep.cm_ordinary:
        rep_P = analyze(I, P)
        run("cm_implies_maxdepth_both_axes", lambda: rep.maximal_depth and rep_P.maximal_depth)

    # under maximal depth the bottom cohomology is never f.g.; nor is the top
    if rep.maximal_depth and rep.grade > 0:
        run("maxdepth_bottom_lc_not_fg", lambda: not lc_report(I, rep.grade, Z).finitely_generated)
    if rep.cd > 0:
        run("top_lc_not_fg", lambda: not lc_report(I, rep.cd, Z).finitely_generated)

    # the three-way equivalence on the generalized-CM, positive-grade subsample
    if rep.grade > 0 and generalized_cm(I, Z):
        from .local_cohomology import corollary_check

        run("gencm_triple_equivalence", lambda: corollary_check(I, Z) is not None)

    # cross-module consistency: grade and cd from lc_report nonvanishing
    nonzero = [
        i for i in range(ring.n + 1)
        if _lc_nonzero(lc_report(I, i, Z))
    ]
    run("lc_grade_cd_match", lambda: nonzero and nonzero[0] == rep.grade and nonzero[-1] == rep.cd)

    return failures


def _lc_nonzero(report) -> bool:
    return any(
        (e.total_dim is None) or e.total_dim > 0
        for e in report.per_fiber
    )


def run_property_suite(count=200, seed=20240811, max_m=3, max_n=3, max_exp=2,
                       max_gens=6, char=0) -> dict:
    rng = random.Random(seed)
    instances = []
    for _ in range(count):
        ring, I = random_ideal(rng, max_m, max_n, max_exp, max_gens, char)
        if not I.is_unit:
            instances.append((ring, I))

    # BIGRADE_THREADS caps the worker count; results merge in submission order
    workers = max(1, int(os.environ.get("BIGRADE_THREADS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda ri: check_instance(*ri), instances))
    else:
        results = [check_instance(ring, I) for ring, I in instances]

    violations = {}
    for (ring, I), failed in zip(instances, results):
        for name in failed:
            violations.setdefault(name, []).append(f"ring {ring.m} {ring.n}: {I}")
    return {
        "count": len(instances),
        "seed": seed,
        "violations": violations,
        "ok": not violations,
    }
