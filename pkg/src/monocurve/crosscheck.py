"""Full consistency battery run on a single semigroup.

Used by the ``fuzz`` CLI command and the property-based test suite: every
instance goes through the resolution-graph invariants, the two independent
zeta computations, the characteristic-polynomial checks (dense expansion
when the degree is small enough), the per-level factor splitting and the
pole verdicts.  Failures are collected as human-readable strings instead of
raising, so a campaign can report every offending generator tuple.
"""

from __future__ import annotations

from .conjecture import pk_factorization, verify_conjecture
from .errors import BudgetExceeded, MonocurveError
from .oracle import enum_digits
from .resolution import build_resolution, zeta_from_graph
from .semigroup import PlaneSemigroup, decompose
from .zeta import characteristic_polynomial

__all__ = ["cross_check", "DENSE_MU_CAP"]

DENSE_MU_CAP = 5000


def cross_check(sg: PlaneSemigroup, dense_mu_cap: int = DENSE_MU_CAP) -> list[str]:
    """Run every cross-check on ``sg``; return failure descriptions (empty = pass).

    Checks: resolution-graph invariants (divisibility, component counts,
    tree shape, quotient-space cross-validation), stratum-product zeta equal
    to the closed form, characteristic polynomial with nonnegative
    cyclotomic exponents and degree equal to the Milnor number (verified by
    dense expansion when it is at most ``dense_mu_cap``), exact per-level
    factor splitting, a passing pole verdict, and agreement of the modular
    digit decomposition with exhaustive search where the search space is
    small.
    """
    failures: list[str] = []
    tag = f"gens={sg.gens}"

    try:
        graph = build_resolution(sg)
        zeta_from_graph(graph)
    except MonocurveError as exc:
        failures.append(f"{tag}: resolution graph: {exc}")

    try:
        delta = characteristic_polynomial(sg)
        if delta.mu <= dense_mu_cap:
            delta.expand(max_degree=dense_mu_cap)
    except MonocurveError as exc:
        failures.append(f"{tag}: characteristic polynomial: {exc}")

    try:
        pk_factorization(sg)
    except MonocurveError as exc:
        failures.append(f"{tag}: per-level factor splitting: {exc}")

    try:
        report = verify_conjecture(sg)
        if not report.passed:
            bad = [p.display for p in report.poles if not p.verdict]
            failures.append(f"{tag}: pole verdict false at {bad}")
    except MonocurveError as exc:
        failures.append(f"{tag}: pole verification: {exc}")

    for i in range(1, sg.g + 1):
        s = sg.n[i] * sg.gens[i]
        try:
            brute = enum_digits(s, i, sg)
        except BudgetExceeded:
            continue
        except MonocurveError as exc:
            failures.append(f"{tag}: digit search at level {i}: {exc}")
            continue
        if brute != decompose(sg, s, i):
            failures.append(
                f"{tag}: digit decomposition at level {i}: "
                f"search {brute} != modular {decompose(sg, s, i)}"
            )
    return failures
