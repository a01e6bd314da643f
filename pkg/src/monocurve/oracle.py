"""Independent brute-force verifiers for the closed-form formulas.

Roots of unity are represented symbolically: a point on the unit circle is
an exponent residue (an integer modulo a common denominator), never a
floating complex number.  Constants ``c_i`` are likewise given as rational
exponents ``c = exp(2*pi*i*q)`` with ``q`` a ``Fraction``; all counting is
exact orbit enumeration under the explicit cyclic action.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, InternalInconsistency, NotPolynomial, NotRepresentable
from .qspace import CyclicQuotientType, count_solutions_fixed_tail, count_solutions_total
from .semigroup import PlaneSemigroup
from .zeta import FactorProduct

__all__ = [
    "EnumerationBudget",
    "enum_count_solutions",
    "enum_digits",
    "expand_and_verify",
    "cyclotomic_polynomial",
    "grid_discrepancies",
]


@dataclass(frozen=True)
class EnumerationBudget:
    max_group_order: int = 10
    max_exponent: int = 6
    max_rank: int = 3
    max_poly_degree: int = 5000

    def __post_init__(self):
        if min(
            self.max_group_order, self.max_exponent, self.max_rank, self.max_poly_degree
        ) < 1:
            raise ValueError("all budget bounds must be positive")


DEFAULT_BUDGET = EnumerationBudget()


def enum_count_solutions(
    t: CyclicQuotientType,
    k,
    c,
    mode: str = "total",
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> int:
    """Count solution classes of ``x_i^{k_i} = c_i`` in ``X(d; a)`` by listing.

    ``c`` is a tuple of ``Fraction`` exponents: ``c_i = exp(2*pi*i*c[i])``.
    All ``k_i``-th roots are enumerated and identified under the explicit
    action of the ``d``-th roots of unity; ``mode`` is ``"total"`` (count all
    orbits) or ``"fixed_tail"`` (count classes of ``x_0`` with a concrete
    tail solution fixed).
    """
    if len(t.d) != 1:
        raise InternalInconsistency("oracle expects a one-row type")
    d = t.d[0]
    a = t.A[0]
    k = tuple(int(x) for x in k)
    c = tuple(Fraction(x) for x in c)
    if not (len(k) == len(a) == len(c)):
        raise InternalInconsistency("k, a, c must have equal length")
    if d > budget.max_group_order:
        raise BudgetExceeded(f"group order {d} exceeds {budget.max_group_order}")
    if len(a) - 1 > budget.max_rank:
        raise BudgetExceeded(f"rank {len(a) - 1} exceeds {budget.max_rank}")
    if any(x > budget.max_exponent for x in k):
        raise BudgetExceeded(f"exponent in {k} exceeds {budget.max_exponent}")
    for i, (ai, ki) in enumerate(zip(a, k)):
        if (ai * ki) % d:
            raise InternalInconsistency(f"d does not divide a_{i}*k_{i}")

    # Common denominator for all exponent residues: every root of c_i is
    # (c_i + j)/k_i, shifted by multiples of a_i/d under the action.
    denom = math.lcm(d, *(ki * ci.denominator for ki, ci in zip(k, c)))
    roots = [
        tuple((ci + j) * (denom // ki) % denom for j in range(ki))
        for ki, ci in zip(k, c)
    ]
    roots = [tuple(int(v) for v in row) for row in roots]
    shifts = [ai * denom // d % denom for ai in a]

    if mode == "total":
        return _count_orbits(
            list(itertools.product(*roots)), shifts, d, denom
        )
    if mode == "fixed_tail":
        if len(a) < 2:
            raise InternalInconsistency("fixed_tail needs at least two coordinates")
        # Fix the concrete tail (first root of each tail constant); x_0 classes
        # are orbits under the subgroup stabilizing that tail pointwise.
        stab = [
            u for u in range(d) if all(u * s % denom == 0 for s in shifts[1:])
        ]
        head = list(roots[0])
        seen: set[int] = set()
        orbits = 0
        for v in head:
            if v in seen:
                continue
            orbits += 1
            for u in stab:
                seen.add((v + u * shifts[0]) % denom)
        return orbits
    raise ValueError(f"unknown mode {mode!r}")


def _count_orbits(points, shifts, d, denom) -> int:
    deltas = {tuple(u * s % denom for s in shifts) for u in range(d)}
    deltas.discard((0,) * len(shifts))
    if not deltas:
        return len(points)
    seen: set[tuple[int, ...]] = set()
    orbits = 0
    for pt in points:
        if pt in seen:
            continue
        orbits += 1
        seen.add(pt)
        for delta in deltas:
            seen.add(tuple((v + dv) % denom for v, dv in zip(pt, delta)))
    return orbits


def enum_digits(
    s: int, i: int, sg: PlaneSemigroup, budget: EnumerationBudget = DEFAULT_BUDGET
) -> tuple[int, ...]:
    """Exhaustive digit search: ``s = sum_{j<i} c_j*b_j`` with ``0 <= c_j < n_j``.

    Returns the unique digit vector; raises :class:`NotRepresentable` when no
    vector exists and :class:`InternalInconsistency` if more than one does.
    """
    if not 1 <= i <= sg.g:
        raise ValueError(f"index i must be in 1..{sg.g}")
    space = math.prod(sg.n[1:i]) * (s // sg.gens[0] + 1)
    if space > 10**7:
        raise BudgetExceeded(f"digit search space {space} too large")
    hits = []
    for tail in itertools.product(*(range(sg.n[j]) for j in range(1, i))):
        rest = s - sum(cj * bj for cj, bj in zip(tail, sg.gens[1:i]))
        if rest >= 0 and rest % sg.gens[0] == 0:
            hits.append((rest // sg.gens[0], *tail))
    if not hits:
        raise NotRepresentable(f"{s} has no digit representation at level {i}")
    if len(hits) > 1:
        raise InternalInconsistency(f"digit representation of {s} is not unique")
    return hits[0]


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                out[i + j] += pi * qj
    return out


def _poly_divmod(p: list[int], q: list[int]) -> tuple[list[int], list[int]]:
    """Long division over the integers (q must be monic up to sign)."""
    p = list(p)
    lead = q[-1]
    if abs(lead) != 1:
        raise InternalInconsistency("divisor must have unit leading coefficient")
    n, m = len(p), len(q)
    if n < m:
        return [0], p
    quot = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        coef = p[i + m - 1] // lead
        quot[i] = coef
        if coef:
            for j in range(m):
                p[i + j] -= coef * q[j]
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return quot, p


_CYCLOTOMIC_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Dense coefficients of ``Phi_d(t)`` via exact division of ``t^d - 1``."""
    if d in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[d]
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            q, rem = _poly_divmod(poly, list(cyclotomic_polynomial(e)))
            if rem != [0]:
                raise InternalInconsistency(f"Phi_{e} does not divide t^{d} - 1")
            poly = q
    result = tuple(poly)
    _CYCLOTOMIC_CACHE[d] = result
    return result


def expand_and_verify(
    fp: FactorProduct, budget: EnumerationBudget = DEFAULT_BUDGET
) -> tuple[tuple[int, ...], dict[int, int]]:
    """Expand a factor product densely and extract cyclotomic multiplicities.

    Multiplies the numerator factors as dense integer polynomials, exactly
    divides by the denominator factors (:class:`NotPolynomial` on a nonzero
    remainder), then for each candidate ``d`` (divisor of a stored factor
    exponent) repeatedly divides by ``Phi_d`` to find its multiplicity.

    Returns ``(coefficients, {d: multiplicity})``.
    """
    degree = sum(a * e for a, e in fp.numerator_factors())
    if degree > budget.max_poly_degree:
        raise BudgetExceeded(f"numerator degree {degree} exceeds budget")
    poly = [fp.sign]
    for a, e in fp.numerator_factors():
        factor = [1] + [0] * (a - 1) + [-1]
        for _ in range(e):
            poly = _poly_mul(poly, factor)
    for a, e in fp.denominator_factors():
        factor = [1] + [0] * (a - 1) + [-1]
        for _ in range(e):
            poly, rem = _poly_divmod(poly, factor)
            if rem != [0]:
                raise NotPolynomial(f"(1 - t^{a}) does not divide the numerator")
    candidates: set[int] = set()
    for a, _ in fp.factors:
        for d in range(1, a + 1):
            if a % d == 0:
                candidates.add(d)
    mults: dict[int, int] = {}
    for d in sorted(candidates):
        phi = list(cyclotomic_polynomial(d))
        count = 0
        current = poly
        while len(current) >= len(phi):
            q, rem = _poly_divmod(current, phi)
            if rem != [0]:
                break
            count += 1
            current = q
        if count:
            mults[d] = count
    return tuple(poly), mults


def _admissible_pairs(d: int, budget: EnumerationBudget) -> list[tuple[int, int]]:
    return [
        (a, k)
        for a in range(d)
        for k in range(1, budget.max_exponent + 1)
        if (a * k) % d == 0
    ]


def _random_constant(rng: random.Random) -> Fraction:
    den = rng.randint(1, 6)
    return Fraction(rng.randrange(den), den)


def grid_discrepancies(
    budget: EnumerationBudget = DEFAULT_BUDGET, draws: int = 3, seed: int = 0
) -> list[str]:
    """Compare closed-form counts against enumeration over the full grid.

    Covers every one-row type within the budget (group order, coordinate
    count, exponents), in both counting modes, with ``draws`` random constant
    vectors per system.  Coordinate permutations leave both sides invariant,
    so systems are deduplicated by the multiset of ``(a_i, k_i)`` pairs (for
    the fixed-tail mode, by head pair plus tail multiset).

    Returns a list of human-readable discrepancy descriptions (empty = pass).
    """
    rng = random.Random(seed)
    failures: list[str] = []

    def compare(t, k, mode, closed):
        for _ in range(draws):
            c = tuple(_random_constant(rng) for _ in k)
            got = enum_count_solutions(t, k, c, mode, budget)
            if got != closed:
                failures.append(
                    f"X({t.d[0]}; {t.A[0]}) k={k} c={c} {mode}: "
                    f"enumerated {got} != closed form {closed}"
                )

    for d in range(1, budget.max_group_order + 1):
        pairs = _admissible_pairs(d, budget)
        for ncoords in range(1, budget.max_rank + 2):
            for combo in itertools.combinations_with_replacement(pairs, ncoords):
                a = tuple(x for x, _ in combo)
                k = tuple(x for _, x in combo)
                t = CyclicQuotientType((d,), (a,))
                compare(t, k, "total", count_solutions_total(t, k))
        for ncoords in range(2, budget.max_rank + 2):
            for head in pairs:
                for tail in itertools.combinations_with_replacement(
                    pairs, ncoords - 1
                ):
                    combo = (head, *tail)
                    a = tuple(x for x, _ in combo)
                    k = tuple(x for _, x in combo)
                    t = CyclicQuotientType((d,), (a,))
                    compare(t, k, "fixed_tail", count_solutions_fixed_tail(t, k[0]))
    return failures
