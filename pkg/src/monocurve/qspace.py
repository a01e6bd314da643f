"""Cyclic quotient spaces and weighted monomial-curve counting formulas.

A quotient type ``X(d; A)`` is a product of cyclic group actions on affine
space: row ``t`` of ``A`` describes the action of a ``d_t``-th root of unity
``xi`` by ``x_i -> xi^{A[t][i]} * x_i``.  One-row types ``X(d; a_0, ..., a_r)``
support exact counting of solution classes of diagonal monomial systems

    x_0^{k_0} = c_0, ..., x_r^{k_r} = c_r        (well-formed iff d | a_i*k_i)

and, together with weighted-homogeneity data, counts of curve components,
axis intersections and Euler characteristics for chained systems of the shape

    x_0^{m_0} + x_1^{m_1} + x_2^{m_2} = 0,  x_i^{m_i} + x_{i+1}^{m_{i+1}} = 0.

All counts are exact integers; failed divisibility raises structured errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisViolated, IllFormed, InternalInconsistency, NotDivisible

__all__ = [
    "CyclicQuotientType",
    "WeightedCurveSpec",
    "normalize_cyclic",
    "stabilizer_order",
    "l_factor",
    "divisor_multiplicity",
    "count_solutions_total",
    "count_solutions_fixed_tail",
    "curve_component_count",
    "curve_axis_intersections",
    "plane_curve_open_euler",
    "curve_open_euler",
    "covering_degree",
]


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NotDivisible(f"{what}: {num} not divisible by {den}")
    return q


@dataclass(frozen=True)
class CyclicQuotientType:
    """Quotient type ``X(d; A)`` with one weight row per cyclic factor.

    Row entries are stored reduced modulo the row order ``d_t``.  Use
    :func:`normalize_cyclic` to reach the normalized (small-group) form of a
    one-row type.
    """

    d: tuple[int, ...]
    A: tuple[tuple[int, ...], ...]

    def __init__(self, d, A):
        d = tuple(int(x) for x in d)
        A = tuple(tuple(int(x) for x in row) for row in A)
        if len(d) != len(A):
            raise IllFormed("one order per weight row required")
        if any(x < 1 for x in d):
            raise IllFormed(f"row orders must be >= 1: {d}")
        if len({len(row) for row in A}) > 1:
            raise IllFormed("weight rows must have equal length")
        A = tuple(tuple(a % dt for a in row) for dt, row in zip(d, A))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "A", A)

    @property
    def rank(self) -> int:
        """Number of coordinates."""
        return len(self.A[0]) if self.A else 0

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.A)


def normalize_cyclic(t: CyclicQuotientType) -> CyclicQuotientType:
    """Normalize a one-row type ``X(d; a_0, ..., a_r)``.

    Repeatedly: if for some coordinate ``i`` the gcd
    ``k = gcd(d, a_j : j != i)`` exceeds 1, pass to the isomorphic type
    ``X(d/k; ..., a_j/k, ..., a_i, ...)`` (entry ``i`` kept, others divided)
    reduced mod ``d/k``.  Afterwards every stabilizer of a single coordinate
    hyperplane's generic point is trivial and ``d`` is the order of the small
    group actually acting.
    """
    if len(t.d) != 1:
        raise IllFormed("normalize_cyclic expects a one-row type")
    d = t.d[0]
    a = list(t.A[0])
    changed = True
    while changed and d > 1:
        changed = False
        for i in range(len(a)):
            others = [a[j] for j in range(len(a)) if j != i]
            k = math.gcd(d, *others) if others else d
            if k > 1:
                d //= k
                a = [(a[j] if j == i else a[j] // k) % d for j in range(len(a))]
                changed = True
                break
    if d == 1:
        a = [0] * len(a)
    return CyclicQuotientType((d,), (tuple(a),))


def stabilizer_order(t: CyclicQuotientType, zero_set=frozenset()) -> int:
    """Order of the subgroup fixing a point whose zero coordinates are ``zero_set``.

    For a one-row type this is ``gcd(d, a_i : i not in zero_set)``; it is
    ``d`` when every coordinate vanishes.
    """
    if len(t.d) != 1:
        raise IllFormed("stabilizer_order expects a one-row type")
    d = t.d[0]
    zero_set = set(zero_set)
    rest = [a for i, a in enumerate(t.A[0]) if i not in zero_set]
    if not rest:
        return d
    return math.gcd(d, *rest)


def l_factor(t: CyclicQuotientType, i: int) -> int:
    """Smallest ``l`` with ``x_i^l`` invariant: ``lcm_t d_t / gcd(d_t, a_ti)``."""
    col = t.column(i)
    return math.lcm(*(dt // math.gcd(dt, a) for dt, a in zip(t.d, col)))


def divisor_multiplicity(m: int, t: CyclicQuotientType, i: int) -> int:
    """Multiplicity ``m / l_i`` of the divisor ``{x_i = 0}`` on ``X(d; A)``.

    ``m`` is the vanishing order upstairs; the division must be exact.

    Raises:
        NotDivisible: ``l_factor(t, i)`` does not divide ``m`` (inconsistent
            chart description upstream).
    """
    return _exact_div(m, l_factor(t, i), f"divisor multiplicity at coordinate {i}")


def _check_one_row_system(t: CyclicQuotientType, k) -> tuple[int, tuple[int, ...]]:
    if len(t.d) != 1:
        raise IllFormed("counting requires a one-row type")
    d = t.d[0]
    a = t.A[0]
    k = tuple(int(x) for x in k)
    if len(k) != len(a):
        raise IllFormed("one exponent per coordinate required")
    if any(x < 1 for x in k):
        raise IllFormed(f"exponents must be >= 1: {k}")
    for i, (ai, ki) in enumerate(zip(a, k)):
        if (ai * ki) % d:
            raise IllFormed(
                f"system not well defined: d={d} does not divide a_{i}*k_{i}={ai * ki}"
            )
    return d, k


def count_solutions_total(t: CyclicQuotientType, k) -> int:
    """Number of solution classes of ``x_i^{k_i} = c_i`` (all i) in ``X(d; a)``.

    Equals ``k_0*...*k_r * gcd(d, a_0, ..., a_r) / d``, independently of the
    nonzero constants ``c_i``.
    """
    d, k = _check_one_row_system(t, k)
    return _exact_div(
        math.prod(k) * math.gcd(d, *t.A[0]), d, "total solution-class count"
    )


def count_solutions_fixed_tail(t: CyclicQuotientType, k0: int) -> int:
    """Solution classes ``[(x_0, b_1, ..., b_r)]`` with the tail class fixed.

    Equals ``k_0 * gcd(d, a_0, ..., a_r) / gcd(d, a_1, ..., a_r)``.
    """
    if len(t.d) != 1:
        raise IllFormed("counting requires a one-row type")
    d = t.d[0]
    a = t.A[0]
    if len(a) < 2:
        raise IllFormed("fixed-tail count needs at least two coordinates")
    k0 = int(k0)
    if k0 < 1:
        raise IllFormed(f"exponent must be >= 1: {k0}")
    if (a[0] * k0) % d:
        raise IllFormed(
            f"system not well defined: d={d} does not divide a_0*k_0={a[0] * k0}"
        )
    return _exact_div(
        k0 * math.gcd(d, *a), math.gcd(d, *a[1:]), "fixed-tail solution-class count"
    )


@dataclass(frozen=True)
class WeightedCurveSpec:
    """A weighted-homogeneous monomial curve in a one-row quotient space.

    The ambient space is the weighted projective space with weights
    ``p = (p_0, ..., p_r)`` divided by the one-row action
    ``X(d; a_0, ..., a_r)``; the curve is the chained system

        x_0^{m_0} + x_1^{m_1} + x_2^{m_2} = 0,
        x_i^{m_i} + x_{i+1}^{m_{i+1}} = 0        (2 <= i < r).

    Well-formedness: ``d | a_i * m_i`` for all ``i`` and all ``p_i * m_i``
    equal (each equation weighted homogeneous).

    ``commutation`` declares on which index range the exact integer
    proportionality ``a_i * p_j = a_j * p_i`` holds: ``"tail"`` for
    ``i, j >= 2`` (enough for component and axis counts) or ``"full"`` for
    ``i, j >= 1`` (required for the Euler characteristic and the
    previous-divisor intersection counts).  The action weights are kept as
    the given integers (possibly negative), *not* reduced mod ``d``: the
    quantities ``a_w*P - p_w*Q`` enter the counting formulas as true
    integers.  The declared range is verified at construction;
    :class:`HypothesisViolated` is raised when it fails.
    """

    d: int
    a: tuple[int, ...]
    p: tuple[int, ...]
    m: tuple[int, ...]
    commutation: str = "tail"

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        r = len(self.p) - 1
        if r < 2:
            raise IllFormed("curve specs need at least three coordinates")
        if not (len(self.a) == len(self.p) == len(self.m)):
            raise IllFormed("a, p, m must have equal length")
        if self.d < 1 or any(x < 1 for x in self.p) or any(x < 1 for x in self.m):
            raise IllFormed("orders, weights and exponents must be positive")
        if self.commutation not in ("tail", "full"):
            raise IllFormed(f"unknown commutation range {self.commutation!r}")
        for i in range(r + 1):
            if (self.a[i] * self.m[i]) % self.d:
                raise IllFormed(
                    f"d={self.d} does not divide a_{i}*m_{i}={self.a[i] * self.m[i]}"
                )
        K = self.p[0] * self.m[0]
        if any(self.p[i] * self.m[i] != K for i in range(1, r + 1)):
            raise IllFormed("curve is not weighted homogeneous: p_i*m_i differ")
        lo = 2 if self.commutation == "tail" else 1
        for i in range(lo, r + 1):
            for j in range(i + 1, r + 1):
                if self.a[i] * self.p[j] != self.a[j] * self.p[i]:
                    raise HypothesisViolated(
                        f"commutation a_{i}*p_{j} = a_{j}*p_{i} fails exactly"
                    )

    @property
    def r(self) -> int:
        return len(self.p) - 1

    @property
    def degree(self) -> int:
        """Common weighted degree ``K = p_i * m_i``."""
        return self.p[0] * self.m[0]


def curve_component_count(spec: WeightedCurveSpec) -> int:
    """Number of irreducible components: ``m_2*...*m_r / lcm(m_2, ..., m_r)``.

    Returns 1 when ``r = 2``.  For ``r >= 3`` the chart-local computation is
    repeated on charts ``x_2 != 0`` and ``x_3 != 0`` and checked against the
    symmetric formula.
    """
    m = spec.m
    symmetric = _exact_div(math.prod(m[2:]), math.lcm(*m[2:]), "component count")
    if spec.r >= 3:
        for c in (2, 3):
            local = _chart_component_count(spec, c)
            if local != symmetric:
                raise InternalInconsistency(
                    f"component count differs on chart {c}: {local} != {symmetric}"
                )
    return symmetric


def _chart_component_count(spec: WeightedCurveSpec, c: int) -> int:
    # On the chart x_c != 0 the tail system lives in X(p_c; p_2, ..., p_r)
    # (coordinate c omitted) and the class count is
    # prod(m_i, i != c) * gcd(p_2, ..., p_r) / p_c.
    m, p, r = spec.m, spec.p, spec.r
    num = math.prod(m[i] for i in range(2, r + 1) if i != c) * math.gcd(*p[2:])
    return _exact_div(num, p[c], f"chart-{c} component count")


def curve_axis_intersections(spec: WeightedCurveSpec, axis: int) -> tuple[int, int]:
    """Intersections of the curve with ``{x_axis = 0}`` for axis in {0, 1}.

    Returns ``(per_component, total)``.  The per-component count is

        m_w * gcd(d*P*gcd(p_w, p_2, ..., p_r), |a_w*P - p_w*Q|*gcd(p_2..p_r))
            / (d*P*gcd(p_2, ..., p_r))

    with ``w = 1 - axis``, ``P = p_2*...*p_r`` and ``Q = a_i*prod_{j>=2, j!=i}
    p_j``; the total is per-component times the component count.  For
    ``r >= 3`` the chart-local values on two charts must agree.
    """
    if axis not in (0, 1):
        raise IllFormed("axis must be 0 or 1")
    d, a, p, m, r = spec.d, spec.a, spec.p, spec.m, spec.r
    w = 1 - axis  # index of the coordinate whose power sweeps the axis points
    P = math.prod(p[2:])
    Q = a[2] * math.prod(p[3:])
    if axis == 0:
        head_gcd = math.gcd(p[1], *p[2:])
    else:
        head_gcd = math.gcd(p[0], *p[2:])
    tail_gcd = math.gcd(*p[2:])
    per = _exact_div(
        m[w] * math.gcd(d * P * head_gcd, abs(a[w] * P - p[w] * Q) * tail_gcd),
        d * P * tail_gcd,
        f"axis-{axis} intersections per component",
    )
    if r >= 3:
        for c in (2, 3):
            local = _axis_count_chart(spec, axis, c)
            if local != per:
                raise InternalInconsistency(
                    f"axis-{axis} count differs on chart {c}: {local} != {per}"
                )
    return per, per * curve_component_count(spec)


def _axis_count_chart(spec: WeightedCurveSpec, axis: int, c: int) -> int:
    # Chart-local form on x_c != 0: same shape with P, Q replaced by p_c and
    # a_c*p_w; chart independence is what the caller asserts.
    d, a, p, m = spec.d, spec.a, spec.p, spec.m
    w = 1 - axis
    tail_gcd = math.gcd(*p[2:])
    head_gcd = math.gcd(p[w], *p[2:])
    return _exact_div(
        m[w]
        * math.gcd(d * p[c] * head_gcd, abs(a[w] * p[c] - a[c] * p[w]) * tail_gcd),
        d * p[c] * tail_gcd,
        f"axis-{axis} chart-{c} intersections",
    )


def plane_curve_open_euler(p, action: CyclicQuotientType, K: int) -> int:
    """Euler characteristic of ``{x_0^{m_0} + x_1^{m_1} + x_2^{m_2} = 0}``
    minus the coordinate axes, in the one-row quotient of a weighted plane.

    ``m_i = K / p_i`` must be integral; the value is
    ``-K^2 * gcd(d * gcd(p_0, p_1, p_2), M_0, M_1, M_2) / (d * p_0 * p_1 * p_2)``
    where ``M_i`` is the 2x2 minor of the matrix with rows ``p`` and ``a``
    obtained by deleting column ``i``.
    """
    p = tuple(int(x) for x in p)
    if len(action.d) != 1 or len(p) != 3 or action.rank != 3:
        raise IllFormed("plane curve data needs a one-row action on 3 coordinates")
    d = action.d[0]
    a = action.A[0]
    for pi in p:
        if K % pi:
            raise IllFormed(f"degree {K} not divisible by weight {pi}")
    minors = [abs(p[j] * a[k] - p[k] * a[j]) for (j, k) in ((1, 2), (0, 2), (0, 1))]
    gc = math.gcd(d * math.gcd(*p), *minors)
    return -_exact_div(K * K * gc, d * p[0] * p[1] * p[2], "plane curve Euler char")


def curve_open_euler(spec: WeightedCurveSpec) -> int:
    """Euler characteristic of the curve minus all coordinate hyperplanes.

    Requires the full commutation range (``i, j >= 1``).  The value is

        -m_1*...*m_r * gcd(d*P*gcd(p_0, ..., p_r), |p_0*Q - a_0*P|*gcd(p_1..p_r))
            / (d * p_0 * P)

    with ``P = p_1*...*p_r`` and ``Q = a_i * prod_{j>=1, j!=i} p_j``.
    """
    if spec.commutation != "full":
        raise HypothesisViolated("Euler characteristic needs the full commutation range")
    d, a, p, m = spec.d, spec.a, spec.p, spec.m
    P = math.prod(p[1:])
    Q = a[1] * math.prod(p[2:])
    val = math.prod(m[1:]) * math.gcd(
        d * P * math.gcd(*p), abs(p[0] * Q - a[0] * P) * math.gcd(*p[1:])
    )
    return -_exact_div(val, d * p[0] * P, "curve Euler characteristic")


def covering_degree(K: int, k: int, ks, N: int) -> int:
    """Degree of the projection of a monomial curve cover onto two coordinates.

    Data: total weight ``K``, base order ``k``, coordinate orders
    ``ks = (k_0, ..., k_r)`` (each dividing ``K``) and ``N`` the number of
    curve components.  The degree is::

        K * N * gcd(K/k, K/k_0, ..., K/k_r)
          / (k * gcd(K/k, K/k_0, K/k_1) * gcd(K/k, K/k_2, ..., K/k_r))
    """
    ks = tuple(int(x) for x in ks)
    if len(ks) < 3:
        raise IllFormed("covering degree needs at least three coordinate orders")
    for x in (k, *ks):
        if x < 1 or K % x:
            raise IllFormed(f"order {x} must divide K = {K}")
    q = [K // x for x in ks]
    qk = K // k
    return _exact_div(
        K * N * math.gcd(qk, *q),
        k * math.gcd(qk, q[0], q[1]) * math.gcd(qk, *q[2:]),
        "covering degree",
    )
