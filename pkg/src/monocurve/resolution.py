"""Combinatorial embedded Q-resolution of the space monomial curve.

From a plane semigroup this module builds the dual graph of the resolution
obtained by ``g`` successive weighted blow-ups on a generic embedding
surface: exceptional divisors ``E_k`` with their component counts ``r_k``,
multiplicities ``N_k``/``M_k``, blow-up weight vectors, special-point strata
with local quotient types, and open-stratum Euler characteristics.  Every
closed-form count is cross-validated against the general quotient-space
counting machinery of :mod:`monocurve.qspace`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import qspace
from .errors import InternalInconsistency
from .qspace import CyclicQuotientType, WeightedCurveSpec
from .semigroup import PlaneSemigroup, b_table, build_semigroup
from .zeta import FactorProduct, resolution_multiplicities, zeta_closed_form

__all__ = [
    "GraphLevel",
    "Stratum",
    "LocalType",
    "ResolutionGraph",
    "build_resolution",
    "zeta_from_graph",
    "export_graph",
]


@dataclass(frozen=True)
class GraphLevel:
    """Data of the k-th exceptional divisor ``E_k``."""

    k: int
    r: int
    N: int
    M: int
    weights: tuple[int, ...]
    chi_open: int
    chi_open_per_component: int


@dataclass(frozen=True)
class Stratum:
    """A group of special points: kind is ``"Q0"``, ``"Qk"`` or ``"Qkk1"``.

    ``Qk`` strata carry the multiplicity ``M_k``; intersection strata
    ``Qkk1`` (points of ``E_k`` meeting ``E_{k+1}``) carry none, since the
    zeta-function product never consults them.
    """

    kind: str
    k: int
    count: int
    multiplicity: int | None


@dataclass(frozen=True)
class LocalType:
    """Local ambient quotient type recorded at a family of special points."""

    at: str
    qtype: CyclicQuotientType


@dataclass(frozen=True)
class ResolutionGraph:
    gens: tuple[int, ...]
    m0: int
    levels: tuple[GraphLevel, ...]
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    strata: tuple[Stratum, ...]
    local_types: tuple[LocalType, ...]

    def stratum(self, kind: str, k: int) -> Stratum:
        for s in self.strata:
            if s.kind == kind and s.k == k:
                return s
        raise KeyError((kind, k))


def _exact(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalInconsistency(f"{what}: {num} not divisible by {den}")
    return q


def _component_counts(sg: PlaneSemigroup) -> list[int]:
    g = sg.g
    r = []
    for k in range(1, g + 1):
        lcm_tail = math.lcm(*sg.n[k + 1:]) if k < g else 1
        r.append(_exact(sg.e[k], lcm_tail, f"r_{k}"))
    if r[-1] != 1 or (g >= 2 and r[-2] != 1):
        raise InternalInconsistency("r_(g-1) and r_g must both be 1")
    return r


def _homogeneous_spec(sg: PlaneSemigroup, bt, k: int) -> WeightedCurveSpec:
    """The weighted-homogeneous system cutting out ``E_k`` (valid for k < g)."""
    g = sg.g
    n = sg.n
    if k == 1:
        order = sg.order
        return WeightedCurveSpec(
            d=1,
            a=(0,) * (g + 1),
            p=tuple(order // n[i] for i in range(g + 1)),
            m=tuple(n),
            commutation="full",
        )
    b_prev = bt.get(k, k - 1)
    prev = n[k - 1] * sg.gens[k - 1]
    return WeightedCurveSpec(
        d=sg.e[k - 1],
        a=(-1, *(prev // n[i] for i in range(k, g + 1))),
        p=(1, *(b_prev // n[i] for i in range(k, g + 1))),
        m=(b_prev, *(n[i] for i in range(k, g + 1))),
        commutation="full",
    )


def build_resolution(sg: PlaneSemigroup) -> ResolutionGraph:
    """Assemble the resolution dual graph with all invariants verified.

    Component labeling and the assignment of ``E_{k+1}`` components to
    ``E_k`` components use deterministic contiguous blocks of size
    ``r_k / r_{k+1}`` (only the counts are canonical; the labeling is a
    reproducibility choice).

    Raises:
        InternalInconsistency: any divisibility or cross-validation check
            fails (would indicate a formula transcription bug).
    """
    g = sg.g
    n, e, gens = sg.n, sg.e, sg.gens
    order = sg.order
    bt = b_table(sg)
    M, N = resolution_multiplicities(sg)
    r = _component_counts(sg)

    levels = []
    for k in range(1, g + 1):
        rk, Nk, Mk = r[k - 1], N[k - 1], M[k]
        if Nk % Mk or Nk % math.lcm(*n[k:]):
            raise InternalInconsistency(f"M_{k} or L_{k} does not divide N_{k}")
        if k >= 2 and r[k - 1] and r[k - 2] % r[k - 1]:
            raise InternalInconsistency(f"r_{k} does not divide r_{k - 1}")
        if k == 1:
            weights = tuple(_exact(order, n[i], "weight") for i in range(g + 1))
        else:
            b_prev = bt.get(k, k - 1)
            weights = (1, *(_exact(b_prev, n[i], "weight") for i in range(k, g + 1)))
        chi = -_exact(n[k] * gens[k], Nk, f"chi(E_{k})")
        chi_per = _exact(chi, rk, f"per-component chi(E_{k})")
        levels.append(
            GraphLevel(
                k=k, r=rk, N=Nk, M=Mk, weights=weights,
                chi_open=chi, chi_open_per_component=chi_per,
            )
        )

    strata = [Stratum("Q0", 0, _exact(gens[0], M[0], "|Q0|"), M[0])]
    for k in range(1, g + 1):
        strata.append(Stratum("Qk", k, _exact(gens[k], M[k], f"|Q_{k}|"), M[k]))
    for k in range(1, g):
        strata.append(Stratum("Qkk1", k, r[k - 1], None))

    # Per-component shares of the boundary incidences must be integral.
    _exact(strata[0].count, r[0], "Q0 share per E_1 component")
    for k in range(1, g + 1):
        _exact(strata[k].count, r[k - 1], f"Q_{k} share per E_{k} component")

    nodes = [f"H_{i}" for i in range(g + 1)]
    for k in range(1, g + 1):
        nodes.extend(f"E_{k}_{j}" for j in range(1, r[k - 1] + 1))
    nodes.append("Yhat")

    edges: list[tuple[str, str]] = []
    for j in range(1, r[0] + 1):
        edges.append(("H_0", f"E_1_{j}"))
        edges.append(("H_1", f"E_1_{j}"))
    for k in range(2, g + 1):
        for j in range(1, r[k - 1] + 1):
            edges.append((f"H_{k}", f"E_{k}_{j}"))
    for k in range(1, g):
        block = _exact(r[k - 1], r[k], "contiguous block size")
        for j_next in range(1, r[k] + 1):
            for j in range((j_next - 1) * block + 1, j_next * block + 1):
                edges.append((f"E_{k}_{j}", f"E_{k + 1}_{j_next}"))
    edges.append((f"E_{g}_1", "Yhat"))

    local_types = _local_types(sg, bt)
    graph = ResolutionGraph(
        gens=gens,
        m0=M[0],
        levels=tuple(levels),
        nodes=tuple(nodes),
        edges=tuple(edges),
        strata=tuple(strata),
        local_types=tuple(local_types),
    )
    _check_tree(graph)
    _cross_validate(sg, bt, graph)
    return graph


def _local_types(sg: PlaneSemigroup, bt) -> list[LocalType]:
    g = sg.g
    n, e, gens = sg.n, sg.e, sg.gens
    order = sg.order
    types = [
        LocalType(
            "Q0",
            CyclicQuotientType(
                (math.gcd(*(order // n[i] for i in range(1, g + 1))),),
                ((order // n[0], -1),),
            ),
        )
    ]
    for k in range(1, g + 1):
        m = n[k] * gens[k]
        d_q = math.gcd(e[k - 1], *(m // n[i] for i in range(k + 1, g + 1)))
        types.append(LocalType(f"Q{k}", CyclicQuotientType((d_q,), ((-1, gens[k]),))))
        d_gen = math.gcd(e[k - 1], *(m // n[i] for i in range(k, g + 1)))
        types.append(LocalType(f"Egen{k}", CyclicQuotientType((d_gen,), ((-1,),))))
    for k in range(2, g + 1):
        diff = n[k] * gens[k] - n[k - 1] * gens[k - 1]
        d1 = _exact(diff, math.lcm(*n[k:]), "two-row order")
        types.append(
            LocalType(
                f"E{k - 1}E{k}",
                CyclicQuotientType(
                    (d1, diff * e[k]),
                    ((1, -1), (-gens[k], n[k - 1] * gens[k - 1] // n[k])),
                ),
            )
        )
    return types


def _check_tree(graph: ResolutionGraph) -> None:
    """The exceptional components plus the strict transform form a tree."""
    keep = {v for v in graph.nodes if v.startswith("E_") or v == "Yhat"}
    sub = [ed for ed in graph.edges if ed[0] in keep and ed[1] in keep]
    if len(sub) != len(keep) - 1:
        raise InternalInconsistency(
            f"dual graph not a tree: {len(sub)} edges on {len(keep)} nodes"
        )
    adj: dict[str, list[str]] = {v: [] for v in keep}
    for u, v in sub:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    stack = [next(iter(keep))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v])
    if seen != keep:
        raise InternalInconsistency("dual graph not connected on exceptional part")


def _cross_validate(sg: PlaneSemigroup, bt, graph: ResolutionGraph) -> None:
    """Verify the closed-form counts against the quotient-space machinery."""
    g = sg.g
    n, gens = sg.n, sg.gens
    M, N = resolution_multiplicities(sg)
    r = [lvl.r for lvl in graph.levels]
    type_map = {t.at: t.qtype for t in graph.local_types}

    # Multiplicity reproduction from the recorded one-row chart types.
    for k in range(1, g + 1):
        m = n[k] * gens[k]
        if qspace.divisor_multiplicity(m, type_map[f"Egen{k}"], 0) != N[k - 1]:
            raise InternalInconsistency(f"generic chart type at E_{k} misses N_{k}")
        if qspace.divisor_multiplicity(m, type_map[f"Q{k}"], 0) != M[k]:
            raise InternalInconsistency(f"Q_{k} chart type misses M_{k}")
    if qspace.divisor_multiplicity(sg.order, type_map["Q0"], 1) != M[0]:
        raise InternalInconsistency("Q0 chart type misses M_0")

    # Counting formulas on the homogeneous systems cutting out E_k (k < g).
    for k in range(1, g):
        spec = _homogeneous_spec(sg, bt, k)
        if qspace.curve_component_count(spec) != r[k - 1]:
            raise InternalInconsistency(f"component count of E_{k} disagrees")
        _, tot0 = qspace.curve_axis_intersections(spec, 0)
        expected0 = graph.stratum("Q0", 0).count if k == 1 else r[k - 2]
        if tot0 != expected0:
            raise InternalInconsistency(f"|E_{k} ∩ previous divisor| disagrees")
        _, tot1 = qspace.curve_axis_intersections(spec, 1)
        if tot1 != graph.stratum("Qk", k).count:
            raise InternalInconsistency(f"|E_{k} ∩ H_{k}| disagrees")
        if qspace.curve_open_euler(spec) != graph.levels[k - 1].chi_open:
            raise InternalInconsistency(f"chi(E_{k} open) disagrees")
    if graph.levels[-1].chi_open != -1 or graph.levels[-1].r != 1:
        raise InternalInconsistency("E_g must be a single rational component")


def zeta_from_graph(graph: ResolutionGraph) -> FactorProduct:
    """Zeta function via the stratum product.

    Point strata ``Q_k`` (on a single divisor) contribute
    ``(1 - t^{M_k})^{count}``; open strata contribute
    ``(1 - t^{N_k})^{chi}``; strata on two or more divisors contribute
    nothing.  The result is checked against the closed form.
    """
    factors: dict[int, int] = {}
    for s in graph.strata:
        if s.multiplicity is None:
            continue
        factors[s.multiplicity] = factors.get(s.multiplicity, 0) + s.count
    for lvl in graph.levels:
        factors[lvl.N] = factors.get(lvl.N, 0) + lvl.chi_open
    result = FactorProduct.from_map(factors)
    closed = zeta_closed_form(build_semigroup(graph.gens))
    if result != closed:
        raise InternalInconsistency("graph zeta differs from closed form")
    return result


def export_graph(graph: ResolutionGraph, format: str = "json") -> str:
    """Serialize the graph deterministically as ``"json"`` or ``"dot"``."""
    if format == "json":
        doc = {
            "gens": list(graph.gens),
            "levels": [
                {
                    "k": lvl.k,
                    "r": lvl.r,
                    "N": lvl.N,
                    "M": lvl.M,
                    "weights": list(lvl.weights),
                    "chi_open": lvl.chi_open,
                }
                for lvl in graph.levels
            ],
            "edges": [list(ed) for ed in graph.edges],
            "strata": [
                {
                    "kind": s.kind,
                    "k": s.k,
                    "count": s.count,
                    "multiplicity": s.multiplicity,
                }
                for s in graph.strata
            ],
            "local_types": [
                {"at": t.at, "d": list(t.qtype.d), "A": [list(row) for row in t.qtype.A]}
                for t in graph.local_types
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=False)
    if format == "dot":
        mult = {f"E_{lvl.k}": lvl.N for lvl in graph.levels}
        lines = ["graph resolution {"]
        for v in graph.nodes:
            if v.startswith("E_"):
                k, j = v.split("_")[1:]
                label = f"E_{{{k},{j}}} [{mult[f'E_{k}']}]"
                lines.append(f'  "{v}" [label="{label}"];')
            elif v == "Yhat":
                lines.append(f'  "{v}" [label="Ŷ", shape=rarrow];')
            else:
                lines.append(f'  "{v}" [label="{v}"];')
        counts = _incidence_counts(graph)
        for u, v in graph.edges:
            note = counts.get((u, v))
            attr = f' [label="{note}"]' if note else ""
            lines.append(f'  "{u}" -- "{v}"{attr};')
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {format!r}")


def _incidence_counts(graph: ResolutionGraph) -> dict[tuple[str, str], int]:
    """Point counts annotating boundary-curve incidences."""
    out: dict[tuple[str, str], int] = {}
    r1 = graph.levels[0].r
    q0 = graph.stratum("Q0", 0).count // r1
    q1 = graph.stratum("Qk", 1).count // r1
    for j in range(1, r1 + 1):
        out[("H_0", f"E_1_{j}")] = q0
        out[("H_1", f"E_1_{j}")] = q1
    for lvl in graph.levels[1:]:
        share = graph.stratum("Qk", lvl.k).count // lvl.r
        for j in range(1, lvl.r + 1):
            out[(f"H_{lvl.k}", f"E_{lvl.k}_{j}")] = share
    return out
