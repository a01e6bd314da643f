"""Candidate poles of the motivic Igusa zeta function and their verification.

For each ``k = 1..g`` the candidate pole exponent is the exact rational

    nu_k/N_k = (sum_{l<=k} b_l - sum_{1<=l<k} n_l*b_l) / (n_k*b_k)
               + (k - 1) + sum_{l>k} 1/n_l,

plus the trivial pole exponent ``g``.  The verification splits the
characteristic polynomial as a product of exact factors ``P_k`` and checks
that the eigenvalue attached to every non-integer pole (a primitive root of
unity of order ``q_k``, the reduced denominator) is a zero of ``P_k`` and of
``Delta``.  No complex arithmetic is used: being a zero only depends on the
cyclotomic exponent at ``q_k``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency
from .semigroup import PlaneSemigroup
from .zeta import (
    CharacteristicPolynomial,
    FactorProduct,
    characteristic_polynomial,
    resolution_multiplicities,
    to_cyclotomic,
    zeros_and_poles,
    zeta_closed_form,
)

__all__ = ["PoleEntry", "ConjectureReport", "candidate_poles", "pk_factorization", "verify_conjecture"]


@dataclass(frozen=True)
class PoleEntry:
    """Verdict data for one candidate pole.

    ``k`` is 0 for the trivial global pole exponent ``g``.  ``order`` is the
    denominator of the reduced value (the order of the attached root of
    unity), ``case`` one of ``trivial, i, ii, iii, iv`` (classifying which of
    ``M_k`` and ``L_k = lcm(n_k, ..., n_g)`` the order divides), and
    ``delta_mult`` the cyclotomic exponent of ``Phi_order`` in ``Delta``.
    """

    k: int
    value: Fraction
    display: str
    integer: bool
    order: int
    case: str
    delta_mult: int
    verdict: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "value": self.display,
            "integer": self.integer,
            "order": self.order,
            "case": self.case,
            "delta_mult": self.delta_mult,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class ConjectureReport:
    gens: tuple[int, ...]
    poles: tuple[PoleEntry, ...]
    pk: tuple[FactorProduct, ...]
    delta: CharacteristicPolynomial

    @property
    def passed(self) -> bool:
        return all(p.verdict for p in self.poles)

    def to_json(self) -> dict:
        return {
            "gens": list(self.gens),
            "poles": [p.to_json() for p in self.poles],
            "pass": self.passed,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def candidate_poles(sg: PlaneSemigroup) -> list[Fraction]:
    """Exact candidate pole exponents ``[g, nu_1/N_1, ..., nu_g/N_g]``.

    Each value is recomputed through an alternate algebraic grouping and the
    two must agree (guards formula transcription).
    """
    g = sg.g
    poles = [Fraction(g)]
    for k in range(1, g + 1):
        nk_bk = sg.n[k] * sg.gens[k]
        head = sum(sg.gens[: k + 1]) - sum(sg.n[l] * sg.gens[l] for l in range(1, k))
        value = Fraction(head, nk_bk) + (k - 1) + sum(
            Fraction(1, sg.n[l]) for l in range(k + 1, g + 1)
        )
        alt = (
            Fraction(
                sg.gens[k] + sg.gens[0]
                + sum(sg.gens[l] - sg.n[l] * sg.gens[l] for l in range(1, k)),
                nk_bk,
            )
            + (k - 1)
            + sum(Fraction(1, sg.n[l]) for l in range(k + 1, g + 1))
        )
        if value != alt:
            raise InternalInconsistency(f"pole value regrouping mismatch at k={k}")
        poles.append(value)
    return poles


def pk_factorization(sg: PlaneSemigroup) -> list[FactorProduct]:
    """Split ``Delta`` as an exact product of per-level factors

        P_k = (t^{N_k} - 1)^{n_k*b_k/N_k} (t^{L_{k+1}} - 1)^{e_k/L_{k+1}}
            / ((t^{M_k} - 1)^{b_k/M_k} (t^{L_k} - 1)^{e_{k-1}/L_k})

    with ``L_k = lcm(n_k, ..., n_g)`` and ``L_{g+1} = 1``.  Asserts that the
    product equals ``Delta`` and every ``P_k`` is a polynomial.
    """
    g = sg.g
    M, N = resolution_multiplicities(sg)
    L = [math.lcm(*sg.n[k:]) if k <= g else 1 for k in range(1, g + 2)]  # L[k-1] = L_k
    out = []
    for k in range(1, g + 1):
        Nk, Mk, Lk, Lk1 = N[k - 1], M[k], L[k - 1], L[k]
        if (
            (sg.n[k] * sg.gens[k]) % Nk
            or sg.e[k] % Lk1
            or sg.gens[k] % Mk
            or sg.e[k - 1] % Lk
        ):
            raise InternalInconsistency(f"P_{k} exponents are not integral")
        factors: dict[int, int] = {}
        for a, e in (
            (Nk, sg.n[k] * sg.gens[k] // Nk),
            (Lk1, sg.e[k] // Lk1),
            (Mk, -(sg.gens[k] // Mk)),
            (Lk, -(sg.e[k - 1] // Lk)),
        ):
            factors[a] = factors.get(a, 0) + e
        pk = FactorProduct.from_t_minus_one(factors)
        if any(c < 0 for _, c in to_cyclotomic(pk).entries):
            raise InternalInconsistency(f"P_{k} is not a polynomial")
        out.append(pk)
    delta = characteristic_polynomial(sg)
    product = FactorProduct.one()
    for pk in out:
        product = product * pk
    if product != delta.product:
        raise InternalInconsistency("product of P_k factors differs from Delta")
    return out


def verify_conjecture(sg: PlaneSemigroup) -> ConjectureReport:
    """Check that every candidate pole induces a monodromy eigenvalue.

    Integer poles are trivial.  For a non-integer pole with reduced
    denominator ``q_k``, the verdict requires the cyclotomic exponent of
    ``Phi_{q_k}`` to be at least 1 both in ``P_k`` and in ``Delta``; the
    ``Delta`` check is double-checked against the pole multiplicities of the
    zeta function.  A false verdict is reported, never silently dropped.
    """
    g = sg.g
    M, N = resolution_multiplicities(sg)
    L = [math.lcm(*sg.n[k:]) for k in range(1, g + 1)]
    poles = candidate_poles(sg)
    pks = pk_factorization(sg)
    delta = characteristic_polynomial(sg)
    delta_vec = to_cyclotomic(delta.product)
    zeta_zp = zeros_and_poles(zeta_closed_form(sg))

    entries = [
        PoleEntry(
            k=0,
            value=poles[0],
            display=str(g),
            integer=True,
            order=1,
            case="trivial",
            delta_mult=delta_vec.get(1),
            verdict=True,
        )
    ]
    for k in range(1, g + 1):
        value = poles[k]
        nu = value * (sg.n[k] * sg.gens[k])
        if nu.denominator != 1:
            raise InternalInconsistency(f"nu_{k} is not an integer")
        display = _display(value, N[k - 1], k)
        q = value.denominator
        if q == 1:
            entries.append(
                PoleEntry(k, value, display, True, 1, "trivial", delta_vec.get(1), True)
            )
            continue
        div_m = M[k] % q == 0
        div_l = L[k - 1] % q == 0
        case = {(False, False): "i", (True, False): "ii", (False, True): "iii", (True, True): "iv"}[
            (div_m, div_l)
        ]
        mult_pk = to_cyclotomic(pks[k - 1]).get(q)
        mult_delta = delta_vec.get(q)
        if zeta_zp.get(q, 0) != -mult_delta:
            raise InternalInconsistency(
                f"Delta multiplicity at order {q} inconsistent with zeta poles"
            )
        entries.append(
            PoleEntry(
                k=k,
                value=value,
                display=display,
                integer=False,
                order=q,
                case=case,
                delta_mult=mult_delta,
                verdict=mult_pk >= 1 and mult_delta >= 1,
            )
        )
    return ConjectureReport(gens=sg.gens, poles=tuple(entries), pk=tuple(pks), delta=delta)


def _display(value: Fraction, Nk: int, k: int) -> str:
    """Render the pole as ``nu_k/N_k`` (possibly unreduced, e.g. ``8/6``)."""
    nu = value * Nk
    if nu.denominator != 1:
        raise InternalInconsistency(f"nu_{k} = {nu} is not an integer")
    return f"{int(nu)}/{Nk}"
