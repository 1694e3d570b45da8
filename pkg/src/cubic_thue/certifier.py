"""Insolvability certificates for cubic Thue equations.

The criterion: if a and bc + d are odd, aX^3 + bX^2 + cX + d is irreducible
with square discriminant, and v2(k) is not a multiple of 3, then
f(x, y) = k has no integer solution.  Odd k has v2(k) = 0, which *is* a
multiple of 3, so odd k is never covered.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Optional

from .forms import BinaryCubicForm, discriminant, is_irreducible, is_perfect_square
from .field2adic import v2


class Verdict(str, enum.Enum):
    NO_SOLUTIONS = "NoSolutions"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class HypothesisReport:
    a_odd: bool
    bc_plus_d_odd: bool
    irreducible: bool
    disc_square: bool
    disc_value: int
    v2_k: Optional[int]
    v2_not_multiple_of_3: Optional[bool]

    def all_hold(self) -> bool:
        return bool(self.a_odd and self.bc_plus_d_odd and self.irreducible
                    and self.disc_square and self.v2_not_multiple_of_3)

    def failures(self) -> list[str]:
        out = []
        if not self.a_odd:
            out.append("a is even")
        if not self.bc_plus_d_odd:
            out.append("bc + d is even")
        if not self.irreducible:
            out.append("aX^3 + bX^2 + cX + d is reducible over Q")
        if not self.disc_square:
            out.append(f"discriminant {self.disc_value} is not a perfect square")
        if self.v2_k is None:
            out.append("k = 0 has no 2-adic valuation")
        elif not self.v2_not_multiple_of_3:
            out.append(f"v2(k) = {self.v2_k} is divisible by 3")
        return out

    def to_json(self) -> dict:
        return {
            "a_odd": self.a_odd,
            "bc_plus_d_odd": self.bc_plus_d_odd,
            "irreducible": self.irreducible,
            "disc_square": self.disc_square,
            "disc_value": str(self.disc_value),
            "v2_k": None if self.v2_k is None else str(self.v2_k),
            "v2_not_multiple_of_3": self.v2_not_multiple_of_3,
        }


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    report: HypothesisReport
    form: BinaryCubicForm
    k: int
    equation: str = "thue"
    reasons: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()
    extra_input: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        inp = {"form": [str(c) for c in self.form], "k": str(self.k), "equation": self.equation}
        inp.update(self.extra_input)
        return {
            "verdict": self.verdict.value,
            "hypotheses": self.report.to_json(),
            "reasons": list(self.reasons),
            "warnings": list(self.warnings),
            "input": inp,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def check_hypotheses(f: BinaryCubicForm, k: int) -> HypothesisReport:
    a, b, c, d = f.require_cubic()
    disc = discriminant(f)
    if k == 0:
        vk, ok = None, None
    else:
        vk = v2(k)
        ok = vk % 3 != 0
    return HypothesisReport(
        a_odd=a % 2 == 1,
        bc_plus_d_odd=(b * c + d) % 2 == 1,
        irreducible=is_irreducible(f),
        disc_square=is_perfect_square(disc),
        disc_value=disc,
        v2_k=vk,
        v2_not_multiple_of_3=ok,
    )


def _warnings(report: HypothesisReport) -> list[str]:
    if report.disc_square and report.disc_value % 2 == 0:
        return [f"discriminant {report.disc_value} is an even square; "
                "2 divides the index of Z[theta] here"]
    return []


def _build(f, k, report, equation, success_reasons, extra_input=None) -> Certificate:
    if report.all_hold():
        verdict = Verdict.NO_SOLUTIONS
        reasons = ["a and bc + d are odd",
                   "polynomial is irreducible with square discriminant "
                   f"{report.disc_value}",
                   f"v2(k) = {report.v2_k} is not divisible by 3"] + success_reasons
    else:
        verdict = Verdict.NOT_APPLICABLE
        reasons = report.failures()
    return Certificate(verdict, report, f, k, equation, tuple(reasons),
                       tuple(_warnings(report)), extra_input or {})


def certify_thue(f: BinaryCubicForm, k: int) -> Certificate:
    """Certificate for f(x, y) = k, with k != 0."""
    f.require_cubic()
    if k == 0:
        raise ValueError("k = 0: an irreducible form vanishes only at (0, 0); "
                         "check irreducibility instead")
    return _build(f, k, check_hypotheses(f, k), "thue",
                  ["every nonzero value of f has v2 divisible by 3"])


def certify_homogeneous(f: BinaryCubicForm, k: int) -> Certificate:
    """Certificate that f(x, y) = k z^3 has only the zero solution.

    For z != 0, v2(k z^3) = v2(k) + 3 v2(z) is congruent to v2(k) mod 3; for
    z = 0 an irreducible f vanishes only at (0, 0).
    """
    f.require_cubic()
    if k == 0:
        raise ValueError("k = 0: an irreducible form vanishes only at (0, 0); "
                         "check irreducibility instead")
    return _build(f, k, check_hypotheses(f, k), "homogeneous",
                  ["v2(k z^3) = v2(k) mod 3 for z != 0; z = 0 forces (x, y) = (0, 0)"])


def certify_mordell(a: int, b: int, c: int, d: int, t: int) -> Certificate:
    """Certificate for a x^3 + b x^2 + c x + d = t y^2.

    Moving t across gives F(x, 1) = t (y^2 + 1) with F = (a, b, c, d + t).
    When v2(t) = 1 the right side has v2 equal to 1 or 2, never a multiple
    of 3, so the Thue criterion for F with k = t(y^2 + 1) applies.  Because
    t is even, bc + d and bc + (d + t) have the same parity.
    """
    if a == 0:
        raise ValueError("leading coefficient a must be nonzero")
    if t == 0:
        raise ValueError("t must be nonzero")
    F = BinaryCubicForm(a, b, c, d + t)
    base = check_hypotheses(F, t)
    vt = base.v2_k
    report = HypothesisReport(
        a_odd=base.a_odd,
        bc_plus_d_odd=(b * c + d) % 2 == 1,
        irreducible=base.irreducible,
        disc_square=base.disc_square,
        disc_value=base.disc_value,
        v2_k=vt,
        v2_not_multiple_of_3=vt == 1,
    )
    extra = {"mordell": [str(a), str(b), str(c), str(d)], "t": str(t)}
    if report.all_hold():
        return Certificate(
            Verdict.NO_SOLUTIONS, report, F, t, "mordell",
            ("v2(t) = 1",
             "a and bc + d are odd",
             f"aX^3 + bX^2 + cX + (d + t) is irreducible with square discriminant {report.disc_value}",
             "F(x, 1) = t(y^2 + 1) has 2-adic valuation 1 or 2"),
            tuple(_warnings(report)), extra)
    reasons = [r for r in report.failures() if not r.startswith("v2(k)")]
    if vt != 1:
        reasons.append(f"v2(t) = {vt}, not 1")
    return Certificate(Verdict.NOT_APPLICABLE, report, F, t, "mordell", tuple(reasons),
                       tuple(_warnings(report)), extra)
