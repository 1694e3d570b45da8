"""Parametric families of cyclic cubic forms.

Constructors return the literal coefficients of each family; nothing is
reduced or normalised.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .forms import BinaryCubicForm, discriminant


class FamilyId(str, enum.Enum):
    SIMPLEST_MN = "SimplestMN"
    TOGBE_WASHINGTON = "TogbeWashington"
    KISHI = "Kishi"
    BALADY = "Balady"


@dataclass(frozen=True)
class FamilyInstance:
    family_id: FamilyId
    parameters: tuple[int, ...]
    form: BinaryCubicForm

    def parameter_dict(self) -> dict[str, int]:
        names = ("m", "n") if self.family_id is FamilyId.SIMPLEST_MN else ("n",)
        return dict(zip(names, self.parameters))

    def corollary_claims(self) -> bool:
        """Whether the published corollary lists this parameter choice."""
        if self.family_id is FamilyId.SIMPLEST_MN:
            m, n = self.parameters
            return m % 2 == 1 and gcd(m, n) == 1
        if self.family_id is FamilyId.TOGBE_WASHINGTON:
            return self.parameters[0] % 4 != 1
        return True


def simplest_form(m: int, n: int) -> FamilyInstance:
    """m x^3 - n x^2 y - (n + 3m) x y^2 - m y^3."""
    if m == 0:
        raise ValueError("m must be nonzero")
    return FamilyInstance(FamilyId.SIMPLEST_MN, (m, n),
                          BinaryCubicForm(m, -n, -(n + 3 * m), -m))


def togbe_washington_form(n: int) -> FamilyInstance:
    b = -(n**3 - 2 * n**2 + 3 * n - 3)
    return FamilyInstance(FamilyId.TOGBE_WASHINGTON, (n,),
                          BinaryCubicForm(1, b, -n * n, -1))


def kishi_form(n: int) -> FamilyInstance:
    b = -n * (n * n + n + 3) * (n * n + 2)
    c = -(n**3 + 2 * n**2 + 3 * n + 3)
    return FamilyInstance(FamilyId.KISHI, (n,), BinaryCubicForm(1, b, c, -1))


def balady_form(n: int) -> FamilyInstance:
    b = n**7 + 2 * n**6 + 3 * n**5 - n**4 - 3 * n**3 - 3 * n**2 + 3 * n + 3
    return FamilyInstance(FamilyId.BALADY, (n,), BinaryCubicForm(1, b, -n**4 + 3 * n, -1))


def simplest_disc_identity(m: int, n: int, check: bool = False) -> int:
    """Closed form (n^2 + 3mn + 9m^2)^2 for the discriminant of f_{m,n}.

    With ``check=True`` the value is compared against the general cubic
    discriminant formula and a mismatch raises.
    """
    value = (n * n + 3 * m * n + 9 * m * m) ** 2
    if check and m != 0 and value != discriminant(simplest_form(m, n).form):
        raise ArithmeticError(f"discriminant identity fails at m={m}, n={n}")
    return value


BUILDERS = {
    FamilyId.SIMPLEST_MN: simplest_form,
    FamilyId.TOGBE_WASHINGTON: togbe_washington_form,
    FamilyId.KISHI: kishi_form,
    FamilyId.BALADY: balady_form,
}
