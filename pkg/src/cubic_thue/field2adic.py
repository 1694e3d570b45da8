"""The prime 2 in cyclic cubic fields.

A form f = (a, b, c, d) with a != 0 is turned into the monic cubic
g(X) = X^3 + bX^2 + acX + a^2 d, the minimal polynomial of w = a*theta where
f(theta, 1) = 0.  Splitting of 2 is decided by lifting roots of g through
Z/2, Z/4, ..., Z/2^t.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Optional

from .forms import BinaryCubicForm, is_irreducible, is_perfect_square

DEFAULT_DEPTH = 64
DEPTH_ENV_VAR = "CUBIC_THUE_LIFT_DEPTH"

# lifting blows up only for pathological inputs; refuse rather than thrash
MAX_CANDIDATES = 1 << 16


def default_depth() -> int:
    raw = os.environ.get(DEPTH_ENV_VAR)
    if not raw:
        return DEFAULT_DEPTH
    depth = int(raw)
    if depth < 1:
        raise ValueError(f"{DEPTH_ENV_VAR} must be a positive integer")
    return depth


class NotCyclicCubicError(ValueError):
    """The monic model does not define a cyclic cubic field."""


@dataclass(frozen=True)
class MonicCubicModel:
    B: int
    C: int
    D: int
    source: Optional[BinaryCubicForm] = field(default=None, compare=False)

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        return 1, self.B, self.C, self.D

    @property
    def disc_g(self) -> int:
        B, C, D = self.B, self.C, self.D
        return 18 * B * C * D - 4 * B**3 * D + B * B * C * C - 4 * C**3 - 27 * D * D

    def __call__(self, x: int) -> int:
        return ((x + self.B) * x + self.C) * x + self.D

    def as_form(self) -> BinaryCubicForm:
        return BinaryCubicForm(1, self.B, self.C, self.D)

    def translate(self, c: int) -> "MonicCubicModel":
        """Model of w + c, i.e. the polynomial g(X - c)."""
        B, C, D = self.B, self.C, self.D
        return MonicCubicModel(
            B - 3 * c,
            3 * c * c - 2 * B * c + C,
            -(c**3) + B * c * c - C * c + D,
        )

    def __str__(self):
        return f"X^3 + {self.B}X^2 + {self.C}X + {self.D}"


def monic_model(f: BinaryCubicForm) -> MonicCubicModel:
    a, b, c, d = f.require_cubic()
    return MonicCubicModel(b, a * c, a * a * d, source=f)


def v2(k: int) -> int:
    if k == 0:
        raise ValueError("valuation undefined for 0")
    return (k & -k).bit_length() - 1


class Mod2Factorization(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    LINEAR_TIMES_QUADRATIC = "linear*quadratic"
    LINEAR_FACTORS = "linear factors"


# monic cubics over F_2, keyed by (B, C, D) mod 2
_MOD2_TABLE = {
    (0, 0, 0): (Mod2Factorization.LINEAR_FACTORS, "X^3"),
    (0, 0, 1): (Mod2Factorization.LINEAR_TIMES_QUADRATIC, "(X+1)(X^2+X+1)"),
    (0, 1, 0): (Mod2Factorization.LINEAR_FACTORS, "X(X+1)^2"),
    (0, 1, 1): (Mod2Factorization.IRREDUCIBLE, "X^3+X+1"),
    (1, 0, 0): (Mod2Factorization.LINEAR_FACTORS, "X^2(X+1)"),
    (1, 0, 1): (Mod2Factorization.IRREDUCIBLE, "X^3+X^2+1"),
    (1, 1, 0): (Mod2Factorization.LINEAR_TIMES_QUADRATIC, "X(X^2+X+1)"),
    (1, 1, 1): (Mod2Factorization.LINEAR_FACTORS, "(X+1)^3"),
}


def factor_mod2(g: MonicCubicModel) -> tuple[Mod2Factorization, str]:
    """Factorisation type of g over F_2 and the factorisation itself."""
    return _MOD2_TABLE[g.B & 1, g.C & 1, g.D & 1]


class SplittingType2(str, enum.Enum):
    INERT = "Inert"
    TOTALLY_SPLIT = "TotallySplit"


@dataclass(frozen=True)
class Splitting2:
    kind: SplittingType2
    depth: int
    # Inert: factorisation mod 2; TotallySplit: roots of g modulo 2^depth
    mod2: Optional[str] = None
    roots: tuple[int, ...] = ()
    # highest level at which some residue still satisfied g = 0 (Inert only)
    died_at: Optional[int] = None


def lift_roots(g: MonicCubicModel, depth: int) -> tuple[list[int], int]:
    """All residues r mod 2^depth with g(r) = 0 mod 2^depth.

    Returns the candidate list and the last level j (1 <= j <= depth) at which
    it was nonempty, or 0 if g has no root mod 2.
    """
    cands = [r for r in (0, 1) if g(r) % 2 == 0]
    level = 1 if cands else 0
    for j in range(1, depth):
        if not cands:
            break
        step = 1 << j
        mod = step << 1
        cands = [x for r in cands for x in (r, r + step) if g(x) % mod == 0]
        if len(cands) > MAX_CANDIDATES:
            raise ArithmeticError("2-adic candidate set too large; g is probably not separable")
        if cands:
            level = j + 1
    return cands, level


def _cluster_roots(cands: list[int], depth: int) -> tuple[int, ...]:
    # residues near the same 2-adic root agree modulo 2^(depth // 2)
    mod = 1 << max(1, depth // 2)
    reps: dict[int, int] = {}
    for r in sorted(cands):
        reps.setdefault(r % mod, r)
    return tuple(sorted(reps.values()))


def _check_cyclic(g: MonicCubicModel) -> None:
    D = g.disc_g
    if D == 0 or not is_perfect_square(D):
        raise NotCyclicCubicError(f"not Galois: discriminant {D} is not a nonzero square")
    if not is_irreducible(g.as_form()):
        raise NotCyclicCubicError("g is reducible over Q")


def splitting_type_2(g: MonicCubicModel, depth: Optional[int] = None) -> Splitting2:
    """Decide whether 2 is inert or totally split in the field defined by g.

    2 is unramified in every cyclic cubic field, so g has either no 2-adic
    root or three of them.  An even discriminant only means 2 divides the
    index of Z[w]; the lifting still works in that case.
    """
    if depth is None:
        depth = default_depth()
    if depth < 1:
        raise ValueError("depth must be positive")
    _check_cyclic(g)
    cands, level = lift_roots(g, depth)
    if not cands:
        _, text = factor_mod2(g)
        return Splitting2(SplittingType2.INERT, depth, mod2=text, died_at=level)
    roots = _cluster_roots(cands, depth)
    if len(roots) != 3 and depth >= 20:
        raise NotCyclicCubicError(
            f"found {len(roots)} 2-adic root(s); a cyclic cubic has 0 or 3 (2 cannot ramify)"
        )
    return Splitting2(SplittingType2.TOTALLY_SPLIT, depth, roots=roots)


def is_common_index_divisor_2(g: MonicCubicModel, depth: Optional[int] = None) -> bool:
    """2 divides [O_K : Z[theta]] for every generator theta of the field.

    Happens exactly when 2 splits completely: F_2 has only two monic linear
    polynomials, so no cubic can reduce to three distinct linear factors.
    """
    return splitting_type_2(g, depth).kind is SplittingType2.TOTALLY_SPLIT


def norm_linear(g: MonicCubicModel, u: int, v: int) -> int:
    """Norm of u - v*w, which is u^3 + B u^2 v + C u v^2 + D v^3."""
    return ((u + g.B * v) * u + g.C * v * v) * u + g.D * v * v * v
