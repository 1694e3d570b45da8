"""Brute-force ground truth over boxes |x| <= B, |y| <= B (max norm)."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Optional

import numpy as np

from .forms import (
    BinaryCubicForm,
    UnimodularMatrix,
    act,
    cubic_integer_roots,
    discriminant,
    evaluate,
    is_irreducible,
    is_perfect_square,
)
from .field2adic import v2

MAX_VIOLATIONS = 100
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class SolutionSet:
    form: BinaryCubicForm
    k: int
    box_bound: int
    solutions: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.solutions)

    def __contains__(self, xy):
        return tuple(xy) in self.solutions

    def to_json(self) -> dict:
        return {
            "input": {"form": [str(c) for c in self.form], "k": str(self.k)},
            "box_bound": str(self.box_bound),
            "count": len(self.solutions),
            "solutions": [[str(x), str(y)] for x, y in self.solutions],
        }


def _solve_rows(f: BinaryCubicForm, k: int, B: int, y_lo: int, y_hi: int) -> list[tuple[int, int]]:
    a, b, c, d = f
    out = []
    for y in range(y_lo, y_hi + 1):
        const = d * y**3 - k
        if a != 0:
            xs = cubic_integer_roots(a, b * y, c * y * y, const, -B, B)
        else:
            xs = [x for x in range(-B, B + 1) if (b * y * x + c * y * y) * x + const == 0]
        out.extend((x, y) for x in xs)
    return out


def _stripes(B: int, jobs: int) -> list[tuple[int, int]]:
    n = 2 * B + 1
    size = -(-n // jobs)
    return [(lo, min(lo + size - 1, B)) for lo in range(-B, B + 1, size)]


def solve_box(f: BinaryCubicForm, k: int, B: int, jobs: int = 1) -> SolutionSet:
    """All (x, y) with |x|, |y| <= B and f(x, y) = k.

    For each y the cubic in x is searched for integer roots by exact
    bisection, so the cost is O(B log B) rather than O(B^2).  With
    ``jobs > 1`` the y-range is split into stripes handled by worker
    processes; the merged result is identical to the serial one.
    """
    if B < 1:
        raise ValueError("box bound must be at least 1")
    if jobs <= 1:
        sols = _solve_rows(f, k, B, -B, B)
    else:
        stripes = _stripes(B, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_solve_rows, *zip(*[(f, k, B, lo, hi) for lo, hi in stripes]))
            sols = [s for part in parts for s in part]
    return SolutionSet(f, k, B, tuple(sorted(set(sols))))


def solve_box_naive(f: BinaryCubicForm, k: int, B: int) -> SolutionSet:
    """Reference double loop; only for cross-checking :func:`solve_box`."""
    sols = [(x, y) for x in range(-B, B + 1) for y in range(-B, B + 1) if evaluate(f, x, y) == k]
    return SolutionSet(f, k, B, tuple(sols))


def _fits_int64(f: BinaryCubicForm, B: int) -> bool:
    return (abs(f.a) + abs(f.b) + abs(f.c) + abs(f.d)) * B**3 < _INT64_SAFE


def _grid_values(f: BinaryCubicForm, B: int) -> np.ndarray:
    r = np.arange(-B, B + 1, dtype=np.int64)
    x = r[:, None]
    y = r[None, :]
    return ((f.a * x + f.b * y) * x + f.c * y * y) * x + f.d * y * y * y


def represented_values(f: BinaryCubicForm, B: int) -> Counter:
    """Tally of f(x, y) over the box, (0, 0) excluded."""
    if B < 1:
        raise ValueError("box bound must be at least 1")
    tally: Counter = Counter()
    if _fits_int64(f, B):
        vals = _grid_values(f, B)
        vals[B, B] = 0
        uniq, counts = np.unique(vals, return_counts=True)
        tally.update({int(u): int(c) for u, c in zip(uniq, counts)})
        tally[0] -= 1
        if tally[0] == 0:
            del tally[0]
        return tally
    for x in range(-B, B + 1):
        for y in range(-B, B + 1):
            if x or y:
                tally[evaluate(f, x, y)] += 1
    return tally


@dataclass
class ValuationReport:
    form: BinaryCubicForm
    box_bound: int
    checked: int
    total_violations: int
    violations: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return self.total_violations == 0

    def to_json(self) -> dict:
        return {
            "form": [str(c) for c in self.form],
            "box_bound": str(self.box_bound),
            "checked": self.checked,
            "total_violations": self.total_violations,
            "violations": [[str(x), str(y), str(k)] for x, y, k in self.violations],
        }


class PreconditionError(ValueError):
    pass


def _require_theorem_shape(f: BinaryCubicForm) -> None:
    a, b, c, d = f.require_cubic()
    problems = []
    if a % 2 == 0:
        problems.append("a is even")
    if (b * c + d) % 2 == 0:
        problems.append("bc + d is even")
    if not is_irreducible(f):
        problems.append("f(X, 1) is reducible")
    if not is_perfect_square(discriminant(f)):
        problems.append("discriminant is not a square")
    if problems:
        raise PreconditionError("form does not satisfy the hypotheses: " + "; ".join(problems))


def verify_valuation_invariant(f: BinaryCubicForm, B: int) -> ValuationReport:
    """Every nonzero value of f on the box should have v2 divisible by 3.

    Refuses forms that fail the parity, irreducibility or square
    discriminant hypotheses.  At most ``MAX_VIOLATIONS`` offending points
    are listed; the total is always reported.
    """
    if B < 1:
        raise ValueError("box bound must be at least 1")
    _require_theorem_shape(f)
    violations: list[tuple[int, int, int]] = []
    total = 0
    checked = (2 * B + 1) ** 2 - 1
    if _fits_int64(f, B):
        vals = _grid_values(f, B)
        nz = vals != 0
        low = np.where(nz, vals & -vals, 1)
        _, exps = np.frexp(low.astype(np.float64))
        bad = nz & ((exps - 1) % 3 != 0)
        total = int(bad.sum())
        for i, j in np.argwhere(bad)[:MAX_VIOLATIONS]:
            violations.append((int(i) - B, int(j) - B, int(vals[i, j])))
        return ValuationReport(f, B, checked, total, violations)
    for x in range(-B, B + 1):
        for y in range(-B, B + 1):
            k = evaluate(f, x, y)
            if k and v2(k) % 3:
                total += 1
                if len(violations) < MAX_VIOLATIONS:
                    violations.append((x, y, k))
    return ValuationReport(f, B, checked, total, violations)


class NotAnAutomorphismError(ValueError):
    pass


def orbit_check(f: BinaryCubicForm, M: UnimodularMatrix, S: SolutionSet) -> bool:
    """Every image M(x, y) of a solution in S is again a solution.

    Images are checked by direct evaluation, so they may leave the box.
    """
    if act(f, M) != f:
        raise NotAnAutomorphismError(f"{M} does not fix {f}")
    return all(evaluate(f, *M.apply(x, y)) == S.k for x, y in S.solutions)


def orbit_of(M: UnimodularMatrix, xy: tuple[int, int], limit: int = 6) -> list[tuple[int, int]]:
    """Distinct points xy, M xy, M^2 xy, ... (stops once the orbit closes)."""
    orbit = [tuple(xy)]
    for _ in range(limit):
        nxt = M.apply(*orbit[-1])
        if nxt == orbit[0]:
            break
        orbit.append(nxt)
    return orbit


def homogeneous_search(f: BinaryCubicForm, k: int, bound: int) -> list[tuple[int, int, int]]:
    """All (x, y, z) with |x|, |y|, |z| <= bound and f(x, y) = k z^3."""
    targets: dict[int, list[int]] = {}
    for z in range(-bound, bound + 1):
        targets.setdefault(k * z**3, []).append(z)
    hits = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            for z in targets.get(evaluate(f, x, y), ()):
                hits.append((x, y, z))
    return sorted(hits)


def mordell_search(a: int, b: int, c: int, d: int, t: int, bound: int,
                   y_bound: Optional[int] = None) -> list[tuple[int, int]]:
    """All (x, y) with |x| <= bound, |y| <= y_bound and a x^3 + b x^2 + c x + d = t y^2."""
    if y_bound is None:
        y_bound = bound
    hits = []
    for x in range(-bound, bound + 1):
        lhs = ((a * x + b) * x + c) * x + d
        if lhs % t:
            continue
        q = lhs // t
        if q < 0:
            continue
        y = isqrt(q)
        if y * y == q and y <= y_bound:
            hits.extend({(x, y), (x, -y)})
    return sorted(hits)
