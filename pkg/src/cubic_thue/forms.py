"""Binary cubic forms with exact integer coefficients.

Everything here works on Python ints, so coefficients of any size are
handled without overflow.  No floating point is used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Optional


@dataclass(frozen=True)
class BinaryCubicForm:
    """The form a*x^3 + b*x^2*y + c*x*y^2 + d*y^3.

    ``a == 0`` is allowed so the set of forms is closed under substitution;
    callers that need a genuine cubic in x use :meth:`require_cubic`.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise TypeError(f"coefficient {name} must be an int")

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c, self.d))

    def __call__(self, x: int, y: int) -> int:
        return evaluate(self, x, y)

    def __str__(self):
        return f"{self.a}x^3 + {self.b}x^2y + {self.c}xy^2 + {self.d}y^3"

    @classmethod
    def parse(cls, text: str) -> "BinaryCubicForm":
        """Build a form from ``"a,b,c,d"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    def require_cubic(self) -> "BinaryCubicForm":
        if self.a == 0:
            raise ValueError("leading coefficient a must be nonzero")
        return self


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """P*x^2 + Q*x*y + R*y^2."""

    P: int
    Q: int
    R: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.P, self.Q, self.R))

    @property
    def disc(self) -> int:
        return self.Q * self.Q - 4 * self.P * self.R

    @property
    def content(self) -> int:
        return gcd(gcd(self.P, self.Q), self.R)

    def primitive_part(self) -> "BinaryQuadraticForm":
        g = self.content
        if g == 0:
            raise ValueError("zero form has no primitive part")
        return BinaryQuadraticForm(self.P // g, self.Q // g, self.R // g)

    def act(self, M: "UnimodularMatrix") -> "BinaryQuadraticForm":
        p, q, r, s = M
        P, Q, R = self
        return BinaryQuadraticForm(
            P * p * p + Q * p * r + R * r * r,
            2 * P * p * q + Q * (p * s + q * r) + 2 * R * r * s,
            P * q * q + Q * q * s + R * s * s,
        )


@dataclass(frozen=True)
class UnimodularMatrix:
    """The 2x2 matrix (p q; r s), acting by (x, y) -> (p*x + q*y, r*x + s*y)."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"matrix ({self.p}, {self.q}; {self.r}, {self.s}) is not unimodular")

    def __iter__(self) -> Iterator[int]:
        return iter((self.p, self.q, self.r, self.s))

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        p, q, r, s = self
        P, Q, R, S = other
        return UnimodularMatrix(p * P + q * R, p * Q + q * S, r * P + s * R, r * Q + s * S)

    def inverse(self) -> "UnimodularMatrix":
        e = self.det
        return UnimodularMatrix(self.s * e, -self.q * e, -self.r * e, self.p * e)

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return self.p * x + self.q * y, self.r * x + self.s * y

    def is_plus_minus_identity(self) -> bool:
        return self.q == 0 and self.r == 0 and self.p == self.s and self.p in (1, -1)

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)


def evaluate(f: BinaryCubicForm, x: int, y: int) -> int:
    return ((f.a * x + f.b * y) * x + f.c * y * y) * x + f.d * y * y * y


def discriminant(f: BinaryCubicForm) -> int:
    a, b, c, d = f
    return 18 * a * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * a * c**3 - 27 * a * a * d * d


def hessian(f: BinaryCubicForm) -> BinaryQuadraticForm:
    """Reduced Hessian (b^2 - 3ac, bc - 9ad, c^2 - 3bd).

    With this normalisation disc(H) = -3 * disc(f).
    """
    a, b, c, d = f
    return BinaryQuadraticForm(b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)


def act(f: BinaryCubicForm, M: UnimodularMatrix) -> BinaryCubicForm:
    """Return f o M, i.e. the form (x, y) -> f(p*x + q*y, r*x + s*y)."""
    if not isinstance(M, UnimodularMatrix):
        M = UnimodularMatrix(*M)
    a, b, c, d = f
    p, q, r, s = M
    A = a * p**3 + b * p * p * r + c * p * r * r + d * r**3
    B = (3 * a * p * p * q
         + b * (p * p * s + 2 * p * q * r)
         + c * (q * r * r + 2 * p * r * s)
         + 3 * d * r * r * s)
    C = (3 * a * p * q * q
         + b * (2 * p * q * s + q * q * r)
         + c * (p * s * s + 2 * q * r * s)
         + 3 * d * r * s * s)
    D = a * q**3 + b * q * q * s + c * q * s * s + d * s**3
    return BinaryCubicForm(A, B, C, D)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def cubic_integer_roots(a: int, b: int, c: int, d: int, lo: int, hi: int) -> list[int]:
    """Sorted integer roots in [lo, hi] of a*x^3 + b*x^2 + c*x + d, a != 0.

    The interval is cut into pieces on which the cubic is strictly monotone;
    each piece is searched by bisection.  A few integers around each critical
    point are checked directly, which sidesteps computing the critical points
    exactly.
    """
    if a == 0:
        raise ValueError("leading coefficient must be nonzero")
    if lo > hi:
        return []
    if a < 0:
        a, b, c, d = -a, -b, -c, -d

    def p(x):
        return ((a * x + b) * x + c) * x + d

    hot: set[int] = set()
    h = b * b - 3 * a * c
    if h > 0:
        s = isqrt(h)
        for num in (-b - s, -b + s):
            e = num // (3 * a)
            hot.update(range(max(lo, e - 2), min(hi, e + 3) + 1))

    roots = {x for x in hot if p(x) == 0}

    # maximal runs of [lo, hi] that avoid the hot integers
    segments = []
    start = lo
    for x in sorted(hot):
        if x > start:
            segments.append((start, x - 1))
        start = max(start, x + 1)
    if start <= hi:
        segments.append((start, hi))

    for u, v in segments:
        pu, pv = p(u), p(v)
        if pu == 0:
            roots.add(u)
            continue
        if pv == 0:
            roots.add(v)
            continue
        if (pu < 0) == (pv < 0):
            continue
        increasing = pu < pv
        while v - u > 1:
            m = (u + v) // 2
            pm = p(m)
            if pm == 0:
                roots.add(m)
                break
            if (pm < 0) == increasing:
                u = m
            else:
                v = m
    return sorted(roots)


def rational_roots(f: BinaryCubicForm) -> list[tuple[int, int]]:
    """Rational roots of f(X, 1) as reduced fractions (num, den), den > 0.

    If theta is a root then a*theta is a root of the monic cubic
    X^3 + bX^2 + acX + a^2 d, so rational roots of f(X, 1) correspond to
    integer roots of that monic polynomial, which lie within the Cauchy bound.
    """
    a, b, c, d = f.require_cubic()
    B, C, D = b, a * c, a * a * d
    bound = 1 + max(abs(B), abs(C), abs(D))
    out = []
    for w in cubic_integer_roots(1, B, C, D, -bound, bound):
        g = gcd(w, a)
        num, den = w // g, a // g
        if den < 0:
            num, den = -num, -den
        out.append((num, den))
    return sorted(out, key=lambda t: t[0] / t[1])


def is_irreducible(f: BinaryCubicForm) -> bool:
    """True iff f(X, 1) is irreducible over Q (for a cubic: no rational root)."""
    return not rational_roots(f)


def hessian_cyclic_test(f: BinaryCubicForm) -> bool:
    """Hessian-side test for an order-3 automorphism.

    True iff H(f) = lam * g with g primitive and equivalent to x^2 + xy + y^2
    (up to sign).  Discriminant -3 has a single class of primitive positive
    definite forms, so it is enough to check the discriminant of the
    primitive part.
    """
    H = hessian(f)
    if H.content == 0:
        return False
    return H.primitive_part().disc == -3


@lru_cache(maxsize=16)
def _order3_candidates(bound: int) -> tuple[UnimodularMatrix, ...]:
    return tuple(_scan_order3(bound))


def _scan_order3(bound: int) -> Iterator[UnimodularMatrix]:
    rng = range(-bound, bound + 1)
    for p, q, r, s in itertools.product(rng, repeat=4):
        if p * s - q * r not in (1, -1):
            continue
        M = UnimodularMatrix(p, q, r, s)
        if M.is_plus_minus_identity():
            continue
        if (M @ M @ M).is_plus_minus_identity():
            yield M


def find_order3_automorphism(f: BinaryCubicForm, bound: int) -> Optional[UnimodularMatrix]:
    """Search |entries| <= bound for M != +-I with f o M = f and M^3 = +-I.

    Candidates are scanned in lexicographic order of (p, q, r, s); the first
    hit is returned.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    for M in _order3_candidates(bound):
        if act(f, M) == f:
            return M
    return None
