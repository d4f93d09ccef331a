"""Dense integer polynomials with exact arithmetic.

Coefficients are arbitrary-precision ints stored in ascending degree order
with no trailing zeros; the zero polynomial is the empty tuple.  Everything
here is exact: there is no floating point in this module, and division is
only defined where it is exact.

>>> f = IntPoly.from_coeffs([-1, 0, 0, 0, 0, 1])   # x^5 - 1
>>> f.degree
5
>>> cyclotomic(12)
IntPoly((1, 0, -1, 0, 1))
>>> divrem(IntPoly.from_coeffs([0, 0, 0, 0, 0, 1]), f)[1]   # x^5 mod (x^5-1)
IntPoly((1,))
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(a) for a in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> "IntPoly":
        return IntPoly(tuple(coeffs))

    @staticmethod
    def constant(a: int) -> "IntPoly":
        return IntPoly((a,))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPoly":
        return IntPoly((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        """Coefficient of x^k (zero beyond the degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        out = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, value):
        """Evaluate at an int or Fraction, Horner style."""
        acc: int | Fraction = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def compose_monomial(self, d: int) -> "IntPoly":
        """Substitute x^d for the variable: p(x) -> p(x^d)."""
        if d < 1:
            raise ValueError("d must be >= 1")
        if self.is_zero:
            return self
        out = [0] * (self.degree * d + 1)
        for i, a in enumerate(self.coeffs):
            out[i * d] = a
        return IntPoly(tuple(out))


X = IntPoly((0, 1))
ONE = IntPoly((1,))


def divrem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder of a by a monic divisor b; exact over Z.

    >>> divrem(IntPoly((0, 0, 1)), IntPoly((-1, 1)))   # x^2 by x-1
    (IntPoly((1, 1)), IntPoly((1,)))
    """
    if not b.is_monic:
        raise ValueError("divisor must be monic")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return IntPoly(()), a
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quot[i - db] = c
            for j, bj in enumerate(b.coeffs):
                rem[i - db + j] -= c * bj
    return IntPoly(tuple(quot)), IntPoly(tuple(rem))


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b where the division is exact over Z; b need not be monic."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return a
    # divide over Q, then insist on integrality and zero remainder
    ra = [Fraction(c) for c in a.coeffs]
    db, lead = b.degree, b.leading
    if a.degree < db:
        raise ValueError("inexact polynomial division")
    quot = [Fraction(0)] * (len(ra) - db)
    for i in range(len(ra) - 1, db - 1, -1):
        c = ra[i]
        if c:
            q = c / lead
            quot[i - db] = q
            for j, bj in enumerate(b.coeffs):
                ra[i - db + j] -= q * bj
    if any(c != 0 for c in ra):
        raise ValueError("inexact polynomial division")
    if any(q.denominator != 1 for q in quot):
        raise ValueError("non-integer coefficient in quotient")
    return IntPoly(tuple(int(q) for q in quot))


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor over Q, returned as a primitive integer
    polynomial with positive leading coefficient (monic whenever the monic
    gcd has integer coefficients, e.g. for products of cyclotomics).

    >>> gcd(IntPoly((-1, 0, 1)), IntPoly((-1, 1)))
    IntPoly((-1, 1))
    """
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]

    def deg(p: list[Fraction]) -> int:
        return len(p) - 1

    def trim(p: list[Fraction]) -> list[Fraction]:
        while p and p[-1] == 0:
            p.pop()
        return p

    fa, fb = trim(fa), trim(fb)
    while fb:
        # fa mod fb over Q
        while deg(fa) >= deg(fb) and fa:
            q = fa[-1] / fb[-1]
            shift = deg(fa) - deg(fb)
            for j, c in enumerate(fb):
                fa[shift + j] -= q * c
            trim(fa)
        fa, fb = fb, fa
    if not fa:
        return IntPoly(())
    lcm_den = 1
    for c in fa:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in fa]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(tuple(ints))


def euler_phi(d: int) -> int:
    n, result, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """d-th cyclotomic polynomial, by dividing x^d - 1 by the proper
    cyclotomic factors.  Exact integer arithmetic throughout.

    >>> cyclotomic(1), cyclotomic(2), cyclotomic(6)
    (IntPoly((-1, 1)), IntPoly((1, 1)), IntPoly((1, -1, 1)))
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    num = IntPoly.monomial(d) - ONE
    for e in range(1, d):
        if d % e == 0:
            q, r = divrem(num, cyclotomic(e))
            assert r.is_zero
            num = q
    return num


@dataclass(frozen=True)
class CycloFactorization:
    """Multiset of cyclotomic factors (d, multiplicity), d ascending, plus
    whatever monic remainder did not factor."""
    factors: tuple[tuple[int, int], ...]
    remainder: IntPoly

    @property
    def remainder_is_one(self) -> bool:
        return self.remainder == ONE

    @property
    def degree(self) -> int:
        return sum(euler_phi(d) * m for d, m in self.factors) + max(self.remainder.degree, 0)


def cyclo_factor(f: IntPoly) -> CycloFactorization:
    """Factor a monic integer polynomial into cyclotomics by trial division.

    Tries every d with phi(d) <= deg f (a finite set since phi(d) >= sqrt(d/2)),
    dividing out each factor to full multiplicity.  remainder_is_one tells
    whether f was a product of cyclotomics.
    """
    if not f.is_monic:
        raise ValueError("cyclo_factor expects a monic polynomial")
    rem = f
    found: list[tuple[int, int]] = []
    limit = 2 * max(f.degree, 1) ** 2 + 1
    for d in range(1, limit + 1):
        if rem.degree < 1:
            break
        if euler_phi(d) > rem.degree:
            continue
        mult = 0
        while True:
            q, r = divrem(rem, cyclotomic(d))
            if not r.is_zero:
                break
            rem = q
            mult += 1
        if mult:
            found.append((d, mult))
    return CycloFactorization(tuple(found), rem)


def root_parameters(fac: CycloFactorization) -> tuple[Fraction, ...]:
    """Arguments a/d of the roots e^(2 pi i a/d), sorted ascending with
    multiplicity.  Requires a complete cyclotomic factorization.

    >>> root_parameters(cyclo_factor(IntPoly((-1, 0, 0, 0, 0, 1))))
    (Fraction(0, 1), Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5))
    """
    if not fac.remainder_is_one:
        raise ValueError("root parameters need a full cyclotomic factorization")
    values: list[Fraction] = []
    for d, mult in fac.factors:
        for a in range(d):
            if math.gcd(a, d) == 1 or (d == 1 and a == 0):
                values.extend([Fraction(a, d)] * mult)
    values.sort()
    return tuple(values)


def render(p: IntPoly, var: str = "x") -> str:
    """Canonical text form, parseable by parse_poly: descending powers inside
    parentheses, coefficient juxtaposition, e.g. "(x^5-x^4+2x^3-2x^2+x-1)".
    """
    if p.is_zero:
        return "(0)"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        a = p.coeff(k)
        if a == 0:
            continue
        sign = "-" if a < 0 else ("+" if parts else "")
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            xs = var if k == 1 else f"{var}^{k}"
            body = xs if mag == 1 else f"{mag}{xs}"
        parts.append(sign + body)
    return "(" + "".join(parts) + ")"
