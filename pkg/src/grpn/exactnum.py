"""Exact arithmetic: arbitrary-precision rationals and the cyclotomic fields Q(zeta_r).

Rationals are plain ``fractions.Fraction`` values (already reduced, positive
denominator).  A :class:`Cyclotomic` holds an element of Q(zeta_r) as a
coefficient vector modulo the r-th cyclotomic polynomial, so equality is
coefficient equality and every nonzero element is invertible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .errors import DivisionByZero, OrderMismatch

Rational = Fraction


def _divisors(r: int) -> list[int]:
    return [d for d in range(1, r + 1) if r % d == 0]


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide by a monic integer polynomial, requiring zero remainder."""
    assert den[-1] == 1
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    assert all(v == 0 for v in num[:dd]), "non-exact polynomial division"
    return quot


@cache
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the r-th cyclotomic polynomial Phi_r.

    Computed by dividing x^r - 1 by the product of all Phi_d with d | r, d < r.
    """
    if r < 1:
        raise ValueError("order must be positive")
    num = [0] * (r + 1)
    num[0], num[r] = -1, 1
    for d in _divisors(r)[:-1]:
        num = _poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


@cache
def _zeta_power_table(r: int) -> tuple[tuple[int, ...], ...]:
    """x^k reduced mod Phi_r, for k = 0 .. max(2*deg(Phi_r), r)."""
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    table = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(max(2 * deg, r) + 1):
        table.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(table)


class Cyclotomic:
    """An element of Q(zeta_r), reduced modulo Phi_r.

    Instances are immutable; all arithmetic returns new values.  Integers and
    Fractions mix freely as scalars, but two Cyclotomic values must share the
    same order (no implicit embedding between different fields).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = len(cyclotomic_polynomial(order)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            table = _zeta_power_table(order)
            reduced = [Fraction(0)] * deg
            for k, c in enumerate(coeffs):
                if c:
                    # x^order == 1 mod Phi_order, so large powers wrap around
                    row = table[k] if k < len(table) else table[k % order]
                    for j, v in enumerate(row):
                        reduced[j] += c * v
            coeffs = reduced
        else:
            coeffs = coeffs + [Fraction(0)] * (deg - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *args):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(order: int, value) -> "Cyclotomic":
        return Cyclotomic(order, [Fraction(value)])

    @staticmethod
    def zero(order: int) -> "Cyclotomic":
        return Cyclotomic(order, [])

    @staticmethod
    def one(order: int) -> "Cyclotomic":
        return Cyclotomic(order, [1])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatch(f"orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Cyclotomic(self.order, [a * f for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        deg = len(self.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1 if deg else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        # invariants: old_r = old_s * a  (mod phi)
        old_r, r = a, phi
        old_s, s = [Fraction(1)], [Fraction(0)]
        while any(c != 0 for c in r):
            q, rem = _qpoly_divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, _qpoly_sub(old_s, _qpoly_mul(q, s))
        lead = next(c for c in reversed(old_r) if c != 0)
        inv = [c / lead for c in old_s]
        assert len([c for c in old_r if c != 0]) == 1 and old_r[0] == lead, \
            "gcd with irreducible Phi_r must be constant"
        return Cyclotomic(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        acc = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: zeta^k -> zeta^(r-k)."""
        r = self.order
        table = _zeta_power_table(r)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(r - k) % r]
                for j, v in enumerate(row):
                    out[j] += c * v
        return Cyclotomic(r, out)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"r": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "Cyclotomic":
        return Cyclotomic(data["r"], [Fraction(c) for c in data["coeffs"]])


def zeta_pow(r: int, k: int) -> Cyclotomic:
    """zeta_r^k reduced mod Phi_r (k taken mod r)."""
    table = _zeta_power_table(r)
    return Cyclotomic(r, table[k % r])


# -- helpers for the Euclidean algorithm over Q[x] --------------------------


def _qpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _qpoly_trim(out)


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_trim(out)


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _qpoly_trim(list(a))
    b = _qpoly_trim(list(b))
    assert b, "division by zero polynomial"
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while r and len(r) >= len(b):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for j, bc in enumerate(b):
            r[k + j] -= c * bc
        _qpoly_trim(r)
    return _qpoly_trim(q), r
