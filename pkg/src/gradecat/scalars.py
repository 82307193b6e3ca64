"""Exact scalar arithmetic: cyclotomic numbers and rational quaternions.

Rationals are plain fractions.Fraction values.  A Cyclotomic is a residue
modulo the N-th cyclotomic polynomial with Fraction coefficients, i.e. an
element of Q(zeta_N); complex conjugation sends zeta_N to zeta_N^(N-1).
A RationalQuaternion has four Fraction components on the 1, i, j, k basis.
No floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for top in range(len(num) - 1, len(den) - 2, -1):
        shift = top - (len(den) - 1)
        q, r = divmod(num[top], den[-1])
        if r:
            raise ArithmeticError("polynomial division is not exact")
        out[shift] = q
        for i, c in enumerate(den):
            num[shift + i] -= q * c
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending order, monic."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[top]
        if c:
            shift = top - deg
            for i, p in enumerate(phi):
                coeffs[shift + i] -= c * p
    coeffs = coeffs[:deg]
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _zeta_power(n: int, k: int) -> tuple[Fraction, ...]:
    """zeta_n^k as a residue vector mod Phi_n."""
    k %= n
    mono = [Fraction(0)] * (k + 1)
    mono[k] = Fraction(1)
    return _reduce_mod_phi(n, mono)


class Cyclotomic:
    """An element of Q(zeta_N), stored as a residue modulo Phi_N."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        deg = _phi_degree(conductor)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            coeffs = list(_reduce_mod_phi(conductor, coeffs))
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        self.conductor = conductor
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "Cyclotomic":
        c = [Fraction(value)] + [Fraction(0)] * (_phi_degree(conductor) - 1)
        return cls(conductor, c)

    def promoted(self, conductor: int) -> "Cyclotomic":
        """The same value inside Q(zeta_conductor); self.conductor must divide it."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("can only promote to a multiple conductor")
        scale = conductor // self.conductor
        deg = _phi_degree(conductor)
        acc = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                vec = _zeta_power(conductor, k * scale)
                for i, x in enumerate(vec):
                    acc[i] += c * x
        return Cyclotomic(conductor, acc)

    def _pair(self, other):
        if isinstance(other, Cyclotomic):
            n = math.lcm(self.conductor, other.conductor)
            return self.promoted(n), other.promoted(n)
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.from_rational(other, self.conductor)
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        conv = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic(a.conductor, conv)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.from_rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other, self.conductor)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # values of equal worth may live in different conductors

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: zeta_N -> zeta_N^(N-1)."""
        n = self.conductor
        deg = len(self.coeffs)
        acc = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                vec = _zeta_power(n, (n - k) % n)
                for i, x in enumerate(vec):
                    acc[i] += c * x
        return Cyclotomic(n, acc)

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inversion of zero cyclotomic")
        # extended Euclid in Q[x] against Phi_N (irreducible over Q)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = list(self.coeffs)
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        r0, r1 = trim(r0), trim(r1)
        while r1:
            q = [Fraction(0)] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            rem = list(r0)
            for top in range(len(rem) - 1, len(r1) - 2, -1):
                shift = top - (len(r1) - 1)
                if shift < 0:
                    break
                factor = rem[top] / r1[-1]
                q[shift] = factor
                for i, c in enumerate(r1):
                    rem[shift + i] -= factor * c
            rem = trim(rem)
            new_s = [x for x in s0]
            prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, x in enumerate(q):
                for j, y in enumerate(s1):
                    prod[i + j] += x * y
            length = max(len(new_s), len(prod))
            new_s += [Fraction(0)] * (length - len(new_s))
            prod += [Fraction(0)] * (length - len(prod))
            new_s = trim([x - y for x, y in zip(new_s, prod)])
            r0, r1 = trim(list(r1)), rem
            s0, s1 = s1, new_s
        # r0 = gcd (a nonzero constant), s0 * self == r0 (mod phi)
        const = r0[0]
        inv_coeffs = [c / const for c in s0]
        return Cyclotomic(self.conductor, inv_coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def is_root_of_unity_or_zero(self) -> bool:
        if not self:
            return False
        return (self ** (2 * self.conductor)) == 1

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coeffs]})"

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls(data["conductor"], [Fraction(c) for c in data["coeffs"]])


def zeta(n: int, k: int = 1) -> Cyclotomic:
    """The root of unity zeta_n^k as an exact cyclotomic value."""
    return Cyclotomic(n, _zeta_power(n, k))


class RationalQuaternion:
    """A quaternion with Fraction components on the (1, i, j, k) basis."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w = Fraction(w)
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.z = Fraction(z)

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def i(cls):
        return cls(0, 1)

    @classmethod
    def j(cls):
        return cls(0, 0, 1)

    @classmethod
    def k(cls):
        return cls(0, 0, 0, 1)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def _coerce(self, other):
        if isinstance(other, RationalQuaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalQuaternion(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalQuaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return RationalQuaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.components()
        e, f, g, h = o.components()
        return RationalQuaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalQuaternion.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        return self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2

    def inverse(self) -> "RationalQuaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inversion of zero quaternion")
        c = self.conjugate()
        return RationalQuaternion(c.w / n, c.x / n, c.y / n, c.z / n)

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.components() == o.components()

    __hash__ = None

    def __repr__(self):
        return f"RationalQuaternion({self.w}, {self.x}, {self.y}, {self.z})"

    def to_json(self) -> list:
        return [str(c) for c in self.components()]

    @classmethod
    def from_json(cls, data) -> "RationalQuaternion":
        return cls(*(Fraction(c) for c in data))


def rational_to_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def rational_from_json(text: str) -> Fraction:
    return Fraction(text)
