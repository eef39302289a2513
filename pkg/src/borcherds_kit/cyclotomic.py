"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A CycScalar is a rational linear combination of powers of a primitive M-th
root of unity, kept reduced modulo the M-th cyclotomic polynomial, so
equality is decidable coefficientwise.  Mixed-conductor arithmetic promotes
both operands to the least common conductor.  Square roots of positive
integers are represented exactly through quadratic Gauss sums, which keeps
the whole scalar tower inside one cyclotomic field.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients (low degree first) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_div_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _totient(m):
    return len(cyclotomic_polynomial(m)) - 1


def _reduce_mod_cyclotomic(coeffs, m):
    """Reduce {exponent: coeff} modulo zeta_m^m = 1 and the cyclotomic polynomial."""
    deg = _totient(m)
    phi = cyclotomic_polynomial(m)
    dense = [Fraction(0)] * m
    for e, c in coeffs.items():
        dense[e % m] += c
    # divide by the cyclotomic polynomial, keep the remainder
    for i in range(m - 1, deg - 1, -1):
        c = dense[i]
        if c:
            for j in range(len(phi)):
                dense[i - deg + j] -= c * phi[j]
    return {e: c for e, c in enumerate(dense[:deg]) if c != 0}


class CycScalar:
    """An element of Q(zeta_M), reduced to the power basis of degree < phi(M)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs, reduced=False):
        self.conductor = int(conductor)
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        if reduced:
            self.coeffs = dict(coeffs)
        else:
            self.coeffs = _reduce_mod_cyclotomic(
                {int(e): Fraction(c) for e, c in coeffs.items()}, self.conductor)

    @classmethod
    def from_rational(cls, value, conductor=1):
        value = Fraction(value)
        return cls(conductor, {0: value} if value else {})

    @classmethod
    def root_of_unity(cls, exponent):
        """e(exponent) = exp(2 pi i exponent) for a rational exponent."""
        exponent = Fraction(exponent)
        m = exponent.denominator
        return cls(m, {exponent.numerator % m: Fraction(1)})

    def promote(self, conductor):
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ValueError("can only promote to a multiple of the conductor")
        scale = conductor // self.conductor
        return CycScalar(conductor, {e * scale: c for e, c in self.coeffs.items()})

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(other)
        if not isinstance(other, CycScalar):
            raise TypeError(f"cannot combine CycScalar with {type(other).__name__}")
        m = lcm(self.conductor, other.conductor)
        return self.promote(m), other.promote(m)

    def __add__(self, other):
        a, b = self._pair(other)
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return CycScalar(a.conductor, {e: c for e, c in out.items() if c != 0},
                         reduced=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return CycScalar(self.conductor, {e: -c for e, c in self.coeffs.items()},
                         reduced=True)

    def __sub__(self, other):
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.conductor,
                             {e: c * other for e, c in self.coeffs.items()
                              if c * other != 0}, reduced=True)
        a, b = self._pair(other)
        out = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return CycScalar(a.conductor, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        """Inverse in Q(zeta_M) by the extended Euclidean algorithm."""
        if not self.coeffs:
            raise ZeroDivisionError("zero has no inverse")
        m = self.conductor
        deg = _totient(m)
        f = [Fraction(0)] * deg
        for e, c in self.coeffs.items():
            f[e] = c
        phi = [Fraction(x) for x in cyclotomic_polynomial(m)]
        inv = _poly_modular_inverse(f, phi)
        return CycScalar(m, {e: c for e, c in enumerate(inv) if c != 0}, reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycScalar.from_rational(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycScalar.from_rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^{-1}."""
        m = self.conductor
        return CycScalar(m, {(-e) % m: c for e, c in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def try_rational(self):
        """The value as a Fraction when it is rational, else None."""
        if not self.coeffs:
            return Fraction(0)
        if set(self.coeffs) == {0}:
            return self.coeffs[0]
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            r = self.try_rational()
            return r is not None and r == other
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z{self.conductor}^{e}")
            else:
                parts.append(f"{c}*z{self.conductor}^{e}")
        return " + ".join(parts)


def _poly_modular_inverse(f, modulus):
    """Inverse of f modulo the (irreducible) modulus polynomial, over Q."""
    r0, r1 = list(modulus), list(f)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while _poly_degree(r1) > 0:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if _poly_degree(r1) < 0:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


def _poly_degree(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i] != 0:
            return i
    return -1


def _poly_divmod(num, den):
    num = list(num)
    dd = _poly_degree(den)
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for i in range(_poly_degree(num) - dd, -1, -1):
        c = num[i + dd] / den[dd]
        q[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    return q, num[:dd] if dd > 0 else [Fraction(0)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
            for i in range(n)]


def e(exponent):
    """Shorthand for the exact root of unity exp(2 pi i * exponent)."""
    return CycScalar.root_of_unity(exponent)


def sqrt_positive_int(n):
    """sqrt(n) for a positive integer, exactly, as a CycScalar.

    Odd prime factors contribute quadratic Gauss sums: sqrt(p) equals
    sum_a e(a^2/p) for p = 1 mod 4 and e(-1/4) * sum_a e(a^2/p) for
    p = 3 mod 4; sqrt(2) = e(1/8) + e(-1/8).
    """
    if n <= 0:
        raise ValueError("need a positive integer")
    result = CycScalar.from_rational(1)
    rational = 1
    for p, k in _factor(n).items():
        rational *= p ** (k // 2)
        if k % 2:
            result = result * _sqrt_prime(p)
    return result * rational


def _sqrt_prime(p):
    if p == 2:
        return e(Fraction(1, 8)) + e(Fraction(-1, 8))
    gauss = CycScalar.from_rational(0)
    for a in range(p):
        gauss = gauss + e(Fraction(a * a, p))
    if p % 4 == 1:
        return gauss
    return e(Fraction(-1, 4)) * gauss


def _factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
