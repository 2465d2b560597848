"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

Elements are rational-coefficient vectors modulo the n-th cyclotomic
polynomial.  Everything here is exact: there is no floating point and no
tolerance anywhere in the library.  Scalars are arbitrary-precision
rationals (gmpy2.mpq when available, fractions.Fraction otherwise); both
store lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from functools import lru_cache

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is an install requirement
    from fractions import Fraction as Rat

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


class ConductorMismatch(ValueError):
    """Arithmetic between cyclotomic numbers of different conductors."""


class ZeroInverse(ZeroDivisionError):
    """Inversion of the zero cyclotomic number."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials, low-to-high coefficients.

    Requires a monic divisor so the quotient stays integral.
    """
    assert den and den[-1] == 1
    num = list(num)
    dden = len(den) - 1
    quot = [0] * max(len(num) - dden, 0)
    for k in range(len(num) - dden - 1, -1, -1):
        c = num[k + dden]
        if c:
            quot[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial.

    Computed by exact division of x^n - 1 by the product of Phi_d over
    the proper divisors d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            num, rem = _poly_divmod_int(num, list(phi_d))
            assert not rem, f"x^{n}-1 not divisible by Phi_{d}"
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Rat, ...], ...]:
    """Row k is x^(deg+k) reduced mod Phi_n, for k = 0 .. deg-2."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    # x^deg = -(phi[0] + phi[1] x + ... + phi[deg-1] x^{deg-1})
    cur = [Rat(-c) for c in phi[:deg]]
    rows.append(tuple(cur))
    for _ in range(deg - 2):
        top = cur[-1]
        cur = [RAT_ZERO] + cur[:-1]
        if top:
            base = rows[0]
            cur = [c + top * b for c, b in zip(cur, base)]
        rows.append(tuple(cur))
    return tuple(rows)


class CycNum:
    """An element of Q(zeta_n) as a coefficient vector of length phi(n).

    Instances are immutable; all operations return new values.  Arithmetic
    between different conductors raises ConductorMismatch (the library
    never embeds one cyclotomic field into another).
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs):
        deg = euler_phi(conductor)
        coeffs = tuple(c if type(c) is type(RAT_ZERO) else Rat(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(
                f"coefficient vector of length {len(coeffs)}, expected phi({conductor}) = {deg}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("CycNum is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero(conductor: int) -> "CycNum":
        return CycNum(conductor, (RAT_ZERO,) * euler_phi(conductor))

    @staticmethod
    def one(conductor: int) -> "CycNum":
        deg = euler_phi(conductor)
        return CycNum(conductor, (RAT_ONE,) + (RAT_ZERO,) * (deg - 1))

    @staticmethod
    def from_rational(value, conductor: int = 1) -> "CycNum":
        deg = euler_phi(conductor)
        return CycNum(conductor, (Rat(value),) + (RAT_ZERO,) * (deg - 1))

    @staticmethod
    def zeta(conductor: int, exponent: int = 1) -> "CycNum":
        """zeta_n^exponent as a reduced element of Q(zeta_n)."""
        exponent %= conductor
        deg = euler_phi(conductor)
        if exponent < deg:
            coeffs = [RAT_ZERO] * deg
            coeffs[exponent] = RAT_ONE
            return CycNum(conductor, coeffs)
        return _reduce(conductor, [RAT_ZERO] * exponent + [RAT_ONE])

    # -- basic protocol --------------------------------------------------------

    def __repr__(self):
        return f"CycNum({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.conductor, tuple(map(str, self.coeffs))))
            object.__setattr__(self, "_hash", h)
        return h

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _check(self, other: "CycNum"):
        if self.conductor != other.conductor:
            raise ConductorMismatch(
                f"conductor {self.conductor} vs {other.conductor}"
            )

    # -- field operations ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        self._check(other)
        return CycNum(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        self._check(other)
        return CycNum(self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycNum(self.conductor, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        deg = len(a)
        if deg == 1:
            return CycNum(self.conductor, (a[0] * b[0],))
        conv = [RAT_ZERO] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:deg]
        rows = _reduction_rows(self.conductor)
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                row = rows[k - deg]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CycNum(self.conductor, tuple(out))

    def scale(self, r) -> "CycNum":
        r = Rat(r)
        return CycNum(self.conductor, tuple(r * c for c in self.coeffs))

    def inv(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm.

        Phi_n is irreducible over Q, so every nonzero element is a unit.
        """
        if self.is_zero():
            raise ZeroInverse("cannot invert 0")
        phi = [Rat(c) for c in cyclotomic_polynomial(self.conductor)]
        a = list(self.coeffs)
        while a and not a[-1]:
            a.pop()
        # extended gcd of a and phi in Q[x]
        r0, r1 = a, phi
        s0, s1 = [RAT_ONE], [RAT_ZERO]
        while any(r1):
            q, r = _poly_divmod_rat(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 = gcd (a nonzero constant, since Phi_n is irreducible)
        lead = r0[-1]
        inv_coeffs = [c / lead for c in s0]
        return _reduce(self.conductor, inv_coeffs)

    def __truediv__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        return self * other.inv()

    def __pow__(self, exponent: int) -> "CycNum":
        if exponent < 0:
            return self.inv() ** (-exponent)
        base = self
        acc = CycNum.one(self.conductor)
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- serialization (decimal-string integers, bit-exact round trip) --------

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "CycNum":
        coeffs = [Rat(int(num), int(den)) for num, den in obj["coeffs"]]
        return CycNum(int(obj["conductor"]), coeffs)


def _poly_divmod_rat(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [RAT_ZERO], num
    quot = [RAT_ZERO] * (len(num) - dd)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[k + dd] / lead
        if c:
            quot[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    while num and not num[-1]:
        num.pop()
    if not num:
        num = [RAT_ZERO]
    return quot, num


def _poly_mul(a: list, b: list) -> list:
    out = [RAT_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [RAT_ZERO] * (n - len(a))
    b = b + [RAT_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _reduce(conductor: int, coeffs: list) -> CycNum:
    """Reduce an arbitrary-length coefficient vector mod Phi_n."""
    phi = [Rat(c) for c in cyclotomic_polynomial(conductor)]
    _, rem = _poly_divmod_rat(list(coeffs), phi)
    deg = euler_phi(conductor)
    rem = rem + [RAT_ZERO] * (deg - len(rem))
    return CycNum(conductor, rem[:deg])


def reduce_mod_cyclotomic(conductor: int, coeffs) -> CycNum:
    """Public reduction entry point (idempotent on reduced vectors)."""
    return _reduce(conductor, [Rat(c) for c in coeffs])


# -- named operation aliases (the functional surface) --------------------------

def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_inv(a: CycNum) -> CycNum:
    return a.inv()


def is_primitive_root(q: CycNum, n: int) -> bool:
    """True iff q^n = 1 and q^m != 1 for 0 < m < n."""
    if q.is_zero():
        raise ValueError("q must be nonzero")
    one = CycNum.one(q.conductor)
    power = q
    for m in range(1, n):
        if power == one:
            return False
        power = power * q
    return power == one


def multiplicative_order(q: CycNum, cap: int | None = None) -> int | None:
    """Least k >= 1 with q^k = 1, or None if no such k <= cap.

    For an element of Q(zeta_n) a finite order divides lcm(2, n), which is
    the default cap.
    """
    if q.is_zero():
        return None
    if cap is None:
        cap = math.lcm(2, q.conductor)
    one = CycNum.one(q.conductor)
    power = q
    for k in range(1, cap + 1):
        if power == one:
            return k
        power = power * q
    return None


class RootOfUnity:
    """The choice q = zeta_n^t with gcd(t, n) = 1; primitivity is verified."""

    __slots__ = ("conductor", "exponent", "value")

    def __init__(self, conductor: int, exponent: int = 1):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        exponent %= conductor if conductor > 1 else 1
        if conductor > 1 and math.gcd(exponent, conductor) != 1:
            raise ValueError(f"gcd({exponent}, {conductor}) != 1: not a primitive root")
        value = CycNum.zeta(conductor, exponent)
        if not is_primitive_root(value, conductor):
            raise ValueError(f"zeta_{conductor}^{exponent} is not primitive of order {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "exponent", exponent)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *args):
        raise AttributeError("RootOfUnity is immutable")

    def __repr__(self):
        return f"RootOfUnity({self.conductor}, {self.exponent})"


def primitive_exponents(n: int) -> list[int]:
    """All t with gcd(t, n) = 1, 1 <= t <= max(n-1, 1)."""
    if n == 1:
        return [1]
    return [t for t in range(1, n) if math.gcd(t, n) == 1]


class Powers:
    """Cached powers q^e for arbitrary integer e.

    When q has finite multiplicative order, exponents are reduced modulo
    the order so negative exponents never trigger an inversion.
    """

    __slots__ = ("q", "order", "_cache", "_inv")

    def __init__(self, q: CycNum, order: int | None = None):
        self.q = q
        if order is None:
            order = multiplicative_order(q)
        self.order = order
        one = CycNum.one(q.conductor)
        self._cache = {0: one, 1: q}
        self._inv = None
        if order is not None:
            acc = one
            for e in range(order):
                self._cache[e] = acc
                acc = acc * q

    def __call__(self, e: int) -> CycNum:
        if self.order is not None:
            return self._cache[e % self.order]
        if e in self._cache:
            return self._cache[e]
        if e >= 0:
            value = self._cache[1] ** e
        else:
            if self._inv is None:
                self._inv = self.q.inv()
            value = self._inv ** (-e)
        self._cache[e] = value
        return value
