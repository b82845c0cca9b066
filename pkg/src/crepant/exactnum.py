"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as its coordinate vector in the power basis
1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial, with
`fractions.Fraction` coordinates.  Since Phi_N is the minimal polynomial of
zeta_N, coordinates are unique and equality is coefficient-wise (after lifting
both operands into a common conductor).  There is no floating point anywhere;
`Cyclotomic.to_complex` exists only as a non-authoritative display aid.

Besides field arithmetic the module provides the two square-root gadgets the
rest of the library needs:

* `branch_sqrt(n, m, k)` -- the branch-resolved value of
  (zeta^k + zeta^-k - 2)^(1/2) for zeta = exp(2 pi i m/(n+1)), realized in
  conductor 4(n+1) from the identity 2 - zeta^k - zeta^-k = 4 sin^2(pi km/(n+1))
  and 2 sin(pi j/(n+1)) = -i (w^j - w^-j) with w = zeta_{2(n+1)}.
* `sqrt_rational(x, N)` -- the nonnegative square root of a rational x >= 0,
  built from quadratic Gauss sums when sqrt(x) is irrational.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction


class InvalidRoot(ValueError):
    """A requested root of unity is not primitive of the required order."""


# ---------------------------------------------------------------------------
# Integer/rational polynomial helpers (dense, constant term first).

def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and not coeffs[end - 1]:
        end -= 1
    return coeffs[:end]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _poly_divmod(num, den):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    inv_lead = 1 / Fraction(den[-1])
    while len(num) >= len(den) and _trim(num):
        num = _trim(num)
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        factor = num[-1] * inv_lead
        q[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] -= factor * d
        num = num[:-1]
    return _trim(q), _trim(num)


def _poly_xgcd(a, b):
    """Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while _trim(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([x - y for x, y in
                            _zip_pad(s0, _poly_mul(q, s1))])
        t0, t1 = t1, _trim([x - y for x, y in
                            _zip_pad(t0, _poly_mul(q, t1))])
    return r0, s0, t0


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [Fraction(0)] * (n - len(a)),
               b + [Fraction(0)] * (n - len(b)))


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, [Fraction(c) for c in
                                            cyclotomic_polynomial(d)])
            assert not rem
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# ---------------------------------------------------------------------------


class Cyclotomic:
    """An element of Q(zeta_N), reduced modulo Phi_N.

    Construct values through `root_of_unity`, `Cyclotomic.from_rational` or
    arithmetic; the raw constructor expects an already-reduced coefficient
    vector of length phi(N).  Values are immutable.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def _from_poly(cls, conductor, coeffs):
        phi_n = [Fraction(c) for c in cyclotomic_polynomial(conductor)]
        coeffs = [Fraction(c) for c in coeffs]
        _, rem = _poly_divmod(coeffs, phi_n)
        deg = len(phi_n) - 1
        rem = list(rem) + [Fraction(0)] * (deg - len(rem))
        return cls(conductor, rem)

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "Cyclotomic":
        return cls._from_poly(conductor, [Fraction(value)])

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.from_rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.from_rational(1, conductor)

    # -- structure ---------------------------------------------------------

    def lift(self, conductor: int) -> "Cyclotomic":
        """Re-express the element in the larger field Q(zeta_M), N | M."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ValueError("can only lift into a multiple of the conductor")
        step = conductor // self.conductor
        out = [Fraction(0)] * (len(self.coeffs) * step - step + 1 or 1)
        for k, c in enumerate(self.coeffs):
            if c:
                out[k * step] += c
        return Cyclotomic._from_poly(conductor, out)

    def descend(self, conductor: int) -> "Cyclotomic":
        """Rewrite in the subfield Q(zeta_M), M | N, if the value lies there.

        Raises ValueError when the element is not in the subfield.
        """
        from . import linalg

        if conductor == self.conductor:
            return self
        if self.conductor % conductor != 0:
            raise ValueError("target conductor must divide the conductor")
        basis = [root_of_unity(conductor, k).lift(self.conductor).coeffs
                 for k in range(euler_phi(conductor))]
        rows = [[basis[j][i] for j in range(len(basis))]
                for i in range(len(self.coeffs))]
        sol = linalg.solve_exact(rows, list(self.coeffs), zero=Fraction(0))
        if sol is None:
            raise ValueError("element does not lie in the requested subfield")
        return Cyclotomic(conductor, sol)

    @staticmethod
    def common(a: "Cyclotomic", b: "Cyclotomic"):
        n = math.lcm(a.conductor, b.conductor)
        return a.lift(n), b.lift(n)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(map(bool, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value, conductor):
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.from_rational(value, conductor)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other, self.conductor)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclotomic.common(self, other)
        return Cyclotomic(a.conductor,
                          [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other, self.conductor)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other, self.conductor)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclotomic.common(self, other)
        return Cyclotomic._from_poly(a.conductor,
                                     _poly_mul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_N)")
        phi_n = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        g, s, _ = _poly_xgcd(list(self.coeffs), phi_n)
        # Phi_N is irreducible, so the gcd with a nonzero smaller-degree
        # polynomial is a nonzero constant.
        assert len(g) == 1 and g[0]
        return Cyclotomic._from_poly(self.conductor,
                                     [c / g[0] for c in s])

    def __truediv__(self, other):
        other = self._coerce(other, self.conductor)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, i.e. the Galois map zeta -> zeta^-1."""
        n = self.conductor
        out = [Fraction(0)] * n
        out[0] += self.coeffs[0] if self.coeffs else Fraction(0)
        for k, c in enumerate(self.coeffs[1:], start=1):
            if c:
                out[(n - k) % n] += c
        return Cyclotomic._from_poly(n, out)

    def __eq__(self, other):
        other = self._coerce(other, self.conductor)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclotomic.common(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-conductor equality makes a sane hash expensive

    # -- presentation ------------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                sym = f"z{self.conductor}" + (f"^{k}" if k > 1 else "")
                parts.append(sym if c == 1 else
                             f"-{sym}" if c == -1 else f"{c}*{sym}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_complex(self) -> complex:
        """Floating approximation, for display only; never authoritative."""
        import cmath

        zeta = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * zeta ** k for k, c in enumerate(self.coeffs))

    def to_json(self):
        return {"conductor": self.conductor,
                "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "Cyclotomic":
        return cls(data["conductor"], [Fraction(c) for c in data["coeffs"]])


def root_of_unity(conductor: int, exponent: int = 1) -> Cyclotomic:
    """zeta_N^j as an element of Q(zeta_N).

    >>> root_of_unity(2, 1) == -1
    True
    """
    if conductor < 1:
        raise ValueError("conductor must be positive")
    e = exponent % conductor
    return Cyclotomic._from_poly(conductor,
                                 [Fraction(0)] * e + [Fraction(1)])


def imaginary_unit(conductor: int) -> Cyclotomic:
    """i = zeta_4, expressed in Q(zeta_N); requires 4 | N."""
    if conductor % 4 != 0:
        raise ValueError("need 4 | N for the imaginary unit")
    return root_of_unity(conductor, conductor // 4)


# ---------------------------------------------------------------------------
# Square roots.


def branch_sqrt(n: int, m: int, k: int) -> Cyclotomic:
    """(zeta^k + zeta^-k - 2)^(1/2) for zeta = exp(2 pi i m/(n+1)).

    The branch is i*|...| when the canonical representative of m in 1..n
    satisfies 0 < m < (n+1)/2, and -i*|...| otherwise.  The result lives in
    conductor 4(n+1).

    >>> branch_sqrt(1, 1, 1) == -2 * imaginary_unit(8)
    True
    """
    np1 = n + 1
    m_red = m % np1
    if math.gcd(m_red, np1) != 1:
        raise InvalidRoot(f"zeta^{m} is not a primitive {np1}-th root of 1")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    conductor = 4 * np1
    i_unit = imaginary_unit(conductor)
    omega = root_of_unity(conductor, 2)  # zeta_{2(n+1)}
    # 2 sin(pi j/(n+1)) = -i (omega^j - omega^-j); the sine is positive for
    # 0 < j < n+1 and negative for n+1 < j < 2(n+1).  j = k*m is never a
    # multiple of n+1 because gcd(m, n+1) = 1 and 0 < k < n+1.
    j = (k * m_red) % (2 * np1)
    two_sin = -i_unit * (omega ** j - omega ** (-j))
    magnitude = two_sin if 0 < j < np1 else -two_sin
    upper = 2 * m_red < np1
    return i_unit * magnitude if upper else -(i_unit * magnitude)


def _legendre(t: int, p: int) -> int:
    r = pow(t, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_rational(value, conductor: int) -> Cyclotomic:
    """The nonnegative square root of a rational value >= 0 in Q(zeta_N).

    Rational square roots come out at conductor 1; irrational ones are built
    from sqrt(2) = zeta_8 + zeta_8^-1 and odd-prime quadratic Gauss sums, and
    a ValueError is raised when Q(zeta_N) is too small to contain the root.
    """
    value = Fraction(value)
    if value < 0:
        raise ValueError("sqrt_rational expects a nonnegative rational")
    if value == 0:
        return Cyclotomic.zero(1)
    d = value.numerator * value.denominator  # sqrt(p/q) = sqrt(p q)/q
    square, squarefree = Fraction(1, value.denominator), 1
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            square *= f
        if d % f == 0:
            d //= f
            squarefree *= f
        f += 1
    squarefree *= d
    if squarefree == 1:
        return Cyclotomic.from_rational(square)
    root = Cyclotomic.from_rational(square, conductor)
    rest = squarefree
    if rest % 2 == 0:
        if conductor % 8 != 0:
            raise ValueError(f"sqrt(2) is not in Q(zeta_{conductor})")
        z8 = root_of_unity(conductor, conductor // 8)
        root = root * (z8 + z8 ** (-1))
        rest //= 2
    p = 3
    while rest > 1:
        if rest % p == 0:
            rest //= p
            if conductor % p != 0:
                raise ValueError(f"sqrt({p}) is not in Q(zeta_{conductor})")
            zp = root_of_unity(conductor, conductor // p)
            gauss = sum((_legendre(t, p) * zp ** t for t in range(1, p)),
                        Cyclotomic.zero(conductor))
            if p % 4 == 1:
                root = root * gauss
            else:
                # gauss = i sqrt(p) for p = 3 mod 4
                root = root * (-imaginary_unit(conductor)) * gauss
        p += 2
    return root
