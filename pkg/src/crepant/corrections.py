"""Quantum-correction functions in the finite delta basis.

Every correction that can appear is a constant plus a finite combination of

    delta_{mu nu}(q) = q_mu ... q_nu / (1 - q_mu ... q_nu),

the summed geometric series attached to the contracted curve class
beta_{mu nu} = beta_mu + ... + beta_nu.  Only these classes carry nonzero
three-point invariants, so representing corrections in this basis (rather
than as general rational functions) makes equality a coefficient comparison.
The delta functions are linearly independent, and evaluation is exact; a
point where some q_mu ... q_nu = 1 is a genuine pole of the family and
raises PoleError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .cartan import CartanData, beta_pairing
from .exactnum import Cyclotomic

_Scalar = (int, Fraction, Cyclotomic)


class DeltaIndex(NamedTuple):
    """Index (mu, nu) with 1 <= mu <= nu <= n for the class beta_{mu nu}."""

    mu: int
    nu: int


class PoleError(ArithmeticError):
    """The corrected product is undefined: some q_mu ... q_nu equals 1."""

    def __init__(self, index: DeltaIndex, entry=None):
        self.index = index
        self.entry = entry  # (i, j) of the offending product, when known
        where = f" in product entry {entry}" if entry else ""
        super().__init__(
            f"pole of delta_{index.mu}{index.nu}: "
            f"q_{index.mu}...q_{index.nu} = 1{where}")


def _coerce(value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value)


class CorrectionFunction:
    """constant + sum of coeff * delta_{mu nu}, coefficients in Q(zeta)."""

    __slots__ = ("n", "constant", "terms")

    def __init__(self, n: int, constant=0, terms=None):
        clean = {}
        for idx, coeff in (terms or {}).items():
            idx = DeltaIndex(*idx)
            if not 1 <= idx.mu <= idx.nu <= n:
                raise ValueError(f"delta index {idx} out of range for n={n}")
            coeff = _coerce(coeff)
            if not coeff.is_zero():
                clean[idx] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "constant", _coerce(constant))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("CorrectionFunction values are immutable")

    @classmethod
    def zero(cls, n: int) -> "CorrectionFunction":
        return cls(n)

    def __add__(self, other):
        if isinstance(other, _Scalar):
            other = CorrectionFunction(self.n, other)
        if not isinstance(other, CorrectionFunction):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for idx, coeff in other.terms.items():
            terms[idx] = terms.get(idx, Cyclotomic.zero(1)) + coeff
        return CorrectionFunction(self.n, self.constant + other.constant,
                                  terms)

    __radd__ = __add__

    def __neg__(self):
        return CorrectionFunction(self.n, -self.constant,
                                  {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _Scalar):
            other = CorrectionFunction(self.n, other)
        if not isinstance(other, CorrectionFunction):
            return NotImplemented
        return self + (-other)

    def scale(self, value) -> "CorrectionFunction":
        value = _coerce(value)
        return CorrectionFunction(
            self.n, self.constant * value,
            {i: c * value for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, _Scalar):
            other = CorrectionFunction(self.n, other)
        if not isinstance(other, CorrectionFunction):
            return NotImplemented
        return (self.n == other.n and self.constant == other.constant
                and self.terms == other.terms)

    __hash__ = None

    def is_zero(self) -> bool:
        return self.constant.is_zero() and not self.terms

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        parts = []
        if not self.constant.is_zero() or not self.terms:
            parts.append(str(self.constant))
        for idx in sorted(self.terms):
            coeff = self.terms[idx]
            sym = f"d{idx.mu}{idx.nu}"
            cs = str(coeff)
            if any(op in cs for op in (" + ", " - ")):
                cs = f"({cs})"
            parts.append(sym if cs == "1" else f"{cs}*{sym}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"CorrectionFunction({self.n}, {self.constant!r}, {self.terms!r})"

    def to_json(self):
        return {"constant": self.constant.to_json(),
                "terms": [{"mu": i.mu, "nu": i.nu,
                           "coeff": c.to_json()}
                          for i, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data, n: int) -> "CorrectionFunction":
        terms = {DeltaIndex(t["mu"], t["nu"]): Cyclotomic.from_json(t["coeff"])
                 for t in data["terms"]}
        return cls(n, Cyclotomic.from_json(data["constant"]), terms)


def delta_eval(idx: DeltaIndex, q) -> Cyclotomic:
    """delta_{mu nu} at a point: (q_mu...q_nu)/(1 - q_mu...q_nu), exact.

    The q entries must be nonzero; PoleError signals q_mu...q_nu = 1.
    """
    idx = DeltaIndex(*idx)
    prod = Cyclotomic.one(1)
    for ql in q[idx.mu - 1:idx.nu]:
        if not isinstance(ql, Cyclotomic):
            ql = Cyclotomic.from_rational(ql)
        if ql.is_zero():
            raise ValueError("q entries must be nonzero")
        prod = prod * ql
    if prod == 1:
        raise PoleError(idx)
    return prod / (1 - prod)


def correction_eval(f: CorrectionFunction, q) -> Cyclotomic:
    """Evaluate constant + sum coeff * delta at a q-point, exactly."""
    if len(q) != f.n:
        raise ValueError(f"expected {f.n} q-values, got {len(q)}")
    value = f.constant
    for idx in sorted(f.terms):
        value = value + f.terms[idx] * delta_eval(idx, q)
    return value


def r_function(n: int, i: int, j: int, m: int,
               cartan: CartanData) -> CorrectionFunction:
    """The structure function
    sum_{mu <= nu} (E_i.b)(E_j.b)(E_m.b) delta_{mu nu}, b = beta_{mu nu}.

    Fully symmetric in (i, j, m); its constant term is always zero, which is
    exactly the statement that corrections vanish in the q -> 0 limit.
    """
    if not all(1 <= x <= n for x in (i, j, m)):
        raise ValueError("index out of range")
    terms = {}
    for mu in range(1, n + 1):
        for nu in range(mu, n + 1):
            weight = (beta_pairing(cartan, i, mu, nu)
                      * beta_pairing(cartan, j, mu, nu)
                      * beta_pairing(cartan, m, mu, nu))
            if weight:
                terms[DeltaIndex(mu, nu)] = weight
    return CorrectionFunction(n, 0, terms)
