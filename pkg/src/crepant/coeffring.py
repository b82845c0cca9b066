"""The generic coefficient ring modeling H*(S).

For rank n >= 2 this is the free commutative ring on the formal first Chern
classes L = c1(L) and M = c1(M); the third class K = c1(K) is eliminated
through the relation L + M = (n+1) K, so every scalar has a canonical
expanded form and equality is coefficient comparison.  For n = 1 the single
generator is K (there are no L, M at rank one).  Each generator sits in
cohomological degree 2.

H*(S) is deliberately NOT truncated: every identity the library checks is a
polynomial identity of degree <= 2 in the generators, and a concrete base
(say a curve, where squares vanish) can be imposed with `substitute`.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import Cyclotomic

_Scalar = (int, Fraction, Cyclotomic)


def _coerce(value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value)


class BaseScalar:
    """A polynomial in the degree-2 generators with Cyclotomic coefficients.

    Monomial keys are exponent tuples: (i, j) for L^i M^j when n >= 2, and
    (k,) for K^k when n = 1.  Zero coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("rank must be >= 1")
        width = 1 if n == 1 else 2
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != width or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for rank {n}")
            coeff = _coerce(coeff)
            if not coeff.is_zero():
                clean[mono] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("BaseScalar values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "BaseScalar":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "BaseScalar":
        return cls.const(n, 1)

    @classmethod
    def const(cls, n: int, value) -> "BaseScalar":
        key = (0,) if n == 1 else (0, 0)
        return cls(n, {key: _coerce(value)})

    @classmethod
    def L(cls, n: int) -> "BaseScalar":
        if n == 1:
            raise ValueError("rank 1 has no L class")
        return cls(n, {(1, 0): 1})

    @classmethod
    def M(cls, n: int) -> "BaseScalar":
        if n == 1:
            raise ValueError("rank 1 has no M class")
        return cls(n, {(0, 1): 1})

    @classmethod
    def K(cls, n: int) -> "BaseScalar":
        """The class K; for n >= 2 this expands to (L + M)/(n+1)."""
        if n == 1:
            return cls(1, {(1,): 1})
        frac = Fraction(1, n + 1)
        return cls(n, {(1, 0): frac, (0, 1): frac})

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        if isinstance(other, _Scalar):
            other = BaseScalar.const(self.n, other)
        if not isinstance(other, BaseScalar):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Cyclotomic.zero(1)) + coeff
        return BaseScalar(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return BaseScalar(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _Scalar):
            other = BaseScalar.const(self.n, other)
        if not isinstance(other, BaseScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return self.scale(other)
        if not isinstance(other, BaseScalar):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                out[mono] = out.get(mono, Cyclotomic.zero(1)) + prod
        return BaseScalar(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, _Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "BaseScalar":
        value = _coerce(value)
        return BaseScalar(self.n,
                          {m: c * value for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, _Scalar):
            other = BaseScalar.const(self.n, other)
        if not isinstance(other, BaseScalar):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- grading -----------------------------------------------------------

    def degrees(self) -> set[int]:
        """Cohomological degrees present (each generator has degree 2)."""
        return {2 * sum(m) for m in self.terms}

    def degree(self) -> int:
        """Top cohomological degree, or -1 for the zero scalar."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, degree: int) -> "BaseScalar":
        return BaseScalar(self.n, {m: c for m, c in self.terms.items()
                                   if 2 * sum(m) == degree})

    def coefficient(self, mono) -> Cyclotomic:
        return self.terms.get(tuple(mono), Cyclotomic.zero(1))

    def constant_coefficient(self) -> Cyclotomic:
        return self.coefficient((0,) if self.n == 1 else (0, 0))

    # -- substitution ------------------------------------------------------

    def substitute(self, assignment: dict) -> "BaseScalar":
        """Substitute generators by BaseScalars of the same rank.

        Keys are "L", "M" (rank >= 2) or "K" (rank 1); generators absent
        from the assignment map to themselves.
        """
        gens = ("K",) if self.n == 1 else ("L", "M")
        images = []
        for idx, name in enumerate(gens):
            img = assignment.get(name)
            if img is None:
                key = tuple(1 if i == idx else 0 for i in range(len(gens)))
                img = BaseScalar(self.n, {key: 1})
            elif img.n != self.n:
                raise ValueError("substitution rank mismatch")
            images.append(img)
        out = BaseScalar.zero(self.n)
        for mono, coeff in self.terms.items():
            term = BaseScalar.const(self.n, coeff)
            for img, expo in zip(images, mono):
                for _ in range(expo):
                    term = term * img
            out = out + term
        return out

    def swap_lm(self) -> "BaseScalar":
        """The ring involution exchanging L and M (identity for n = 1)."""
        if self.n == 1:
            return self
        return BaseScalar(self.n, {(j, i): c
                                   for (i, j), c in self.terms.items()})

    # -- presentation ------------------------------------------------------

    def _sorted_terms(self):
        # constants first, then lexicographic with L powers before M powers
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]),
                                        tuple(-e for e in item[0])))

    def __repr__(self):
        return f"BaseScalar({self.n}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        gens = ("K",) if self.n == 1 else ("L", "M")
        parts = []
        for mono, coeff in self._sorted_terms():
            syms = [g + (f"^{e}" if e > 1 else "")
                    for g, e in zip(gens, mono) if e]
            body = "*".join(syms)
            cs = str(coeff)
            if any(op in cs for op in (" + ", " - ")):
                cs = f"({cs})"
            parts.append(f"{cs}*{body}" if body and cs != "1" else body or cs)
        return " + ".join(parts)

    def to_json(self):
        terms = []
        for mono, coeff in self._sorted_terms():
            entry = {"coeff": coeff.to_json()}
            if self.n == 1:
                entry["exp_k"] = mono[0]
            else:
                entry["exp_l"], entry["exp_m"] = mono
            terms.append(entry)
        return {"rank": self.n, "terms": terms}

    @classmethod
    def from_json(cls, data) -> "BaseScalar":
        n = data["rank"]
        terms = {}
        for entry in data["terms"]:
            mono = ((entry["exp_k"],) if n == 1
                    else (entry["exp_l"], entry["exp_m"]))
            terms[mono] = Cyclotomic.from_json(entry["coeff"])
        return cls(n, terms)
