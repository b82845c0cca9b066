"""The three product tables on the exceptional algebra.

All three rings share the same underlying space: the formal class
s = i_*[S] in H^4(Y) plus n degree-2 generators (e_1..e_n for the orbifold
ring, E_1..E_n for the resolution).  A table records every product of two
degree-2 generators as an `ExcClass`; products against H*(Y) act by pullback
on both sides of the comparison and impose no constraints, so they are not
tabulated.

* `cr_table(n)` -- orbifold cup product: e_a e_b is s/(n+1) on antidiagonal
  pairs (a+b = 0 mod n+1), L e_{a+b}/(n+1) below the antidiagonal and
  M e_{a+b-n-1}/(n+1) above it.  For n = 1 the obstruction bundle has rank
  zero and the single entry is e e = s/2.
* `cup_table(n)` -- resolution cup product: the s-part of E_i E_j is
  -2, 1, 0 according to |i-j| = 0, 1, >1, and the degree-2 part solves the
  tridiagonal system c_n alpha = rhs, where the right-hand side carries
  jK - M / M - (j-1)K for adjacent components and M-(j-1)K / -4K / (j+1)K - M
  on the diagonal (entries falling outside 1..n are dropped).
* `qc_table(n)` -- quantum-corrected product: the cup table plus
  sum_l [sum_m (c_n^-1)_{lm} R_{ijm}(q)] K E_l, kept symbolic in the delta
  basis; `qc_eval` specializes it at an exact q-point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanData, cartan_build
from .coeffring import BaseScalar
from .corrections import (CorrectionFunction, PoleError, correction_eval,
                          r_function)
from .exactnum import Cyclotomic

KIND_CR = "chen_ruan"
KIND_CUP = "cup"
KIND_QUANTUM = "quantum"
KIND_QUANTUM_AT = "quantum_at"


@dataclass(frozen=True)
class ExcClass:
    """s_coeff * s + sum basis_coeffs[l] * (generator l+1)."""

    n: int
    s: BaseScalar
    e: tuple

    @classmethod
    def zero(cls, n: int) -> "ExcClass":
        return cls(n, BaseScalar.zero(n),
                   tuple(BaseScalar.zero(n) for _ in range(n)))

    def __add__(self, other: "ExcClass") -> "ExcClass":
        return ExcClass(self.n, self.s + other.s,
                        tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: "ExcClass") -> "ExcClass":
        return ExcClass(self.n, self.s - other.s,
                        tuple(a - b for a, b in zip(self.e, other.e)))

    def scale(self, value) -> "ExcClass":
        """Multiply by a Cyclotomic/rational or by a BaseScalar."""
        if isinstance(value, BaseScalar):
            return ExcClass(self.n, self.s * value,
                            tuple(c * value for c in self.e))
        return ExcClass(self.n, self.s.scale(value),
                        tuple(c.scale(value) for c in self.e))

    def is_zero(self) -> bool:
        return self.s.is_zero() and all(c.is_zero() for c in self.e)

    def substitute(self, assignment) -> "ExcClass":
        return ExcClass(self.n, self.s.substitute(assignment),
                        tuple(c.substitute(assignment) for c in self.e))

    def to_json(self):
        return {"s": self.s.to_json(), "e": [c.to_json() for c in self.e]}

    @classmethod
    def from_json(cls, data, n: int) -> "ExcClass":
        return cls(n, BaseScalar.from_json(data["s"]),
                   tuple(BaseScalar.from_json(c) for c in data["e"]))


@dataclass(frozen=True)
class QCoeff:
    """A symbolic basis coefficient: cup + corr(q) * mult.

    mult is the class multiplying the correction (K throughout; kept
    explicit so that substitutions like M -> -L can kill it).
    """

    cup: BaseScalar
    corr: CorrectionFunction
    mult: BaseScalar

    def __add__(self, other: "QCoeff") -> "QCoeff":
        if self.mult != other.mult:
            raise ValueError("incompatible correction multipliers")
        return QCoeff(self.cup + other.cup, self.corr + other.corr, self.mult)

    def scale(self, value) -> "QCoeff":
        return QCoeff(self.cup.scale(value), self.corr.scale(value),
                      self.mult)

    def eval(self, q) -> BaseScalar:
        return self.cup + self.mult.scale(correction_eval(self.corr, q))

    def strip(self) -> BaseScalar:
        """Drop all delta terms (the formal q -> 0 limit)."""
        return self.cup + self.mult.scale(self.corr.constant)

    def substitute(self, assignment) -> "QCoeff":
        return QCoeff(self.cup.substitute(assignment), self.corr,
                      self.mult.substitute(assignment))

    def __str__(self):
        if self.corr.is_zero():
            return str(self.cup)
        head = f"({self.corr})*{'K' if self.mult == _kappa(self.cup.n) else self.mult}"
        if self.cup.is_zero():
            return head
        return f"{self.cup} + {head}"

    def to_json(self):
        return {"cup": self.cup.to_json(), "corr": self.corr.to_json(),
                "mult": self.mult.to_json()}

    @classmethod
    def from_json(cls, data, n: int) -> "QCoeff":
        return cls(BaseScalar.from_json(data["cup"]),
                   CorrectionFunction.from_json(data["corr"], n),
                   BaseScalar.from_json(data["mult"]))


@dataclass(frozen=True)
class QExcClass:
    """A table entry whose basis coefficients still carry delta terms."""

    n: int
    s: BaseScalar
    e: tuple  # of QCoeff

    def eval(self, q) -> ExcClass:
        return ExcClass(self.n, self.s, tuple(c.eval(q) for c in self.e))

    def strip(self) -> ExcClass:
        return ExcClass(self.n, self.s, tuple(c.strip() for c in self.e))

    def substitute(self, assignment) -> "QExcClass":
        return QExcClass(self.n, self.s.substitute(assignment),
                         tuple(c.substitute(assignment) for c in self.e))

    def to_json(self):
        return {"s": self.s.to_json(), "e": [c.to_json() for c in self.e]}

    @classmethod
    def from_json(cls, data, n: int) -> "QExcClass":
        return cls(n, BaseScalar.from_json(data["s"]),
                   tuple(QCoeff.from_json(c, n) for c in data["e"]))


def _kappa(n: int) -> BaseScalar:
    return BaseScalar.K(n)


class ProductTable:
    """Symmetric table of all degree-2 x degree-2 products of one ring."""

    __slots__ = ("n", "kind", "q", "_entries")

    def __init__(self, n: int, kind: str, entries: dict, q=None):
        self.n = n
        self.kind = kind
        self.q = tuple(q) if q is not None else None
        self._entries = dict(entries)

    def entry(self, i: int, j: int):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError("index out of range")
        return self._entries[(i, j) if i <= j else (j, i)]

    def pairs(self):
        return sorted(self._entries)

    def generator_name(self) -> str:
        return "e" if self.kind == KIND_CR else "E"

    def is_symbolic(self) -> bool:
        return self.kind == KIND_QUANTUM

    def substitute(self, assignment) -> "ProductTable":
        return ProductTable(self.n, self.kind,
                            {k: v.substitute(assignment)
                             for k, v in self._entries.items()}, self.q)

    def __eq__(self, other):
        if not isinstance(other, ProductTable):
            return NotImplemented
        return (self.n == other.n and self.kind == other.kind
                and self.q == other.q and self._entries == other._entries)


def cr_table(n: int) -> ProductTable:
    """The Chen-Ruan table on generators e_1..e_n.

    >>> t = cr_table(2)
    >>> print(t.entry(1, 1).e[1])
    1/3*L
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    frac = Fraction(1, n + 1)
    entries = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            s = BaseScalar.zero(n)
            e = [BaseScalar.zero(n) for _ in range(n)]
            if (a + b) % (n + 1) == 0:
                s = BaseScalar.const(n, frac)
            elif a + b < n + 1:
                e[a + b - 1] = BaseScalar.L(n).scale(frac)
            else:
                e[a + b - n - 2] = BaseScalar.M(n).scale(frac)
            entries[(a, b)] = ExcClass(n, s, tuple(e))
    return ProductTable(n, KIND_CR, entries)


def _pushforward_s(n: int, i: int, j: int) -> BaseScalar:
    if i == j:
        return BaseScalar.const(n, -2)
    if abs(i - j) == 1:
        return BaseScalar.one(n)
    return BaseScalar.zero(n)


def _cup_rhs(n: int, i: int, j: int) -> list:
    """Right-hand side of the c_n system for alpha(E_i cup E_j), i <= j.

    Positions outside 1..n are dropped; K and M below are the classes from
    the coefficient ring (for n = 1 only K exists and only -4K survives).
    """
    K = BaseScalar.K(n)
    M = BaseScalar.M(n) if n >= 2 else None
    rhs = [BaseScalar.zero(n) for _ in range(n + 2)]  # slots 0..n+1
    if j - i == 1:
        rhs[j - 1] = K.scale(j) - M
        rhs[j] = M - K.scale(j - 1)
    elif i == j:
        if j >= 2:
            rhs[j - 1] = M - K.scale(j - 1)
        rhs[j] = K.scale(-4)
        if j <= n - 1:
            rhs[j + 1] = K.scale(j + 1) - M
    return rhs[1:n + 1]


def cup_table(n: int, cd: CartanData | None = None) -> ProductTable:
    """The cup product table of the crepant resolution."""
    cd = cd or cartan_build(n)
    entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = _pushforward_s(n, i, j)
            if j - i > 1:
                entries[(i, j)] = ExcClass(
                    n, s, tuple(BaseScalar.zero(n) for _ in range(n)))
                continue
            rhs = _cup_rhs(n, i, j)
            alpha = []
            for l in range(n):
                acc = BaseScalar.zero(n)
                for m in range(n):
                    acc = acc + rhs[m].scale(cd.c_inv[l][m])
                alpha.append(acc)
            entries[(i, j)] = ExcClass(n, s, tuple(alpha))
    return ProductTable(n, KIND_CUP, entries)


def qc_table(n: int, cd: CartanData | None = None) -> ProductTable:
    """The quantum-corrected table, symbolic in the delta basis.

    >>> print(qc_table(1).entry(1, 1).e[0])
    2*K + (4*d11)*K
    """
    cd = cd or cartan_build(n)
    cup = cup_table(n, cd)
    kappa = _kappa(n)
    entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            base = cup.entry(i, j)
            coeffs = []
            for l in range(n):
                corr = CorrectionFunction.zero(n)
                for m in range(n):
                    corr = corr + r_function(n, i, j, m + 1, cd).scale(
                        cd.c_inv[l][m])
                coeffs.append(QCoeff(base.e[l], corr, kappa))
            entries[(i, j)] = QExcClass(n, base.s, tuple(coeffs))
    return ProductTable(n, KIND_QUANTUM, entries)


def qc_eval(table: ProductTable, q) -> ProductTable:
    """Specialize a symbolic quantum table at an exact q-point.

    Raises PoleError naming both the product entry (i, j) and the delta
    index at which the family is undefined.
    """
    if table.kind != KIND_QUANTUM:
        raise ValueError("qc_eval expects a symbolic quantum table")
    q = [x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x)
         for x in q]
    if len(q) != table.n:
        raise ValueError(f"expected {table.n} q-values")
    entries = {}
    for key in table.pairs():
        try:
            entries[key] = table.entry(*key).eval(q)
        except PoleError as exc:
            raise PoleError(exc.index, entry=key) from None
    return ProductTable(table.n, KIND_QUANTUM_AT, entries, q=q)


def strip_corrections(table: ProductTable) -> ProductTable:
    """Drop every delta term of a symbolic quantum table (q -> 0 limit)."""
    if table.kind != KIND_QUANTUM:
        raise ValueError("strip_corrections expects a symbolic quantum table")
    return ProductTable(table.n, KIND_CUP,
                        {k: table.entry(*k).strip() for k in table.pairs()})


def cr_associativity_report(n: int):
    """Check (e_a e_b) e_c = e_a (e_b e_c) whenever both sides stay inside
    the modeled span.

    Triples needing an s * e_l product (i.e. some pairwise product hits the
    antidiagonal) are outside the tabulated algebra and are reported as
    skipped rather than guessed.  Returns (all_equal, checked, skipped).
    """
    table = cr_table(n)

    def times_generator(cls: ExcClass, c: int):
        out = ExcClass.zero(n)
        for l in range(n):
            if not cls.e[l].is_zero():
                out = out + table.entry(l + 1, c).scale(cls.e[l])
        return out

    checked, skipped = [], []
    ok = True
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                if (a + b) % (n + 1) == 0 or (b + c) % (n + 1) == 0:
                    skipped.append((a, b, c))
                    continue
                left = times_generator(table.entry(a, b), c)
                right = times_generator(table.entry(b, c), a)
                checked.append((a, b, c))
                if left != right:
                    ok = False
    return ok, checked, skipped


# ---------------------------------------------------------------------------
# Emitters.


def table_to_json(table: ProductTable):
    doc = {"n": table.n, "kind": table.kind,
           "entries": [{"i": i, "j": j,
                        **table.entry(i, j).to_json()}
                       for i, j in table.pairs()]}
    if table.q is not None:
        doc["q"] = [x.to_json() for x in table.q]
    return doc


def table_from_json(doc) -> ProductTable:
    n, kind = doc["n"], doc["kind"]
    cls = QExcClass if kind == KIND_QUANTUM else ExcClass
    entries = {(e["i"], e["j"]): cls.from_json(e, n) for e in doc["entries"]}
    q = ([Cyclotomic.from_json(x) for x in doc["q"]]
         if "q" in doc else None)
    return ProductTable(n, kind, entries, q=q)


def _format_class(entry, gen: str) -> str:
    parts = []
    if not entry.s.is_zero():
        s = str(entry.s)
        parts.append(f"{s}*S" if s != "1" else "S")
    for l, coeff in enumerate(entry.e, start=1):
        text = str(coeff)
        if text == "0":
            continue
        parts.append(f"[{text}]*{gen}{l}")
    return " + ".join(parts) if parts else "0"


def table_to_text(table: ProductTable) -> str:
    gen = table.generator_name()
    op = {"chen_ruan": ".", "cup": ".", "quantum": "*",
          "quantum_at": "*"}[table.kind]
    lines = []
    for i, j in table.pairs():
        lines.append(f"{gen}{i} {op} {gen}{j} = "
                     f"{_format_class(table.entry(i, j), gen)}")
    return "\n".join(lines)


def _ltx_fraction(fr: Fraction) -> str:
    if fr.denominator == 1:
        return str(fr.numerator)
    sign = "-" if fr < 0 else ""
    return f"{sign}\\frac{{{abs(fr.numerator)}}}{{{fr.denominator}}}"


def _ltx_cyclotomic(c: Cyclotomic) -> str:
    if c.is_rational():
        return _ltx_fraction(c.as_fraction())
    parts = []
    for k, coeff in enumerate(c.coeffs):
        if not coeff:
            continue
        sym = "" if k == 0 else f"\\zeta_{{{c.conductor}}}" + \
            (f"^{{{k}}}" if k > 1 else "")
        if not sym:
            parts.append(_ltx_fraction(coeff))
        elif coeff == 1:
            parts.append(sym)
        elif coeff == -1:
            parts.append(f"-{sym}")
        else:
            parts.append(f"{_ltx_fraction(coeff)}{sym}")
    return _join_signed(parts)


def _join_signed(parts) -> str:
    text = ""
    for p in parts:
        if not text:
            text = p
        elif p.startswith("-"):
            text += " - " + p[1:]
        else:
            text += " + " + p
    return text or "0"


def _ltx_wrap(c: Cyclotomic) -> str:
    text = _ltx_cyclotomic(c)
    return f"\\left({text}\\right)" if (" + " in text or " - " in text) \
        else text


def _ltx_base(sc: BaseScalar) -> str:
    if sc.is_zero():
        return "0"
    gens = ("K",) if sc.n == 1 else ("L", "M")
    parts = []
    for mono, coeff in sc._sorted_terms():
        body = "".join(g + (f"^{{{e}}}" if e > 1 else "")
                       for g, e in zip(gens, mono) if e)
        cs = _ltx_wrap(coeff)
        if body and cs == "1":
            parts.append(body)
        elif body and cs == "-1":
            parts.append(f"-{body}")
        else:
            parts.append(f"{cs}{body}")
    return _join_signed(parts)


def _ltx_corr(corr: CorrectionFunction) -> str:
    parts = []
    for idx in sorted(corr.terms):
        cs = _ltx_wrap(corr.terms[idx])
        sym = f"\\delta_{{{idx.mu}{idx.nu}}}"
        parts.append(sym if cs == "1" else f"-{sym}" if cs == "-1"
                     else f"{cs}{sym}")
    if not corr.constant.is_zero() or not parts:
        parts.append(_ltx_cyclotomic(corr.constant))
    return _join_signed(parts)


def _ltx_entry_coeff(coeff) -> str:
    if isinstance(coeff, BaseScalar):
        return _ltx_base(coeff)
    if coeff.corr.is_zero():
        return _ltx_base(coeff.cup)
    mult = _ltx_base(coeff.mult)
    if " + " in mult or " - " in mult:
        mult = f"\\left({mult}\\right)"
    head = f"\\left({_ltx_corr(coeff.corr)}\\right){mult}"
    if coeff.cup.is_zero():
        return head
    return f"{_ltx_base(coeff.cup)} + {head}"


def table_to_latex(table: ProductTable) -> str:
    """LaTeX lines in the layout of the worked A_2 displays."""
    gen = table.generator_name()
    op = {"chen_ruan": "\\cup_{\\rm CR}", "cup": "\\cup",
          "quantum": "\\ast_{\\rho}", "quantum_at": "\\ast_{\\rho}"}
    lines = ["\\begin{align*}"]
    for i, j in table.pairs():
        entry = table.entry(i, j)
        parts = []
        if not entry.s.is_zero():
            parts.append(f"{_ltx_base(entry.s)}\\,[S]")
        for l, coeff in enumerate(entry.e, start=1):
            text = _ltx_entry_coeff(coeff)
            if text == "0":
                continue
            parts.append(f"\\left[{text}\\right]{gen}_{{{l}}}")
        rhs = _join_signed(parts)
        lines.append(f"{gen}_{{{i}}} {op[table.kind]} {gen}_{{{j}}} "
                     f"&= {rhs}\\\\")
    lines.append("\\end{align*}")
    return "\n".join(lines)
