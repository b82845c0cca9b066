"""Transport verification of candidate ring maps, and the exact solvers
that reproduce the rank-1 and rank-2 isomorphism computations.

A candidate Phi sends E_l to a combination of the e_k, fixes the class s and
acts coefficient-linearly over H*(S).  Verifying that Phi intertwines the
quantum-corrected product with the orbifold product reduces to the tabulated
degree-2 products: for every pair (i, j) the difference

    Phi(E_i * E_j)  -  Phi(E_i) . Phi(E_j)

must vanish as an ExcClass, where the right side expands bilinearly through
the orbifold table.  `transport_check` reports the exact difference per
entry; `solve_a1` and `solve_a2` run the reduction in the opposite
direction, extracting the polynomial system a candidate must satisfy and
solving it exactly over Q(zeta_{4(n+1)}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg
from .cartan import cartan_build
from .coeffring import BaseScalar
from .corrections import DeltaIndex, PoleError
from .exactnum import Cyclotomic, imaginary_unit, root_of_unity, sqrt_rational
from .mckay import LinearMap, bgp_map
from .ringtables import (KIND_CR, KIND_QUANTUM, ExcClass, ProductTable,
                         cr_table, qc_eval, qc_table)


class RankMismatch(ValueError):
    """Map and tables do not have the same rank."""


@dataclass(frozen=True)
class EntryCheck:
    i: int
    j: int
    diff: ExcClass

    @property
    def ok(self) -> bool:
        return self.diff.is_zero()


@dataclass(frozen=True)
class TransportReport:
    n: int
    q: tuple | None
    map_matrix: LinearMap
    entries: tuple

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.ok]

    def to_json(self):
        return {
            "n": self.n,
            "q": [x.to_json() for x in self.q] if self.q is not None else None,
            "map": [[c.to_json() for c in row]
                    for row in self.map_matrix.matrix],
            "entries": [{"i": e.i, "j": e.j,
                         "diff_s": e.diff.s.to_json(),
                         "diff_basis": [c.to_json() for c in e.diff.e],
                         "pass": e.ok}
                        for e in self.entries],
            "pass": self.passed,
        }

    def summary(self) -> str:
        lines = [f"transport check (n={self.n}): "
                 f"{'PASS' if self.passed else 'FAIL'}"]
        for e in self.entries:
            status = "ok" if e.ok else f"nonzero difference: " \
                f"s: {e.diff.s}; basis: {[str(c) for c in e.diff.e]}"
            lines.append(f"  ({e.i},{e.j}): {status}")
        return "\n".join(lines)


def apply_map(lmap: LinearMap, cls: ExcClass) -> ExcClass:
    """Phi applied to a class: fixes s, pushes basis coefficients through."""
    n = cls.n
    e = []
    for k in range(n):
        acc = BaseScalar.zero(n)
        for l in range(n):
            acc = acc + cls.e[l].scale(lmap.matrix[k][l])
        e.append(acc)
    return ExcClass(n, cls.s, tuple(e))


def _pair_through_table(lmap: LinearMap, i: int, j: int,
                        target: ProductTable) -> ExcClass:
    """Phi(E_i) . Phi(E_j) expanded bilinearly through the target table."""
    n = target.n
    out = ExcClass.zero(n)
    for k in range(1, n + 1):
        ci = lmap.matrix[k - 1][i - 1]
        if ci.is_zero():
            continue
        for kk in range(1, n + 1):
            cj = lmap.matrix[kk - 1][j - 1]
            if cj.is_zero():
                continue
            out = out + target.entry(k, kk).scale(ci * cj)
    return out


def transport_check(lmap: LinearMap, source: ProductTable,
                    target: ProductTable) -> TransportReport:
    """Compare Phi(source product) with the target product of the images.

    The source must be fully evaluated (no symbolic delta terms); the target
    is an orbifold table.
    """
    if not (lmap.n == source.n == target.n):
        raise RankMismatch(
            f"ranks differ: map {lmap.n}, source {source.n}, "
            f"target {target.n}")
    if source.kind == KIND_QUANTUM:
        raise ValueError("source table still has symbolic delta terms; "
                         "evaluate it with qc_eval first")
    if target.kind != KIND_CR:
        raise ValueError("target must be a Chen-Ruan table")
    checks = []
    for i, j in source.pairs():
        lhs = apply_map(lmap, source.entry(i, j))
        rhs = _pair_through_table(lmap, i, j, target)
        checks.append(EntryCheck(i, j, lhs - rhs))
    return TransportReport(source.n, source.q, lmap, tuple(checks))


# ---------------------------------------------------------------------------
# Rank 1: the quadratic t^2 = -4 plus the vanishing of the E-coefficient.


class A1Solution(NamedTuple):
    t: Cyclotomic
    q: Cyclotomic


def solve_a1() -> list[A1Solution]:
    """All (t, q) with E -> t e a ring isomorphism at the point q.

    The s-coefficients force t^2 = -4; the E-coefficient of E*E must vanish
    outright (e e has no e-term), which pins delta(q) and hence q = -1.

    >>> [str(sol.q) for sol in solve_a1()]
    ['-1', '-1']
    """
    n = 1
    qct = qc_table(n)
    crt = cr_table(n)
    tau = qct.entry(1, 1).s.constant_coefficient().as_fraction()
    sigma = crt.entry(1, 1).s.constant_coefficient().as_fraction()
    ratio = tau / sigma  # t^2
    conductor = 4 * (n + 1)
    if ratio >= 0:
        t = sqrt_rational(ratio, conductor)
    else:
        t = imaginary_unit(conductor) * sqrt_rational(-ratio, conductor)
    # E-coefficient: (c0 + c1 delta) K must vanish, t != 0.
    coeff = qct.entry(1, 1).e[0]
    c0 = coeff.cup.coefficient((1,))
    c1 = coeff.corr.terms[DeltaIndex(1, 1)]
    delta_star = -c0 / c1
    if delta_star == -1:
        raise ArithmeticError("delta = -1 has no preimage q")
    q_star = delta_star / (1 + delta_star)
    solutions = []
    for tt in sorted((t, -t), key=lambda x: x.coeffs):
        lmap = LinearMap(1, ((tt,),))
        report = transport_check(lmap, qc_eval(qct, [q_star]), crt)
        assert report.passed
        solutions.append(A1Solution(tt, q_star))
    return solutions


# ---------------------------------------------------------------------------
# Rank 2: the symmetric ansatz E_1 -> a e_1 + b e_2, E_2 -> b e_1 + a e_2.


class A2Solution(NamedTuple):
    a: Cyclotomic
    b: Cyclotomic
    q1: Cyclotomic
    q2: Cyclotomic
    lmap: LinearMap


def _sqrt_in_field(value: Cyclotomic, conductor: int) -> list[Cyclotomic]:
    """All square roots of value of the shape (positive rational)^(1/2)
    times a root of unity of Q(zeta_N).

    Every returned element is verified exactly; for a quadratic this is a
    complete root list as soon as two distinct roots appear.
    """
    roots = []
    for j in range(conductor):
        omega = root_of_unity(conductor, j)
        candidate_sq = value * omega ** (-2)
        if not candidate_sq.is_rational():
            continue
        rat = candidate_sq.as_fraction()
        if rat < 0:
            continue
        try:
            base = sqrt_rational(rat, conductor)
        except ValueError:
            continue
        cand = base * omega
        if cand * cand == value and all(cand != r for r in roots):
            roots.append(cand)
    return roots


def _delta_system(lmap: LinearMap, qct: ProductTable, crt: ProductTable):
    """Linear equations in (delta_11, delta_22, delta_12) forcing
    Phi(E_i * E_j) = Phi(E_i) . Phi(E_j) for the concrete map entries.

    Returns (rows, rhs) over Q(zeta); each basis coefficient equation is
    split into its L- and M-monomial components.
    """
    n = 2
    unknowns = [DeltaIndex(1, 1), DeltaIndex(2, 2), DeltaIndex(1, 2)]
    monos = [(1, 0), (0, 1)]
    rows, rhs = [], []
    kappa = BaseScalar.K(n)
    for i, j in qct.pairs():
        entry = qct.entry(i, j)
        rhs_cls = _pair_through_table(lmap, i, j, crt)
        for k in range(n):
            # Phi-transformed coefficient of e_{k+1}:
            cup_acc = BaseScalar.zero(n)
            corr_acc = {u: Cyclotomic.zero(1) for u in unknowns}
            for l in range(n):
                factor = lmap.matrix[k][l]
                if factor.is_zero():
                    continue
                cup_acc = cup_acc + entry.e[l].cup.scale(factor)
                for u, c in entry.e[l].corr.terms.items():
                    corr_acc[u] = corr_acc[u] + c * factor
            resid = cup_acc - rhs_cls.e[k]
            for mono in monos:
                rows.append([corr_acc[u] * kappa.coefficient(mono)
                             for u in unknowns])
                rhs.append(-resid.coefficient(mono))
    return rows, rhs


def solve_a2() -> list[A2Solution]:
    """The exact solutions of the rank-2 transport system.

    The s-coefficients give ab = -3 and a^2 + b^2 = 3; for each root pair
    the remaining equations are linear in the three delta values, and the
    point (q_1, q_2) is recovered from them, subject to the consistency
    delta_12 = q_1 q_2/(1 - q_1 q_2).  Exactly two solutions survive, both
    with q_1 = q_2 a primitive cube root of unity.
    """
    n = 2
    conductor = 4 * (n + 1)
    cd = cartan_build(n)
    qct = qc_table(n, cd)
    crt = cr_table(n)

    sigma_off = crt.entry(1, 2).s.constant_coefficient().as_fraction()
    assert crt.entry(1, 1).s.is_zero() and crt.entry(2, 2).s.is_zero()
    tau_diag = qct.entry(1, 1).s.constant_coefficient().as_fraction()
    tau_off = qct.entry(1, 2).s.constant_coefficient().as_fraction()
    prod_ab = tau_diag / (2 * sigma_off)        # ab
    sum_sq = tau_off / sigma_off                # a^2 + b^2

    # a^2 and b^2 are the roots of t^2 - sum_sq t + prod_ab^2.
    disc = Fraction(sum_sq) ** 2 - 4 * Fraction(prod_ab) ** 2
    if disc >= 0:
        w = sqrt_rational(disc, conductor)
    else:
        w = imaginary_unit(conductor) * sqrt_rational(-disc, conductor)
    half = Fraction(1, 2)
    squares = [(sum_sq + w) * half, (sum_sq - w) * half]

    solutions = []
    seen = []
    for square in squares:
        for a in _sqrt_in_field(square, conductor):
            b = prod_ab / a
            if any(a == pa and b == pb for pa, pb in seen):
                continue
            seen.append((a, b))
            lmap = LinearMap(n, ((a, b), (b, a)))
            rows, rhs = _delta_system(lmap, qct, crt)
            try:
                delta = linalg.solve_exact(rows, rhs,
                                           zero=Cyclotomic.zero(1))
            except ValueError:
                continue
            if delta is None:
                continue
            d11, d22, d12 = delta
            if d11 == -1 or d22 == -1:
                continue
            q1 = d11 / (1 + d11)
            q2 = d22 / (1 + d22)
            if q1.is_zero() or q2.is_zero() or q1 * q2 == 1:
                continue
            if d12 != (q1 * q2) / (1 - q1 * q2):
                continue
            report = transport_check(lmap, qc_eval(qct, [q1, q2]), crt)
            if report.passed:
                solutions.append(A2Solution(a, b, q1, q2, lmap))
    solutions.sort(key=lambda sol: sol.q1.lift(conductor).coeffs)
    return solutions


# ---------------------------------------------------------------------------
# The scan over primitive roots.


@dataclass(frozen=True)
class RootScan:
    m_root: int
    status: str                       # "pass" | "fail" | "pole"
    report: TransportReport | None
    pole: PoleError | None = None

    def to_json(self):
        doc = {"m_root": self.m_root, "status": self.status}
        if self.report is not None:
            doc["report"] = self.report.to_json()
        if self.pole is not None:
            doc["pole"] = {"mu": self.pole.index.mu, "nu": self.pole.index.nu,
                           "entry": list(self.pole.entry or ())}
        return doc


def conjecture_scan(n: int) -> list[RootScan]:
    """Probe the conjectured map at q_1 = ... = q_n = zeta^{m_root} for
    every primitive (n+1)-th root.

    No truth value is asserted beyond what the check computes; a root where
    some q_mu...q_nu = 1 is reported as a pole, not as a failure.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    cd = cartan_build(n)
    qct = qc_table(n, cd)
    crt = cr_table(n)
    conductor = 4 * (n + 1)
    results = []
    for m_root in range(1, n + 1):
        if math.gcd(m_root, n + 1) != 1:
            continue
        zeta = root_of_unity(conductor, 4 * m_root)
        lmap = bgp_map(n, m_root)
        try:
            evaluated = qc_eval(qct, [zeta] * n)
        except PoleError as exc:
            results.append(RootScan(m_root, "pole", None, exc))
            continue
        report = transport_check(lmap, evaluated, crt)
        results.append(RootScan(
            m_root, "pass" if report.passed else "fail", report))
    return results
