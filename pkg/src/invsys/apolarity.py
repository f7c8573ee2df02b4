"""Inverse systems of Artinian reductions of Gorenstein point sets.

Given a reduced arithmetically Gorenstein set Z = {P_1..P_m} of regularity r
and a linear form ell with ell(P_i) != 0, the Artinian reduction <I_Z, ell>
is Ann(F) for F = sum c_i L_i^r, where L_i is the dual linear form of P_i and
(c_i ell(P_i))_i spans the one-dimensional space of relations among the
L_i^(r-1).  This module builds F, checks the equality degree by degree, and
runs the converse: from a presentation F = sum c_i L_i^r it recovers ell.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    AsymmetricHVectorError,
    ConditionOneError,
    ConditionTwoError,
    DegenerateError,
    InputError,
    KernelDimensionError,
    NonvanishingError,
    NoRecoveryError,
    NotGorensteinError,
    ZeroCoefficientError,
)
from .gorenstein import GorensteinReport, gorenstein_report, is_symmetric
from .linalg import (
    RationalMatrix,
    nullspace,
    rank,
    row_space_basis,
    span_rank,
    to_rational,
)
from .points import PointConfiguration, normalize, vanishing_ideal_piece
from .polyring import (
    R_SIDE,
    S_SIDE,
    GradedPoly,
    basis_size,
    contract,
    evaluate,
    linear_power,
    monomial_basis,
)

Trace = Optional[list]


def _record(trace: Trace, name: str, M: RationalMatrix):
    if trace is not None:
        trace.append((name, M))


def dual_form(P: Sequence) -> GradedPoly:
    """L = a_0 y_0 + ... + a_n y_n for the point [a_0 : ... : a_n]."""
    return GradedPoly.linear(S_SIDE, list(P))


def _power_matrix(forms: Sequence[GradedPoly], j: int) -> RationalMatrix:
    """Columns are the coefficient vectors of L_i^j (zero rows if j < 0)."""
    n = forms[0].n
    if j < 0:
        return RationalMatrix(0, len(forms), ())
    return RationalMatrix.from_columns([linear_power(L, j).coeffs for L in forms],
                                       rows=basis_size(n, j))


def power_span_dimension(forms: Sequence[GradedPoly], j: int) -> int:
    """dim Span(L_1^j, ..., L_m^j); zero for negative j."""
    if j < 0 or not forms:
        return 0
    return rank(_power_matrix(forms, j))


def dependence_coefficients(Z: PointConfiguration, ell: GradedPoly, r: int,
                            trace: Trace = None) -> tuple[list[Fraction], list[Fraction]]:
    """Solve sum_i d_i L_i^(r-1) = 0 and set c_i = d_i / ell(P_i), c_1 = 1."""
    values = [evaluate(ell, P) for P in Z.points]
    zeros = [i for i, v in enumerate(values) if v == 0]
    if zeros:
        raise NonvanishingError(
            f"ell vanishes at point(s) {zeros}; it is not a nonzerodivisor on R/I_Z"
        )
    forms = [dual_form(P) for P in Z.points]
    M = _power_matrix(forms, r - 1)
    _record(trace, f"dependence matrix (columns L_i^{r - 1})", M)
    kernel = nullspace(M)
    if len(kernel) != 1:
        raise KernelDimensionError(
            f"relations among the L_i^{r - 1} form a space of dimension {len(kernel)}, expected 1"
        )
    d = list(kernel[0])
    if any(x == 0 for x in d):
        raise ZeroCoefficientError(
            f"dependence coefficient(s) vanish at point(s) {[i for i, x in enumerate(d) if x == 0]}"
        )
    c = [di / v for di, v in zip(d, values)]
    s = 1 / c[0]
    c = [ci * s for ci in c]
    d = [di * s for di in d]
    return c, d


@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    ideal_dim: int
    ann_dim: int
    equal: bool

    def as_dict(self) -> dict:
        return {"degree": self.degree, "ideal_dim": self.ideal_dim,
                "ann_dim": self.ann_dim, "equal": self.equal}


@dataclass(frozen=True)
class ApolarityResult:
    c: tuple[Fraction, ...]
    d: tuple[Fraction, ...]
    F: GradedPoly
    forms: tuple[GradedPoly, ...]
    ell: GradedPoly
    regularity: int
    verified: bool
    per_degree: tuple[DegreeComparison, ...]
    report: Optional[GorensteinReport] = field(default=None, compare=False)

    @property
    def terms(self) -> list[tuple[Fraction, GradedPoly]]:
        return list(zip(self.c, self.forms))


def inverse_system_generator(Z: PointConfiguration, ell: GradedPoly,
                             allow_non_gorenstein: bool = False,
                             trace: Trace = None) -> ApolarityResult:
    """Build F = sum c_i L_i^r with <I_Z, ell> = Ann(F) and certify it."""
    if ell.side != R_SIDE or ell.degree != 1 or ell.n != Z.n:
        raise InputError("ell must be a linear form in R with n+1 variables")
    report = gorenstein_report(Z)
    if not report.arithmetically_gorenstein and not allow_non_gorenstein:
        raise NotGorensteinError(f"configuration is not arithmetically Gorenstein: {report.reason}")
    r = report.hilbert.regularity
    c, d = dependence_coefficients(Z, ell, r, trace=trace)
    forms = [dual_form(P) for P in Z.points]
    F = GradedPoly.zero(S_SIDE, Z.n, r)
    for ci, L in zip(c, forms):
        F = F + linear_power(L, r).scale(ci)
    table, ok = verify(Z, ell, F, r, trace=trace)
    return ApolarityResult(tuple(c), tuple(d), F, tuple(forms), ell, r, ok, tuple(table), report)


def catalecticant(F: GradedPoly, deg: int) -> RationalMatrix:
    """Matrix of R_deg -> S_(r-deg), f |-> f o F; column k is x^(alpha_k) o F."""
    basis = monomial_basis(F.n, deg)
    cols = [contract(GradedPoly.monomial(R_SIDE, a), F).coeffs for a in basis]
    return RationalMatrix.from_columns(cols, rows=basis_size(F.n, F.degree - deg))


def annihilator_piece(F: GradedPoly, deg: int) -> list[GradedPoly]:
    """Basis of Ann(F) in degree deg."""
    if deg < 0:
        raise ValueError("degree must be nonnegative")
    if deg > F.degree:
        return [GradedPoly.monomial(R_SIDE, a) for a in monomial_basis(F.n, deg)]
    return [GradedPoly(R_SIDE, F.n, deg, v) for v in nullspace(catalecticant(F, deg))]


def ideal_with_form_piece(Z: PointConfiguration, ell: GradedPoly, deg: int) -> list[tuple[Fraction, ...]]:
    """Row-reduced spanning set of <I_Z, ell> in degree deg."""
    gens = [f.coeffs for f in vanishing_ideal_piece(Z, deg)]
    if deg >= 1:
        gens += [(ell * GradedPoly.monomial(R_SIDE, a)).coeffs
                 for a in monomial_basis(Z.n, deg - 1)]
    return row_space_basis(gens, basis_size(Z.n, deg))


def verify(Z: PointConfiguration, ell: GradedPoly, F: GradedPoly, r: int,
           trace: Trace = None) -> tuple[list[DegreeComparison], bool]:
    """Compare <I_Z, ell> and Ann(F) in every degree 1..r+1.

    Besides span equality the verdict requires both quotients to have a
    one-dimensional piece in degree r (the socle) and to vanish in degree r+1.
    """
    if F.degree != r or F.is_zero():
        return [], False
    table = []
    for deg in range(1, r + 2):
        dim = basis_size(Z.n, deg)
        J = ideal_with_form_piece(Z, ell, deg)
        A = [f.coeffs for f in annihilator_piece(F, deg)]
        if trace is not None and deg <= r:
            _record(trace, f"catalecticant in degree {deg}", catalecticant(F, deg))
        rj, ra = len(J), span_rank(A, dim)
        equal = rj == ra and span_rank(list(J) + A, dim) == rj
        table.append(DegreeComparison(deg, rj, ra, equal))
    socle = table[r - 1] if r >= 1 else None
    socle_ok = (basis_size(Z.n, r) - socle.ideal_dim == 1) if socle else True
    top = table[-1]
    top_ok = top.ideal_dim == top.ann_dim == basis_size(Z.n, r + 1)
    return table, all(t.equal for t in table) and socle_ok and top_ok


@dataclass(frozen=True)
class RecoveryResult:
    ell: Optional[GradedPoly]
    matrix_rank: int
    consistent: bool
    d: tuple[Fraction, ...] = ()
    c: tuple[Fraction, ...] = ()
    report: Optional[GorensteinReport] = field(default=None, compare=False)


def _check_terms(terms) -> tuple[list[Fraction], list[GradedPoly]]:
    if not terms:
        raise InputError("at least one term is required")
    cs = [to_rational(c) for c, _ in terms]
    forms = [L for _, L in terms]
    if any(c == 0 for c in cs):
        raise InputError("all coefficients c_i must be nonzero")
    n = forms[0].n
    for L in forms:
        if L.side != S_SIDE or L.degree != 1 or L.n != n or L.is_zero():
            raise InputError("every L_i must be a nonzero linear form in S with n+1 variables")
    classes = [normalize(L.coeffs) for L in forms]
    if len(set(classes)) != len(classes):
        raise InputError("dual points not distinct")
    return cs, forms


def recover_linear_form(terms: Sequence[tuple], r: int, trace: Trace = None) -> RecoveryResult:
    """Find ell~ with Ann(sum c_i L_i^r) = <I_Z, ell~>, Z the points dual to the L_i.

    Both hypotheses on F are recomputed from the L_i, the h-vector of Z must
    be symmetric, Z must span P^n, and ell~ is read off the kernel of the
    matrix with rows (a_i0, ..., a_in, -d_i/c_i).
    """
    cs, forms = _check_terms(terms)
    if r < 0:
        raise InputError("r must be nonnegative")
    m, n = len(forms), forms[0].n

    P_r = _power_matrix(forms, r)
    _record(trace, f"power matrix (columns L_i^{r})", P_r)
    if rank(P_r) != m:
        raise ConditionOneError(f"the L_i^{r} span a space of dimension {rank(P_r)} < {m}")

    P_r1 = _power_matrix(forms, r - 1)
    _record(trace, f"dependence matrix (columns L_i^{r - 1})", P_r1)
    kernel = nullspace(P_r1)
    if len(kernel) != 1:
        raise ConditionTwoError(
            f"relations among the L_i^{r - 1} form a space of dimension {len(kernel)}, expected 1"
        )
    d = list(kernel[0])
    if any(x == 0 for x in d):
        raise ConditionTwoError("the relation among the L_i^(r-1) has a zero coefficient")
    d = [di * cs[0] / d[0] for di in d]

    Z = PointConfiguration.from_coords([L.coeffs for L in forms], n=n)
    report = gorenstein_report(Z)
    if not is_symmetric(report.hilbert.h_vector):
        raise AsymmetricHVectorError(f"h-vector {list(report.hilbert.h_vector)} is not symmetric")
    if report.hilbert.degenerate:
        raise DegenerateError("the dual points lie in a hyperplane")

    targets = [di / ci for di, ci in zip(d, cs)]
    M = RationalMatrix.from_rows([list(L.coeffs) + [-t] for L, t in zip(forms, targets)], cols=n + 2)
    _record(trace, "interpolation matrix (rows a_i, -d_i/c_i)", M)
    rk = rank(M)
    if rk != n + 1:
        raise NoRecoveryError(
            f"interpolation matrix has rank {rk}; no linear form takes the values d_i/c_i"
        )
    (v,) = nullspace(M)
    if v[-1] == 0:
        raise NoRecoveryError("kernel of the interpolation matrix has zero last coordinate")
    coeffs = [x / v[-1] for x in v[:-1]]
    # normalize ell~ (first nonzero coefficient 1) and rescale d to match
    lead = next(x for x in coeffs if x)
    ell = GradedPoly.linear(R_SIDE, [x / lead for x in coeffs])
    d = [di / lead for di in d]
    consistent = all(evaluate(ell, L.coeffs) == di / ci for L, di, ci in zip(forms, d, cs))
    return RecoveryResult(ell, rk, consistent, tuple(d), tuple(cs), report)


def derivative_span_dimension(F: GradedPoly, j: int) -> int:
    """Dimension of the span of all partial derivatives of order r-j of F."""
    if not 0 <= j <= F.degree:
        raise ValueError("need 0 <= j <= deg F")
    return rank(catalecticant(F, F.degree - j))

