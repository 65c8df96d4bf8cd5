"""Composition operators on weighted sequence spaces and experiments.

The operator C_phi sends a sequence f to the coefficient sequence of
f^ o phi.  Its matrix columns are the coefficient sequences of the
powers phi^n.  This module builds truncated matrices, measures column
norm ratios against several weights, runs the norm blow-up and
distortion experiments, and checks the derivative chain rule and the
weight-lowering extension step.

All truncations only discard coefficient mass, so reported norms are
certified lower bounds of the untruncated quantities.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import weights as wt
from .circlemaps import (Blaschke, CircleMap, Monomial, coeffs,
                         compose_transform, derivative_coeffs, power_coeffs,
                         reciprocal_coeffs, reflect_conj, _l1_trim,
                         _unit_power)
from .errors import (AccuracyError, AdmissibilityError, ParameterError,
                     RangeError, SizeError)
from .seqalg import (TruncSeq, convolve, delta, formal_derivative, l1_diff,
                     l1_norm, weighted_norm)

MAX_MATRIX_ENTRIES = 50_000_000


# ---------------------------------------------------------------------
# standard automorphisms of the sequence algebra
# ---------------------------------------------------------------------


def standard_automorphism(f: TruncSeq, lam: complex, reflect: bool = False) -> TruncSeq:
    """(Tf)(n) = lam^n f(n), or lam^n f(-n) when ``reflect``.

    These are the isometric algebra automorphisms for every symmetric
    weight; powers of lam are taken through the phase so unimodularity
    is exact to rounding.
    """
    if abs(abs(complex(lam)) - 1.0) > 1e-12:
        raise ParameterError("lam must be unimodular")
    if f.is_zero:
        return f
    g = TruncSeq(-f.hi, f.values[::-1]) if reflect else f
    theta = np.angle(complex(lam))
    return TruncSeq(g.lo, g.values * np.exp(1j * theta * g.indices()))


# ---------------------------------------------------------------------
# truncated operator matrices
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense matrix of C_phi on columns n_lo..n_hi, rows m_lo..m_hi."""

    n_lo: int
    n_hi: int
    m_lo: int
    m_hi: int
    entries: np.ndarray  # shape (rows, cols), complex

    def column_seq(self, n: int) -> TruncSeq:
        if not self.n_lo <= n <= self.n_hi:
            raise ParameterError(f"column {n} outside [{self.n_lo}, {self.n_hi}]")
        return TruncSeq(self.m_lo, self.entries[:, n - self.n_lo])


def _power_columns(phi: CircleMap, n_lo: int, n_hi: int,
                   tol: float) -> dict[int, TruncSeq]:
    """Coefficients of phi^n for all n in [n_lo, n_hi].

    Positive powers are built by running convolution against the base
    expansion (one convolution per column); negative powers are the
    conjugate reflections of the positive ones.
    """
    if n_lo > n_hi:
        raise ParameterError("empty column range")
    cols: dict[int, TruncSeq] = {0: delta(0)}
    top = max(abs(n_lo), abs(n_hi))
    if isinstance(phi, Monomial):
        for n in range(n_lo, n_hi + 1):
            cols[n] = delta(phi.power * n, _unit_power(phi.lam, n))
        return cols
    base = coeffs(phi, tol / (100.0 * (top + 1.0)))
    step_budget = tol / (4.0 * max(1, top))
    cur = delta(0)
    for n in range(1, top + 1):
        cur = _l1_trim(convolve(cur, base), step_budget)
        cols[n] = cur
    for n in range(-1, n_lo - 1, -1):
        cols[n] = reflect_conj(cols[-n])
    return {n: cols[n] for n in range(n_lo, n_hi + 1)}


def build_matrix(phi: CircleMap, n_range: tuple[int, int],
                 tol: float = 1e-10) -> OperatorMatrix:
    """Assemble the truncated matrix of C_phi over the given column range."""
    n_lo, n_hi = int(n_range[0]), int(n_range[1])
    cols = _power_columns(phi, n_lo, n_hi, tol)
    m_lo = min(c.lo for c in cols.values() if not c.is_zero)
    m_hi = max(c.hi for c in cols.values() if not c.is_zero)
    rows = m_hi - m_lo + 1
    ncols = n_hi - n_lo + 1
    if rows * ncols > MAX_MATRIX_ENTRIES:
        raise SizeError(f"matrix of {rows}x{ncols} entries exceeds the size cap")
    M = np.zeros((rows, ncols), dtype=np.complex128)
    for n, c in cols.items():
        if not c.is_zero:
            M[c.lo - m_lo: c.lo - m_lo + c.support_len, n - n_lo] = c.values
    return OperatorMatrix(n_lo, n_hi, m_lo, m_hi, M)


# ---------------------------------------------------------------------
# column norm ratios
# ---------------------------------------------------------------------


def column_ratio(phi: CircleMap, w: wt.Weight, p: float, n: int,
                 tol: float = 1e-10) -> float:
    """||C_phi delta_n||_{p,w} / ||delta_n||_{p,w}, adaptively truncated.

    The truncation tolerance is tightened until two successive weighted
    norms agree to 1e-9 relatively, so weights growing along the support
    cannot silently hide mass.
    """
    prev = None
    t = tol
    for _ in range(3):
        seq = power_coeffs(phi, n, t)
        val = weighted_norm(seq, p, w) / w.eval(n)
        if prev is not None and abs(val - prev) <= 1e-9 * max(1.0, abs(val)):
            return float(val)
        prev = val
        t = max(t * 1e-3, 1e-15)
    return float(prev)


# ---------------------------------------------------------------------
# norm blow-up experiment
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class BlowupRow:
    """One grid point of the blow-up experiment."""

    n: int
    ratio: float
    model_value: float
    k_n: int
    lower_bound_ratio: float
    cr_empirical: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ratio": self.ratio,
            "model_value": self.model_value,
            "k_n": self.k_n,
            "lower_bound_ratio": self.lower_bound_ratio,
            "cr_empirical": self.cr_empirical,
        }


def blowup_experiment(case: int, r: float, ns, p: float = 1.0,
                      gamma: float | None = None, a: float | None = None,
                      tol: float = 1e-10, jobs: int | None = None) -> list[BlowupRow]:
    """Growth of ||C_phi delta_n|| / ||delta_n|| for phi = Blaschke(r).

    Case 1 uses the weight exp(|n|^gamma) and the model value
    exp((alpha^gamma - 1) n^gamma) n^(-1/3); case 2 uses a^|n|(1+n^2)
    and a^((alpha-1) n) n^(-1/3), where alpha = (1+r)/(1-r).  Case 2
    requires r < 1/a, otherwise the columns leave the space and an
    :class:`AdmissibilityError` is raised.  Each row also records the
    single-coefficient lower bound w(k_n)|c(k_n)|/w(n) at k_n = [alpha n]
    and the empirical constant |c(k_n)| n^(1/3).
    """
    if not 0.0 <= r < 1.0:
        raise ParameterError(f"r must lie in [0, 1), got {r}")
    if case == 1:
        if gamma is None or not 0.0 < gamma < 1.0:
            raise ParameterError("case 1 needs 0 < gamma < 1")
        w = wt.subexp(gamma)
    elif case == 2:
        if a is None or not a > 1.0:
            raise ParameterError("case 2 needs a > 1")
        if not r < 1.0 / a:
            raise AdmissibilityError(
                f"case 2 needs r < 1/a = {1.0 / a:g}: the Blaschke coefficient "
                f"sequence is not summable against the weight at r = {r:g}")
        w = wt.exppoly(a)
    else:
        raise ParameterError(f"case must be 1 or 2, got {case}")
    alpha = (1.0 + r) / (1.0 - r)
    phi = Blaschke(r)

    def one(n: int) -> BlowupRow:
        n = int(n)
        if n < 1:
            raise ParameterError("grid indices must be positive")
        ratio = column_ratio(phi, w, p, n, tol)
        k_n = math.floor(alpha * n)
        if case == 1:
            model = math.exp((alpha ** gamma - 1.0) * n ** gamma) * n ** (-1.0 / 3.0)
        else:
            model = a ** ((alpha - 1.0) * n) * n ** (-1.0 / 3.0)
        c_kn = abs(power_coeffs(phi, n, tol)[k_n])
        lower = float(w.eval(k_n) * c_kn / w.eval(n))
        return BlowupRow(n, float(ratio), float(model), int(k_n), lower,
                         float(c_kn * n ** (1.0 / 3.0)))

    ns = [int(n) for n in ns]
    if jobs is not None and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(one, ns))
    return [one(n) for n in ns]


# ---------------------------------------------------------------------
# l2 operator norm by power iteration
# ---------------------------------------------------------------------


def op_norm_l2(phi: CircleMap, w: wt.Weight, N: int, col_tol: float = 1e-10,
               rel_tol: float = 1e-8, max_iter: int = 10_000,
               seed: int = 0) -> float:
    """Largest singular value of the weighted truncation of C_phi.

    Columns are the powers phi^n for |n| <= N; the weighted matrix is
    D_out M D_in^{-1} with diagonal weights on the output window (the
    union of the column supports) and input window.  The top singular
    value is found by power iteration on the normal matrix, run until
    the estimate is relatively stable to ``rel_tol`` over three
    consecutive steps.
    """
    if N < 0:
        raise ParameterError("N must be nonnegative")
    mat = build_matrix(phi, (-N, N), col_tol)
    rows_idx = np.arange(mat.m_lo, mat.m_hi + 1)
    cols_idx = np.arange(-N, N + 1)
    w_out = w.eval_array(rows_idx)
    w_in = w.eval_array(cols_idx)
    for name, arr, idx in (("output", w_out, rows_idx), ("input", w_in, cols_idx)):
        bad = ~np.isfinite(arr) | (arr > wt.OVERFLOW_LIMIT)
        if np.any(bad):
            raise RangeError(
                f"weight overflow on the {name} window at index {int(idx[np.argmax(bad)])}")
    A = mat.entries * w_out[:, None] / w_in[None, :]
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(A.shape[1]) + 1j * rng.standard_normal(A.shape[1])
    v /= np.linalg.norm(v)
    sigma_prev = 0.0
    stable = 0
    for _ in range(max_iter):
        u = A @ v
        sigma = float(np.linalg.norm(u))
        v = A.conj().T @ u
        nv = np.linalg.norm(v)
        if nv == 0.0:
            return 0.0
        v /= nv
        if abs(sigma - sigma_prev) <= rel_tol * max(sigma, 1e-300):
            stable += 1
            if stable >= 3:
                return sigma
        else:
            stable = 0
        sigma_prev = sigma
    raise AccuracyError(
        f"power iteration did not stabilize to {rel_tol:g} in {max_iter} steps")


# ---------------------------------------------------------------------
# closed-form norm bound and the distortion experiment
# ---------------------------------------------------------------------


def composition_norm_bound(r: float, w: wt.Weight, lam: float = 1.0) -> float:
    """The bound (2|r| d + r^2 d^2 + ((1+|r|)/(1-|r|))^(2 lam))^(1/2).

    Here d = (sum_{n != 0} w(n)^-2)^(1/2), computed with a closed-form
    tail overestimate, so the bound stays valid.  The expression depends
    on r only through |r|: the underlying estimates control |f(phi(0))|
    with phi(0) = -r or +r symmetrically.  At r = 0 the value is exactly 1.
    """
    if not abs(r) < 1.0:
        raise ParameterError(f"|r| < 1 required, got {r}")
    if r == 0.0:
        return 1.0
    partial, tail = wt.recip_power_sum(w, 2.0)
    if not math.isfinite(tail):
        raise ParameterError("sum of w(n)^-2 diverges for this weight")
    d2 = 2.0 * (partial + tail)
    d = math.sqrt(d2)
    x = abs(r)
    return math.sqrt(2.0 * x * d + x * x * d2 + ((1.0 + x) / (1.0 - x)) ** (2.0 * lam))


@dataclass(frozen=True)
class DistortionReport:
    """Distortion of the isomorphism induced by one Blaschke map."""

    r: float
    N: int
    norm_fwd: float
    norm_inv: float
    distortion: float
    norm_bound_fwd: float
    norm_bound_inv: float
    lambda_param: float
    nonstandard_witness: bool
    within_bound_product: bool

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "N": self.N,
            "norm_fwd": self.norm_fwd,
            "norm_inv": self.norm_inv,
            "distortion": self.distortion,
            "norm_bound_fwd": self.norm_bound_fwd,
            "norm_bound_inv": self.norm_bound_inv,
            "lambda_param": self.lambda_param,
            "nonstandard_witness": self.nonstandard_witness,
            "within_bound_product": self.within_bound_product,
        }


def distortion_experiment(w: wt.Weight, r_list, N: int, lam: float = 1.0,
                          col_tol: float = 1e-10, seed: int = 0,
                          jobs: int | None = None) -> list[DistortionReport]:
    """Distortion ||C_phi|| * ||C_phi^{-1}|| of the Blaschke isomorphisms.

    Requires the polynomial weight max(1, |n|^a) with integer a > 1.
    The inverse of C_{b_r} is C_{b_{-r}} (the maps invert each other),
    and distortion >= 1 always; each report also notes the non-
    standardness witness (column 1 has at least two sizable entries).
    """
    if w.family != wt.POLYNOMIAL or w.param is None or \
            not float(w.param).is_integer() or not w.param > 1:
        raise ParameterError("the distortion experiment needs max(1,|n|^a) "
                             "with integer a > 1")

    def one(r: float) -> DistortionReport:
        r = float(r)
        if not 0.0 <= r < 1.0:
            raise ParameterError(f"r must lie in [0, 1), got {r}")
        nf = op_norm_l2(Blaschke(r), w, N, col_tol=col_tol, seed=seed)
        ni = op_norm_l2(Blaschke(-r), w, N, col_tol=col_tol, seed=seed)
        dist = nf * ni
        if dist < 1.0 - 1e-9:
            raise AccuracyError(f"distortion {dist} fell below 1 at r = {r}")
        bf = composition_norm_bound(r, w, lam)
        bi = composition_norm_bound(-r, w, lam)
        col1 = power_coeffs(Blaschke(r), 1, col_tol)
        witness = int(np.sum(np.abs(col1.values) > 1e-12)) >= 2 if r > 0 else False
        return DistortionReport(
            r=r, N=int(N), norm_fwd=nf, norm_inv=ni, distortion=dist,
            norm_bound_fwd=bf, norm_bound_inv=bi, lambda_param=float(lam),
            nonstandard_witness=witness,
            within_bound_product=bool(dist <= bf * bi),
        )

    rs = [float(r) for r in r_list]
    if jobs is not None and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(one, rs))
    return [one(r) for r in rs]


# ---------------------------------------------------------------------
# chain rule and extension step checks
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class ChainRuleReport:
    residual_l1: float
    tol: float
    lhs_l1: float

    @property
    def passed(self) -> bool:
        return self.residual_l1 < self.tol


def chain_rule_check(f: TruncSeq, phi: CircleMap, tol: float = 1e-6) -> ChainRuleReport:
    """l1 residual of (f^ o phi)' = (f^' o phi) * phi' at coefficient level.

    The left side is the formal derivative of the composed sequence; the
    right side is the composition of the derivative convolved with the
    coefficients of phi'.  Internal tolerances are tightened well below
    ``tol`` because differentiation amplifies tail indices.
    """
    ctol = min(1e-9, tol * 1e-4)
    lhs = formal_derivative(compose_transform(f, phi, cauchy_tol=ctol))
    rhs = convolve(compose_transform(formal_derivative(f), phi, cauchy_tol=ctol),
                   derivative_coeffs(phi, ctol))
    return ChainRuleReport(float(l1_diff(lhs, rhs)), tol, float(l1_norm(lhs)))


@dataclass(frozen=True)
class ExtensionReport:
    norm_lowered: float
    base_norm: float
    ratio: float
    a: float
    p: float


def extension_step_check(g: TruncSeq, phi: CircleMap, a: float, p: float,
                         tol: float = 1e-10) -> ExtensionReport:
    """Norm of the coefficients of (g^ o phi) / phi one weight step down.

    Computes the coefficient sequence of the composed series divided by
    phi (multiplication by the conjugate-reflected coefficients on the
    circle) and reports its weighted norm against max(1, |n|^(a-1)),
    together with the ratio to ||g|| in the same lowered weight.
    """
    if not a >= 1.0:
        raise ParameterError(f"need a >= 1, got {a}")
    if g.is_zero:
        raise ParameterError("need a nonzero sequence")
    lowered = convolve(compose_transform(g, phi, cauchy_tol=tol),
                       reciprocal_coeffs(phi, tol))
    w_low = wt.polynomial(a - 1.0)
    nl = weighted_norm(lowered, p, w_low)
    nb = weighted_norm(g, p, w_low)
    return ExtensionReport(float(nl), float(nb), float(nl / nb), float(a), float(p))
