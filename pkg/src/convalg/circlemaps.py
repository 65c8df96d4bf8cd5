"""Analytic self-maps of the unit circle and their Fourier calculus.

Two map families: rotations/reflections ``Monomial(lam, power)`` with
|lam| = 1, and the disk automorphisms ``Blaschke(r)`` given by
b_r(z) = (z - r) / (1 - r z) for real |r| < 1.  Both are unimodular on
the circle, so reciprocals come from index-reflected complex conjugation
of coefficient sequences.

Coefficient routines return :class:`~convalg.seqalg.TruncSeq` objects
with an l1 tail below the requested tolerance.  ``compose_transform``
implements the sampling pipeline: evaluate the Laurent series of f after
the map on a root-of-unity grid, inverse DFT, and double the grid until
the result is l1-Cauchy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import AccuracyError, DomainError, ParameterError, SingularityError
from .seqalg import TruncSeq, convolve, delta, l1_diff, zero_seq

MAX_LOG2_GRID = 20
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Monomial:
    """z -> lam * z^power with |lam| = 1."""

    lam: complex
    power: int = 1

    def __post_init__(self) -> None:
        if abs(abs(complex(self.lam)) - 1.0) > UNIT_TOL:
            raise ParameterError(f"|lam| must be 1, got {abs(complex(self.lam))}")


@dataclass(frozen=True)
class Blaschke:
    """z -> (z - r) / (1 - r z) with real |r| < 1."""

    r: float

    def __post_init__(self) -> None:
        if not abs(self.r) < 1.0:
            raise ParameterError(f"|r| < 1 required, got {self.r}")


CircleMap = Union[Monomial, Blaschke]


def map_values(phi: CircleMap, z: np.ndarray) -> np.ndarray:
    """Evaluate the map on arbitrary complex points (no domain check)."""
    z = np.asarray(z, dtype=np.complex128)
    if isinstance(phi, Monomial):
        return phi.lam * z ** phi.power
    return (z - phi.r) / (1.0 - phi.r * z)


def eval_map(phi: CircleMap, z, tol: float = 1e-6) -> np.ndarray:
    """Evaluate on circle points; rejects arguments far from |z| = 1."""
    arr = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(np.abs(arr) - 1.0) > tol):
        raise DomainError("evaluation point is not on the unit circle")
    return map_values(phi, arr)


def derivative_values(phi: CircleMap, z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.complex128)
    if isinstance(phi, Monomial):
        return phi.lam * phi.power * z ** (phi.power - 1)
    return (1.0 - phi.r ** 2) / (1.0 - phi.r * z) ** 2


def inverse_map(phi: CircleMap) -> CircleMap:
    """The compositional inverse on the circle, when one exists."""
    if isinstance(phi, Blaschke):
        return Blaschke(-phi.r)
    if phi.power == 1:
        return Monomial(1.0 / phi.lam, 1)
    if phi.power == -1:
        return phi
    raise ParameterError(f"z -> lam z^{phi.power} is not invertible on the circle")


# ---------------------------------------------------------------------
# coefficient sequences
# ---------------------------------------------------------------------


def coeffs(phi: CircleMap, tol: float = 1e-12) -> TruncSeq:
    """Fourier coefficients of the map itself, l1 tail below tol.

    For b_r these are -r at index 0 and (1 - r^2) r^(k-1) at k >= 1
    (geometric expansion of the Cauchy kernel); exact for monomials.
    """
    if isinstance(phi, Monomial):
        return delta(phi.power, phi.lam)
    r = phi.r
    if r == 0.0:
        return delta(1)
    K = _geom_cutoff(abs(r), (1.0 - r * r) / (1.0 - abs(r)), tol)
    vals = np.empty(K + 1, dtype=np.complex128)
    vals[0] = -r
    vals[1:] = (1.0 - r * r) * r ** np.arange(0, K)
    return TruncSeq(0, vals)


def _geom_cutoff(x: float, scale: float, tol: float) -> int:
    """Smallest K >= 1 with scale * x^K <= tol (x in (0,1))."""
    if scale <= tol:
        return 1
    return max(1, math.ceil(math.log(tol / scale) / math.log(x)))


def derivative_coeffs(phi: CircleMap, tol: float = 1e-12) -> TruncSeq:
    """Coefficients of phi'; for b_r these are (1 - r^2)(k+1) r^k, k >= 0."""
    if isinstance(phi, Monomial):
        if phi.power == 0:
            return zero_seq()
        return delta(phi.power - 1, phi.lam * phi.power)
    r = phi.r
    if r == 0.0:
        return delta(0)
    x = abs(r)
    c = 1.0 - r * r
    K = 1
    # remainder sum_{k>K} (k+1) x^k = x^(K+1) ((K+2) - (K+1) x) / (1-x)^2
    while c * x ** (K + 1) * ((K + 2) - (K + 1) * x) / (1.0 - x) ** 2 > tol:
        K += 1
    ks = np.arange(0, K + 1)
    return TruncSeq(0, c * (ks + 1.0) * r ** ks)


def reflect_conj(f: TruncSeq) -> TruncSeq:
    """Index-reflected complex conjugate: the reciprocal of a unimodular series."""
    if f.is_zero:
        return f
    return TruncSeq(-f.hi, np.conj(f.values[::-1]))


def reciprocal_coeffs(phi: CircleMap, tol: float = 1e-12) -> TruncSeq:
    """Coefficients of 1/phi on the circle (conjugate reflection of coeffs)."""
    return reflect_conj(coeffs(phi, tol))


# ---------------------------------------------------------------------
# powers
# ---------------------------------------------------------------------


def _l1_trim(f: TruncSeq, budget: float) -> TruncSeq:
    """Drop end coefficients whose total l1 mass stays below budget."""
    if f.is_zero or budget <= 0.0:
        return f
    mags = np.abs(f.values)
    half = budget / 2.0
    left = int(np.searchsorted(np.cumsum(mags), half, side="right"))
    right = int(np.searchsorted(np.cumsum(mags[::-1]), half, side="right"))
    if left + right >= len(mags):
        return zero_seq()
    if left == 0 and right == 0:
        return f
    return TruncSeq(f.lo + left, f.values[left: len(mags) - right])


def power_coeffs(phi: CircleMap, n: int, tol: float = 1e-10) -> TruncSeq:
    """Coefficients of phi^n (n may be negative), l1 truncation budget tol.

    Negative powers use 1/phi = conj(phi) on the circle, i.e. the
    conjugate-reflected coefficient sequence, then |n|-fold convolution
    by binary powering.  The budget is split across the base expansion
    and the intermediate trims; accuracy is cross-checked against the
    sampling pipeline in the test suite.
    """
    n = int(n)
    if n == 0:
        return delta(0)
    if isinstance(phi, Monomial):
        lam_n = _unit_power(phi.lam, n)
        return delta(phi.power * n, lam_n)
    e = abs(n)
    base = coeffs(phi, tol / (100.0 * (e + 1.0) ** 2))
    if n < 0:
        base = reflect_conj(base)
    n_mults = max(1, e.bit_length() - 1 + bin(e).count("1") - 1)
    step_budget = tol / (4.0 * n_mults)
    result: TruncSeq | None = None
    acc = base
    while e:
        if e & 1:
            result = acc if result is None else _l1_trim(convolve(result, acc), step_budget)
        e >>= 1
        if e:
            acc = _l1_trim(convolve(acc, acc), step_budget)
    assert result is not None
    return result


def _unit_power(lam: complex, n: int) -> complex:
    """lam^n for |lam| = 1 via the phase, so the result stays unimodular."""
    return complex(np.exp(1j * n * np.angle(complex(lam))))


# ---------------------------------------------------------------------
# composition by circle sampling
# ---------------------------------------------------------------------


def _roots_of_unity(M: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(M) / M)


def _compose_once(f: TruncSeq, phi: CircleMap, M: int) -> TruncSeq:
    z = _roots_of_unity(M)
    w = map_values(phi, z)
    acc = np.zeros(M, dtype=np.complex128)
    for c in f.values[::-1]:  # Horner on the shifted polynomial
        acc = acc * w + c
    acc = acc * w ** f.lo
    coef = np.fft.fftshift(np.fft.fft(acc) / M)
    return TruncSeq(-(M // 2), coef)


def compose_transform(f: TruncSeq, phi: CircleMap, M: int | None = None,
                      cauchy_tol: float = 1e-9) -> TruncSeq:
    """Coefficients of z -> f^(phi(z)), f^ the Laurent series of f.

    Samples on M-th roots of unity and doubles M until two successive
    grids agree within ``cauchy_tol`` in l1.  Raises
    :class:`AccuracyError` when the 2^20-point cap is hit first.
    """
    if f.is_zero:
        return f
    span = f.support_len
    if M is None:
        M = max(128, 1 << (4 * span - 1).bit_length())
    else:
        if M & (M - 1) or M < 4 * span:
            raise ParameterError(
                f"M must be a power of two >= 4*support ({4 * span}), got {M}")
    prev = _compose_once(f, phi, M)
    diff = math.inf
    while 2 * M <= (1 << MAX_LOG2_GRID):
        M *= 2
        cur = _compose_once(f, phi, M)
        diff = l1_diff(cur, prev)
        if diff < cauchy_tol:
            return _l1_trim(cur, cauchy_tol / 100.0)
        prev = cur
    raise AccuracyError(
        f"composition did not become l1-Cauchy below {cauchy_tol:g} "
        f"by M = 2^{MAX_LOG2_GRID} (last difference {diff:g})")


def reciprocal_derivative_coeffs(phi: CircleMap, tol: float = 1e-10) -> TruncSeq:
    """Coefficients of 1/phi' on the circle, via sampling and inverse DFT.

    For b_r the exact answer is the quadratic polynomial
    (1 - r z)^2 / (1 - r^2).  Raises :class:`SingularityError` when the
    derivative nearly vanishes on the grid.
    """
    if isinstance(phi, Monomial) and phi.power == 0:
        raise SingularityError("constant map has vanishing derivative")
    M = 64
    prev: TruncSeq | None = None
    while M <= (1 << MAX_LOG2_GRID):
        z = _roots_of_unity(M)
        dv = derivative_values(phi, z)
        if np.min(np.abs(dv)) < 1e-6:
            raise SingularityError("derivative nearly vanishes on the circle")
        coef = np.fft.fftshift(np.fft.fft(1.0 / dv) / M)
        cur = TruncSeq(-(M // 2), coef)
        if prev is not None and l1_diff(cur, prev) < tol:
            return _l1_trim(cur, tol / 100.0)
        prev = cur
        M *= 2
    raise AccuracyError(f"1/phi' expansion not l1-Cauchy below {tol:g}")


def unimodular_defect(phi: CircleMap, samples: int = 1024) -> float:
    """max | |phi(z)| - 1 | over a root-of-unity grid (should be ~1e-15)."""
    z = _roots_of_unity(samples)
    return float(np.max(np.abs(np.abs(map_values(phi, z)) - 1.0)))
