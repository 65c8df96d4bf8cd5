"""Weight functions on Z and on finite groups.

A weight is a strictly positive function with value 1 at the identity.
Built-in families on Z (all symmetric, nondecreasing in |n|):

* ``constant``    -- 1 everywhere
* ``polynomial``  -- max(1, |n|^a), a >= 0
* ``subexp``      -- exp(|n|^g), 0 < g < 1
* ``exppoly``     -- a^|n| * (1 + n^2), a > 1
* ``tabulated``   -- explicit positive values on a finite index window
                     or on a finite group

Only ``constant`` and ``subexp`` are exactly submultiplicative; the
``polynomial`` and ``exppoly`` families satisfy the inequality up to the
factors 2^a and 2 respectively (worst pair (1, 1)), which is what
``check_submultiplicative`` reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np
from scipy.special import gamma as _gamma_fn, gammaincc as _gammaincc

from .errors import CharacterError, DomainError, ParameterError

OVERFLOW_LIMIT = 1e300

CONSTANT = "constant"
POLYNOMIAL = "polynomial"
SUBEXP = "subexp"
EXPPOLY = "exppoly"
TABULATED = "tabulated"

_FAMILIES = (CONSTANT, POLYNOMIAL, SUBEXP, EXPPOLY, TABULATED)


@dataclass(frozen=True)
class Weight:
    """A weight function; build via the module-level constructors."""

    family: str
    param: float | None = None
    table: tuple[float, ...] | None = None
    lo: int = 0                 # first index of a tabulated window on Z
    group: Any = None           # FiniteGroup instance for group-domain weights

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ParameterError(f"unknown weight family {self.family!r}")

    # -- evaluation ----------------------------------------------------

    @property
    def on_group(self) -> bool:
        return self.group is not None

    def eval(self, x: int) -> float:
        """Weight value at a single point (group element index on groups)."""
        return float(self.eval_array(np.asarray([x]))[0])

    def eval_array(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs)
        if self.group is not None:
            order = self.group.order
            if np.any((xs < 0) | (xs >= order)):
                raise DomainError(f"element index outside group of order {order}")
            if self.family == CONSTANT:
                return np.ones(xs.shape, dtype=float)
            vals = np.asarray(self.table, dtype=float)
            return vals[xs]
        if self.family == TABULATED:
            vals = np.asarray(self.table, dtype=float)
            idx = xs - self.lo
            if np.any((idx < 0) | (idx >= len(vals))):
                bad = int(xs.flat[np.argmax((idx < 0) | (idx >= len(vals)))])
                raise DomainError(f"index {bad} outside tabulated window")
            return vals[idx]
        n = np.abs(xs.astype(float))
        if self.family == CONSTANT:
            return np.ones(xs.shape, dtype=float)
        if self.family == POLYNOMIAL:
            return np.maximum(1.0, n ** self.param)
        if self.family == SUBEXP:
            return np.exp(n ** self.param)
        # exppoly: a^|n| (1+n^2); overflow deliberately propagates as inf,
        # callers guard against values beyond OVERFLOW_LIMIT
        with np.errstate(over="ignore"):
            return self.param ** n * (1.0 + n * n)

    # -- serialization -------------------------------------------------

    def to_descriptor(self) -> dict:
        d: dict[str, Any] = {"family": self.family}
        if self.family == POLYNOMIAL:
            d["a"] = self.param
        elif self.family == SUBEXP:
            d["gamma"] = self.param
        elif self.family == EXPPOLY:
            d["a"] = self.param
        elif self.family == TABULATED:
            d["values"] = list(self.table)
            if self.group is None:
                d["lo"] = self.lo
        if self.group is not None:
            d["domain"] = {"group": self.group.name}
        else:
            d["domain"] = "integers"
        return d


def constant(group: Any = None) -> Weight:
    return Weight(CONSTANT, group=group)


def polynomial(a: float) -> Weight:
    if not a >= 0:
        raise ParameterError(f"polynomial weight needs a >= 0, got {a}")
    return Weight(POLYNOMIAL, param=float(a))


def subexp(gamma: float) -> Weight:
    if not 0.0 < gamma < 1.0:
        raise ParameterError(f"subexp weight needs 0 < gamma < 1, got {gamma}")
    return Weight(SUBEXP, param=float(gamma))


def exppoly(a: float) -> Weight:
    if not a > 1.0:
        raise ParameterError(f"exppoly weight needs a > 1, got {a}")
    return Weight(EXPPOLY, param=float(a))


def tabulated(values, group: Any = None, lo: int = 0) -> Weight:
    vals = tuple(float(v) for v in values)
    if any(not v > 0 for v in vals):
        raise ParameterError("tabulated weight values must be strictly positive")
    if group is not None:
        if len(vals) != group.order:
            raise ParameterError(
                f"need {group.order} values for group {group.name}, got {len(vals)}"
            )
        if abs(vals[group.identity] - 1.0) > 1e-12:
            raise ParameterError("weight at the group identity must equal 1")
        return Weight(TABULATED, table=vals, group=group)
    if not (lo <= 0 <= lo + len(vals) - 1):
        raise ParameterError("tabulated window on Z must contain index 0")
    if abs(vals[-lo] - 1.0) > 1e-12:
        raise ParameterError("weight at index 0 must equal 1")
    return Weight(TABULATED, table=vals, lo=int(lo))


def from_descriptor(d: dict, group_resolver: Callable[[str], Any] | None = None) -> Weight:
    """Build a weight from a JSON descriptor {family, params, domain}."""
    family = d.get("family")
    domain = d.get("domain", "integers")
    group = None
    if isinstance(domain, dict) and "group" in domain:
        if group_resolver is None:
            from .groupalg import builtin_group as group_resolver  # lazy import
        group = group_resolver(domain["group"])
    if family == CONSTANT:
        return constant(group=group)
    if family == POLYNOMIAL:
        return polynomial(d["a"])
    if family == SUBEXP:
        return subexp(d["gamma"])
    if family == EXPPOLY:
        return exppoly(d["a"])
    if family == TABULATED:
        return tabulated(d["values"], group=group, lo=int(d.get("lo", 0)))
    raise ParameterError(f"unknown weight family {family!r}")


# ---------------------------------------------------------------------
# submultiplicativity check
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class SubmultReport:
    """Result of an exhaustive submultiplicativity scan.

    ``max_excess`` is max of w(xy) - w(x)w(y); ``max_ratio`` is max of
    w(xy) / (w(x)w(y)), the weak-submultiplicativity constant on the
    window.  The verdict uses a relative tolerance so that families with
    exact integer arithmetic are judged exactly.
    """

    max_excess: float
    max_ratio: float
    argmax: tuple[int, int]  # pair attaining max_ratio
    submultiplicative: bool
    window: int | None
    rel_tol: float


def check_submultiplicative(w: Weight, window: int | None = None,
                            rel_tol: float = 1e-12) -> SubmultReport:
    """Scan all pairs in the window (all group pairs on a finite group)."""
    if w.group is not None:
        G = w.group
        xs = np.arange(G.order)
        vals = w.eval_array(xs)
        prod_idx = G.table  # (x, y) -> xy
        lhs = vals[prod_idx]
        rhs = np.outer(vals, vals)
        win = None
    else:
        if window is None or window < 1:
            raise ParameterError("an integer window >= 1 is required on Z")
        xs = np.arange(-window, window + 1)
        vals = w.eval_array(xs)
        sums = xs[:, None] + xs[None, :]
        lhs = w.eval_array(sums)
        rhs = np.outer(vals, vals)
        win = int(window)
    excess = lhs - rhs
    ratio = lhs / rhs
    i, j = np.unravel_index(np.argmax(ratio), ratio.shape)
    rel = (lhs - rhs) / np.maximum(1.0, rhs)
    ok = bool(np.max(rel) <= rel_tol)
    return SubmultReport(
        max_excess=float(np.max(excess)),
        max_ratio=float(ratio[i, j]),
        argmax=(int(xs[i]), int(xs[j])),
        submultiplicative=ok,
        window=win,
        rel_tol=rel_tol,
    )


# ---------------------------------------------------------------------
# reciprocal power sums and the algebra constant
# ---------------------------------------------------------------------


def recip_power_sum(w: Weight, q: float, upto: int = 4096) -> tuple[float, float]:
    """Return (partial, tail) with sum_{j>=1} w(j)^-q <= partial + tail.

    ``partial`` is the exact sum over 1..upto; ``tail`` is a closed-form
    overestimate of the remainder (inf when the series diverges).
    Only defined for the symmetric built-in families on Z.
    """
    if w.group is not None or w.family == TABULATED:
        raise ParameterError("reciprocal power sums need a built-in family on Z")
    js = np.arange(1, upto + 1)
    with np.errstate(over="ignore"):
        terms = w.eval_array(js) ** (-q)
    partial = float(np.sum(terms))
    B = float(upto)
    if w.family == CONSTANT:
        tail = math.inf
    elif w.family == POLYNOMIAL:
        s = w.param * q
        tail = B ** (1.0 - s) / (s - 1.0) if s > 1.0 else math.inf
    elif w.family == SUBEXP:
        # j^g >= (B^g + (j-B)^g)/2 for j > B, so the remainder is at most
        # exp(-q B^g / 2) * sum_i exp(-(q/2) i^g), and the inner sum is
        # bounded by its first term plus an incomplete-gamma integral.
        g = w.param
        c2 = q / 2.0
        inner = math.exp(-c2) + (1.0 / g) * c2 ** (-1.0 / g) * float(
            _gammaincc(1.0 / g, c2) * _gamma_fn(1.0 / g)
        )
        tail = math.exp(-q * B ** g / 2.0) * inner
    else:  # exppoly
        a = w.param
        geo = a ** (-q * (B + 1.0)) / (1.0 - a ** (-q))
        tail = (1.0 + (B + 1.0) ** 2) ** (-q) * geo
    return partial, tail


@dataclass(frozen=True)
class AlgebraConstantReport:
    """Best constant C with (w^-q * w^-q)(n) <= C w(n)^-q on the window."""

    constant: float
    argmax_n: int
    q: float
    window: int | None
    tail_bound: float


def algebra_constant(w: Weight, p: float, window: int) -> AlgebraConstantReport:
    """Window estimate of the convolution-algebra constant for exponent p.

    The reported ``tail_bound`` overestimates what indices outside the
    window could add to any ratio (4 * sum_{j>=1} w(j)^-q for the
    monotone built-in families; 0 on finite groups).
    """
    if not p > 1.0:
        raise ParameterError(f"the algebra constant needs p > 1, got {p}")
    q = p / (p - 1.0)
    if w.group is not None:
        G = w.group
        vals = w.eval_array(np.arange(G.order)) ** (-q)
        inv = G.inverses
        # (u * u)(x) = sum_y u(y) u(y^-1 x)
        conv = np.array([
            np.sum(vals * vals[G.table[inv, x]]) for x in range(G.order)
        ])
        ratios = conv / vals
        n_star = int(np.argmax(ratios))
        return AlgebraConstantReport(float(ratios[n_star]), n_star, q, None, 0.0)
    if window < 1:
        raise ParameterError("window must be >= 1")
    xs = np.arange(-window, window + 1)
    with np.errstate(over="ignore"):
        u = w.eval_array(xs) ** (-q)
    full = np.convolve(u, u)  # index n runs over [-2*window, 2*window]
    center = full[window: 3 * window + 1]  # restrict to |n| <= window
    ratios = center / u
    k = int(np.argmax(ratios))
    if w.family == TABULATED:
        tail = math.nan  # finite window; no family tail formula
    else:
        partial, t = recip_power_sum(w, q, upto=max(window, 256))
        tail = 4.0 * (partial + t)
    return AlgebraConstantReport(float(ratios[k]), int(xs[k]), q, int(window), tail)


# ---------------------------------------------------------------------
# ratio bounds for a candidate standard isomorphism
# ---------------------------------------------------------------------


def standard_iso_ratio_bounds(gamma, phi, w1: Weight, w2: Weight,
                              window: int | None = None) -> tuple[float, float]:
    """inf and sup of |gamma(x)| * w2(phi(x)) / w1(x) over the window.

    ``gamma`` and ``phi`` may be callables on integers or arrays indexed
    by group element.  Finite bounds on both sides are the boundedness
    condition for the associated weighted composition operator and its
    inverse.
    """
    if w1.on_group != w2.on_group:
        raise ParameterError("both weights must live on the same kind of domain")
    if w1.on_group:
        xs = np.arange(w1.group.order)
    else:
        if window is None or window < 0:
            raise ParameterError("an integer window is required on Z")
        xs = np.arange(-window, window + 1)
    gvals = np.asarray([gamma(int(x)) for x in xs]) if callable(gamma) \
        else np.asarray(gamma)
    pvals = np.asarray([phi(int(x)) for x in xs]) if callable(phi) \
        else np.asarray(phi)
    mags = np.abs(gvals)
    if np.any(mags == 0.0):
        bad = int(xs[np.argmax(mags == 0.0)])
        raise CharacterError(f"character vanishes at {bad}")
    ratios = mags * w2.eval_array(pvals) / w1.eval_array(xs)
    return float(np.min(ratios)), float(np.max(ratios))
