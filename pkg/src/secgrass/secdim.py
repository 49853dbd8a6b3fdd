"""Dimensions of secant varieties and of their Grassmannians.

For a variety ``X`` of dimension ``n`` in ``P^r`` this module measures

* ``S_k(X)``, the closure of the union of ``(k+1)``-secant ``k``-planes,
  by the rank of the stacked tangent spaces at ``k+1`` general points;
* ``G_k(X)``, the closure of those ``k``-planes in ``G(k, r)``, by the
  Jacobian rank of the span map read in an affine chart;
* ``G_{h,k}(X)``, the ``h``-planes lying in some ``(k+1)``-secant
  ``k``-plane, by the Jacobian rank of ``(t, L) -> rowspace(L . M(t))``.

Every dimension is a generic rank over ``F_p``, maximised over independent
trials. With ``cross_check`` set, one more trial is run in exact rational
arithmetic at small integer points.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import partial

from . import linalg
from .errors import (DegenerateSample, InvariantViolation, RankDeficient,
                     SampleFailure, SingularPivotBlock, TooManyDirections)
from .exactfield import DEFAULT_PRIME, RationalCtx, Rng, lift_to_jets, make_field

SPAN, SECANT, GRASS, GRASS_SECANT = "span", "S_k", "G_k", "G_hk"


@dataclass(frozen=True)
class ComputeCfg:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    retry_cap: int = 8
    cross_check: bool = False
    max_directions: int = 64
    exact_bound: int = 50

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.retry_cap < 0:
            raise ValueError("retry_cap must be non-negative")

    def field(self):
        return make_field(self.prime)


@dataclass(frozen=True)
class DimensionEstimate:
    variety: str
    kind: str
    h: int | None
    k: int | None
    dim: int
    expdim: int
    trials_used: int
    prime: int
    seed: int
    trial_ranks: tuple[int, ...] = ()
    cross_check_dim: int | None = None

    @property
    def defect(self) -> int:
        return self.expdim - self.dim

    @property
    def cross_check_agrees(self) -> bool | None:
        if self.cross_check_dim is None:
            return None
        return self.cross_check_dim == self.dim

    def as_dict(self) -> dict:
        d = asdict(self)
        d["trial_ranks"] = list(self.trial_ranks)
        d["defect"] = self.defect
        d["cross_check_agrees"] = self.cross_check_agrees
        return d


@dataclass(frozen=True)
class CheckResult:
    rule: str
    h: int | None
    k: int
    hypothesis_held: bool
    conclusion_held: bool
    details: dict = field(default_factory=dict)
    variety: str = ""

    @property
    def failed(self) -> bool:
        return self.hypothesis_held and not self.conclusion_held

    def as_dict(self) -> dict:
        d = asdict(self)
        d["failed"] = self.failed
        return d


# ---------------------------------------------------------------------------
# Expected dimensions
# ---------------------------------------------------------------------------

def expdim_Gk(n: int, k: int, r: int) -> int:
    if not 0 <= k <= r:
        raise ValueError(f"need 0 <= k <= r, got k={k}, r={r}")
    return min(n * (k + 1), (r - k) * (k + 1))


def expdim_Ghk(n: int, h: int, k: int, r: int) -> int:
    if not 0 <= h < k <= r:
        raise ValueError(f"need 0 <= h < k <= r, got h={h}, k={k}, r={r}")
    return min((k - h) * (h + 1) + n * (k + 1), (r - h) * (h + 1))


def expdim_Sk(n: int, k: int, r: int) -> int:
    # k > r is allowed: the span of k+1 general points is then all of P^r
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    return min(n * (k + 1) + k, r)


# ---------------------------------------------------------------------------
# Single trials. Each takes (X, ctx, rng) and returns a rank.
# ---------------------------------------------------------------------------

def _guard(ndirs: int, cfg: ComputeCfg):
    if ndirs > cfg.max_directions:
        raise TooManyDirections(
            f"{ndirs} active directions exceed the limit of {cfg.max_directions}")


def _point_rows(X, ctx, rng, k, ndirs=None):
    """Jets of phi at k+1 sampled points, point i owning directions i*n .. i*n+n-1."""
    D = ndirs or X.n * (k + 1)
    rows = []
    for i in range(k + 1):
        t = ctx.sample(rng.child("point", i), X.n)
        rows.append(X.map.eval(lift_to_jets(ctx, t, range(X.n), ndirs=D, start=i * X.n), ctx))
    return rows


def _span_trial(X, ctx, rng):
    rows = [X.map.eval(ctx.sample(rng.child("point", i), X.n), ctx) for i in range(X.r + 2)]
    return linalg.rank(rows, ctx) - 1


def _secant_trial(X, ctx, rng, k):
    stack = []
    for i in range(k + 1):
        t = ctx.sample(rng.child("point", i), X.n)
        jets = X.map.eval(lift_to_jets(ctx, t, range(X.n)), ctx)
        stack.append([j.val for j in jets])
        stack.extend([j.partials[d] for j in jets] for d in range(X.n))
    return linalg.rank(stack, ctx) - 1


def _chart_rank(N, ctx):
    values = linalg.jet_values(N)
    try:
        J = linalg.choose_pivot_columns(values, len(N), ctx)
    except RankDeficient as exc:
        raise DegenerateSample(str(exc)) from None
    return linalg.jacobian_rank(linalg.chart_normalize(N, J, ctx), ctx)


def _grass_trial(X, ctx, rng, k):
    return _chart_rank(_point_rows(X, ctx, rng, k), ctx)


def _grass_secant_trial(X, ctx, rng, h, k):
    D = (X.n + h + 1) * (k + 1)
    M = _point_rows(X, ctx, rng, k, ndirs=D)
    if linalg.rank(linalg.jet_values(M), ctx) < k + 1:
        raise DegenerateSample(f"sampled points do not span a {k}-plane")
    lam = ctx.sample(rng.child("lambda"), (h + 1) * (k + 1))
    lam = lift_to_jets(ctx, lam, range(len(lam)), ndirs=D, start=X.n * (k + 1))
    L = [lam[i * (k + 1):(i + 1) * (k + 1)] for i in range(h + 1)]
    return _chart_rank(linalg.matmul(L, M, ctx), ctx)


# ---------------------------------------------------------------------------
# Trial driver
# ---------------------------------------------------------------------------

_RESAMPLE = (SingularPivotBlock, DegenerateSample, ZeroDivisionError)


def _attempt(trial, ctx, rng, retry_cap):
    last = None
    for attempt in range(retry_cap + 1):
        try:
            return trial(ctx, rng.child("attempt", attempt))
        except _RESAMPLE as exc:
            last = exc
    raise SampleFailure(f"no generic sample after {retry_cap + 1} attempts: {last}")


def _estimate(X, kind, h, k, expdim, cfg, trial) -> DimensionEstimate:
    ctx = cfg.field()
    base = Rng(cfg.seed).child(kind, h, k)
    ranks = tuple(_attempt(trial, ctx, base.child("trial", t), cfg.retry_cap)
                  for t in range(cfg.trials))
    dim = max(ranks)
    cross = None
    if cfg.cross_check:
        cross = _attempt(trial, RationalCtx(cfg.exact_bound), base.child("exact"), cfg.retry_cap)
    if kind != SPAN and dim > expdim:
        raise InvariantViolation(f"{X.name}: {kind} h={h} k={k} dim {dim} exceeds expected {expdim}")
    return DimensionEstimate(X.name, kind, h, k, dim, expdim, len(ranks), cfg.prime,
                             cfg.seed, ranks, cross)


# ---------------------------------------------------------------------------
# Public dimension functions
# ---------------------------------------------------------------------------

def span_dim(X, cfg: ComputeCfg | None = None) -> DimensionEstimate:
    """Projective dimension of the linear span of ``X``."""
    cfg = cfg or ComputeCfg()
    return _estimate(X, SPAN, None, None, X.r, cfg,
                     lambda ctx, rng: _span_trial(X, ctx, rng))


def secant_dim(X, k: int, cfg: ComputeCfg | None = None) -> DimensionEstimate:
    """``dim S_k(X)`` from the span of tangent spaces at ``k+1`` general points."""
    cfg = cfg or ComputeCfg()
    expdim = expdim_Sk(X.n, k, X.r)
    return _estimate(X, SECANT, None, k, expdim, cfg,
                     lambda ctx, rng: _secant_trial(X, ctx, rng, k))


def grass_dim(X, k: int, cfg: ComputeCfg | None = None) -> DimensionEstimate:
    """``dim G_k(X)``: the span map ``X^{k+1} -> G(k, r)`` read in a pivot chart."""
    cfg = cfg or ComputeCfg()
    expdim = expdim_Gk(X.n, k, X.r)
    _guard(X.n * (k + 1), cfg)
    return _estimate(X, GRASS, None, k, expdim, cfg,
                     lambda ctx, rng: _grass_trial(X, ctx, rng, k))


def grass_secant_dim(X, h: int, k: int, cfg: ComputeCfg | None = None) -> DimensionEstimate:
    """``dim G_{h,k}(X)``.

    The ``h``-plane is the row space of ``L . M(t)`` with ``M(t)`` the
    ``k+1`` sampled points and ``L`` a free ``(h+1) x (k+1)`` matrix. The
    redundant ``GL(h+1)`` directions in ``L`` are harmless: the chart is a
    local isomorphism onto ``G(h, r)``, so they cannot raise the rank.
    """
    cfg = cfg or ComputeCfg()
    expdim = expdim_Ghk(X.n, h, k, X.r)
    _guard((X.n + h + 1) * (k + 1), cfg)
    return _estimate(X, GRASS_SECANT, h, k, expdim, cfg,
                     lambda ctx, rng: _grass_secant_trial(X, ctx, rng, h, k))


class Dims:
    """Memoised dimension estimates for one variety under one configuration."""

    def __init__(self, X, cfg: ComputeCfg | None = None):
        self.X = X
        self.cfg = cfg or ComputeCfg()
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def span(self) -> DimensionEstimate:
        return self._get((SPAN,), lambda: span_dim(self.X, self.cfg))

    def S(self, k: int) -> DimensionEstimate:
        return self._get((SECANT, k), lambda: secant_dim(self.X, k, self.cfg))

    def G(self, k: int) -> DimensionEstimate:
        return self._get((GRASS, k), lambda: grass_dim(self.X, k, self.cfg))

    def GHK(self, h: int, k: int) -> DimensionEstimate:
        return self._get((GRASS_SECANT, h, k), lambda: grass_secant_dim(self.X, h, k, self.cfg))

    def fiber(self, h: int, k: int) -> int:
        return self.G(k).dim + (h + 1) * (k - h) - self.GHK(h, k).dim

    def estimates(self) -> list[DimensionEstimate]:
        return list(self._cache.values())


def fiber_dim(X, h: int, k: int, cfg: ComputeCfg | None = None) -> int:
    """Dimension of the family of secant ``k``-planes through a general member of ``G_{h,k}``."""
    return Dims(X, cfg).fiber(h, k)


# ---------------------------------------------------------------------------
# Implication checks
# ---------------------------------------------------------------------------

PROP_1_1, PROP_1_6, PROP_1_7, THM_1_8, THM_1_9 = (
    "Prop1.1", "Prop1.6", "Prop1.7-conclusion", "Thm1.8", "Thm1.9")


def check_inequalities(X, max_k: int, cfg: ComputeCfg | None = None,
                       dims: Dims | None = None) -> list[CheckResult]:
    """Substitute computed dimensions into the general inequalities.

    A record fails only when its hypotheses hold and its conclusion does not.
    ``x`` below is always :func:`fiber_dim`.
    """
    dims = dims or Dims(X, cfg)
    n, r = X.n, X.r
    record = partial(CheckResult, variety=X.name)
    top = min(max_k, r)
    out = []

    for k in range(top + 1):
        g = dims.G(k)
        out.append(record(PROP_1_1, None, k, True, g.dim == g.expdim,
                               {"dim_G_k": g.dim, "expdim_G_k": g.expdim}))

    for k in range(2, top + 1):
        s_prev = dims.S(k - 1).dim
        s_k = dims.S(k).dim
        for h in range(1, k):
            ghk = dims.GHK(h, k).dim
            x = dims.fiber(h, k)
            bound16 = n * (k + 1) + k - x - h
            out.append(record(
                PROP_1_6, h, k, x > 0, s_k <= bound16,
                {"x": x, "dim_G_hk": ghk, "dim_S_k": s_k, "bound": bound16}))

            bound17 = n * (k + 1) + k - x - 2 * h
            out.append(record(
                PROP_1_7, h, k, s_prev < r and not X.is_cone and x > 0, s_k <= bound17,
                {"x": x, "dim_S_k-1": s_prev, "r": r, "is_cone": X.is_cone,
                 "dim_S_k": s_k, "bound": bound17}))

            count = (k - h) * (h + 1) + n * (k + 1)
            lower = dims.S(k - 1).dim if h == 1 else dims.GHK(h - 1, k - 1).dim
            bound18 = (k - h) * h + n * k
            out.append(record(
                THM_1_8, h, k, s_prev < r and ghk < count, lower < bound18,
                {"dim_S_k-1": s_prev, "r": r, "dim_G_hk": ghk, "count": count,
                 "dim_G_h-1,k-1": lower, "bound": bound18}))

    if top >= 2:
        g12 = dims.GHK(1, 2).dim
        s1 = dims.S(1).dim
        out.append(record(
            THM_1_9, 1, 2, g12 < 3 * n + 2 and s1 == 2 * n < r, X.is_cone,
            {"dim_G_12": g12, "3n+2": 3 * n + 2, "dim_S_1": s1, "2n": 2 * n, "r": r,
             "is_cone": X.is_cone}))
    return out
