"""Parametrized projective varieties and the built-in catalog.

A :class:`Variety` is the closure of the image of an affine-chart polynomial
map ``F^n -> F^{r+1}``, read projectively. General points are obtained by
sampling parameters, never by solving equations.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from math import comb
from pathlib import Path

from . import linalg
from .errors import InvariantViolation, ParseError, TargetTooSmall
from .exactfield import Rng, lift_to_jets
from .polymap import PolyMap, compose_linear

PROJECTION_RANGE = 99
CATALOG_SEED = 20_000_101


@dataclass(frozen=True)
class Variety:
    name: str
    n: int
    r: int
    map: PolyMap
    is_cone: bool = False
    degree: int | None = None

    def __post_init__(self):
        if self.map.arity != self.n:
            raise InvariantViolation(f"{self.name}: map arity {self.map.arity} != n = {self.n}")
        if len(self.map.coords) != self.r + 1:
            raise InvariantViolation(
                f"{self.name}: {len(self.map.coords)} coordinates for ambient P^{self.r}")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _monomials_upto(nvars: int, d: int):
    for deg in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            yield tuple(e)


def veronese(n: int, d: int) -> Variety:
    """Affine chart of the ``d``-uple embedding of ``P^n``."""
    if n < 1 or d < 1:
        raise ValueError("veronese needs n >= 1 and d >= 1")
    monos = list(_monomials_upto(n, d))
    assert len(monos) == comb(n + d, d)
    return Variety(f"veronese:{n},{d}", n, len(monos) - 1,
                   PolyMap.from_monomials(n, monos), False, d ** n)


def scroll(a: int, b: int) -> Variety:
    """Rational normal scroll S(a, b): ``(1, s, .., s^a, u, us, .., u s^b)``.

    ``b = 0`` gives the cone over the rational normal curve of degree ``a``.
    """
    if a < b or b < 0 or a + b < 1:
        raise ValueError(f"scroll needs a >= b >= 0 and a + b >= 1, got ({a}, {b})")
    monos = [(i, 0) for i in range(a + 1)] + [(j, 1) for j in range(b + 1)]
    return Variety(f"scroll:{a},{b}", 2, a + b + 1,
                   PolyMap.from_monomials(2, monos), b == 0, a + b)


def segre(n: int, m: int) -> Variety:
    """Affine chart of the Segre embedding of ``P^n x P^m``."""
    if n < 1 or m < 1:
        raise ValueError("segre needs n, m >= 1")
    left = [None] + list(range(n))
    right = [None] + list(range(n, n + m))
    monos = []
    for i in left:
        for j in right:
            e = [0] * (n + m)
            if i is not None:
                e[i] = 1
            if j is not None:
                e[j] = 1
            monos.append(tuple(e))
    return Variety(f"segre:{n},{m}", n + m, (n + 1) * (m + 1) - 1,
                   PolyMap.from_monomials(n + m, monos), False, comb(n + m, n))


def cone_over(X: Variety, vertex_count: int, name: str | None = None) -> Variety:
    """Join of ``X`` with ``vertex_count`` new coordinate points.

    New parameters ``u_1..u_v`` enter as extra coordinates, so the ambient
    space and the dimension both grow by ``vertex_count``.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be non-negative")
    n, v = X.n, vertex_count
    coords = [[(c, tuple(e) + (0,) * v) for c, e in p] for p in X.map.coords]
    for j in range(v):
        e = [0] * (n + v)
        e[n + j] = 1
        coords.append([(1, tuple(e))])
    label = name or (f"cone({X.name},{v})" if v else X.name)
    return Variety(label, n + v, X.r + v, PolyMap.from_terms(n + v, coords),
                   True, X.degree)


def project(X: Variety, target_r: int, rng: Rng, name: str | None = None) -> Variety:
    """Compose with a random integer matrix, i.e. project from a random centre."""
    if target_r >= X.r:
        raise ValueError(f"target P^{target_r} is not smaller than P^{X.r}")
    if target_r < X.n:
        raise TargetTooSmall(f"cannot project an {X.n}-fold to P^{target_r}")
    cols = X.r + 1
    flat = rng.child("projection", X.name, target_r).integers(
        (target_r + 1) * cols, -PROJECTION_RANGE, PROJECTION_RANGE + 1)
    A = [flat[i * cols:(i + 1) * cols] for i in range(target_r + 1)]
    label = name or f"{X.name}@P{target_r}"
    return Variety(label, X.n, target_r, compose_linear(X.map, A), X.is_cone, X.degree)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def cone_rnc4() -> Variety:
    return cone_over(veronese(1, 4), 1, name="cone-rnc4")


def projected_veronese23() -> Variety:
    return project(veronese(2, 3), 5, Rng(CATALOG_SEED), name="veronese:2,3@P5")


_BUILDERS = {
    "veronese": (veronese, 2),
    "scroll": (scroll, 2),
    "segre": (segre, 2),
}

_NAMED = {
    "cone-rnc4": cone_rnc4,
    "veronese:2,3@P5": projected_veronese23,
}

CATALOG = (
    "veronese:2,2",
    "veronese:2,3",
    "veronese:2,3@P5",
    "veronese:1,2",
    "veronese:1,3",
    "veronese:1,4",
    "scroll:2,2",
    "scroll:3,1",
    "scroll:4,0",
    "cone-rnc4",
    "segre:1,1",
    "segre:1,2",
)


def from_selector(selector: str) -> Variety:
    """Resolve ``name:arg,arg`` (e.g. ``scroll:3,1``) or a named catalog entry."""
    selector = selector.strip()
    if selector in _NAMED:
        return _NAMED[selector]()
    head, _, args = selector.partition(":")
    if head not in _BUILDERS or not args:
        raise ValueError(f"unknown variety selector {selector!r}")
    fn, nargs = _BUILDERS[head]
    try:
        values = [int(a) for a in args.split(",")]
    except ValueError:
        raise ValueError(f"non-integer arguments in selector {selector!r}") from None
    if len(values) != nargs:
        raise ValueError(f"{head} takes {nargs} arguments, got {len(values)}")
    return fn(*values)


def catalog() -> list[Variety]:
    return [from_selector(s) for s in CATALOG]


# ---------------------------------------------------------------------------
# Document format
# ---------------------------------------------------------------------------

def to_document(V: Variety) -> dict:
    return {
        "name": V.name,
        "n": V.n,
        "r": V.r,
        "is_cone": V.is_cone,
        "degree": V.degree,
        "coords": [[{"c": str(c), "e": list(e)} for c, e in p] for p in V.map.coords],
    }


def save_variety(V: Variety) -> str:
    return json.dumps(to_document(V), sort_keys=True, indent=1) + "\n"


def _require(doc, key, kind, where="document"):
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    val = doc[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise ParseError(f"{where}: field {key!r} must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise ParseError(f"{where}: field {key!r} must be {kind.__name__}")
    return val


def load_variety(source) -> Variety:
    """Parse a variety document from a path or from its text."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        text = Path(source).read_text()
    else:
        text = source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be an object")

    name = _require(doc, "name", str)
    n = _require(doc, "n", int)
    r = _require(doc, "r", int)
    is_cone = _require(doc, "is_cone", bool)
    degree = doc.get("degree")
    if degree is not None and (isinstance(degree, bool) or not isinstance(degree, int)):
        raise ParseError("document: field 'degree' must be an integer or null")
    coords = _require(doc, "coords", list)
    if len(coords) != r + 1:
        raise InvariantViolation(f"{len(coords)} coordinates for ambient P^{r}")

    polys = []
    for i, poly in enumerate(coords):
        if not isinstance(poly, list):
            raise ParseError(f"coords[{i}]: polynomial must be a list of terms")
        terms = []
        for j, term in enumerate(poly):
            where = f"coords[{i}][{j}]"
            if not isinstance(term, dict):
                raise ParseError(f"{where}: term must be an object")
            c = _require(term, "c", str, where)
            try:
                coeff = int(c)
            except ValueError:
                raise ParseError(f"{where}: coefficient {c!r} is not a decimal integer") from None
            e = _require(term, "e", list, where)
            if any(isinstance(x, bool) or not isinstance(x, int) for x in e):
                raise ParseError(f"{where}: exponents must be integers")
            if len(e) != n:
                raise InvariantViolation(f"{where}: {len(e)} exponents for n = {n}")
            terms.append((coeff, e))
        polys.append(terms)
    return Variety(name, n, r, PolyMap.from_terms(n, polys), is_cone, degree)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    name: str
    n: int
    r: int
    immersive_rank: int
    span_dim: int
    is_cone: bool
    degree: int | None

    @property
    def immersive(self) -> bool:
        return self.immersive_rank == self.n + 1

    @property
    def nondegenerate(self) -> bool:
        return self.span_dim == self.r

    @property
    def ok(self) -> bool:
        return self.immersive and self.nondegenerate

    def as_dict(self) -> dict:
        return {
            "name": self.name, "n": self.n, "r": self.r,
            "immersive_rank": self.immersive_rank, "immersive": self.immersive,
            "span_dim": self.span_dim, "nondegenerate": self.nondegenerate,
            "is_cone": self.is_cone, "degree": self.degree, "ok": self.ok,
        }


def immersive_rank(X: Variety, ctx, rng: Rng) -> int:
    """Rank of ``[phi(t); d phi/dt_1; ...; d phi/dt_n]`` at one sampled ``t``."""
    t = ctx.sample(rng, X.n)
    jets = X.map.eval(lift_to_jets(ctx, t, range(X.n)), ctx)
    rows = [[j.val for j in jets]] + [[j.partials[i] for j in jets] for i in range(X.n)]
    return linalg.rank(rows, ctx)


def validate(X: Variety, cfg=None) -> ValidationReport:
    """Check the standing hypotheses: generically immersive and non-degenerate."""
    from .secdim import ComputeCfg, span_dim

    cfg = cfg or ComputeCfg()
    ctx = cfg.field()
    base = Rng(cfg.seed).child("validate", X.name)
    imm = max(immersive_rank(X, ctx, base.child(t)) for t in range(cfg.trials))
    span = span_dim(X, cfg).dim
    return ValidationReport(X.name, X.n, X.r, imm, span, X.is_cone, X.degree)


def with_cone_flag(X: Variety, is_cone: bool) -> Variety:
    return replace(X, is_cone=is_cone)
