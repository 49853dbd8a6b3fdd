"""Sparse polynomial maps with integer coefficients.

A :class:`PolyMap` is a tuple of polynomials in ``arity`` variables. Each
polynomial is a tuple of :class:`Term` in canonical form: exponent vectors
are distinct, coefficients nonzero, and terms sorted graded-lex (highest
total degree first, ties broken lexicographically, largest first).

Coefficients are Python ints and stay unreduced; evaluation reduces through
the coefficient context, so one map serves every prime and the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ArityMismatch, IndexOutOfRange, ShapeMismatch
from .exactfield import Jet


class Term(NamedTuple):
    coeff: int
    exps: tuple[int, ...]


def _grlex_key(exps):
    return (sum(exps), exps)


def canonical_poly(terms: Iterable, arity: int) -> tuple[Term, ...]:
    """Merge like terms, drop zeros, and sort graded-lex descending."""
    acc: dict[tuple[int, ...], int] = {}
    for coeff, exps in terms:
        exps = tuple(int(e) for e in exps)
        if len(exps) != arity:
            raise ArityMismatch(f"exponent vector {exps} has length {len(exps)}, expected {arity}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        acc[exps] = acc.get(exps, 0) + int(coeff)
    out = [Term(c, e) for e, c in acc.items() if c != 0]
    out.sort(key=lambda t: _grlex_key(t.exps), reverse=True)
    return tuple(out)


@dataclass(frozen=True)
class PolyMap:
    arity: int
    coords: tuple[tuple[Term, ...], ...]
    name: str = ""

    @classmethod
    def from_terms(cls, arity: int, coords: Iterable[Iterable], name: str = "") -> "PolyMap":
        return cls(arity, tuple(canonical_poly(p, arity) for p in coords), name)

    @classmethod
    def from_monomials(cls, arity: int, monomials: Iterable[Sequence[int]], name: str = "") -> "PolyMap":
        """One coordinate per exponent vector, each with coefficient 1."""
        return cls.from_terms(arity, [[(1, m)] for m in monomials], name)

    def __len__(self):
        return len(self.coords)

    @property
    def degree(self) -> int:
        return max((sum(t.exps) for p in self.coords for t in p), default=0)

    def eval(self, point: Sequence, ctx) -> list:
        """Evaluate every coordinate at ``point`` (field elements or jets)."""
        return eval_map(self, point, ctx)

    def partial(self, i: int) -> "PolyMap":
        return partial(self, i)


def _powers(x, top: int, ctx):
    pw = [1, x]
    for _ in range(2, top + 1):
        nxt = pw[-1] * x
        pw.append(nxt if isinstance(nxt, Jet) else ctx.reduce(nxt))
    return pw


def eval_map(f: PolyMap, point: Sequence, ctx) -> list:
    if len(point) != f.arity:
        raise ArityMismatch(f"map {f.name!r} takes {f.arity} inputs, got {len(point)}")
    red = ctx.reduce
    top = [0] * f.arity
    for p in f.coords:
        for t in p:
            for i, e in enumerate(t.exps):
                if e > top[i]:
                    top[i] = e
    pows = [_powers(x, top[i], ctx) for i, x in enumerate(point)]

    jet_mode = any(isinstance(x, Jet) for x in point)
    zero = Jet.constant(ctx, 0, point[0].ndirs) if jet_mode else 0
    out = []
    for p in f.coords:
        acc = zero
        for coeff, exps in p:
            mono = red(coeff)
            for i, e in enumerate(exps):
                if e:
                    mono = mono * pows[i][e]
                    if not jet_mode:
                        mono = red(mono)
            acc = acc + mono
        out.append(acc if jet_mode else red(acc))
    # a constant coordinate evaluated in jet mode comes back as a plain int
    if jet_mode:
        nd = point[0].ndirs
        out = [v if isinstance(v, Jet) else Jet.constant(ctx, v, nd) for v in out]
    return out


def partial(f: PolyMap, i: int) -> PolyMap:
    """Formal derivative of every coordinate with respect to input ``i``."""
    if not 0 <= i < f.arity:
        raise IndexOutOfRange(f"input index {i} outside 0..{f.arity - 1}")
    coords = []
    for p in f.coords:
        terms = []
        for coeff, exps in p:
            e = exps[i]
            if e:
                d = list(exps)
                d[i] = e - 1
                terms.append((coeff * e, d))
        coords.append(terms)
    return PolyMap.from_terms(f.arity, coords, f"d{i}({f.name})" if f.name else "")


def compose_linear(f: PolyMap, A: Sequence[Sequence[int]], name: str | None = None) -> PolyMap:
    """The map ``x -> A . f(x)`` for an integer matrix ``A`` with ``len(f)`` columns."""
    for row in A:
        if len(row) != len(f.coords):
            raise ShapeMismatch(f"matrix row of length {len(row)} against {len(f.coords)} coordinates")
    coords = []
    for row in A:
        terms = [(a * c, e) for a, p in zip(row, f.coords) if a for c, e in p]
        coords.append(terms)
    return PolyMap.from_terms(f.arity, coords, f.name if name is None else name)


def poly_add(p, q, arity: int) -> tuple[Term, ...]:
    return canonical_poly(list(p) + list(q), arity)


def poly_mul(p, q, arity: int) -> tuple[Term, ...]:
    terms = [(a * b, tuple(x + y for x, y in zip(e, f))) for a, e in p for b, f in q]
    return canonical_poly(terms, arity)
