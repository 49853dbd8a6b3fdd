"""Prime-field arithmetic, first-order jets over it, and counter-based sampling.

Two coefficient contexts share one small protocol (``reduce``, ``inv``,
``sample``, ``is_zero``):

* :class:`FieldCtx` -- residues modulo a large prime, the default engine.
* :class:`RationalCtx` -- exact rationals (``int``/``Fraction``), used by the
  cross-check mode at small integer sample points.

Everything downstream (polynomial evaluation, elimination, jets) is written
against that protocol, so the same code path runs in either characteristic.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CompositeModulus, DuplicateDirection, ModulusTooSmall

MERSENNE_61 = (1 << 61) - 1
DEFAULT_PRIME = MERSENNE_61
MIN_MODULUS = 1 << 31

# Deterministic Miller-Rabin witnesses, exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test with a fixed witness set."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rng:
    """Counter-based pseudorandom stream.

    A draw is a hash of ``(seed, key, index)``, so a stream has no mutable
    state: the same ``Rng`` always yields the same numbers, and sub-streams
    obtained with :meth:`child` are independent of evaluation order.
    """

    seed: int
    key: tuple = ()

    def __post_init__(self):
        if not 0 <= self.seed < 1 << 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def child(self, *labels) -> "Rng":
        return Rng(self.seed, self.key + tuple(labels))

    def _word(self, index: int) -> int:
        msg = repr((self.seed, self.key, index)).encode()
        return int.from_bytes(hashlib.blake2b(msg, digest_size=16).digest(), "little")

    def integers(self, count: int, low: int, high: int) -> list[int]:
        """``count`` integers uniform on ``[low, high)`` (128-bit hash, bias < 2**-64)."""
        span = high - low
        if span <= 0:
            raise ValueError("empty range")
        return [low + self._word(i) % span for i in range(count)]


# ---------------------------------------------------------------------------
# Coefficient contexts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    """Arithmetic context for residues modulo the prime ``p``."""

    p: int = DEFAULT_PRIME
    exact: bool = field(default=False, init=False, repr=False)

    def reduce(self, x: int) -> int:
        return x % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero residue")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def sample(self, rng: Rng, length: int) -> list[int]:
        return rng.integers(length, 0, self.p)

    @property
    def label(self) -> str:
        return str(self.p)


@dataclass(frozen=True)
class RationalCtx:
    """Exact rational arithmetic; samples are small integers in ``[-bound, bound]``."""

    bound: int = 50
    exact: bool = field(default=True, init=False, repr=False)

    def reduce(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.reduce(Fraction(1) / a)

    def is_zero(self, a) -> bool:
        return a == 0

    def sample(self, rng: Rng, length: int) -> list[int]:
        return rng.integers(length, -self.bound, self.bound + 1)

    @property
    def label(self) -> str:
        return "QQ"


def make_field(p: int = DEFAULT_PRIME) -> FieldCtx:
    """Build a prime-field context, refusing small or composite moduli."""
    if p < MIN_MODULUS:
        raise ModulusTooSmall(f"modulus {p} is below 2^31")
    if not is_prime(p):
        raise CompositeModulus(f"modulus {p} is not prime")
    return FieldCtx(p)


def sample_vector(ctx, rng: Rng, length: int) -> list:
    """Uniform field elements, a pure function of ``(rng.seed, rng.key, position)``."""
    if length < 0:
        raise ValueError("length must be non-negative")
    return ctx.sample(rng, length)


# ---------------------------------------------------------------------------
# Jets
# ---------------------------------------------------------------------------

class Jet:
    """A field value together with its first-order partials.

    Arithmetic follows the Leibniz rule, so evaluating a polynomial at
    lifted coordinates yields its gradient along the active directions.
    Plain integers mix freely with jets as constants.
    """

    __slots__ = ("ctx", "val", "partials")

    def __init__(self, ctx, val, partials: Sequence):
        self.ctx = ctx
        self.val = val
        self.partials = tuple(partials)

    @classmethod
    def constant(cls, ctx, val, ndirs: int) -> "Jet":
        return cls(ctx, ctx.reduce(val), (0,) * ndirs)

    @property
    def ndirs(self) -> int:
        return len(self.partials)

    def __repr__(self):
        return f"Jet({self.val}, {list(self.partials)})"

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.val == other.val and self.partials == other.partials
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        red = self.ctx.reduce
        if isinstance(other, Jet):
            return Jet(self.ctx, red(self.val + other.val),
                       [red(a + b) for a, b in zip(self.partials, other.partials)])
        return Jet(self.ctx, red(self.val + other), self.partials)

    __radd__ = __add__

    def __neg__(self):
        red = self.ctx.reduce
        return Jet(self.ctx, red(-self.val), [red(-a) for a in self.partials])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        red = self.ctx.reduce
        if isinstance(other, Jet):
            a, b = self.val, other.val
            return Jet(self.ctx, red(a * b),
                       [red(a * db + b * da) for da, db in zip(self.partials, other.partials)])
        return Jet(self.ctx, red(self.val * other), [red(other * a) for a in self.partials])

    __rmul__ = __mul__

    def inverse(self) -> "Jet":
        if self.ctx.is_zero(self.val):
            raise ZeroDivisionError("jet with zero value is not invertible")
        red = self.ctx.reduce
        iv = self.ctx.inv(self.val)
        m = red(-iv * iv)
        return Jet(self.ctx, iv, [red(m * a) for a in self.partials])

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.inverse()
        return self * self.ctx.inv(other)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = Jet.constant(self.ctx, 1, self.ndirs)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out


def lift_to_jets(ctx, point: Sequence, active: Iterable[int], ndirs: int | None = None,
                 start: int = 0) -> list[Jet]:
    """Lift ``point`` to jets, seeding the coordinates listed in ``active``.

    The ``j``-th entry of ``active`` (a coordinate index) receives direction
    ``start + j``; other coordinates get zero partials. ``ndirs`` defaults to
    ``start + len(active)``.
    """
    active = list(active)
    if len(set(active)) != len(active):
        raise DuplicateDirection(f"repeated direction in {active}")
    if any(not 0 <= i < len(point) for i in active):
        raise IndexError(f"active indices {active} out of range for point of length {len(point)}")
    if ndirs is None:
        ndirs = start + len(active)
    if start + len(active) > ndirs:
        raise ValueError("directions exceed declared count")
    slot = {i: start + j for j, i in enumerate(active)}
    jets = []
    for i, x in enumerate(point):
        partials = [0] * ndirs
        if i in slot:
            partials[slot[i]] = 1
        jets.append(Jet(ctx, ctx.reduce(x), partials))
    return jets
