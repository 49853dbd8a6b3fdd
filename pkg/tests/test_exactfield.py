import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secgrass.errors import CompositeModulus, DuplicateDirection, ModulusTooSmall
from secgrass.exactfield import (MERSENNE_61, Jet, RationalCtx, Rng, is_prime, lift_to_jets,
                                 make_field, sample_vector)
from secgrass.polymap import PolyMap

F = make_field()
residues = st.integers(min_value=0, max_value=F.p - 1)


def test_default_modulus_is_mersenne_61():
    assert make_field(2305843009213693951).p == MERSENNE_61


def test_even_modulus_rejected():
    with pytest.raises(CompositeModulus):
        make_field(2 ** 32)


def test_small_modulus_rejected():
    with pytest.raises(ModulusTooSmall):
        make_field(2 ** 31 - 1)
    with pytest.raises(ModulusTooSmall):
        make_field(7)


@pytest.mark.parametrize("p", [2147483659, 4294967291, 18446744073709551557])
def test_other_primes_accepted(p):
    assert make_field(p).p == p


def test_miller_rabin_against_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))
    assert all(is_prime(n) == slow(n) for n in range(2000))
    # strong pseudoprimes to several small bases
    assert not is_prime(3215031751)
    assert not is_prime(3825123056546413051)


def test_field_axioms_random():
    rng = random.Random(1)
    for _ in range(10_000):
        a, b, c = (rng.randrange(F.p) for _ in range(3))
        assert (a * b % F.p) * c % F.p == a * (b * c % F.p) % F.p
        assert a * (b + c) % F.p == (a * b + a * c) % F.p
        if a:
            assert a * F.inv(a) % F.p == 1


def test_sample_vector_empty():
    assert sample_vector(F, Rng(42), 0) == []


def test_sample_vector_deterministic():
    assert sample_vector(F, Rng(42), 3) == sample_vector(F, Rng(42), 3)
    assert all(0 <= x < F.p for x in sample_vector(F, Rng(42), 100))


def test_substreams_differ():
    base = Rng(42)
    for trial in range(100):
        a = sample_vector(F, base.child("trial", trial), 4)
        b = sample_vector(F, base.child("trial", trial + 1), 4)
        assert a != b


def test_substream_independent_of_order():
    base = Rng(7)
    forward = [sample_vector(F, base.child(i), 2) for i in range(5)]
    backward = [sample_vector(F, base.child(i), 2) for i in reversed(range(5))][::-1]
    assert forward == backward


def test_rng_rejects_out_of_range_seed():
    with pytest.raises(ValueError):
        Rng(-1)
    with pytest.raises(ValueError):
        Rng(1 << 64)


def test_rational_ctx_samples_small_integers():
    Q = RationalCtx(bound=5)
    xs = sample_vector(Q, Rng(3), 200)
    assert all(isinstance(x, int) and -5 <= x <= 5 for x in xs)
    assert Q.inv(4) == Fraction(1, 4)
    assert Q.inv(Fraction(1, 3)) == 3


def test_lift_identity_block():
    a, b = lift_to_jets(F, [5, 9], [0, 1])
    assert (a.val, a.partials) == (5, (1, 0))
    assert (b.val, b.partials) == (9, (0, 1))


def test_lift_no_directions():
    jets = lift_to_jets(F, [5, 9], [])
    assert all(j.partials == () for j in jets)
    jets = lift_to_jets(F, [5, 9], [], ndirs=3)
    assert all(j.partials == (0, 0, 0) for j in jets)


def test_lift_with_offset():
    a, b = lift_to_jets(F, [1, 2], [1], ndirs=4, start=2)
    assert a.partials == (0, 0, 0, 0)
    assert b.partials == (0, 0, 1, 0)


def test_lift_duplicate_direction():
    with pytest.raises(DuplicateDirection):
        lift_to_jets(F, [1, 2], [0, 0])


def test_product_rule_xy():
    x, y = lift_to_jets(F, [3, 11], [0, 1])
    z = x * y
    assert z.val == 33
    assert z.partials == (11, 3)


@settings(max_examples=200)
@given(residues, residues, residues, residues)
def test_leibniz(a, b, da, db):
    x = Jet(F, a, [da])
    y = Jet(F, b, [db])
    assert (x * y).partials[0] == (a * db + b * da) % F.p


@settings(max_examples=200)
@given(residues.filter(bool), residues)
def test_inverse_rule(a, da):
    x = Jet(F, a, [da])
    inv = x.inverse()
    assert inv.val * a % F.p == 1
    assert inv.partials[0] == (-da * pow(a, -2, F.p)) % F.p
    one = x * inv
    assert one.val == 1 and one.partials == (0,)


def test_zero_jet_not_invertible():
    with pytest.raises(ZeroDivisionError):
        Jet(F, 0, [1]).inverse()


def test_jets_agree_with_symbolic_partials():
    rng = random.Random(5)
    for _ in range(25):
        arity = rng.randint(1, 3)
        coords = [[(rng.randint(-20, 20), [rng.randint(0, 4) for _ in range(arity)])
                   for _ in range(rng.randint(1, 5))] for _ in range(3)]
        f = PolyMap.from_terms(arity, coords)
        x = [rng.randrange(F.p) for _ in range(arity)]
        jets = f.eval(lift_to_jets(F, x, range(arity)), F)
        for i in range(arity):
            assert [j.partials[i] for j in jets] == f.partial(i).eval(x, F)
        assert [j.val for j in jets] == f.eval(x, F)


def test_jet_power_matches_repeated_product():
    x = Jet(F, 7, [1, 2])
    assert x ** 5 == x * x * x * x * x
    assert x ** 0 == Jet(F, 1, [0, 0])
