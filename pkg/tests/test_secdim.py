import pytest

import frozen
from secgrass import ComputeCfg
from secgrass.errors import SampleFailure, TooManyDirections
from secgrass.secdim import (Dims, check_inequalities, expdim_Ghk, expdim_Gk, expdim_Sk, fiber_dim,
                             grass_dim, grass_secant_dim, secant_dim, span_dim)
from secgrass.varieties import Variety, catalog, from_selector, scroll, veronese, with_cone_flag
from secgrass.polymap import PolyMap

CFG = ComputeCfg()


# -- expected dimensions ----------------------------------------------------

@pytest.mark.parametrize("args,value", [((2, 2, 5), 6), ((2, 4, 5), 5), ((1, 0, 3), 1)])
def test_expdim_Gk(args, value):
    assert expdim_Gk(*args) == value


@pytest.mark.parametrize("args,value", [((2, 1, 2, 5), 8), ((1, 1, 2, 3), 4)])
def test_expdim_Ghk(args, value):
    assert expdim_Ghk(*args) == value


@pytest.mark.parametrize("args,value", [((2, 1, 5), 5), ((2, 1, 4), 4), ((3, 0, 7), 3)])
def test_expdim_Sk(args, value):
    assert expdim_Sk(*args) == value


@pytest.mark.parametrize("n,k,r", [(n, k, r) for n in (1, 2, 3) for r in range(2, 9)
                                   for k in range(1, r + 1)])
def test_h_zero_reduces_to_secant(n, k, r):
    assert expdim_Ghk(n, 0, k, r) == expdim_Sk(n, k, r)


def test_expdim_index_checks():
    with pytest.raises(ValueError):
        expdim_Gk(2, 6, 5)
    with pytest.raises(ValueError):
        expdim_Ghk(2, 2, 2, 5)


# -- engine values against the frozen oracle --------------------------------

def test_span_dims():
    assert span_dim(veronese(2, 2)).dim == 5
    assert span_dim(scroll(3, 1)).dim == 5


def test_span_of_degenerate_map():
    f = PolyMap.from_monomials(2, [(0, 0), (1, 0), (1, 0), (2, 0), (2, 0), (2, 0)])
    assert span_dim(Variety("degenerate", 2, 5, f)).dim == 2


def test_veronese_secant_defect():
    e = secant_dim(veronese(2, 2), 1)
    assert (e.dim, e.expdim, e.defect) == (4, 5, 1)


def test_conic_secant_fills_plane():
    assert secant_dim(veronese(1, 2), 1).dim == 2


@pytest.mark.parametrize("d,k", sorted(frozen.RNC_SECANT))
def test_rnc_secant(d, k):
    assert secant_dim(veronese(1, d), k).dim == frozen.RNC_SECANT[d, k] == min(2 * k + 1, d)


@pytest.mark.parametrize("name,k", sorted(frozen.SECANT))
def test_secant_against_oracle(name, k):
    assert secant_dim(from_selector(name), k).dim == frozen.SECANT[name, k]


@pytest.mark.parametrize("name,k", sorted(frozen.GRASS))
def test_grass_against_oracle(name, k):
    assert grass_dim(from_selector(name), k).dim == frozen.GRASS[name, k]


@pytest.mark.parametrize("name,h,k", sorted(frozen.GRASS_SECANT))
def test_grass_secant_against_oracle(name, h, k):
    assert grass_secant_dim(from_selector(name), h, k).dim == frozen.GRASS_SECANT[name, h, k]


def test_veronese_lines_fill_grassmannian():
    e = grass_secant_dim(veronese(2, 2), 1, 2)
    assert (e.dim, e.expdim) == (8, 8)


def test_scroll_lines_defective():
    e = grass_secant_dim(scroll(2, 2), 1, 2)
    assert (e.dim, e.expdim, e.defect) == (7, 8, 1)


def test_identity_chart_of_projective_space():
    # X = P^3 in its own affine chart
    P3 = Variety("P3", 3, 3, PolyMap.from_monomials(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert grass_dim(P3, 0).dim == 3
    assert secant_dim(P3, 0).dim == 3


@pytest.mark.parametrize("name,h,k,x", [("veronese:2,2", 1, 2, 0), ("scroll:2,2", 1, 2, 1),
                                        ("veronese:1,3", 1, 2, 1)])
def test_fiber_dim(name, h, k, x):
    assert fiber_dim(from_selector(name), h, k) == x


# -- invariants ----------------------------------------------------------------

@pytest.mark.parametrize("X", catalog(), ids=lambda X: X.name)
def test_prop_1_1_on_catalog(X):
    for k in range(X.r + 1):
        e = grass_dim(X, k)
        assert e.dim == e.expdim, (X.name, k)


@pytest.mark.parametrize("X", catalog(), ids=lambda X: X.name)
def test_bounds_and_monotonicity(X):
    d = Dims(X)
    top = min(3, X.r)
    for k in range(top + 1):
        assert d.S(k).dim <= d.S(k).expdim
        if k < top:
            assert d.S(k).dim <= d.S(k + 1).dim
        for h in range(k):
            assert d.GHK(h, k).dim <= d.GHK(h, k).expdim
            if k < top:
                assert d.GHK(h, k).dim <= d.GHK(h, k + 1).dim


@pytest.mark.parametrize("X", catalog(), ids=lambda X: X.name)
def test_two_algorithms_for_secant_agree(X):
    for k in range(1, min(3, X.r) + 1):
        assert grass_secant_dim(X, 0, k).dim == secant_dim(X, k).dim


@pytest.mark.parametrize("name", ["veronese:2,2", "scroll:2,2", "cone-rnc4", "veronese:2,3@P5"])
def test_stable_across_seeds(name):
    X = from_selector(name)
    dims = set()
    for seed in range(5):
        cfg = ComputeCfg(seed=seed)
        dims.add((secant_dim(X, 1, cfg).dim, grass_dim(X, 2, cfg).dim,
                  grass_secant_dim(X, 1, 2, cfg).dim))
    assert len(dims) == 1


def test_reported_dim_is_max_over_trials():
    e = grass_secant_dim(scroll(3, 1), 1, 2, ComputeCfg(trials=5))
    assert e.trials_used == len(e.trial_ranks) == 5
    assert e.dim == max(e.trial_ranks)
    assert all(r <= e.dim for r in e.trial_ranks)


def test_provenance_recorded():
    e = secant_dim(veronese(2, 2), 1, ComputeCfg(seed=17, prime=4294967291))
    assert (e.seed, e.prime, e.kind, e.k) == (17, 4294967291, "S_k", 1)


def test_other_prime_same_answer():
    cfg = ComputeCfg(prime=4294967291)
    assert grass_secant_dim(scroll(2, 2), 1, 2, cfg).dim == 7


def test_cross_check_agrees():
    cfg = ComputeCfg(cross_check=True)
    for e in [secant_dim(veronese(2, 2), 1, cfg), grass_secant_dim(scroll(2, 2), 1, 2, cfg)]:
        assert e.cross_check_agrees


def test_direction_guard():
    with pytest.raises(TooManyDirections):
        grass_secant_dim(veronese(2, 3), 2, 8, ComputeCfg(max_directions=20))


def test_degenerate_variety_exhausts_retries():
    # all points coincide, so no two of them ever span a line
    point = Variety("point", 1, 2, PolyMap.from_terms(1, [[(1, [0])], [(2, [0])], [(3, [0])]]))
    with pytest.raises(SampleFailure):
        grass_dim(point, 1, ComputeCfg(retry_cap=2))


# -- implication checks -----------------------------------------------------

def by_rule(checks, rule, h, k):
    (c,) = [c for c in checks if c.rule == rule and c.h == h and c.k == k]
    return c


def test_scroll_22_prop_1_6():
    c = by_rule(check_inequalities(scroll(2, 2), 2), "Prop1.6", 1, 2)
    assert c.hypothesis_held and c.conclusion_held
    assert c.details["x"] == 1 and c.details["bound"] == 6 and c.details["dim_S_k"] == 5


def test_scroll_22_thm_1_8_vacuous():
    c = by_rule(check_inequalities(scroll(2, 2), 2), "Thm1.8", 1, 2)
    assert not c.hypothesis_held and not c.failed


def test_cone_thm_1_9():
    c = by_rule(check_inequalities(from_selector("cone-rnc4"), 2), "Thm1.9", 1, 2)
    assert c.hypothesis_held and c.conclusion_held


def test_mislabeled_cone_fails_thm_1_9():
    X = with_cone_flag(from_selector("cone-rnc4"), False)
    c = by_rule(check_inequalities(X, 2), "Thm1.9", 1, 2)
    assert c.failed


@pytest.mark.parametrize("X", catalog(), ids=lambda X: X.name)
def test_no_violations_on_catalog(X):
    failed = [c for c in check_inequalities(X, 3) if c.failed]
    assert not failed
