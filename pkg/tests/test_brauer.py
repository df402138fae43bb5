from fractions import Fraction

import pytest

from dp4brauer.arith import REAL, Place, hilbert_symbol
from dp4brauer.brauer import (
    SupportPointError,
    adelic_sum,
    algebraic_pattern_class,
    evaluate_class,
    evaluate_named,
    lemma_algconst_applies,
    lemma_trconst_applies,
    transcendental_pattern_class,
    verify_algebraic_pattern,
    verify_transcendental_pattern,
)
from dp4brauer.fixtures import AlgebraicPattern, TranscendentalPattern, get_fixture
from dp4brauer.geometry import ProjPoint
from dp4brauer.polynomials import parse_poly

ZERO = Fraction(0)
HALF = Fraction(1, 2)
TWO = Place.finite(2)
THREE = Place.finite(3)


def P5(expr):
    return parse_poly(expr, 5)


def test_evaluate_tau_ex1_paper_points():
    fx = get_fixture("dp4_ex1")
    tau = fx.brauer_class("tau")
    assert evaluate_class(tau, ProjPoint.parse("-1:-1:-1:2:1"), TWO) == ZERO
    assert evaluate_class(tau, ProjPoint.parse("2/5:2/5:1/5:1/5:1"), TWO) == HALF


def test_evaluate_ex3_table():
    fx = get_fixture("dp4_ex3")
    x = fx.points("table_x")[0]
    xp = fx.points("table_xp")[0]
    xpp = fx.points("table_xpp")[0]
    places = [TWO, THREE, REAL]
    for cname in ("alpha1", "alpha2", "alpha12"):
        for v in places:
            assert evaluate_named(fx, cname, x, v) == ZERO, (cname, str(v))
    assert [evaluate_named(fx, "alpha1", xp, v) for v in places] == [HALF, ZERO, HALF]
    assert [evaluate_named(fx, "alpha2", xp, v) for v in places] == [HALF, HALF, HALF]
    assert [evaluate_named(fx, "alpha12", xpp, v) for v in places] == [HALF, ZERO, HALF]


def test_evaluate_scale_invariance():
    fx = get_fixture("dp4_ex1")
    tau = fx.brauer_class("tau")
    x = ProjPoint.parse("2/5:2/5:1/5:1/5:1")
    for lam in (3, Fraction(-7, 2)):
        assert evaluate_class(tau, x.scale(lam), TWO) == HALF


def test_evaluate_via_alternate_representative():
    # at (-1:0:1:0:1) on dp4_ex3, f = x0+x2 vanishes for alpha2; the alternate
    # 2*(x0+2*x2) = 2 kicks in, and (2,-6) is -1 at 2 and 3, +1 at infinity.
    # (These are the corrected values for the representative of Example 8.2;
    # the reciprocity sum over all places still vanishes.)
    fx = get_fixture("dp4_ex3")
    pt = ProjPoint.parse("-1:0:1:0:1")
    assert evaluate_named(fx, "alpha2", pt, TWO) == HALF
    assert evaluate_named(fx, "alpha2", pt, THREE) == HALF
    assert evaluate_named(fx, "alpha2", pt, REAL) == ZERO
    assert evaluate_named(fx, "alpha2", pt, Place.finite(5)) == ZERO
    assert evaluate_named(fx, "alpha1", pt, TWO) == HALF  # (-1,-1)_2 = -1
    assert evaluate_named(fx, "alpha1", pt, REAL) == HALF
    # reciprocity across the places where the value can be nonzero
    assert adelic_sum(fx, "alpha2", pt, [TWO, THREE, REAL]) == ZERO
    assert adelic_sum(fx, "alpha1", pt, [TWO, REAL]) == ZERO


def test_support_point_registered_value():
    fx = get_fixture("dp4_ex1")
    tau = fx.brauer_class("tau")
    origin = ProjPoint.parse("0:0:0:0:1")
    for v in (TWO, THREE, Place.finite(5), REAL):
        assert evaluate_class(tau, origin, v) == ZERO


def test_support_point_error_when_unregistered():
    fx = get_fixture("dp4_ex1")
    tau = fx.brauer_class("tau")
    bare = type(tau)(
        "tau_bare", tau.kind, tau.f_num, tau.f_den, tau.g_num, tau.g_den
    )
    with pytest.raises(SupportPointError):
        evaluate_class(bare, ProjPoint.parse("0:0:0:0:1"), TWO)
    # family point with x3 = 0 resolves via the alternate g only
    fam = get_fixture("dp4_ex1").family("x3_zero").point(2)
    with pytest.raises(SupportPointError):
        evaluate_class(bare, fam, TWO)
    assert evaluate_class(tau, fam, TWO) == ZERO


def test_additivity_ex2():
    fx = get_fixture("dp4_ex2")
    pts = [ProjPoint.parse("-1:1:0:-1:1")] + list(fx.points("sporadic")[:6])
    for place in (TWO, THREE, REAL):
        for x in pts:
            a = evaluate_named(fx, "alpha", x, place)
            t = evaluate_named(fx, "tau", x, place)
            at = evaluate_named(fx, "alpha_tau", x, place)
            assert (a + t) % 1 == at, (str(x), str(place))


def test_adelic_sums():
    fx = get_fixture("dp4_ex1")
    pt = ProjPoint.parse("-1:-1:-1:2:1")
    places = [TWO, THREE, Place.finite(5), REAL]
    assert adelic_sum(fx, "tau", pt, places) == ZERO
    fx3 = get_fixture("dp4_ex3")
    xp = fx3.points("table_xp")[0]
    assert adelic_sum(fx3, "alpha1", xp, [TWO, REAL]) == ZERO
    assert adelic_sum(fx3, "alpha1", xp, []) == ZERO


def test_verify_algebraic_patterns():
    fx2 = get_fixture("dp4_ex2")
    ok, msg = verify_algebraic_pattern(fx2.scheme, fx2.pattern_for("alpha"))
    assert ok, msg
    fx3 = get_fixture("dp4_ex3")
    for name in ("alpha1", "alpha2"):
        ok, msg = verify_algebraic_pattern(fx3.scheme, fx3.pattern_for(name))
        assert ok, msg
    # wrong linear forms must fail with a mismatch report
    bad = AlgebraicPattern("bad", (0, -1), P5("X1"), P5("X4"), P5("X3"), P5("X0"), -1)
    ok, msg = verify_algebraic_pattern(fx2.scheme, bad)
    assert not ok and "difference" in msg
    # square d must fail
    pat = fx2.pattern_for("alpha")
    sq = AlgebraicPattern("sq", pat.pencil, pat.l1, pat.l2, pat.l3, pat.l4, 4)
    assert not verify_algebraic_pattern(fx2.scheme, sq)[0]


def test_verify_transcendental_patterns():
    for name in ("dp4_ex1", "dp4_ex2"):
        fx = get_fixture(name)
        ok, msg = verify_transcendental_pattern(fx.scheme, fx.pattern_for("tau"))
        assert ok, msg
    fx = get_fixture("dp4_ex1")
    pat = fx.pattern_for("tau")
    dep = TranscendentalPattern("dep", pat.l1, pat.l2, pat.l3, pat.l4, pat.l1, pat.v, pat.a, pat.b)
    ok, msg = verify_transcendental_pattern(fx.scheme, dep)
    assert not ok


def test_derived_classes_match_paper_representatives():
    fx = get_fixture("dp4_ex1")
    derived = transcendental_pattern_class(fx.pattern_for("tau"))
    tau = fx.brauer_class("tau")
    assert derived.f_num.terms == tau.f_num.terms
    assert derived.g_num.terms == tau.g_num.terms
    fx3 = get_fixture("dp4_ex3")
    d1 = algebraic_pattern_class(fx3.pattern_for("alpha1"))
    assert d1.f_num.terms == fx3.brauer_class("alpha1").f_num.terms


def test_alpha2_derived_differs_by_constant_algebra():
    # pattern-derived (2(x0+x2), -6) and the paper's ((x0+x2), -6) differ by
    # the constant class (2,-6), nontrivial exactly at 2 and 3
    fx = get_fixture("dp4_ex3")
    derived = algebraic_pattern_class(fx.pattern_for("alpha2"))
    paper = fx.brauer_class("alpha2")
    for place in (TWO, THREE, Place.finite(5), Place.finite(7), REAL):
        shift = ZERO if hilbert_symbol(2, -6, place) == 1 else HALF
        for pt in fx.points("sporadic")[:4]:
            lhs = evaluate_class(derived, pt, place)
            rhs = (evaluate_class(paper, pt, place) + shift) % 1
            assert lhs == rhs, str(place)


def test_lemma_algconst():
    fx2 = get_fixture("dp4_ex2")
    pat = fx2.pattern_for("alpha")
    assert lemma_algconst_applies(fx2.scheme, pat, 7)
    assert not lemma_algconst_applies(fx2.scheme, pat, 2)  # p | 2d
    fx3 = get_fixture("dp4_ex3")
    p1 = fx3.pattern_for("alpha1")
    # the cusp (0:0:0:1:0) lies on the hyperplane, so the criterion holds at
    # p = 3 as well (Example 8.2(ii): constancy follows from the lemma too)
    assert lemma_algconst_applies(fx3.scheme, p1, 3)
    assert lemma_algconst_applies(fx3.scheme, p1, 5)
    p2 = fx3.pattern_for("alpha2")
    assert not lemma_algconst_applies(fx3.scheme, p2, 3)  # 3 | 2d = -12
    assert lemma_algconst_applies(fx3.scheme, p2, 5)


def test_lemma_trconst():
    fx1 = get_fixture("dp4_ex1")
    pat = fx1.pattern_for("tau")
    assert lemma_trconst_applies(fx1.scheme, pat, 17)
    assert not lemma_trconst_applies(fx1.scheme, pat, 2)
    fx2 = get_fixture("dp4_ex2")
    assert lemma_trconst_applies(fx2.scheme, fx2.pattern_for("tau"), 3)


def test_cusp_points():
    from dp4brauer.brauer import _cusp_point

    fx2 = get_fixture("dp4_ex2")
    assert _cusp_point(fx2.pattern_for("alpha")).normalized() == (0, 0, 1, 0, 0)
    fx3 = get_fixture("dp4_ex3")
    assert _cusp_point(fx3.pattern_for("alpha1")).normalized() == (0, 0, 0, 1, 0)
    assert _cusp_point(fx3.pattern_for("alpha2")).normalized() == (0, 0, 0, 0, 1)
