from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp4brauer.fixtures import catalog, get_fixture
from dp4brauer.geometry import (
    ProjPoint,
    Scheme,
    evaluate_form,
    is_integral_point,
    on_surface,
    pencil_degenerates,
    smoothness_check,
)
from dp4brauer.polynomials import PolyForm, parse_poly


def P5(expr):
    return parse_poly(expr, 5)


def test_evaluate_form_examples():
    f = P5("X0*X1 + X2^2 - X4*X3")
    assert evaluate_form(f, ProjPoint.parse("-1:-1:-1:2:1")) == 0
    assert evaluate_form(f, ProjPoint.parse("0:0:0:0:1")) == 0
    g = P5("X0^2 + X3^2")
    assert evaluate_form(g, ProjPoint.parse("0:1:0:4:0")) == 16


def test_on_surface_examples():
    ex1 = get_fixture("dp4_ex1").scheme
    ex3 = get_fixture("dp4_ex3").scheme
    assert not on_surface(ex1, ProjPoint.parse("17:3:4:13:1"))
    assert on_surface(ex1, ProjPoint.parse("0:-2:1:1:1"))
    assert on_surface(ex3, ProjPoint.parse("-1:0:1:0:1"))


def test_is_integral_point():
    ex1 = get_fixture("dp4_ex1").scheme
    assert is_integral_point(ex1, ProjPoint.parse("-1:-1:-1:2:1"))
    assert not is_integral_point(ex1, ProjPoint.parse("2/5:2/5:1/5:1/5:1"))
    assert on_surface(ex1, ProjPoint.parse("2/5:2/5:1/5:1/5:1"))
    # boundary points are never integral
    assert not is_integral_point(ex1, ProjPoint.parse("0:1:0:0:0"))


def test_boundary_rational_points_on_ex1():
    ex1 = get_fixture("dp4_ex1").scheme
    for txt in ("0:1:0:0:0", "0:-1:0:2:0"):
        assert on_surface(ex1, ProjPoint.parse(txt))


@given(
    lam=st.fractions(min_value=Fraction(-20), max_value=Fraction(20)).filter(lambda x: x != 0),
    coords=st.tuples(*[st.integers(min_value=-9, max_value=9) for _ in range(5)]).filter(
        lambda t: any(t)
    ),
)
def test_evaluate_form_homogeneity(lam, coords):
    f = P5("X0*X1 + X2^2 - X4*X3")
    x = ProjPoint.of(*coords)
    assert evaluate_form(f, x.scale(lam)) == lam ** 2 * evaluate_form(f, x)


@given(
    lam=st.fractions(min_value=Fraction(-20), max_value=Fraction(20)).filter(lambda x: x != 0),
)
def test_membership_scale_invariant(lam):
    ex1 = get_fixture("dp4_ex1").scheme
    x = ProjPoint.parse("-1:-3:1:4:1").scale(lam)
    assert on_surface(ex1, x)
    assert is_integral_point(ex1, x)


def test_point_normalization():
    p = ProjPoint.parse("-2/3:4:-2:0:2/3")
    assert p.normalized() == (1, -6, 3, 0, -1)
    with pytest.raises(ValueError):
        ProjPoint.of(0, 0)


def test_apply_shift_map():
    fx = get_fixture("dp4_ex1_shifted")
    m = fx.maps[0]
    img = m.apply(ProjPoint.parse("3:-4/3:5:0:1"))
    assert img.same_as(ProjPoint.parse("3:-23/3:5:2:1"))
    assert on_surface(get_fixture("dp4_ex1").scheme, img)


def test_apply_blowdown_map():
    fx = get_fixture("cubic_ex1")
    m = fx.maps[0]
    img = m.apply(ProjPoint.parse("-1:-1:2:1"))
    assert img.same_as(ProjPoint.parse("-1:-1:-1:2:1"))
    assert on_surface(get_fixture("dp4_ex1").scheme, img)
    # x1 = (x3 - x2^2)/x0 = (2 - 1)/(-1) = -1 per the elimination identity
    assert img.affine(4)[1] == -1


def test_apply_map_indeterminate():
    fx = get_fixture("cubic_ex1")
    m = fx.maps[0]
    # Y0 = 0 and Y2*Y3 = Y1^2 kills every component
    with pytest.raises(ValueError):
        m.apply(ProjPoint.parse("0:1:1:1"))


def test_map_images_satisfy_target_equations():
    cat = catalog()
    for fx in cat.values():
        for m in fx.maps:
            target = cat[m.target].scheme
            for _, plist in fx.point_lists:
                for p in plist:
                    try:
                        img = m.apply(p)
                    except ValueError:
                        continue
                    assert on_surface(target, img), (fx.name, m.name, str(p))


def test_identity_map():
    from dp4brauer.geometry import RationalMap

    ident = RationalMap(
        "id", "a", "a", tuple((PolyForm.variable(5, i), None) for i in range(5))
    )
    x = ProjPoint.parse("1:2:3:4:5")
    assert ident.apply(x).same_as(x)


def test_pencil_degenerates_ex2():
    # Example 7.1(iii): three real degenerate members, discriminant signs -,-,+
    out = pencil_degenerates(get_fixture("dp4_ex2").scheme)
    assert out.real_count == 3
    assert out.disc_signs == (-1, -1, 1)
    assert all(m.rank == 4 for m in out.members)


def test_pencil_degenerates_ex3():
    # Example 8.1(iii): five real degenerate members, four negative one positive
    out = pencil_degenerates(get_fixture("dp4_ex3").scheme)
    assert out.real_count == 5
    assert out.disc_signs == (-1, -1, -1, -1, 1)
    assert all(m.rank == 4 for m in out.members)


def test_pencil_degenerates_ex1():
    # Example 6.1 proof: only one degenerate member is real
    out = pencil_degenerates(get_fixture("dp4_ex1").scheme)
    assert out.real_count == 1
    assert all(m.rank == 4 for m in out.members)


def test_pencil_all_fixture_ranks_four():
    for name in ("dp4_ex1", "dp4_ex2", "dp4_ex3", "dp4_ex1_shifted", "dp4_ex2_shifted", "obst_example"):
        out = pencil_degenerates(get_fixture(name).scheme)
        assert all(m.rank == 4 for m in out.members), name


def test_pencil_degenerate_error():
    q = P5("X0*X1 + X2^2 - X4*X3")
    s = Scheme("dup", (q, q), 4)
    with pytest.raises(ValueError):
        pencil_degenerates(s)


def test_smoothness():
    assert smoothness_check(get_fixture("dp4_ex1").scheme)[0]
    assert smoothness_check(get_fixture("dp4_ex2").scheme)[0]
    assert smoothness_check(get_fixture("dp4_ex3").scheme)[0]
    q = P5("X0*X1 + X2^2 - X4*X3")
    assert not smoothness_check(Scheme("dup", (q, q), 4))[0]
