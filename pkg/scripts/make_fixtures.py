"""One-shot generator for the canonical fixture files.

Builds every fixture from readable polynomial expressions, cross-checks the
data (points lie on their surfaces, shift/blow-down maps are exact pullbacks,
patterns reproduce pencil members), then serializes to src/dp4brauer/fixtures.
Run from the repository root:  python3 scripts/make_fixtures.py
"""

from fractions import Fraction
from pathlib import Path

from dp4brauer.fixtures import (
    AlgebraicPattern,
    Classifier,
    Fixture,
    PointFamily,
    PredicateSpec,
    SearchStrategy,
    SignForm,
    SumClass,
    SymbolClass,
    TranscendentalPattern,
    WitnessAtom,
    WitnessSpec,
    parse_fixture,
    serialize_fixture,
)
from dp4brauer.geometry import ProjPoint, RationalMap, Scheme, on_scheme
from dp4brauer.polynomials import PolyForm, parse_poly

X = [f"X{i}" for i in range(7)]
Y = [f"Y{i}" for i in range(4)]


def P5(expr):
    return parse_poly(expr, 5, X[:5])


def P4(expr):
    return parse_poly(expr, 4, Y)


def P7(expr):
    return parse_poly(expr, 7, X)


def pt(text):
    return ProjPoint.parse(text)


def pts(*texts):
    return tuple(pt(t) for t in texts)


OUT = Path(__file__).resolve().parent.parent / "src" / "dp4brauer" / "fixtures"
OUT.mkdir(exist_ok=True)

fixtures = {}

# --------------------------------------------------------------------- dp4_ex1
q1_ex1 = P5("X0*X1 + X2^2 - X4*X3")
q2_ex1 = P5("X3*(2*X1 + X2 + X3) + X0^2 - X4*X1")
sporadic_ex1 = pts(
    "0:-2:1:1:1", "-1:-1:-1:2:1", "-1:-3:1:4:1", "4:-8:6:4:1",
    "-6:4:4:-8:1", "-8:18:-11:-23:1", "14:-28:20:8:1", "16:-56:30:4:1",
    "76:-696:-230:4:1", "-97:521:-223:-808:1", "-105:1413:381:-3204:1",
    "263:-829:467:62:1", "-556:912:712:-128:1", "-708:1278:-951:-423:1",
    "839:-1595:1157:444:1", "1004:-1648:-1288:4352:1",
    "-2073:3573:-2721:-2988:1", "2238:-6876:3924:9288:1",
    "-2264:3840:-2948:-3056:1", "-2916:5832:4122:-15228:1",
    "3324:-15678:-7219:289:1", "3879:-6183:-4899:16344:1",
    "-5450:14688:8947:-791:1", "-5809:11231:-8077:-2950:1",
    "8908:-16476:12115:5017:1", "-10194:6948:8415:-15687:1",
    "22238:-38044:29087:31097:1", "-26396:44152:-34138:-33148:1",
)
section_ex1 = pts(
    "0:0:0:0:1", "0:0:-1:1:1", "-2:4:-1:-7:1", "-2:4:0:-8:1",
    "-14:196:-49:-343:1", "-14:196:48:-440:1",
)
fixtures["dp4_ex1"] = Fixture(
    scheme=Scheme("dp4_ex1", (q1_ex1, q2_ex1), 4),
    maps=(
        RationalMap("project", "dp4_ex1", "cubic_ex1",
                    tuple((P5(e), None) for e in ("X0", "X2", "X3", "X4"))),
    ),
    classes=(
        SymbolClass(
            "tau", "transcendental",
            P5("X1"), P5("X4"), P5("X3"), P5("X4"),
            alt_f=(P5("0 - X0"),),
            alt_g=(P5("0 - (2*X1 + X2 + X3)"),),
            support_values=((pt("0:0:0:0:1"), "all", Fraction(0)),),
        ),
    ),
    patterns=(
        TranscendentalPattern(
            "tau", P5("X1"), P5("X0"), P5("X3"), P5("2*X1 + X2 + X3"),
            P5("X2"), P5("X0"), 1, 1,
        ),
    ),
    predicates=(
        PredicateSpec("sym2", "hilbert_eq", P5("X1"), P5("X3"), ("2",), Fraction(1)),
    ),
    point_lists=(("sporadic", sporadic_ex1), ("elliptic_section", section_ex1)),
    families=(PointFamily("x3_zero", ((0, 0, -1), (0, 0, 0, 0, 1), (0, 0, 0, 1), (0,), (1,)), 2),),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2), eliminate_var=3, eliminate_eq=0),
    meta=(
        ("galois_order", "1920"),
        ("census_pair", "1 3"),
        ("section_form", "[0,1,0,0,0] 2 ; [0,0,1,0,0] 1 ; [0,0,0,1,0] 1"),
        ("boundary_rational_points", "0:1:0:0:0 0:-1:0:2:0"),
    ),
)

# ------------------------------------------------------------- dp4_ex1_shifted
q1_ex1s = P5("X0*(8*X1 + 3*X4) + X2^2 - X4*(8*X3 + 2*X4)")
q2_ex1s = P5("(8*X3 + 2*X4)*(16*X1 + X2 + 8*X3 + 8*X4) + X0^2 - X4*(8*X1 + 3*X4)")
shift_ex1 = RationalMap(
    "shift", "dp4_ex1_shifted", "dp4_ex1",
    tuple((P5(e), None) for e in ("X0", "8*X1 + 3*X4", "X2", "8*X3 + 2*X4", "X4")),
)
fixtures["dp4_ex1_shifted"] = Fixture(
    scheme=Scheme("dp4_ex1_shifted", (q1_ex1s, q2_ex1s), 4),
    maps=(shift_ex1,),
    point_lists=(("z2_witness", pts("3:-4/3:5:0:1")),),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2), eliminate_var=3, eliminate_eq=0),
    meta=(("certificate_symbol", "3 2 2 -1"),),
)

# -------------------------------------------------------------------- cubic_ex1
f_cubic1 = P4("Y0^3 + Y0*Y1*Y2 + Y0*Y2^2 - 2*Y1^2*Y2 + Y1^2*Y3 + 2*Y2^2*Y3 - Y2*Y3^2")
blowdown_ex1 = RationalMap(
    "blowdown", "cubic_ex1", "dp4_ex1",
    tuple((P4(e), None) for e in ("Y0^2", "Y2*Y3 - Y1^2", "Y0*Y1", "Y0*Y2", "Y0*Y3")),
)
fixtures["cubic_ex1"] = Fixture(
    scheme=Scheme("cubic_ex1", (f_cubic1,), 3),
    maps=(blowdown_ex1,),
    predicates=(
        PredicateSpec("hsym", "hilbert_eq", P4("Y0*(Y2*Y3 - Y1^2)"), P4("Y2"), ("2",), Fraction(1)),
        PredicateSpec("gcd1", "gcd_gt_one", P4("Y0"), P4("2*Y2 - Y3")),
        PredicateSpec("dichotomy", "disjunction", members=("hsym", "gcd1")),
    ),
    point_lists=(("samples", pts("-1:-1:2:1", "-17:15:-8:1", "3:5:2:1")),),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2)),
)

# ----------------------------------------------------------- cubic_ex1_shifted
shift_cubic1 = RationalMap(
    "shift", "cubic_ex1_shifted", "cubic_ex1",
    tuple((P4(e), None) for e in ("8*Y0 + 3*Y3", "2*Y1 + Y3", "8*Y2 + 2*Y3", "Y3")),
)
f_cubic1s_printed = P4(
    "128*Y0^3 + 144*Y0^2*Y3 + 32*Y0*Y1*Y2 + 8*Y0*Y1*Y3 + 128*Y0*Y2^2 + 80*Y0*Y2*Y3"
    " + 66*Y0*Y3^2 - 16*Y1^2*Y2 - 3*Y1^2*Y3 - 4*Y1*Y2*Y3 + 80*Y2^2*Y3 + 40*Y2*Y3^2 + 12*Y3^3"
)
fixtures["cubic_ex1_shifted"] = Fixture(
    scheme=Scheme("cubic_ex1_shifted", (f_cubic1s_printed,), 3),
    maps=(shift_cubic1,),
    predicates=(
        PredicateSpec("gcd_shift", "gcd_gt_one", P4("8*Y0 + 3*Y3"), P4("16*Y2 + 3*Y3")),
    ),
    point_lists=(("extra", pts("-1536:5414:-803:1", "20706:-344632:534:1")),),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2)),
    meta=(
        ("rec_seed_c1", "0 -2 0"),
        ("rec_seed_c2", "-48 170 -24"),
        ("rec_seed_cp1", "0 2 0"),
        ("rec_seed_cp2", "-48 -266 -24"),
        ("rec_mult", "-110"),
        ("rec_prev", "-1"),
        ("rec_offset", "-48 -48 -24"),
    ),
)

# --------------------------------------------------------------------- dp4_ex2
q1_ex2 = P5("X0*X1 + X2^2 - X4*X3")
q2_ex2 = P5("X3*(X1 + X3) + X0^2 - X4*X1")
sporadic_ex2 = pts(
    "-5:13:8:-1:1", "-5:13:-8:-1:1",
    "-58:676:198:-4:1", "-58:676:-198:-4:1",
    "-268:4240:1064:-4224:1", "-268:4240:-1064:-4224:1",
    "-1297:11437:3850:-11289:1", "-1297:11437:-3850:-11289:1",
    "-2416:6736:4034:-1020:1", "-2416:6736:-4034:-1020:1",
    "-4513:9685:6611:-3084:1", "-4513:9685:-6611:-3084:1",
    "-6668:13456:9472:-5824:1", "-6668:13456:-9472:-5824:1",
    "-11681:27061:17779:-6700:1", "-11681:27061:-17779:-6700:1",
)
fixtures["dp4_ex2"] = Fixture(
    scheme=Scheme("dp4_ex2", (q1_ex2, q2_ex2), 4),
    maps=(
        RationalMap("project", "dp4_ex2", "cubic_ex2",
                    tuple((P5(e), None) for e in ("X0", "X2", "X3", "X4"))),
    ),
    classes=(
        SymbolClass(
            "alpha", "algebraic",
            P5("X1"), P5("X4"), PolyForm.constant(5, -1), PolyForm.constant(5, 1),
            alt_f=(P5("X4 - X3"),),
        ),
        SymbolClass(
            "tau", "transcendental",
            P5("X1"), P5("X4"), P5("X3"), P5("X4"),
            alt_f=(P5("0 - X0"),),
            alt_g=(P5("0 - (X1 + X3)"),),
            support_values=((pt("0:0:0:0:1"), "all", Fraction(0)),),
        ),
        SymbolClass(
            "alpha_tau", "transcendental",
            P5("X1"), P5("X4"), P5("0 - X3"), P5("X4"),
            alt_g=(P5("X1 + X3"),),
            support_values=((pt("0:0:0:0:1"), "all", Fraction(0)),),
        ),
    ),
    patterns=(
        AlgebraicPattern("alpha", (0, -1), P5("X1"), P5("X4 - X3"), P5("X3"), P5("X0"), -1),
        TranscendentalPattern(
            "tau", P5("X1"), P5("X0"), P5("X3"), P5("X1 + X3"), P5("X2"), P5("X0"), 1, 1
        ),
    ),
    predicates=(
        PredicateSpec("rel_alpha", "hilbert_sum", P5("X1"), PolyForm.constant(5, -1),
                      ("2", "real"), Fraction(0)),
        PredicateSpec("rel_tau", "hilbert_eq", P5("X1"), P5("X3"), ("2",), Fraction(1)),
        PredicateSpec("rel_alpha_tau", "hilbert_eq", P5("X1"), P5("0 - X3"), ("real",), Fraction(1)),
    ),
    witnesses=(
        WitnessSpec(
            "dichotomy", (), (),
            ((WitnessAtom("ge", Fraction(0), P5("X1")), WitnessAtom("le", Fraction(-4), P5("X1"))),),
        ),
    ),
    point_lists=(("sporadic", sporadic_ex2),),
    families=(
        PointFamily("x3_zero", ((0, 0, -1), (0, 0, 0, 0, 1), (0, 0, 0, 1), (0,), (1,)), 2),
        PointFamily(
            "x1px3_zero",
            ((-1, 0, -1), (1, 0, 2, 0, 1), (0, 1, 0, 1), (-1, 0, -2, 0, -1), (1,)),
            2,
        ),
    ),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2), eliminate_var=3, eliminate_eq=0),
    meta=(("galois_order", "384"),),
)

# ------------------------------------------------------------- dp4_ex2_shifted
shift_ex2 = RationalMap(
    "shift", "dp4_ex2_shifted", "dp4_ex2",
    tuple((P5(e), None) for e in ("X0", "4*X1 + 3*X4", "X2", "4*X3 + 3*X4", "X4")),
)
# The displayed second equation in the source misprints the pullback of q2;
# the fixture carries the exact pullback (checked below), which does have the
# claimed Z_2-point with x1 = 0, x3 = 2.
q1_ex2s = q1_ex2.compose([num for num, _ in shift_ex2.components])
q2_ex2s = q2_ex2.compose([num for num, _ in shift_ex2.components])
fixtures["dp4_ex2_shifted"] = Fixture(
    scheme=Scheme("dp4_ex2_shifted", (q1_ex2s, q2_ex2s), 4),
    maps=(shift_ex2,),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2), eliminate_var=3, eliminate_eq=0),
    meta=(("certificate_symbol", "3 3 2 -1"),),
)

# -------------------------------------------------------------------- cubic_ex2
f_cubic2 = P4("Y0^3 + Y0*Y2^2 - Y1^2*Y2 + Y1^2*Y3 + Y2^2*Y3 - Y2*Y3^2")
fixtures["cubic_ex2"] = Fixture(
    scheme=Scheme("cubic_ex2", (f_cubic2,), 3),
    maps=(
        RationalMap("blowdown", "cubic_ex2", "dp4_ex2",
                    tuple((P4(e), None) for e in ("Y0^2", "Y2*Y3 - Y1^2", "Y0*Y1", "Y0*Y2", "Y0*Y3"))),
    ),
    predicates=(
        PredicateSpec("hsym", "hilbert_eq", P4("Y0*(Y2*Y3 - Y1^2)"), P4("Y2"), ("2",), Fraction(1)),
        PredicateSpec("gcd2", "gcd_gt_one", P4("Y0"), P4("Y2 - Y3")),
        PredicateSpec("hsym_inf", "hilbert_eq", P4("Y0*(Y2*Y3 - Y1^2)"), P4("0 - Y2"),
                      ("real",), Fraction(1)),
        PredicateSpec("gen2", "disjunction", members=("gcd2", "hsym_inf")),
    ),
    point_lists=(("z2_witness", pts("-1/3:-2/3:1/3:1")),),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2)),
)

# ----------------------------------------------------------- cubic_ex2_shifted
shift_cubic2 = RationalMap(
    "shift", "cubic_ex2_shifted", "cubic_ex2",
    tuple((P4(e), None) for e in ("4*Y0 + Y3", "2*Y1", "4*Y2 + 3*Y3", "Y3")),
)
f_cubic2s_printed = P4(
    "16*Y0^3 + 12*Y0^2*Y3 + 16*Y0*Y2^2 + 24*Y0*Y2*Y3 + 12*Y0*Y3^2 - 4*Y1^2*Y2"
    " - 2*Y1^2*Y3 + 8*Y2^2*Y3 + 11*Y2*Y3^2 + 4*Y3^3"
)
fixtures["cubic_ex2_shifted"] = Fixture(
    scheme=Scheme("cubic_ex2_shifted", (f_cubic2s_printed,), 3),
    maps=(shift_cubic2,),
    point_lists=(("z2_witness", pts("-1/3:-1/3:-2/3:1")),),
    strategy=SearchStrategy(quadratic_var=1, enumerate_vars=(0, 2)),
    meta=(("certificate_symbol", "3 3 2 -1"),),
)

# --------------------------------------------------------------------- dp4_ex3
q1_ex3 = P5("X0*(X0 + X1) - X2^2 - (X0 + X4)^2")
q2_ex3 = P5("(X0 + X2)*(X0 + 2*X2) - 2*X1^2 - 3*X3^2")
sporadic_ex3 = pts(
    "17:3:4:13:1", "17:3:4:-13:1",
    "1409:147:-452:383:1", "1409:147:-452:-383:1",
    "6305:12972:9043:3550:1", "6305:12972:9043:-3550:1",
    "17741:12759:15044:20351:1", "17741:12759:15044:-20351:1",
    "-23293:-2328:-7367:19622:1", "-23293:-2328:-7367:-19622:1",
    "60569:2052:11143:44472:1", "60569:2052:11143:-44472:1",
)
fixtures["dp4_ex3"] = Fixture(
    scheme=Scheme("dp4_ex3", (q1_ex3, q2_ex3), 4),
    classes=(
        SymbolClass(
            "alpha1", "algebraic",
            P5("X0"), P5("X4"), PolyForm.constant(5, -1), PolyForm.constant(5, 1),
            alt_f=(P5("X0 + X1"),),
        ),
        SymbolClass(
            "alpha2", "algebraic",
            P5("X0 + X2"), P5("X4"), PolyForm.constant(5, -6), PolyForm.constant(5, 1),
            alt_f=(P5("2*X0 + 4*X2"),),
        ),
        SumClass("alpha12", ("alpha1", "alpha2")),
    ),
    patterns=(
        AlgebraicPattern("alpha1", (1, 0), P5("X0"), P5("X0 + X1"), P5("X2"), P5("X0 + X4"), -1),
        AlgebraicPattern("alpha2", (0, 2), P5("2*X0 + 2*X2"), P5("X0 + 2*X2"), P5("2*X1"), P5("X3"), -6),
    ),
    classifier=Classifier(
        (
            SignForm("x0", P5("X0")),
            SignForm("x0+x2", P5("X0 + X2"), P5("X0 + 2*X2")),
        ),
        ("-+",),
    ),
    witnesses=(
        WitnessSpec(
            "compact_x2",
            (WitnessAtom("lt", Fraction(0), P5("X0")), WitnessAtom("gt", Fraction(0), P5("X0 + X2"))),
            (WitnessAtom("lt", Fraction(3), P5("X2")),),
            (),
        ),
    ),
    point_lists=(
        ("compact_integral", pts("-1:0:1:0:1")),
        ("sporadic", sporadic_ex3),
        ("table_x", pts("5:12/5:-1:2/5:1")),
        ("table_xp", pts("-37/13:21/13:4/13:5/13:1")),
        ("table_xpp", pts("-85/91:-15/91:92/91:9/91:1")),
    ),
    strategy=SearchStrategy(quadratic_var=3, enumerate_vars=(0, 2), eliminate_var=1, eliminate_eq=0),
    meta=(("galois_order", "96"),),
)

# ----------------------------------------------------------------- obst_example
fixtures["obst_example"] = Fixture(
    scheme=Scheme(
        "obst_example",
        (P5("2*X0^2 + X1^2 + X2^2 - 26*X4^2"), P5("3*X1^2 + X2^2 + X3^2 - 13*X4^2")),
        4,
    ),
    witnesses=(
        WitnessSpec(
            "box", (),
            (
                WitnessAtom("sq_le", Fraction(13), P5("X0")),
                WitnessAtom("sq_le", Fraction(13, 3), P5("X1")),
                WitnessAtom("sq_le", Fraction(13), P5("X2")),
                WitnessAtom("sq_le", Fraction(13), P5("X3")),
            ),
            (),
        ),
    ),
    point_lists=(("rational", pts("18/7:1/7:25/7:3/7:1", "54/19:23/19:55/19:9/19:1")),),
    meta=(("integer_box", "3"),),
)

# ----------------------------------------------------------------- harpaz_cubic
fixtures["harpaz_cubic"] = Fixture(
    scheme=Scheme(
        "harpaz_cubic",
        (P4("(11*Y0 + 5*Y3)*Y1*Y2 + 3*Y3^2*Y2 - (3*Y0 + Y3)*Y3^2"),),
        3,
    ),
    witnesses=(
        WitnessSpec(
            "tube",
            (WitnessAtom("abs_ge", Fraction(1), P4("Y1")), WitnessAtom("abs_ge", Fraction(1), P4("Y2"))),
            (WitnessAtom("abs_le", Fraction(9, 8), P4("Y0")),),
            (),
        ),
    ),
)

# ------------------------------------------------------------------- p6_example
q_a = "X0^2 + X1^2 - X2^2"
q_b = "X3^2 + X4^2 - X5^2"
fixtures["p6_example"] = Fixture(
    scheme=Scheme(
        "p6_example",
        (P7(f"({q_a})*({q_b}) - ({q_a} + {q_b})*X6^2"),),
        6,
    ),
    witnesses=(
        WitnessSpec(
            "tube", (), (),
            ((WitnessAtom("abs_le", Fraction(2), P7(q_a)), WitnessAtom("abs_le", Fraction(2), P7(q_b))),),
        ),
    ),
)


# ---------------------------------------------------------------------------
# cross-checks before writing anything
# ---------------------------------------------------------------------------

def check_points():
    for name, fx in fixtures.items():
        for list_name, plist in fx.point_lists:
            for p in plist:
                assert on_scheme(fx.scheme, p), (name, list_name, str(p))
    for n in range(-4, 5):
        for fam in fixtures["dp4_ex1"].families + fixtures["dp4_ex2"].families:
            target = fixtures["dp4_ex1"] if fam.name == "x3_zero" else fixtures["dp4_ex2"]
            if fam in fixtures["dp4_ex2"].families:
                target = fixtures["dp4_ex2"]
            for sign in (1, -1):
                assert on_scheme(target.scheme, fam.point(n, sign)), (fam.name, n)


def check_maps():
    # shift maps and blow-downs are exact pullbacks (up to an integer factor)
    for src_name in ("dp4_ex1_shifted", "dp4_ex2_shifted", "cubic_ex1_shifted", "cubic_ex2_shifted"):
        fx = fixtures[src_name]
        m = fx.maps[0]
        tgt = fixtures[m.target].scheme
        comps = [num for num, _ in m.components]
        for f_src, f_tgt in zip(fx.scheme.forms, tgt.forms if len(tgt.forms) == len(fx.scheme.forms) else tgt.forms):
            pass
        pulled = [f.compose(comps) for f in tgt.forms]
        for pb, own in zip(pulled, fx.scheme.forms):
            # pb == c * own for a nonzero integer/rational constant c
            ratio = None
            for e, c in pb.terms.items():
                assert e in own.terms, (src_name, "monomial mismatch", e)
                r = Fraction(c, own.terms[e])
                if ratio is None:
                    ratio = r
                assert r == ratio, (src_name, "not proportional")
            assert set(pb.terms) == set(own.terms), (src_name, "support mismatch")
            print(f"  {src_name}: pullback = {ratio} * fixture form")


def check_cubic1_shifted_is_printed_form():
    fx = fixtures["cubic_ex1_shifted"]
    m = fx.maps[0]
    comps = [num for num, _ in m.components]
    pulled = fixtures["cubic_ex1"].scheme.forms[0].compose(comps)
    own = fx.scheme.forms[0]
    ratio = {e: Fraction(c, own.terms[e]) for e, c in pulled.terms.items() if e in own.terms}
    print("  cubic_ex1_shifted ratios:", set(ratio.values()), "support equal:", set(pulled.terms) == set(own.terms))


def check_patterns():
    from dp4brauer.polynomials import PolyForm

    for name in ("dp4_ex2", "dp4_ex3"):
        fx = fixtures[name]
        for p in fx.patterns:
            if isinstance(p, AlgebraicPattern):
                mu, nu = p.pencil
                member = fx.scheme.q1 * mu + fx.scheme.q2 * nu
                lhs = p.l1 * p.l2 - p.l3 * p.l3 + p.l4 * p.l4 * p.d
                assert lhs.terms == member.terms, (name, p.class_name)
    for name in ("dp4_ex1", "dp4_ex2"):
        fx = fixtures[name]
        for p in fx.patterns:
            if isinstance(p, TranscendentalPattern):
                x4 = PolyForm.variable(5, 4)
                id1 = p.l1 * p.l2 + p.u * p.u * p.a - x4 * p.l3
                id2 = p.l3 * p.l4 + p.v * p.v * p.b - x4 * p.l1
                assert id1.terms == fx.scheme.q1.terms, (name, "q1 pattern")
                assert id2.terms == fx.scheme.q2.terms, (name, "q2 pattern")


def check_table_points():
    fx = fixtures["dp4_ex3"]
    for lname in ("table_x", "table_xp", "table_xpp", "compact_integral"):
        for p in fx.points(lname):
            assert on_scheme(fx.scheme, p), lname


check_points()
check_maps()
check_cubic1_shifted_is_printed_form()
check_patterns()
check_table_points()

for name, fx in fixtures.items():
    text = serialize_fixture(fx)
    back = parse_fixture(text)
    again = serialize_fixture(back)
    assert again == text, f"round trip failed for {name}"
    (OUT / f"{name}.fx").write_text(text)
    print(f"wrote {name}.fx ({len(text)} bytes)")
print("done")
