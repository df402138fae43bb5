"""Fixture catalog: schemes, Brauer classes, patterns, predicates, witnesses.

Fixtures live in plain-text ``.fx`` files (one scheme per file) shipped as
package data; ``catalog()`` parses them all.  The grammar is line oriented
and documented in docs/fixture-format.md; ``serialize_fixture`` emits the
canonical form, and parsing then serializing a catalog file reproduces it
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .geometry import ProjPoint, RationalMap, Scheme
from .polynomials import PolyForm, poly_from_term_lines, poly_to_term_lines


@dataclass(frozen=True)
class SymbolClass:
    """Quaternion class (f, g; -1) with f = f_num/f_den, g = g_num/g_den.

    ``alt_f`` are alternate numerators for f valid against the registered g
    (and ``alt_g`` against f) via the norm identities of the generating
    pattern; mixing an alternate f with an alternate g is not sound.
    ``support_values`` records evaluation values at points where every
    representative vanishes, together with where they apply.
    """

    name: str
    kind: str
    f_num: PolyForm
    f_den: PolyForm
    g_num: PolyForm
    g_den: PolyForm
    alt_f: tuple[PolyForm, ...] = ()
    alt_g: tuple[PolyForm, ...] = ()
    support_values: tuple[tuple[ProjPoint, str, Fraction], ...] = ()


@dataclass(frozen=True)
class SumClass:
    name: str
    parts: tuple[str, ...]


@dataclass(frozen=True)
class AlgebraicPattern:
    class_name: str
    pencil: tuple[int, int]
    l1: PolyForm
    l2: PolyForm
    l3: PolyForm
    l4: PolyForm
    d: int


@dataclass(frozen=True)
class TranscendentalPattern:
    class_name: str
    l1: PolyForm
    l2: PolyForm
    l3: PolyForm
    l4: PolyForm
    u: PolyForm
    v: PolyForm
    a: int
    b: int


@dataclass(frozen=True)
class PredicateSpec:
    name: str
    kind: str  # gcd_gt_one | hilbert_eq | hilbert_sum | disjunction
    lhs: PolyForm | None = None
    rhs: PolyForm | None = None
    places: tuple[str, ...] = ()
    expected: Fraction | None = None
    members: tuple[str, ...] = ()


@dataclass(frozen=True)
class SignForm:
    name: str
    form: PolyForm
    tiebreak: PolyForm | None = None


@dataclass(frozen=True)
class Classifier:
    signs: tuple[SignForm, ...]
    compact: tuple[str, ...]


@dataclass(frozen=True)
class WitnessAtom:
    op: str  # ge gt le lt abs_ge abs_le sq_le
    value: Fraction
    form: PolyForm

    def holds(self, coords, tol: float = 0.0) -> bool:
        v = self.form.evaluate_float(coords)
        c = float(self.value)
        if self.op == "ge":
            return v >= c - tol
        if self.op == "gt":
            return v > c - tol
        if self.op == "le":
            return v <= c + tol
        if self.op == "lt":
            return v < c + tol
        if self.op == "abs_ge":
            return abs(v) >= c - tol
        if self.op == "abs_le":
            return abs(v) <= c + tol
        if self.op == "sq_le":
            return v * v <= c + tol
        raise ValueError(f"unknown witness op {self.op}")


@dataclass(frozen=True)
class WitnessSpec:
    name: str
    premises: tuple[WitnessAtom, ...]
    conclusions: tuple[WitnessAtom, ...]
    any_groups: tuple[tuple[WitnessAtom, ...], ...]

    def check(self, coords, tol: float = 1e-7) -> bool:
        """True unless all premises hold while some conclusion fails."""
        if not all(a.holds(coords, tol=0.0) for a in self.premises):
            return True
        if not all(a.holds(coords, tol=tol) for a in self.conclusions):
            return False
        return all(any(a.holds(coords, tol=tol) for a in grp) for grp in self.any_groups)


@dataclass(frozen=True)
class PointFamily:
    """Parametrized family: component i is the integer polynomial comps[i](n)."""

    name: str
    comps: tuple[tuple[int, ...], ...]
    pm_index: int | None

    def point(self, n: int, sign: int = 1) -> ProjPoint:
        vals = []
        for i, cs in enumerate(self.comps):
            v = sum(c * n**k for k, c in enumerate(cs))
            if i == self.pm_index:
                v *= sign
            vals.append(v)
        return ProjPoint.of(*vals)

    def points_up_to(self, height: int) -> list[ProjPoint]:
        out = []
        n = 0
        while True:
            hit = False
            for sign in (1, -1) if self.pm_index is not None else (1,):
                if sign == -1 and n == 0:
                    continue
                pt = self.point(n, sign)
                if max(abs(c) for c in pt.coords) <= height:
                    out.append(pt)
                    hit = True
            neg_hit = False
            if n > 0:
                for sign in (1, -1) if self.pm_index is not None else (1,):
                    pt = self.point(-n, sign)
                    if max(abs(c) for c in pt.coords) <= height:
                        out.append(pt)
                        neg_hit = True
            if n > 0 and not hit and not neg_hit:
                break
            n += 1
        return out


@dataclass(frozen=True)
class SearchStrategy:
    quadratic_var: int
    enumerate_vars: tuple[int, int]
    eliminate_var: int | None = None
    eliminate_eq: int = 0


@dataclass(frozen=True)
class Fixture:
    scheme: Scheme
    maps: tuple[RationalMap, ...] = ()
    classes: tuple = ()
    patterns: tuple = ()
    predicates: tuple[PredicateSpec, ...] = ()
    classifier: Classifier | None = None
    witnesses: tuple[WitnessSpec, ...] = ()
    point_lists: tuple[tuple[str, tuple[ProjPoint, ...]], ...] = ()
    families: tuple[PointFamily, ...] = ()
    strategy: SearchStrategy | None = None
    meta: tuple[tuple[str, str], ...] = ()

    @property
    def name(self) -> str:
        return self.scheme.name

    def brauer_class(self, name: str):
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(f"{self.name} has no class {name!r}")

    def pattern_for(self, class_name: str):
        for p in self.patterns:
            if p.class_name == class_name:
                return p
        raise KeyError(f"{self.name} has no pattern for {class_name!r}")

    def predicate(self, name: str) -> PredicateSpec:
        for p in self.predicates:
            if p.name == name:
                return p
        raise KeyError(f"{self.name} has no predicate {name!r}")

    def witness(self, name: str) -> WitnessSpec:
        for w in self.witnesses:
            if w.name == name:
                return w
        raise KeyError(f"{self.name} has no witness {name!r}")

    def points(self, name: str) -> tuple[ProjPoint, ...]:
        for n, pts in self.point_lists:
            if n == name:
                return pts
        raise KeyError(f"{self.name} has no point list {name!r}")

    def family(self, name: str) -> PointFamily:
        for f in self.families:
            if f.name == name:
                return f
        raise KeyError(f"{self.name} has no family {name!r}")

    def meta_value(self, key: str) -> str:
        for k, v in self.meta:
            if k == key:
                return v
        raise KeyError(key)


# ---------------------------------------------------------------------------
# grammar helpers
# ---------------------------------------------------------------------------


def _terms_inline(nvars: int, text: str) -> PolyForm:
    return poly_from_term_lines(nvars, [p for p in text.split(";") if p.strip()])


def _terms_to_inline(f: PolyForm) -> str:
    return " ; ".join(poly_to_term_lines(f))


def parse_fixture(text: str) -> Fixture:
    lines = [ln.rstrip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    pos = 0

    def peek():
        return lines[pos] if pos < len(lines) else None

    def take():
        nonlocal pos
        pos += 1
        return lines[pos - 1]

    def block_lines():
        out = []
        while True:
            ln = take()
            if ln is None:
                raise ValueError("unterminated block")
            if ln.strip() == "end":
                return out
            out.append(ln.strip())

    name = None
    nvars = None
    hyper = None
    forms: list[tuple[str, PolyForm]] = []
    maps: list[RationalMap] = []
    classes: list = []
    patterns: list = []
    predicates: list[PredicateSpec] = []
    classifier = None
    witnesses: list[WitnessSpec] = []
    point_lists: list[tuple[str, tuple[ProjPoint, ...]]] = []
    families: list[PointFamily] = []
    strategy = None
    meta: list[tuple[str, str]] = []

    while peek() is not None:
        parts = take().split()
        kw = parts[0]
        if kw == "scheme":
            name = parts[1]
        elif kw == "nvars":
            nvars = int(parts[1])
        elif kw == "hyperplane_index":
            hyper = int(parts[1])
        elif kw == "meta":
            meta.append((parts[1], " ".join(parts[2:])))
        elif kw == "form":
            forms.append((parts[1], poly_from_term_lines(nvars, block_lines())))
        elif kw == "map":
            comps = []
            target = parts[parts.index("target") + 1]
            for ln in block_lines():
                body = ln[len("component") :].strip()
                if body.startswith("("):
                    numtxt, dentxt = body[1:].split(") / (")
                    comps.append(
                        (_terms_inline(nvars, numtxt), _terms_inline(nvars, dentxt.rstrip(") ")))
                    )
                else:
                    comps.append((_terms_inline(nvars, body), None))
            maps.append(RationalMap(parts[1], name, target, tuple(comps)))
        elif kw == "class" and parts[2] == "sum":
            classes.append(SumClass(parts[1], tuple(parts[3:])))
        elif kw == "class":
            kind = parts[parts.index("kind") + 1]
            data: dict = {"alt_f": [], "alt_g": [], "support": []}
            for ln in block_lines():
                key, _, rest = ln.partition(" ")
                if key in ("f_num", "f_den", "g_num", "g_den"):
                    data[key] = _terms_inline(nvars, rest)
                elif key in ("alt_f", "alt_g"):
                    data[key].append(_terms_inline(nvars, rest))
                elif key == "support":
                    pt_txt, places_txt, val_txt = rest.split()
                    data["support"].append(
                        (ProjPoint.parse(pt_txt), places_txt, Fraction(val_txt))
                    )
                else:
                    raise ValueError(f"bad class line {ln!r}")
            classes.append(
                SymbolClass(
                    parts[1],
                    kind,
                    data["f_num"],
                    data["f_den"],
                    data["g_num"],
                    data["g_den"],
                    tuple(data["alt_f"]),
                    tuple(data["alt_g"]),
                    tuple(data["support"]),
                )
            )
        elif kw == "pattern":
            ptype = parts[1]
            cname = parts[parts.index("class") + 1]
            entries: dict = {}
            for ln in block_lines():
                key, _, rest = ln.partition(" ")
                if key in ("l1", "l2", "l3", "l4", "u", "v"):
                    entries[key] = _terms_inline(nvars, rest)
                elif key in ("a", "b", "d"):
                    entries[key] = int(rest)
                elif key == "pencil":
                    mu, nu = rest.split()
                    entries["pencil"] = (int(mu), int(nu))
                else:
                    raise ValueError(f"bad pattern line {ln!r}")
            if ptype == "alg":
                patterns.append(
                    AlgebraicPattern(
                        cname,
                        entries["pencil"],
                        entries["l1"],
                        entries["l2"],
                        entries["l3"],
                        entries["l4"],
                        entries["d"],
                    )
                )
            else:
                patterns.append(
                    TranscendentalPattern(
                        cname,
                        entries["l1"],
                        entries["l2"],
                        entries["l3"],
                        entries["l4"],
                        entries["u"],
                        entries["v"],
                        entries["a"],
                        entries["b"],
                    )
                )
        elif kw == "predicate" and "disjunction" in parts:
            predicates.append(
                PredicateSpec(
                    parts[1], "disjunction", members=tuple(parts[parts.index("members") + 1 :])
                )
            )
        elif kw == "predicate":
            kind = parts[2]
            places: tuple[str, ...] = ()
            expected = None
            if "place" in parts:
                places = (parts[parts.index("place") + 1],)
            if "places" in parts:
                places = tuple(parts[parts.index("places") + 1 : parts.index("expected")])
            if "expected" in parts:
                expected = Fraction(parts[parts.index("expected") + 1])
            lhs = rhs = None
            for ln in block_lines():
                key, _, rest = ln.partition(" ")
                if key == "lhs":
                    lhs = _terms_inline(nvars, rest)
                elif key == "rhs":
                    rhs = _terms_inline(nvars, rest)
                else:
                    raise ValueError(f"bad predicate line {ln!r}")
            predicates.append(PredicateSpec(parts[1], kind, lhs, rhs, places, expected))
        elif kw == "classifier":
            signs = []
            compact: tuple[str, ...] = ()
            for ln in block_lines():
                key, _, rest = ln.partition(" ")
                if key == "signform":
                    sname, _, body = rest.partition(" ")
                    tiebreak = None
                    if " tiebreak " in body:
                        body, tb = body.split(" tiebreak ")
                        tiebreak = _terms_inline(nvars, tb)
                    signs.append(SignForm(sname, _terms_inline(nvars, body), tiebreak))
                elif key == "compact":
                    compact = tuple(rest.split())
                else:
                    raise ValueError(f"bad classifier line {ln!r}")
            classifier = Classifier(tuple(signs), compact)
        elif kw == "witness":
            premises: list[WitnessAtom] = []
            conclusions: list[WitnessAtom] = []
            any_groups: list[tuple[WitnessAtom, ...]] = []
            body = block_lines()
            i = 0

            def parse_atom(ln: str) -> WitnessAtom:
                op, val, terms = ln.split(None, 2)
                return WitnessAtom(op, Fraction(val), _terms_inline(nvars, terms))

            while i < len(body):
                ln = body[i]
                if ln.startswith("premise "):
                    premises.append(parse_atom(ln[len("premise ") :]))
                elif ln.startswith("conclude "):
                    conclusions.append(parse_atom(ln[len("conclude ") :]))
                elif ln == "any":
                    grp = []
                    i += 1
                    while body[i] != "endany":
                        grp.append(parse_atom(body[i]))
                        i += 1
                    any_groups.append(tuple(grp))
                else:
                    raise ValueError(f"bad witness line {ln!r}")
                i += 1
            witnesses.append(
                WitnessSpec(parts[1], tuple(premises), tuple(conclusions), tuple(any_groups))
            )
        elif kw == "points":
            point_lists.append(
                (parts[1], tuple(ProjPoint.parse(ln) for ln in block_lines()))
            )
        elif kw == "family":
            pm = int(parts[parts.index("pm") + 1]) if "pm" in parts else None
            comps = []
            for ln in block_lines():
                comps.append(tuple(int(t) for t in ln.strip("[]").split(",")))
            families.append(PointFamily(parts[1], tuple(comps), pm))
        elif kw == "strategy":
            kvs = dict(zip(parts[1::2], parts[2::2]))
            strategy = SearchStrategy(
                quadratic_var=int(kvs["quadratic"]),
                enumerate_vars=(int(kvs["enumerate"]), int(kvs["and"])),
                eliminate_var=int(kvs["eliminate"]) if "eliminate" in kvs else None,
                eliminate_eq=int(kvs.get("from_eq", 0)),
            )
        else:
            raise ValueError(f"unknown keyword {kw!r}")

    scheme = Scheme(name, tuple(f for _, f in forms), hyper)
    return Fixture(
        scheme,
        tuple(maps),
        tuple(classes),
        tuple(patterns),
        tuple(predicates),
        classifier,
        tuple(witnesses),
        tuple(point_lists),
        tuple(families),
        strategy,
        tuple(meta),
    )


def serialize_fixture(fx: Fixture, form_names: list[str] | None = None) -> str:
    s = fx.scheme
    out: list[str] = [f"scheme {s.name}", f"nvars {s.nvars}", f"hyperplane_index {s.hyperplane_index}"]
    for k, v in fx.meta:
        out.append(f"meta {k} {v}")
    names = form_names or ([f"q{i+1}" for i in range(len(s.forms))] if len(s.forms) > 1 else ["f"])
    for fn, f in zip(names, s.forms):
        out.append("")
        out.append(f"form {fn}")
        out.extend(poly_to_term_lines(f))
        out.append("end")
    for m in fx.maps:
        out.append("")
        out.append(f"map {m.name} target {m.target}")
        for num, den in m.components:
            if den is None:
                out.append(f"component {_terms_to_inline(num)}")
            else:
                out.append(f"component ( {_terms_to_inline(num)} ) / ( {_terms_to_inline(den)} )")
        out.append("end")
    for c in fx.classes:
        out.append("")
        if isinstance(c, SumClass):
            out.append(f"class {c.name} sum {' '.join(c.parts)}")
            continue
        out.append(f"class {c.name} kind {c.kind}")
        out.append(f"f_num {_terms_to_inline(c.f_num)}")
        out.append(f"f_den {_terms_to_inline(c.f_den)}")
        out.append(f"g_num {_terms_to_inline(c.g_num)}")
        out.append(f"g_den {_terms_to_inline(c.g_den)}")
        for alt in c.alt_f:
            out.append(f"alt_f {_terms_to_inline(alt)}")
        for alt in c.alt_g:
            out.append(f"alt_g {_terms_to_inline(alt)}")
        for pt, places, val in c.support_values:
            pt_txt = ":".join(str(x) for x in pt.normalized())
            out.append(f"support {pt_txt} {places} {val}")
        out.append("end")
    for p in fx.patterns:
        out.append("")
        if isinstance(p, AlgebraicPattern):
            out.append(f"pattern alg class {p.class_name}")
            out.append(f"pencil {p.pencil[0]} {p.pencil[1]}")
            for key in ("l1", "l2", "l3", "l4"):
                out.append(f"{key} {_terms_to_inline(getattr(p, key))}")
            out.append(f"d {p.d}")
        else:
            out.append(f"pattern tr class {p.class_name}")
            for key in ("l1", "l2", "l3", "l4", "u", "v"):
                out.append(f"{key} {_terms_to_inline(getattr(p, key))}")
            out.append(f"a {p.a}")
            out.append(f"b {p.b}")
        out.append("end")
    for p in fx.predicates:
        out.append("")
        if p.kind == "disjunction":
            out.append(f"predicate {p.name} disjunction members {' '.join(p.members)}")
            continue
        head = f"predicate {p.name} {p.kind}"
        if p.kind == "hilbert_eq":
            head += f" place {p.places[0]} expected {p.expected}"
        elif p.kind == "hilbert_sum":
            head += f" places {' '.join(p.places)} expected {p.expected}"
        out.append(head)
        if p.lhs is not None:
            out.append(f"lhs {_terms_to_inline(p.lhs)}")
        if p.rhs is not None:
            out.append(f"rhs {_terms_to_inline(p.rhs)}")
        out.append("end")
    if fx.classifier is not None:
        out.append("")
        out.append("classifier")
        for sf in fx.classifier.signs:
            line = f"signform {sf.name} {_terms_to_inline(sf.form)}"
            if sf.tiebreak is not None:
                line += f" tiebreak {_terms_to_inline(sf.tiebreak)}"
            out.append(line)
        if fx.classifier.compact:
            out.append(f"compact {' '.join(fx.classifier.compact)}")
        out.append("end")
    for w in fx.witnesses:
        out.append("")
        out.append(f"witness {w.name}")
        for a in w.premises:
            out.append(f"premise {a.op} {a.value} {_terms_to_inline(a.form)}")
        for a in w.conclusions:
            out.append(f"conclude {a.op} {a.value} {_terms_to_inline(a.form)}")
        for grp in w.any_groups:
            out.append("any")
            for a in grp:
                out.append(f"{a.op} {a.value} {_terms_to_inline(a.form)}")
            out.append("endany")
        out.append("end")
    for pname, pts in fx.point_lists:
        out.append("")
        out.append(f"points {pname}")
        for pt in pts:
            out.append(":".join(str(x) for x in pt.coords))
        out.append("end")
    for fam in fx.families:
        out.append("")
        head = f"family {fam.name}"
        if fam.pm_index is not None:
            head += f" pm {fam.pm_index}"
        out.append(head)
        for cs in fam.comps:
            out.append("[" + ",".join(map(str, cs)) + "]")
        out.append("end")
    if fx.strategy is not None:
        st = fx.strategy
        out.append("")
        line = "strategy"
        if st.eliminate_var is not None:
            line += f" eliminate {st.eliminate_var} from_eq {st.eliminate_eq}"
        line += f" quadratic {st.quadratic_var} enumerate {st.enumerate_vars[0]} and {st.enumerate_vars[1]}"
        out.append(line)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# catalog loading
# ---------------------------------------------------------------------------

FIXTURE_NAMES = (
    "dp4_ex1",
    "dp4_ex1_shifted",
    "cubic_ex1",
    "cubic_ex1_shifted",
    "dp4_ex2",
    "dp4_ex2_shifted",
    "cubic_ex2",
    "cubic_ex2_shifted",
    "dp4_ex3",
    "obst_example",
    "harpaz_cubic",
    "p6_example",
)


def fixture_dir() -> Path:
    return Path(str(resources.files("dp4brauer") / "fixtures"))


@lru_cache(maxsize=None)
def catalog(path: str | None = None) -> dict[str, Fixture]:
    base = Path(path) if path else fixture_dir()
    out = {}
    for fx_file in sorted(base.glob("*.fx")):
        fx = parse_fixture(fx_file.read_text())
        out[fx.name] = fx
    return out


def get_fixture(name: str, path: str | None = None) -> Fixture:
    cat = catalog(path)
    if name not in cat:
        raise KeyError(f"unknown fixture {name!r}; have {sorted(cat)}")
    return cat[name]
