import json

from repvar.analysis import analyze_presentation
from repvar.catalog import ClassKind, GroupClass
from repvar.profiles import Profile
from repvar.verdicts import verdict_hypotheses_hold
from repvar.words import parse_presentation


def analyze(text, **kw):
    return analyze_presentation(parse_presentation(text), **kw)


def kinds(a):
    return [v.kind.value for v in a.verdicts]


def test_genus_two_surface():
    a = analyze("gens: a,b,c,d\nrel: [a,b][c,d]")
    assert a.group_class == GroupClass(ClassKind.ORIENTABLE_SURFACE, (2,))
    assert a.deficiency == 3 and a.deficiency_bound == 9
    assert kinds(a)[:2] == ["ProfilesDiffer", "NoLiftStratum"]
    ab = a.verdicts[0]
    assert any(c.theorem.startswith("catalog:") for c in ab.citations)
    assert a.witness is not None and a.witness.residual < 1e-12
    assert a.relators[0].in_commutator_subgroup


def test_nonorientable_uses_parity_root():
    a = analyze("gens: x,y,z\nrel: x^2 y^2 z^2")
    assert a.verdicts[0].kind.value == "ProfilesDiffer"
    assert a.witness is None  # no numerical search needed


def test_torus_knot():
    a = analyze("gens: x,y\nrel: x^3 = y^4")
    assert a.group_class == GroupClass(ClassKind.TORUS_KNOT, (3, 4))
    ks = kinds(a)
    assert "AllLift" in ks and "Falls" not in ks and ks[-1] == "ProfilesDiffer"
    dim = next(v for v in a.verdicts if v.kind.value == "DimensionComputed")
    assert dim.data["dim"] == 4 and dim.data["pinched_generator"] == "y"


def test_pinched_surface_quotient():
    a = analyze("gens: x,y,z\nrel: [x,y] = z^2")
    dims = [v.data["dim"] for v in a.verdicts if v.kind.value == "DimensionComputed"]
    assert dims == [6] and "Reducible" in kinds(a)
    assert all(verdict_hypotheses_hold(v) for v in a.verdicts)


def test_recorded_example_profiles():
    a = analyze("gens: x,y,z\nrel: x^2")
    assert a.profiles["SL2C"] == Profile.from_counts((2, 0, 0, 0, 0, 0, 0))
    assert a.profiles["PSL2C"] == Profile.from_counts((1, 0, 1, 0, 0, 0, 0, 0, 0))
    assert not a.warnings


def test_odd_cyclic_falls():
    a = analyze("gens: x\nrel: x^5")
    falls = next(v for v in a.verdicts if v.kind.value == "Falls")
    assert falls.data["sl2"] == falls.data["psl2"] == {"dim": 2, "counts": [2, 0, 1]}


def test_free_group():
    a = analyze("gens: x,y")
    assert kinds(a) == ["FreenessConsistent"]


def test_unrecognized_relator():
    a = analyze("gens: x,y\nrel: x y x y^-2", witness=False)
    assert a.group_class is None and not a.profiles
    assert kinds(a)[0] == "Unknown"


def test_json_is_serializable_and_deterministic():
    text = "gens: a,b\nrel: [a,b] a^2"
    one = json.dumps(analyze(text, seed=3).to_json(), sort_keys=True)
    two = json.dumps(analyze(text, seed=3).to_json(), sort_keys=True)
    assert one == two
    js = json.loads(one)
    assert js["relators"][0]["exponent_sums"] == [2, 0]
    assert js["class"] is None
