"""Known group classes, their canonical presentations, and cited facts.

Facts live in ``data/catalog.yaml`` (schema documented at the top of that
file) and are loaded once; the catalog is read-only afterwards.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable

import yaml

from .profiles import PSL2, SL2, AlgebraicGroup, Profile, convolve, cyclic_profile, free_group_profile
from .words import FreeWord, Generator, Presentation, commutator, parse_presentation

__all__ = [
    "ClassKind",
    "GroupClass",
    "CatalogFact",
    "RecordedExample",
    "Catalog",
    "load_catalog",
    "default_catalog",
    "canonical_presentation",
    "facts_for",
    "recorded_examples",
    "identify",
    "known_profile",
    "split_pinched",
    "unpinched_presentation",
    "quotient_input_dimension",
    "DERIVED",
]


class ClassKind(enum.Enum):
    CYCLIC = "Cyclic"
    TORUS_KNOT = "TorusKnot"
    ORIENTABLE_SURFACE = "OrientableSurface"
    NONORIENTABLE_SURFACE = "NonOrientableSurface"
    FREE_PRODUCT_CYCLIC = "FreeProductCyclic"
    FREE = "Free"
    CUSTOM = "Custom"


_PARAMS = {
    ClassKind.CYCLIC: ("n",),
    ClassKind.TORUS_KNOT: ("p", "t"),
    ClassKind.ORIENTABLE_SURFACE: ("g",),
    ClassKind.NONORIENTABLE_SURFACE: ("g",),
    ClassKind.FREE_PRODUCT_CYCLIC: ("m", "n"),
    ClassKind.FREE: ("n",),
    ClassKind.CUSTOM: (),
}

_LOWER = {
    ClassKind.CYCLIC: {"n": 1},
    ClassKind.TORUS_KNOT: {"p": 2, "t": 2},
    ClassKind.ORIENTABLE_SURFACE: {"g": 1},
    ClassKind.NONORIENTABLE_SURFACE: {"g": 1},
    ClassKind.FREE_PRODUCT_CYCLIC: {"m": 2, "n": 2},
    ClassKind.FREE: {"n": 0},
}


@dataclass(frozen=True)
class GroupClass:
    kind: ClassKind
    params: tuple[int, ...] = ()
    name: str = ""

    def __post_init__(self):
        names = _PARAMS[self.kind]
        if len(self.params) != len(names):
            raise ValueError(f"{self.kind.value} takes parameters {names}")
        for pname, value in zip(names, self.params):
            lo = _LOWER[self.kind][pname]
            if not isinstance(value, int) or value < lo:
                raise ValueError(f"{self.kind.value}: {pname} must be an integer >= {lo}")

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(zip(_PARAMS[self.kind], self.params))

    @classmethod
    def parse(cls, kind: str, *params: int, name: str = "") -> "GroupClass":
        aliases = {
            "cyclic": ClassKind.CYCLIC, "torus": ClassKind.TORUS_KNOT,
            "torus-knot": ClassKind.TORUS_KNOT, "surface": ClassKind.ORIENTABLE_SURFACE,
            "orientable": ClassKind.ORIENTABLE_SURFACE,
            "nonorientable": ClassKind.NONORIENTABLE_SURFACE,
            "non-orientable": ClassKind.NONORIENTABLE_SURFACE,
            "free-product": ClassKind.FREE_PRODUCT_CYCLIC, "free": ClassKind.FREE,
        }
        key = kind.strip()
        try:
            k = ClassKind(key)
        except ValueError:
            try:
                k = aliases[key.lower()]
            except KeyError:
                raise ValueError(f"unknown group class {kind!r}") from None
        return cls(k, tuple(int(p) for p in params), name)

    def __str__(self):
        if self.kind is ClassKind.CUSTOM:
            return f"Custom({self.name})"
        return f"{self.kind.value}({', '.join(map(str, self.params))})"


@dataclass(frozen=True)
class CatalogFact:
    id: str
    subject: GroupClass
    property: str
    value: int | None
    source: str
    citation: str
    statement: str

    def to_json(self) -> dict:
        return {"id": self.id, "subject": str(self.subject), "property": self.property,
                "value": self.value, "source": self.source, "statement": self.statement}


@dataclass(frozen=True)
class RecordedExample:
    presentation: Presentation
    group: AlgebraicGroup
    profile: Profile
    note: str


def torus_knot_genus(params: dict[str, int]) -> int:
    return (params["p"] - 1) * (params["t"] - 1) // 2


DERIVED: dict[str, Callable[[dict[str, int]], int]] = {
    "torus_knot_genus": torus_knot_genus,
}

PROPERTIES = {"SL2Irreducible", "SL2Dimension", "Embeds", "NotEmbeds", "KnotGenus",
              "PSL2DimensionOfQuotientInput"}


@dataclass
class _FactRecord:
    id: str
    subject: ClassKind
    when: dict
    property: str
    value: object
    source: str
    statement: str

    def matches(self, c: GroupClass) -> bool:
        if c.kind is not self.subject:
            return False
        params = c.param_dict
        for key, bound in self.when.items():
            if key == "name":
                if c.name != bound:
                    return False
            elif key == "coprime":
                if bool(bound) != (math.gcd(params["p"], params["t"]) == 1):
                    return False
            elif key.endswith("_min"):
                if params[key[:-4]] < bound:
                    return False
            elif key.endswith("_max"):
                if params[key[:-4]] > bound:
                    return False
            else:
                raise ValueError(f"fact {self.id}: unknown constraint {key!r}")
        return True


@dataclass
class Catalog:
    sources: dict[str, str]
    records: list[_FactRecord]
    examples: list[RecordedExample] = field(default_factory=list)

    def facts_for(self, c: GroupClass) -> list[CatalogFact]:
        out = []
        for rec in self.records:
            if not rec.matches(c):
                continue
            value = rec.value
            if isinstance(value, str):
                value = DERIVED[value](c.param_dict)
            out.append(CatalogFact(rec.id, c, rec.property, value, rec.source,
                                   self.sources[rec.source], rec.statement))
        return out

    def fact(self, c: GroupClass, prop: str) -> CatalogFact | None:
        return next((f for f in self.facts_for(c) if f.property == prop), None)


def _parse_catalog(data: dict, origin: str) -> Catalog:
    sources = dict(data.get("sources", {}))
    records = []
    seen = set()
    for raw in data.get("facts", []):
        try:
            rec = _FactRecord(
                id=raw["id"], subject=ClassKind(raw["subject"]), when=dict(raw.get("when") or {}),
                property=raw["property"], value=raw.get("value"), source=raw["source"],
                statement=raw["statement"])
        except (KeyError, ValueError) as exc:
            raise ValueError(f"{origin}: bad fact record {raw!r}: {exc}") from None
        if rec.id in seen:
            raise ValueError(f"{origin}: duplicate fact id {rec.id}")
        if rec.property not in PROPERTIES:
            raise ValueError(f"{origin}: fact {rec.id} has unknown property {rec.property}")
        if rec.source not in sources:
            raise ValueError(f"{origin}: fact {rec.id} cites unknown source {rec.source}")
        if isinstance(rec.value, str) and rec.value not in DERIVED:
            raise ValueError(f"{origin}: fact {rec.id} uses unknown derived value {rec.value}")
        seen.add(rec.id)
        records.append(rec)
    examples = [
        RecordedExample(parse_presentation(ex["presentation"], origin),
                        AlgebraicGroup(ex["group"]), Profile.from_json(ex["profile"]),
                        ex.get("note", ""))
        for ex in data.get("examples", [])
    ]
    return Catalog(sources, records, examples)


def load_catalog(path: str | Path) -> Catalog:
    path = Path(path)
    return _parse_catalog(yaml.safe_load(path.read_text(encoding="utf-8")), str(path))


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    text = resources.files("repvar").joinpath("data/catalog.yaml").read_text(encoding="utf-8")
    return _parse_catalog(yaml.safe_load(text), "catalog.yaml")


def facts_for(c: GroupClass) -> list[CatalogFact]:
    return default_catalog().facts_for(c)


def recorded_examples() -> list[RecordedExample]:
    return list(default_catalog().examples)


# ---------------------------------------------------------------------------
# presentations


def _numbered(k: int) -> tuple[Generator, ...]:
    return tuple(Generator(f"x{i}") for i in range(1, k + 1))


def canonical_presentation(c: GroupClass, variant: str = "standard") -> Presentation:
    """Standard presentation of ``c``.

    ``variant="commutator"`` gives <x1..xg ; [x1,x2] x3^2 ... xg^2> for
    non-orientable surfaces of genus g >= 3.
    """
    g = FreeWord.gen
    k = c.kind
    if k is ClassKind.CYCLIC:
        (n,) = c.params
        return Presentation((Generator("x"),), (g(0, n),), class_tag=c)
    if k is ClassKind.TORUS_KNOT:
        p, t = c.params
        return Presentation((Generator("x"), Generator("y")), (g(0, p) * g(1, -t),), class_tag=c)
    if k is ClassKind.ORIENTABLE_SURFACE:
        (genus,) = c.params
        rel = FreeWord()
        for i in range(genus):
            rel = rel * commutator(g(2 * i), g(2 * i + 1))
        return Presentation(_numbered(2 * genus), (rel,), class_tag=c)
    if k is ClassKind.NONORIENTABLE_SURFACE:
        (genus,) = c.params
        if variant == "commutator":
            if genus < 3:
                raise ValueError("the commutator variant needs genus >= 3")
            rel = commutator(g(0), g(1))
            for i in range(2, genus):
                rel = rel * g(i, 2)
        else:
            rel = FreeWord()
            for i in range(genus):
                rel = rel * g(i, 2)
        return Presentation(_numbered(genus), (rel,), class_tag=c)
    if k is ClassKind.FREE_PRODUCT_CYCLIC:
        m, n = c.params
        return Presentation((Generator("x"), Generator("y")), (g(0, m), g(1, n)), class_tag=c)
    if k is ClassKind.FREE:
        (n,) = c.params
        return Presentation(_numbered(n), (), class_tag=c)
    raise ValueError(f"no canonical presentation for {c}")


def _cyclic_forms(w: FreeWord) -> set[tuple]:
    forms = set()
    for v in (w, w.inverse()):
        forms.update(r.letters for r in v.rotations())
    return forms


def _single_power(w: FreeWord) -> tuple[int, int] | None:
    core = w.cyclic_reduce()
    if len(core.letters) == 1:
        return core.letters[0]
    return None


def identify(p: Presentation) -> GroupClass | None:
    """Recognize a presentation equal (up to cyclic permutation and inversion of
    relators, keeping generator order) to one of the canonical forms."""
    n, rels = p.n_generators, [r for r in p.relators if not r.is_trivial()]
    if not rels:
        return GroupClass(ClassKind.FREE, (n,))
    if len(rels) == 1:
        rel = rels[0]
        power = _single_power(rel)
        if n == 1 and power is not None:
            return GroupClass(ClassKind.CYCLIC, (abs(power[1]),))
        core = rel.cyclic_reduce()
        if n == 2 and len(core.letters) == 2 and {i for i, _ in core.letters} == {0, 1}:
            exps = dict(core.letters)
            if abs(exps[0]) >= 2 and abs(exps[1]) >= 2:
                return GroupClass(ClassKind.TORUS_KNOT, (abs(exps[0]), abs(exps[1])))
        forms = _cyclic_forms(rel)
        if n % 2 == 0:
            c = GroupClass(ClassKind.ORIENTABLE_SURFACE, (n // 2,))
            if canonical_presentation(c).relators[0].letters in forms:
                return c
        c = GroupClass(ClassKind.NONORIENTABLE_SURFACE, (n,))
        if canonical_presentation(c).relators[0].letters in forms:
            return c
        if n >= 3 and canonical_presentation(c, "commutator").relators[0].letters in forms:
            return c
    if n == 2 and len(rels) == 2:
        powers = [_single_power(r) for r in rels]
        if all(powers) and sorted(i for i, _ in powers) == [0, 1]:
            orders = {i: abs(e) for i, e in powers}
            if orders[0] >= 2 and orders[1] >= 2:
                return GroupClass(ClassKind.FREE_PRODUCT_CYCLIC, (orders[0], orders[1]))
    return None


def known_profile(p: Presentation, group: AlgebraicGroup) -> Profile | None:
    """Profile when the presentation splits as a free product of cyclic and free factors.

    Applies when every relator is conjugate to a power of one generator and
    no generator carries two relators; otherwise returns None.
    """
    orders: dict[int, int] = {}
    for rel in p.relators:
        if rel.is_trivial():
            continue
        power = _single_power(rel)
        if power is None:
            return None
        i, e = power
        if i in orders:
            orders[i] = math.gcd(orders[i], abs(e))
        else:
            orders[i] = abs(e)
    free_rank = p.n_generators - len(orders)
    out = free_group_profile(free_rank)
    for i in sorted(orders):
        out = convolve(out, cyclic_profile(orders[i], group))
    return out


def split_pinched(rel: FreeWord, n_generators: int) -> tuple[int, int, FreeWord] | None:
    """Find (y, p, W) with the relator cyclically equal to W(X) y^-p, |p| >= 2,
    y absent from W.  Returns the generator index of y, p > 0, and W."""
    core = rel.cyclic_reduce()
    counts: dict[int, int] = {}
    for i, _ in core.letters:
        counts[i] = counts.get(i, 0) + 1
    for y in sorted(i for i, k in counts.items() if k == 1):
        for r in core.rotations():
            if r.letters and r.letters[-1][0] == y and len(r.letters) > 1:
                e = r.letters[-1][1]
                if abs(e) < 2:
                    break
                w = FreeWord(r.letters[:-1])
                if e > 0:
                    w = w.inverse()
                return y, abs(e), w
    return None


def unpinched_presentation(p: Presentation, y: int, w: FreeWord) -> Presentation:
    """<X ; W = 1> with generator ``y`` removed and indices shifted down."""
    gens = tuple(g for k, g in enumerate(p.generators) if k != y)
    shifted = FreeWord(tuple((i - (i > y), e) for i, e in w.letters))
    return Presentation(gens, (shifted,))


def quotient_input_dimension(p: Presentation) -> tuple[int, str] | None:
    """dim R_PSL2(p) from the catalog or a known free-product profile, with its source."""
    c = identify(p)
    if c is not None:
        fact = default_catalog().fact(c, "PSL2DimensionOfQuotientInput")
        if fact is not None:
            return int(fact.value), f"catalog:{fact.id}"
    prof = known_profile(p, PSL2)
    if prof is not None:
        return prof.dim, "free-product profile"
    return None
