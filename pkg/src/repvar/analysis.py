"""Whole-presentation analysis: parity flags, bounds, known profiles and verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import matnum
from .catalog import (ClassKind, GroupClass, default_catalog, identify, known_profile,
                      quotient_input_dimension, split_pinched, unpinched_presentation)
from .profiles import PSL2, SL2, Profile, deficiency_lower_bound, profile_below_bound
from .verdicts import (Evidence, Verdict, cite_fact, falling_verdict, freeness_verdict,
                       lift_diagnosis, pinched_verdicts, theorem_ab_verdict,
                       torus_profiles_differ)
from .words import (Presentation, exponent_profile, format_word, has_even_nonzero_sum,
                    in_commutator_subgroup, minus_condition_holds, pm_condition_holds)

__all__ = ["RelatorReport", "Analysis", "analyze_presentation"]


@dataclass
class RelatorReport:
    text: str
    exponent_sums: tuple[int, ...]
    total: int
    in_commutator_subgroup: bool
    pm_condition: bool
    minus_condition: bool
    even_nonzero_sum: bool

    def to_json(self) -> dict:
        return {
            "relator": self.text,
            "exponent_sums": list(self.exponent_sums),
            "total": self.total,
            "in_commutator_subgroup": self.in_commutator_subgroup,
            "pm_condition": self.pm_condition,
            "minus_condition": self.minus_condition,
            "even_nonzero_sum": self.even_nonzero_sum,
        }


@dataclass
class Analysis:
    presentation: Presentation
    relators: list[RelatorReport]
    deficiency: int
    deficiency_bound: int | None
    group_class: GroupClass | None
    facts: list = field(default_factory=list)
    profiles: dict[str, Profile] = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)
    witness: matnum.Witness | None = None
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "presentation": str(self.presentation),
            "generators": self.presentation.names,
            "relators": [r.to_json() for r in self.relators],
            "deficiency": self.deficiency,
            "deficiency_bound": self.deficiency_bound,
            "class": str(self.group_class) if self.group_class else None,
            "facts": [f.to_json() for f in self.facts],
            "profiles": {k: v.to_json() for k, v in self.profiles.items()},
            "verdicts": [v.to_json() for v in self.verdicts],
            "witness": self.witness.to_json() if self.witness else None,
            "warnings": list(self.warnings),
        }


def _relator_report(p: Presentation, w) -> RelatorReport:
    n = p.n_generators
    prof = exponent_profile(w, n)
    return RelatorReport(format_word(w, p.generators), prof.sums, prof.total,
                         in_commutator_subgroup(w, n), pm_condition_holds(w, n),
                         minus_condition_holds(w, n), has_even_nonzero_sum(w, n))


def analyze_presentation(p: Presentation, witness: bool = True, seed: int = 0,
                         restarts: int = 20, tol: float = matnum.DEFAULT_RESIDUAL_TOL) -> Analysis:
    """Everything the toolkit can say about ``p`` without computing a variety."""
    n = p.n_generators
    rels = [r for r in p.relators if not r.is_trivial()]
    d = p.deficiency
    out = Analysis(p, [_relator_report(p, r) for r in p.relators], d,
                   deficiency_lower_bound(n, len(p.relators)) if d >= 0 else None,
                   identify(p), warnings=p.validate())
    c = out.group_class
    if c is not None:
        out.facts = default_catalog().facts_for(c)

    for group in (SL2, PSL2):
        prof = known_profile(p, group)
        if prof is not None:
            out.profiles[group.value] = prof
            if out.deficiency_bound is not None and profile_below_bound(prof, out.deficiency_bound):
                out.warnings.append(f"{group.label} profile has a component below the "
                                    f"deficiency bound {out.deficiency_bound}")
    if not rels:
        out.verdicts.append(freeness_verdict(n, SL2, out.profiles[SL2.value]))
        return out

    if len(rels) == 1:
        w = rels[0]
        irr = None
        fact = next((f for f in out.facts if f.property == "SL2Irreducible"), None)
        if fact is not None:
            irr = Evidence(f"catalog:{fact.id}", fact.statement)
        vmin = None
        # with an even nonzero sum, theorem_ab_verdict builds the V_-1 point itself
        if witness and not has_even_nonzero_sum(w, n):
            out.witness = matnum.vminus_witness(w, n, seed=seed, restarts=restarts, tol=tol)
            if out.witness is not None:
                vmin = Evidence("matnum", f"point of V_-1 via {out.witness.method}, residual "
                                f"{out.witness.residual:.2e}", out.witness.to_json())
        ab = theorem_ab_verdict(w, n, irr, vmin)
        if fact is not None and ab.kind.value == "ProfilesDiffer":
            ab = Verdict(ab.kind, ab.statement, ab.citations + (cite_fact(fact.id),),
                         ab.evidence, ab.data)
        out.verdicts.append(ab)
        out.verdicts.append(lift_diagnosis(w, n, vmin))
        out.verdicts.append(falling_verdict(w, n, out.profiles.get(SL2.value),
                                            out.profiles.get(PSL2.value)))

        split = split_pinched(w, n)
        if split is not None and n >= 2:
            y, power, core = split
            reduced = unpinched_presentation(p, y, core)
            known = quotient_input_dimension(reduced)
            dim_gp, source = known if known else (None, None)
            ev = Evidence(source, f"dim R_PSL2({reduced}) = {dim_gp}") if known else None
            for v in pinched_verdicts(n - 1, power, dim_gp, ev):
                data = dict(v.data, pinched_generator=p.names[y], quotient_input=str(reduced))
                out.verdicts.append(Verdict(v.kind, v.statement, v.citations, v.evidence, data))

    if c is not None and c.kind is ClassKind.TORUS_KNOT:
        out.verdicts.append(torus_profiles_differ(*c.params))
    for group in (SL2, PSL2):
        prof = out.profiles.get(group.value)
        if prof is not None and n > 0 and prof.dim == 3 * n:
            out.verdicts.append(freeness_verdict(n, group, prof))
    return out
