"""Verdicts: conclusions drawn from counting results, each with its citations.

Every result the engine can invoke is registered in :data:`RESULTS` with the
hypothesis flags it needs.  A :class:`Citation` records the flags that were
actually established when it was issued, so :func:`citation_hypotheses_hold`
can audit any verdict after the fact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .catalog import default_catalog
from .profiles import AlgebraicGroup, Profile, free_group_profile, pinched_dimension_psl2
from .profiles import same_profile, torus_n4_psl2, torus_n4_sl2
from .words import FreeWord, has_even_nonzero_sum, in_commutator_subgroup
from .words import minus_condition_holds, pm_condition_holds

__all__ = [
    "VerdictKind",
    "Result",
    "RESULTS",
    "Citation",
    "Evidence",
    "Verdict",
    "cite",
    "cite_fact",
    "citation_hypotheses_hold",
    "verdict_hypotheses_hold",
    "theorem_ab_verdict",
    "lift_diagnosis",
    "falling_verdict",
    "torus_profiles_differ",
    "pinched_verdicts",
    "freeness_consistent",
    "freeness_verdict",
    "unknown",
]


class VerdictKind(enum.Enum):
    DIMENSION_COMPUTED = "DimensionComputed"
    REDUCIBLE = "Reducible"
    PROFILES_DIFFER = "ProfilesDiffer"
    NO_LIFT_STRATUM = "NoLiftStratum"
    ALL_LIFT = "AllLift"
    FREENESS_CONSISTENT = "FreenessConsistent"
    FALLS = "Falls"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Result:
    id: str
    statement: str
    hypotheses: tuple[str, ...]


_RESULT_LIST = [
    Result("commutator-relator-profiles-differ",
           "For a one-relator group whose relator lies in the commutator subgroup, an "
           "irreducible SL(2,C) variety together with a point of V_-1 forces the SL(2,C) "
           "and PSL(2,C) profiles apart.",
           ("relator_nontrivial", "in_commutator_subgroup", "sl2_irreducible",
            "v_minus_nonempty")),
    Result("even-sum-relator-profiles-differ",
           "For a one-relator group whose relator has even exponent sum on every "
           "generator, an irreducible SL(2,C) variety together with a point of V_-1 forces "
           "the SL(2,C) and PSL(2,C) profiles apart.",
           ("relator_nontrivial", "pm_condition", "sl2_irreducible", "v_minus_nonempty")),
    Result("even-nonzero-sum-root",
           "If some generator has even nonzero exponent sum s, sending it to a root of -I of "
           "order s and every other generator to I gives a point of V_-1.",
           ("has_even_nonzero_sum",)),
    Result("pm-condition-no-lift",
           "When every exponent sum is even, V_1 and V_-1 are stable under sign flips, so no "
           "PSL(2,C) representation in the image of V_-1 lifts to SL(2,C).",
           ("relator_nontrivial", "pm_condition")),
    Result("minus-condition-all-lift",
           "When the total exponent sum is odd, m -> -m swaps V_1 and V_-1, so every PSL(2,C) "
           "representation lifts to SL(2,C).",
           ("relator_nontrivial", "minus_condition")),
    Result("minus-condition-falls",
           "When m -> -m swaps V_1 and V_-1, the PSL(2,C) variety falls relative to the "
           "SL(2,C) variety: every PSL(2,C) component is covered by an SL(2,C) component of "
           "the same dimension.",
           ("relator_nontrivial", "minus_condition", "profiles_known")),
    Result("torus-n4-inequality",
           "For a torus knot group <x,y ; x^p = y^t> with p, t >= 3 the numbers of "
           "4-dimensional components over SL(2,C) and PSL(2,C) differ.",
           ("p_at_least_3", "t_at_least_3")),
    Result("pinched-dimension",
           "For G = <X, y ; W(X) = y^p> with |X| = n, p > 1 and W nontrivial, "
           "dim R_PSL2(G) = max(3n, dim R_PSL2(G') + 2) <= 3n + 1 where G' = <X ; W>.",
           ("root_exponent_at_least_2", "w_nontrivial", "dim_g_prime_known",
            "dim_g_prime_in_band")),
    Result("pinched-reducible",
           "In the pinched setting, dim R_PSL2(G') + 2 >= 3n makes R_PSL2(G) reducible.",
           ("root_exponent_at_least_2", "w_nontrivial", "dim_g_prime_known",
            "dim_g_prime_in_band", "dim_g_prime_plus_2_at_least_3n")),
    Result("freeness-criterion",
           "If F_2 embeds in A, an n-generated group whose A-variety has dimension n dim A and "
           "the profile of R_A(F_n) is free of rank n.",
           ("free_group_embeds", "dimension_is_3n", "profile_matches_free")),
    Result("unresolved",
           "No registered result applies; the verdict records why.",
           ()),
]

RESULTS: dict[str, Result] = {r.id: r for r in _RESULT_LIST}

_FACT_PREFIX = "catalog:"


@dataclass(frozen=True)
class Citation:
    theorem: str
    quote: str
    inputs: Mapping[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "quote": self.quote, "inputs": dict(self.inputs)}


@dataclass(frozen=True)
class Evidence:
    source: str
    detail: str
    payload: Mapping[str, object] | None = None

    def to_json(self) -> dict:
        out = {"source": self.source, "detail": self.detail}
        if self.payload is not None:
            out["payload"] = dict(self.payload)
        return out


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    statement: str
    citations: tuple[Citation, ...]
    evidence: tuple[Evidence, ...] = ()
    data: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if not self.citations:
            raise ValueError("a verdict needs at least one citation")

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "statement": self.statement,
            "citations": [c.to_json() for c in self.citations],
            "evidence": [e.to_json() for e in self.evidence],
            "data": dict(self.data),
        }


def cite(result_id: str, **inputs) -> Citation:
    return Citation(result_id, RESULTS[result_id].statement, inputs)


def cite_fact(fact_id: str) -> Citation:
    rec = next((r for r in default_catalog().records if r.id == fact_id), None)
    if rec is None:
        raise KeyError(f"no catalog fact {fact_id!r}")
    return Citation(_FACT_PREFIX + fact_id, rec.statement, {"source": rec.source})


def citation_hypotheses_hold(c: Citation) -> bool:
    """True iff every hypothesis flag of the cited result is recorded as True.

    Catalog citations hold when the fact exists in the loaded catalog.
    """
    if c.theorem.startswith(_FACT_PREFIX):
        fact_id = c.theorem[len(_FACT_PREFIX):]
        return any(r.id == fact_id for r in default_catalog().records)
    result = RESULTS.get(c.theorem)
    if result is None:
        return False
    return all(c.inputs.get(h) is True for h in result.hypotheses)


def verdict_hypotheses_hold(v: Verdict) -> bool:
    return all(citation_hypotheses_hold(c) for c in v.citations)


def unknown(reason: str, **data) -> Verdict:
    return Verdict(VerdictKind.UNKNOWN, reason, (cite("unresolved", reason=reason),), data=data)


def _as_evidence(flag, source: str) -> Evidence | None:
    if flag is None or flag is False:
        return None
    if isinstance(flag, Evidence):
        return flag
    return Evidence(source, "asserted by caller")


def _require_nontrivial(w: FreeWord):
    if w.is_trivial():
        raise ValueError("the relator is trivial in the free group")


# ---------------------------------------------------------------------------
# one-relator verdicts


def theorem_ab_verdict(w: FreeWord, n: int, sl2_irreducible=None,
                       v_minus_nonempty=None) -> Verdict:
    """ProfilesDiffer for <x_1..x_n ; w> when the parity and evidence hypotheses hold.

    ``sl2_irreducible`` and ``v_minus_nonempty`` are evidence flags: an
    :class:`Evidence`, ``True`` (caller-asserted) or ``None``.  A missing V_-1
    point is supplied automatically when some exponent sum is even and nonzero.
    """
    _require_nontrivial(w)
    comm = in_commutator_subgroup(w, n)
    pm = pm_condition_holds(w, n)
    irr = _as_evidence(sl2_irreducible, "caller")
    vmin = _as_evidence(v_minus_nonempty, "caller")
    citations: list[Citation] = []
    evidence: list[Evidence] = []
    if vmin is None and has_even_nonzero_sum(w, n):
        citations.append(cite("even-nonzero-sum-root", has_even_nonzero_sum=True))
        vmin = Evidence("parity", "even nonzero exponent sum gives an explicit point of V_-1")
    flags = dict(relator_nontrivial=True, sl2_irreducible=irr is not None,
                 v_minus_nonempty=vmin is not None)
    if irr is not None and vmin is not None and (comm or pm):
        evidence.extend([irr, vmin])
        if comm:
            citations.insert(0, cite("commutator-relator-profiles-differ",
                                     in_commutator_subgroup=True, **flags))
        else:
            citations.insert(0, cite("even-sum-relator-profiles-differ",
                                     pm_condition=True, **flags))
        return Verdict(VerdictKind.PROFILES_DIFFER,
                       "SL(2,C) and PSL(2,C) profiles differ", tuple(citations), tuple(evidence))
    missing = []
    if not (comm or pm):
        missing.append("relator is neither in the commutator subgroup nor of even exponent sums")
    if irr is None:
        missing.append("no citation for irreducibility of the SL(2,C) variety")
    if vmin is None:
        missing.append("no point of V_-1 known")
    return unknown("; ".join(missing), in_commutator_subgroup=comm, pm_condition=pm)


def lift_diagnosis(w: FreeWord, n: int, v_minus_nonempty=None) -> Verdict:
    """Which PSL(2,C) representations of <x_1..x_n ; w> lift to SL(2,C)."""
    _require_nontrivial(w)
    if minus_condition_holds(w, n):
        return Verdict(VerdictKind.ALL_LIFT, "every PSL(2,C) representation lifts to SL(2,C)",
                       (cite("minus-condition-all-lift", relator_nontrivial=True,
                             minus_condition=True),))
    if pm_condition_holds(w, n):
        vmin = _as_evidence(v_minus_nonempty, "caller")
        if vmin is None and has_even_nonzero_sum(w, n):
            vmin = Evidence("parity", "even nonzero exponent sum gives an explicit point of V_-1")
        nonempty = vmin is not None
        statement = "no representation with image in pi(V_-1) lifts"
        statement += ("; the stratum is nonempty" if nonempty
                      else "; the stratum is nonempty only if V_-1 is")
        return Verdict(VerdictKind.NO_LIFT_STRATUM, statement,
                       (cite("pm-condition-no-lift", relator_nontrivial=True, pm_condition=True),),
                       (vmin,) if vmin else (), {"stratum_nonempty": nonempty})
    return unknown("neither parity condition holds (some exponent sum is odd and the total "
                   "is even)")


def falling_verdict(w: FreeWord, n: int, sl2_profile: Profile | None = None,
                    psl2_profile: Profile | None = None) -> Verdict:
    """Falls when m -> -m swaps V_1 and V_-1 and both profiles are known.

    Without both profiles the conclusion cannot be compared against anything,
    so the verdict stays Unknown.
    """
    _require_nontrivial(w)
    if not minus_condition_holds(w, n):
        return unknown("total exponent sum is even, so m -> -m does not swap V_1 and V_-1")
    if sl2_profile is None or psl2_profile is None:
        return unknown("the Minus Condition holds but the SL(2,C) and PSL(2,C) profiles are "
                       "not both computable")
    data = {"sl2": sl2_profile.to_json(), "psl2": psl2_profile.to_json()}
    return Verdict(VerdictKind.FALLS, "the PSL(2,C) variety falls relative to the SL(2,C) one",
                   (cite("minus-condition-falls", relator_nontrivial=True,
                         minus_condition=True, profiles_known=True),), data=data)


# ---------------------------------------------------------------------------
# class-level verdicts


def torus_profiles_differ(p: int, t: int) -> Verdict:
    sl2, psl2 = torus_n4_sl2(p, t), torus_n4_psl2(p, t)
    data = {"p": p, "t": t, "n4_sl2": sl2, "n4_psl2": psl2}
    if p < 3 or t < 3:
        return unknown("equality possible when p=2 or t=2", **data)
    if sl2 == psl2:
        raise ArithmeticError(f"torus N4 counts coincide at p={p}, t={t}: {sl2}")
    return Verdict(VerdictKind.PROFILES_DIFFER,
                   f"N4 differs: {sl2} over SL(2,C), {psl2} over PSL(2,C)",
                   (cite("torus-n4-inequality", p_at_least_3=True, t_at_least_3=True, p=p, t=t),),
                   data=data)


def pinched_verdicts(n: int, p: int, dim_g_prime: int | None,
                     source: Evidence | None = None) -> list[Verdict]:
    """DimensionComputed (and Reducible when it applies) for <X, y ; W(X) = y^p>."""
    if dim_g_prime is None:
        return [unknown("dim R_PSL2(G') not available from the catalog", n=n, p=p)]
    in_band = 3 * (n - 1) <= dim_g_prime < 3 * n
    if not in_band:
        return [unknown(f"dim R_PSL2(G') = {dim_g_prime} outside [{3 * (n - 1)}, {3 * n})",
                        n=n, p=p)]
    dim, reducible = pinched_dimension_psl2(n, p, dim_g_prime)
    flags = dict(root_exponent_at_least_2=p >= 2, w_nontrivial=True, dim_g_prime_known=True,
                 dim_g_prime_in_band=True, n=n, p=p, dim_g_prime=dim_g_prime)
    ev = (source,) if source else ()
    out = [Verdict(VerdictKind.DIMENSION_COMPUTED, f"dim R_PSL2(G) = {dim}",
                   (cite("pinched-dimension", **flags),), ev, {"dim": dim})]
    if reducible:
        out.append(Verdict(VerdictKind.REDUCIBLE, "R_PSL2(G) is reducible",
                           (cite("pinched-reducible", dim_g_prime_plus_2_at_least_3n=True,
                                 **flags),), ev, {"dim": dim}))
    return out


def freeness_consistent(n: int, group: AlgebraicGroup, p: Profile) -> bool:
    """True iff ``p`` is the profile of R_A(F_n): one component of dimension 3n."""
    return not p.empty and p.dim == group.dim * n and same_profile(p, free_group_profile(n))


def freeness_verdict(n: int, group: AlgebraicGroup, p: Profile) -> Verdict:
    if not freeness_consistent(n, group, p):
        return unknown(f"profile {p} is not that of R_A(F_{n}); the freeness criterion is silent",
                       n=n, group=group.value)
    return Verdict(VerdictKind.FREENESS_CONSISTENT,
                   f"the profile matches R_A(F_{n}); the group is free of rank {n}",
                   (cite("freeness-criterion", free_group_embeds=True, dimension_is_3n=True,
                         profile_matches_free=True, n=n, group=group.value),),
                   (Evidence("classical", f"F_2 embeds in {group.label}"),))

