"""Command-line interface: ``repvar <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
``--json`` prints one JSON document matching ``data/cli_output.schema.json``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import matnum
from .analysis import analyze_presentation
from .catalog import known_profile, recorded_examples
from .profiles import (PSL2, SL2, AlgebraicGroup, Profile, convolve, cyclic_profile,
                       free_group_profile, pinched_dimension_psl2, torus_n4_psl2, torus_n4_sl2)
from .torsion import enumerate_classes, enumerate_sl2, format_classes, profile_from_classes
from .torsion import two_dim_count
from .verdicts import lift_diagnosis
from .verify import SWEEPS, run_all
from .words import (Presentation, PresentationError, WordSyntaxError, format_presentation,
                    load_presentation, parse_presentation, parse_relation)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*")


class UsageError(Exception):
    """Bad input detected after argument parsing; maps to exit code 2."""

    def __init__(self, message: str, source: str | None = None, line: int | None = None,
                 offset: int | None = None):
        super().__init__(message)
        self.source, self.line, self.offset = source, line, offset

    def to_json(self) -> dict:
        return {"message": str(self), "source": self.source, "line": self.line,
                "offset": self.offset}


# ---------------------------------------------------------------------------
# input helpers


def _gens_from_flag(text: str | None, words: list[str]) -> list[str]:
    if text:
        return [g.strip() for g in text.split(",") if g.strip()]
    seen: list[str] = []
    for w in words:
        for name in _IDENT.findall(w):
            if name not in seen:
                seen.append(name)
    return seen


def _inline_presentation(relators: list[str], gens: str | None) -> Presentation:
    names = _gens_from_flag(gens, relators)
    if not names:
        raise UsageError("no generators given or found")
    rels = []
    for k, text in enumerate(relators, start=1):
        try:
            rels.append(parse_relation(text, names))
        except WordSyntaxError as exc:
            raise UsageError(str(exc).rsplit(" (at", 1)[0], f"<arg {k}>", 1, exc.offset) from None
        except ValueError as exc:
            raise UsageError(str(exc), f"<arg {k}>", 1) from None
    return Presentation(tuple(names), tuple(rels))


def _load(target: str) -> Presentation:
    try:
        if target == "-":
            return parse_presentation(sys.stdin.read(), "<stdin>")
        return load_presentation(target)
    except PresentationError as exc:
        raise UsageError(str(exc).split(": ", 1)[1] if ": " in str(exc) else str(exc),
                         exc.source, exc.line, exc.offset) from None
    except OSError as exc:
        raise UsageError(f"cannot read {target}: {exc.strerror}", target) from None


def _groups(choice: str) -> list[AlgebraicGroup]:
    return {"sl2": [SL2], "psl2": [PSL2], "both": [SL2, PSL2]}[choice]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, JSON result, text lines)


def cmd_analyze(args):
    if args.gens is not None or len(args.target) > 1:
        pres = _inline_presentation(args.target, args.gens)
    else:
        pres = _load(args.target[0])
    an = analyze_presentation(pres, witness=not args.no_witness, seed=args.seed,
                              restarts=args.restarts, tol=args.residual_tol)
    lines = [f"presentation  {format_presentation(pres)}",
             f"class         {an.group_class or 'unrecognized'}",
             f"deficiency    {an.deficiency}"
             + (f"  (every component has dim >= {an.deficiency_bound})"
                if an.deficiency_bound is not None else "  (negative: no bound)")]
    for r in an.relators:
        lines.append(f"relator       {r.text}")
        lines.append(f"  exponent sums {list(r.exponent_sums)}  total {r.total}")
        lines.append(f"  commutator subgroup {r.in_commutator_subgroup}  "
                     f"+- condition {r.pm_condition}  minus condition {r.minus_condition}")
    for f in an.facts:
        lines.append(f"fact          [{f.source}] {f.statement}")
    for key, prof in an.profiles.items():
        lines.append(f"profile {key:6s}{prof}")
    for v in an.verdicts:
        cites = ", ".join(c.theorem for c in v.citations)
        lines.append(f"verdict       {v.kind.value}: {v.statement}  [{cites}]")
    for w in an.warnings:
        lines.append(f"warning       {w}")
    return EXIT_OK, an.to_json(), lines


def _profile_rows(kind: str, params: list[int], group: AlgebraicGroup):
    """(profile or None, extra fields, oracle value) for one group."""
    if kind == "cyclic":
        (n,) = params
        oracle = profile_from_classes(enumerate_classes(n, group))
        return cyclic_profile(n, group), {}, oracle
    if kind == "free":
        (n,) = params
        return free_group_profile(n), {}, None
    if kind == "free-product":
        m, n = params
        prof = convolve(cyclic_profile(m, group), cyclic_profile(n, group))
        oracle = convolve(profile_from_classes(enumerate_classes(m, group)),
                          profile_from_classes(enumerate_classes(n, group)))
        return prof, {}, oracle
    if kind == "torus":
        p, t = params
        if group is SL2:
            value = torus_n4_sl2(p, t)
            oracle = sum(two_dim_count(p, c, SL2) * two_dim_count(t, c, SL2) for c in (1, -1))
        else:
            value = torus_n4_psl2(p, t)
            oracle = two_dim_count(p, 1, PSL2) * two_dim_count(t, 1, PSL2)
        return None, {"n4": value}, oracle
    raise UsageError(f"unknown class {kind!r}")


_ARITY = {"cyclic": 1, "free": 1, "free-product": 2, "torus": 2}
_MIN = {"cyclic": 1, "free": 0, "free-product": 2, "torus": 2}


def cmd_profile(args):
    kind, params = args.kind, args.params
    if len(params) != _ARITY[kind]:
        raise UsageError(f"{kind} takes {_ARITY[kind]} integer parameter(s)")
    if any(p < _MIN[kind] for p in params):
        raise UsageError(f"{kind} parameters must be >= {_MIN[kind]}")
    code, entries, lines = EXIT_OK, [], []
    for group in _groups(args.group):
        prof, extra, oracle = _profile_rows(kind, params, group)
        entry = {"group": group.value, **extra}
        shown = str(prof) if prof is not None else f"N4 = {extra['n4']}"
        if prof is not None:
            entry["profile"] = prof.to_json()
        if args.check and oracle is not None:
            value = prof if prof is not None else extra["n4"]
            agree = value == oracle
            entry["oracle"] = oracle.to_json() if isinstance(oracle, Profile) else oracle
            entry["agrees"] = agree
            shown += f"   oracle {oracle}  {'ok' if agree else 'MISMATCH'}"
            if not agree:
                code = EXIT_FAIL
        if args.classes and kind == "cyclic":
            classes = enumerate_classes(params[0], group)
            entry["classes"] = [{"kind": c.kind.value, "exponent": c.exponent, "dim": c.dim}
                                for c in classes]
        lines.append(f"{group.label:9s} {shown}")
        if args.classes and kind == "cyclic":
            lines.extend("  " + s for s in format_classes(enumerate_classes(params[0], group)).splitlines())
        entries.append(entry)
    result = {"class": kind, "params": params, "groups": entries}
    return code, result, lines


def cmd_dim_pinched(args):
    try:
        dim, reducible = pinched_dimension_psl2(args.n, args.p, args.dim_g_prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {"n": args.n, "p": args.p, "dim_g_prime": args.dim_g_prime, "dim": dim,
              "reducible": reducible}
    return EXIT_OK, result, [f"dim R_PSL2(G) = {dim}", f"reducible      {str(reducible).lower()}"]


def _sweep_kwargs(name: str, args) -> dict:
    kw: dict = {}
    if name in ("cyclic", "free-product", "torus") and args.max is not None:
        kw["max_n"] = args.max
    if name in ("flip", "parity", "witnesses") and args.count is not None:
        kw["count"] = args.count
    if name in ("flip", "parity", "witnesses", "fiber"):
        kw["seed"] = args.seed
    if name == "flip":
        kw["tol"] = args.residual_tol
    if name == "witnesses":
        kw["newton_tol"] = args.residual_tol
        kw["restarts"] = args.restarts
    if name == "fiber":
        kw.update(fd_step=args.fd_step, rank_tol=args.rank_tol)
    return kw


def cmd_verify(args):
    if args.sweep == "all":
        results = run_all(args.seed) if args.max is None and args.count is None else [
            SWEEPS[name](**_sweep_kwargs(name, args)) for name in SWEEPS]
    else:
        results = [SWEEPS[args.sweep](**_sweep_kwargs(args.sweep, args))]
    lines = []
    for res in results:
        if res.name == "torus" and args.sweep == "torus":
            lines.append(f"{'p':>4} {'t':>4} {'N4 SL2':>8} {'N4 PSL2':>8}  relation")
            for row in res.rows:
                rel = "differ" if row["n4_sl2"] != row["n4_psl2"] else "equal"
                lines.append(f"{row['p']:>4} {row['t']:>4} {row['n4_sl2']:>8} "
                             f"{row['n4_psl2']:>8}  {rel}")
        status = "PASS" if res.ok else "FAIL"
        lines.append(f"{status} {res.name}: {res.checked} checks in {res.seconds:.3f} s")
        lines.extend(f"  {msg}" for msg in res.failures[:20])
    ok = all(r.ok for r in results)
    return (EXIT_OK if ok else EXIT_FAIL), {"sweeps": [r.to_json() for r in results]}, lines


def cmd_lift(args):
    pres = _inline_presentation([args.word], args.gens)
    w = pres.relators[0]
    if w.is_trivial():
        raise UsageError("the word is trivial in the free group")
    v = lift_diagnosis(w, pres.n_generators)
    cites = ", ".join(c.theorem for c in v.citations)
    return EXIT_OK, {"word": args.word, "generators": pres.names, "verdict": v.to_json()}, [
        f"{v.kind.value}: {v.statement}  [{cites}]"]


def cmd_examples(args):
    code, items, lines = EXIT_OK, [], []
    for ex in recorded_examples():
        computed = known_profile(ex.presentation, ex.group)
        agree = computed == ex.profile if computed is not None else None
        if agree is False:
            code = EXIT_FAIL
        items.append({"presentation": str(ex.presentation), "group": ex.group.value,
                      "profile": ex.profile.to_json(),
                      "computed": computed.to_json() if computed is not None else None,
                      "agrees": agree, "note": ex.note})
        mark = {True: "ok", False: "MISMATCH", None: "not computed"}[agree]
        lines.append(f"{str(ex.presentation):28s} {ex.group.label:9s} {str(ex.profile):26s} {mark}")
    return code, {"examples": items}, lines


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="repvar",
        description="Representation varieties of finitely presented groups over SL(2,C) "
                    "and PSL(2,C): profiles, parity criteria, verdicts and checks.")
    ap.add_argument("--json", action="store_true", help="print a JSON document instead of text")

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    tol.add_argument("--residual-tol", type=float, default=matnum.DEFAULT_RESIDUAL_TOL,
                     help=f"witness residual tolerance (default {matnum.DEFAULT_RESIDUAL_TOL:g})")
    tol.add_argument("--fd-step", type=float, default=matnum.DEFAULT_FD_STEP,
                     help=f"finite-difference step (default {matnum.DEFAULT_FD_STEP:g})")
    tol.add_argument("--rank-tol", type=float, default=matnum.DEFAULT_RANK_TOL,
                     help=f"relative singular-value cutoff (default {matnum.DEFAULT_RANK_TOL:g})")
    tol.add_argument("--restarts", type=int, default=20, help="Newton restarts (default 20)")

    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("analyze", parents=[tol], help="analyze a presentation file or inline relators")
    p.add_argument("target", nargs="+",
                   help="presentation file ('-' for stdin), or relators when --gens is given")
    p.add_argument("--gens", help="comma-separated generator names for inline relators")
    p.add_argument("--no-witness", action="store_true", help="skip the numerical V_-1 search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("profile", help="profile of a standard group class")
    p.add_argument("kind", choices=sorted(_ARITY))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--group", choices=["sl2", "psl2", "both"], default="both")
    p.add_argument("--check", action="store_true",
                   help="compare against the conjugacy-class oracle (exit 1 on mismatch)")
    p.add_argument("--classes", action="store_true", help="list the conjugacy classes (cyclic)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("dim-pinched", help="dimension of R_PSL2(<X, y ; W(X) = y^p>)")
    p.add_argument("n", type=_positive, help="number of generators in X")
    p.add_argument("p", type=int, help="root exponent (>= 2)")
    p.add_argument("dim_g_prime", type=int, help="dim R_PSL2(<X ; W>)")
    p.set_defaults(func=cmd_dim_pinched)

    p = sub.add_parser("verify", parents=[tol], help="run verification sweeps")
    p.add_argument("sweep", choices=[*SWEEPS, "all"])
    p.add_argument("--max", type=_positive, help="upper parameter for exact sweeps")
    p.add_argument("--count", type=_positive, help="sample count for random sweeps")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lift", help="which PSL(2,C) representations lift, for a one-relator group")
    p.add_argument("word")
    p.add_argument("--gens", help="comma-separated generator names (default: in order of appearance)")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("examples", help="recorded example profiles, recomputed where possible")
    p.set_defaults(func=cmd_examples)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code, result, lines = args.func(args)
    except UsageError as exc:
        where = ":".join(str(x) for x in (exc.source, exc.line, exc.offset) if x is not None)
        print(f"repvar {args.command}: {where + ': ' if where else ''}{exc}", file=sys.stderr)
        if args.json:
            print(json.dumps({"command": args.command, "ok": False, "exit_code": EXIT_USAGE,
                              "error": exc.to_json()}, indent=2))
        return EXIT_USAGE
    if args.json:
        print(json.dumps({"command": args.command, "ok": code == EXIT_OK, "exit_code": code,
                          "result": result}, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
