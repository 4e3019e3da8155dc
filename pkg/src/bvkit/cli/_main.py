"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input
error, 3 proof search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from bvkit.counterexample import (
    AlphaStructure,
    alpha_derivation,
    alpha_zero_depths,
    atom_count,
    check_no_dual_pars,
    proof_of_sn,
    s_n,
)
from bvkit.exceptions import BudgetExceededError, BVError, NotAWebError, NotShallowError
from bvkit.log import set_level
from bvkit.prover import (
    ProofSearch,
    System,
    check,
    delete_atom_pair,
    derivation_to_dict,
    first_redex_analysis,
    load_derivation,
    min_provable_depth,
)
from bvkit.shallow import CATALOG, RuleScheme, is_interaction, system_depth, validate_shallow_rule
from bvkit.structure import (
    AtomNode,
    OccurrenceTable,
    Structure,
    depth_of_structure,
    parse,
    parse_context,
    to_text,
)
from bvkit.virtual import SessionContainer, load_config
from bvkit.web import (
    WebCandidate,
    check_inverse_square,
    load_web,
    reconstruct,
    verify_web_properties,
    web_of,
    web_to_dict,
    web_to_dot,
)

__all__ = ["EXIT_OK", "EXIT_NEGATIVE", "EXIT_USAGE", "EXIT_BUDGET", "build_parser", "run", "main"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

logger = logging.getLogger("bvkit")

_SN = re.compile(r"S(\d+)")


class UsageError(BVError):
    """Bad command-line input that argparse cannot detect."""


def _read(arg: str) -> str:
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text(encoding="utf-8").strip()
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from exc
    return arg


def read_structure(arg: str) -> Structure:
    """Structure from inline text, ``@file`` or ``S<n>``."""
    match = _SN.fullmatch(arg)
    if match:
        return s_n(int(match.group(1))).structure
    return parse(_read(arg))


def _read_file(arg: str) -> str:
    return _read(arg if arg.startswith("@") else "@" + arg)


def _read_web(arg: str) -> tuple[WebCandidate, bool]:
    """A web from a JSON file, or the web of a structure; flags the latter."""
    path = arg[1:] if arg.startswith("@") else arg
    if path.endswith(".json") or arg.startswith("@"):
        text = _read_file(arg)
        if text.lstrip().startswith("{"):
            return load_web(text), False
        return web_of(parse(text)), True
    return web_of(read_structure(arg)), True


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _session(args: argparse.Namespace) -> SessionContainer:
    config = load_config(args.config) if args.config else None
    container = SessionContainer(config)
    if args.budget is not None:
        container.override_budget(args.budget)
    return container


def _prover(args: argparse.Namespace) -> ProofSearch:
    container = _session(args)
    search = container.new_prover()
    progress = container.signals[search.name]["sigProgress"]
    progress.connect(lambda n: logger.info("explored %d structures", n))
    return search


def cmd_prove(args: argparse.Namespace) -> int:
    goal = read_structure(args.structure)
    search = _prover(args)
    result = search.prove(goal)
    payload = {
        "goal": to_text(goal),
        "status": result.status.value,
        "explored": result.explored,
        "proof": derivation_to_dict(result.proof) if result.proof else None,
    }
    if result.proof:
        text = f"provable ({result.explored} explored)\n{result.proof.render()}"
    else:
        text = f"unprovable ({result.explored} explored)"
    _emit(args, payload, text)
    return EXIT_OK if result.provable else EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace) -> int:
    derivation = load_derivation(_read_file(args.derivation))
    report = check(derivation, System(args.system))
    payload = {
        "ok": report.ok,
        "step": report.step,
        "reason": report.reason,
        "is_proof": report.ok and derivation.is_proof,
        "length": derivation.length,
    }
    if report.ok:
        text = f"ok: {'proof' if derivation.is_proof else 'derivation'} of length {derivation.length}"
    else:
        text = f"step {report.step}: {report.reason}"
    _emit(args, payload, text)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_equiv(args: argparse.Namespace) -> int:
    left, right = read_structure(args.left), read_structure(args.right)
    equal = left == right
    _emit(
        args,
        {"equal": equal, "left": to_text(left), "right": to_text(right)},
        f"{'equivalent' if equal else 'not equivalent'}: {left} {'=' if equal else '!='} {right}",
    )
    return EXIT_OK if equal else EXIT_NEGATIVE


def cmd_web(args: argparse.Namespace) -> int:
    web = web_of(read_structure(args.structure))
    if args.dot:
        print(web_to_dot(web), end="")
    else:
        lines = [
            f"{web.labels[i]} {rel.symbol} {web.labels[j]}" for i, j, rel in web.pairs()
        ]
        _emit(args, web_to_dict(web), "\n".join(lines))
    return EXIT_OK


def cmd_verify_web(args: argparse.Namespace) -> int:
    web, from_structure = _read_web(args.web)
    report = verify_web_properties(web)
    violations = list(report.violations)
    if from_structure:
        violations += check_inverse_square(web).violations
    payload = {
        "passed": not violations,
        "violations": [
            {"property": v.property.value, "witness": list(v.witness)} for v in violations
        ],
    }
    lines = [f"{v.property.value}: {[str(web.labels[i]) for i in v.witness]}" for v in violations]
    _emit(args, payload, "\n".join(lines) if lines else "passed")
    return EXIT_OK if not violations else EXIT_NEGATIVE


def cmd_reconstruct(args: argparse.Namespace) -> int:
    web, _ = _read_web(args.web)
    try:
        result = reconstruct(web)
    except NotAWebError as exc:
        _emit(args, {"web": False, "partitions": exc.partitions}, f"not a relation web: {exc}")
        return EXIT_NEGATIVE
    trace = [[to_text(s) for s in state] for state in result.trace]
    text = "\n".join(f"{k}. " + ", ".join(state) for k, state in enumerate(trace, 1))
    _emit(
        args,
        {"web": True, "structure": to_text(result.structure), "trace": trace},
        f"{result.structure}\n{text}",
    )
    return EXIT_OK


def cmd_gen_sn(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("N must be a natural number")
    generated = s_n(args.n)
    if args.derivation:
        derivation = alpha_derivation(generated.params).closed()
        print(json.dumps(derivation_to_dict(derivation), indent=2))
        return EXIT_OK
    if args.check:
        return _check_sn(args, generated)
    _emit(
        args,
        {
            "n": args.n,
            "structure": to_text(generated.structure),
            "blocks": [list(u) for u in generated.blocks],
        },
        to_text(generated.structure),
    )
    return EXIT_OK


def _check_sn(args: argparse.Namespace, generated: AlphaStructure) -> int:
    n = args.n
    atoms = len(OccurrenceTable(generated.structure))
    pairs = check_no_dual_pars(generated.structure)
    depths = alpha_zero_depths(generated)
    report = check(proof_of_sn(n))
    failures = []
    if atoms != atom_count(n):
        failures.append(f"{atoms} atoms, expected {atom_count(n)}")
    if pairs:
        failures.append(f"dual pair {to_text(pairs[0].positive)}, {to_text(pairs[0].negative)} in a par")
    if any(d != 2 * n for d in depths):
        failures.append(f"alpha_0 depths {sorted(set(depths))}, expected {2 * n}")
    if not report.ok:
        failures.append(f"proof fails at step {report.step}: {report.reason}")
    payload = {
        "n": n,
        "atoms": atoms,
        "dual_pairs": len(pairs),
        "alpha_zero_depths": depths,
        "proof_ok": report.ok,
        "failures": failures,
    }
    _emit(args, payload, "\n".join(failures) if failures else f"ok: S{n} has {atoms} atoms")
    return EXIT_NEGATIVE if failures else EXIT_OK


def cmd_first_redex(args: argparse.Namespace) -> int:
    goal = read_structure(args.goal)
    search = _prover(args)
    entries = first_redex_analysis(goal, search=search)
    least = min_provable_depth(entries)
    payload = {
        "goal": to_text(goal),
        "min_provable_depth": least,
        "entries": [
            {
                "rule": e.instance.rule.value,
                "redex": to_text(e.instance.redex),
                "contractum": to_text(e.instance.contractum),
                "redex_depth": e.redex_depth,
                "premise_provable": e.premise_provable,
            }
            for e in entries
        ],
    }
    lines = [
        f"{e.redex_depth}  {'provable' if e.premise_provable else 'unprovable':<10}  {e.instance}"
        for e in entries
    ]
    lines.append(f"least provable depth: {least}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if least is not None else EXIT_NEGATIVE


def cmd_delete_pair(args: argparse.Namespace) -> int:
    derivation = load_derivation(_read_file(args.derivation))
    atom = parse(args.atom)
    if not isinstance(atom, AtomNode):
        raise UsageError(f"{args.atom} is not an atom")
    reduced = delete_atom_pair(derivation, atom.atom)
    report = check(reduced, System(args.system))
    if not report.ok:
        logger.warning("reduced derivation fails at step %s: %s", report.step, report.reason)
    _emit(args, derivation_to_dict(reduced), reduced.render())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_shallow_check(args: argparse.Namespace) -> int:
    rule = RuleScheme.from_text(args.name, args.conclusion, args.premise)
    verdict = validate_shallow_rule(rule)
    print(
        json.dumps(
            {
                "rule": rule.name,
                "conclusion": to_text(rule.conclusion),
                "premise": to_text(rule.premise),
                "shallow": verdict.is_shallow,
                "depth": verdict.depth,
                "reasons": list(verdict.reasons),
            },
            indent=2,
        )
    )
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_system_depth(args: argparse.Namespace) -> int:
    """Catalog rules and ``--scheme`` rules form the system; atomic interaction is allowed."""
    unknown = [name for name in args.rules if name not in CATALOG]
    if unknown:
        raise UsageError(f"unknown rule {unknown[0]}; known rules: {', '.join(CATALOG)}")
    rules = [CATALOG[name] for name in args.rules]
    rules += [RuleScheme.from_text(name, conclusion, premise) for name, conclusion, premise in args.scheme]
    try:
        depth = system_depth(rules)
    except NotShallowError as exc:
        _emit(args, {"shallow": False, "rule": exc.rule}, f"not shallow: {exc.rule}")
        return EXIT_NEGATIVE
    skipped = [rule.name for rule in rules if is_interaction(rule)]
    _emit(args, {"shallow": True, "depth": depth, "interaction": skipped}, str(depth))
    return EXIT_OK


def cmd_depth(args: argparse.Namespace) -> int:
    text = _read(args.structure)
    if "{" in text:
        context = parse_context(text)
        depth = context.depth
    else:
        depth = depth_of_structure(read_structure(args.structure))
    _emit(args, {"depth": depth}, str(depth))
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    from bvkit.cli._fixtures import FixtureRunner

    runner = FixtureRunner(args.manifest, run)
    outcomes = runner.run()
    failed = [o for o in outcomes if not o.passed]
    payload = [
        {"name": o.name, "passed": o.passed, "exit": o.code, "expected": o.expected}
        for o in outcomes
    ]
    lines = [f"{'PASS' if o.passed else 'FAIL'}  {o.name} (exit {o.code})" for o in outcomes]
    lines.append(f"{len(outcomes) - len(failed)}/{len(outcomes)} fixtures passed")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if not failed else EXIT_NEGATIVE


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    # subcommands must not reset options given before them
    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    options = argparse.ArgumentParser(add_help=False)
    output = options.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", default=default(False), help="emit JSON on stdout")
    output.add_argument("--dot", action="store_true", default=default(False), help="emit Graphviz DOT (web only)")
    options.add_argument("--budget", type=int, default=default(None), help="structures one proof search may explore")
    options.add_argument(
        "--system", choices=[s.value for s in System], default=default("bv"), help="rule system for checking"
    )
    options.add_argument("--config", default=default(None), help="YAML session configuration")
    options.add_argument(
        "-v", "--verbose", action="count", default=default(0), help="log INFO, or DEBUG when repeated"
    )
    return options


def build_parser() -> argparse.ArgumentParser:
    common = _global_options(suppress=True)
    parser = argparse.ArgumentParser(
        prog="bvkit",
        description="Structures, proofs and relation webs of system BV.",
        parents=[_global_options(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    add("prove", cmd_prove, "search a proof").add_argument("structure")
    add("check", cmd_check, "check a derivation JSON file").add_argument("derivation")
    p = add("equiv", cmd_equiv, "compare two structures modulo equations")
    p.add_argument("left")
    p.add_argument("right")
    add("web", cmd_web, "relation web of a structure").add_argument("structure")
    add("verify-web", cmd_verify_web, "check the web properties").add_argument("web")
    add("reconstruct", cmd_reconstruct, "structure of a web").add_argument("web")
    p = add("gen-sn", cmd_gen_sn, "generate S_n")
    p.add_argument("n", type=int)
    p.add_argument("--derivation", action="store_true", help="emit the certifying proof as JSON")
    p.add_argument("--check", action="store_true", help="check atom count, dual pairs, block depths and proof")
    add("first-redex", cmd_first_redex, "provability of every first step").add_argument("--goal", required=True)
    p = add("delete-pair", cmd_delete_pair, "erase an atom and its dual from a derivation")
    p.add_argument("derivation")
    p.add_argument("atom")
    p = add("shallow-check", cmd_shallow_check, "validate a rule scheme")
    p.add_argument("conclusion")
    p.add_argument("premise")
    p.add_argument("--name", default="rule")
    p = add("system-depth", cmd_system_depth, "depth of a system of catalog rules")
    p.add_argument("rules", nargs="*", metavar="RULE", help=f"one of {', '.join(CATALOG)}")
    p.add_argument(
        "--scheme",
        nargs=3,
        action="append",
        default=[],
        metavar=("NAME", "CONCLUSION", "PREMISE"),
        help="add a rule given by its schemes",
    )
    add("depth", cmd_depth, "depth of a structure or of a context with {}").add_argument("structure")
    fixtures = sub.add_parser("fixtures", help="acceptance fixtures")
    fixtures_sub = fixtures.add_subparsers(dest="fixtures_command", required=True)
    p = fixtures_sub.add_parser("run", parents=[common], help="run a fixture manifest")
    p.add_argument("--manifest", default=None, help="YAML manifest; packaged one by default")
    p.set_defaults(handler=cmd_fixtures)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse *argv* and dispatch; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if not isinstance(exc.code, str) else EXIT_USAGE
    if args.verbose:
        set_level(logging.DEBUG if args.verbose > 1 else logging.INFO)
    try:
        return int(args.handler(args))
    except BudgetExceededError as exc:
        print(f"bvkit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BVError, OSError) as exc:
        print(f"bvkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    return run(sys.argv[1:])
