"""Command-line front end.

Exit status: 0 on success, 1 when a checked property or assertion fails,
2 on invalid input.  ``--json`` switches every command to structured output;
tables are tab-separated otherwise.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Sequence

from . import argumentation as arg
from . import doxastics as dx
from . import logic, probabilistic as prob
from .core import Model, load_json, model_from_json, model_to_json
from .errors import InvariantViolation, ModelError
from .generators import ATTACK_MODES, GeneratorConfig, generate_random_model, sweep_configs
from .sweep import REGISTRY, NeighborhoodConfig, check_properties, run_sweep
from .topology import DEFAULT_MAX_WORLDS, canonical

NOTION_ALIASES = {"grounded": dx.GROUNDED, "bel": dx.EVIDENCE_BASED, "vbp": dx.MAXIMAL_BODY}


class Failure(Exception):
    """A property or assertion checked by the command did not hold."""


def _emit(args, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load(args, path=None) -> Model:
    return model_from_json(load_json(path or args.model), strict=args.strict, close=args.close,
                           max_worlds=args.max_worlds)


def _sets(model: Model, family) -> list[list[str]]:
    return [list(model.domain.members(t)) for t in canonical(family)]


def attack_dot(model: Model) -> str:
    """Graphviz rendering of attacks between non-empty opens (arrow from attacker)."""
    lines = ["digraph attacks {"]
    for t in model.topology.nonempty:
        lines.append(f'  "{model.format(t)}";')
    for attacked, attacker in sorted(model.attack.nonempty_edges):
        lines.append(f'  "{model.format(attacker)}" -> "{model.format(attacked)}";')
    lines.append("}")
    return "\n".join(lines)


# -- commands --------------------------------------------------------------------------

def cmd_validate(args) -> int:
    model = _load(args)
    outcomes = check_properties(model, args.property or [])
    failed = {n: msgs for n, msgs in outcomes.items() if msgs and REGISTRY[n].kind == "must-hold"}
    text = [f"valid: {model.domain.size} worlds, {len(model.evidence)} evidence pieces, "
            f"{len(model.topology)} opens, {len(model.attack.nonempty_edges)} attacks among non-empty opens"]
    for n, msgs in outcomes.items():
        text.append(f"{n}\t{'FAIL' if msgs else 'ok'}" + "".join(f"\n  {m}" for m in msgs[:5]))
    _emit(args, {"valid": True, "properties": outcomes}, "\n".join(text))
    if failed:
        raise Failure(f"properties failed: {', '.join(failed)}")
    return 0


def cmd_topology(args) -> int:
    model = _load(args)
    if args.dot:
        print(attack_dot(model))
        return 0
    _emit(args, {"opens": _sets(model, model.topology.opens)},
          "\n".join(model.format(t) for t in model.topology.opens))
    return 0


def cmd_grounded(args) -> int:
    model = _load(args)
    if args.dot:
        print(attack_dot(model))
        return 0
    report = model.grounded
    lines = [f"grounded\t{model.domain.format_family(report.grounded)}"]
    for i, step in enumerate(report.iterations):
        lines.append(f"F{i}\t{model.domain.format_family(step)}")
    _emit(args, {"grounded": _sets(model, report.grounded),
                 "iterations": [_sets(model, s) for s in report.iterations]}, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    model = _load(args)
    try:
        raw = json.loads(args.set)
    except json.JSONDecodeError as exc:
        raise ModelError(f"--set is not JSON: {exc}") from None
    family = frozenset(model.domain.mask(s) for s in raw)
    missing = [t for t in family if t not in model.topology]
    if missing:
        raise ModelError(f"not open: {', '.join(model.format(t) for t in missing)}")
    flags = arg.classify_extension(family, model.attack)
    payload = dict(vars(flags))
    _emit(args, payload, "\n".join(f"{k}\t{v}" for k, v in payload.items()))
    return 0


def cmd_believes(args) -> int:
    model = _load(args)
    try:
        labels = json.loads(args.prop)
    except json.JSONDecodeError as exc:
        raise ModelError(f"--prop is not JSON: {exc}") from None
    verdict = dx.NOTIONS[NOTION_ALIASES[args.notion]](model, labels)
    witness = None if verdict.witness is None else list(model.domain.members(verdict.witness))
    _emit(args, {"believed": verdict.believed, "witness": witness, "notion": verdict.notion},
          f"{verdict.notion}\t{verdict.believed}\t"
          f"{'-' if verdict.witness is None else model.format(verdict.witness)}")
    return 0


def cmd_compare(args) -> int:
    model = _load(args)
    cmp = dx.compare_beliefs(model)
    rows = [{"proposition": list(model.domain.members(p)), "B": b, "Bel": bel}
            for p, b, bel in sorted(cmp.rows, key=lambda r: (r[0].bit_count(), r[0]))]
    text = ["proposition\tB\tBel"] + [
        f"{model.format(model.domain.mask(r['proposition']))}\t{int(r['B'])}\t{int(r['Bel'])}"
        for r in rows]
    _emit(args, {"rows": rows, "justifications": _sets(model, cmp.justification)}, "\n".join(text))
    return 0


def cmd_check(args) -> int:
    model = _load(args)
    phi = logic.parse(args.formula)
    ext = logic.extension(model, phi, missing_atoms_empty=args.missing_atoms_empty)
    worlds = [args.world] if args.world else list(model.worlds)
    truth = {w: bool(ext >> model.domain.index(w) & 1) for w in worlds}
    text = [f"formula\t{logic.to_text(phi)}", f"extension\t{model.format(ext)}"]
    text += [f"{w}\t{v}" for w, v in truth.items()]
    _emit(args, {"formula": logic.to_text(phi), "extension": list(model.domain.members(ext)),
                 "truth": truth}, "\n".join(text))
    return 0


def _axiom_payload(domain, report: logic.AxiomReport) -> list[dict]:
    return [{"schema": r.name, "formula": logic.to_text(r.formula), "valid": r.valid,
             "expected_valid": r.expected_valid,
             "witness": None if r.witness is None else [list(domain.members(w)) for w in r.witness]}
            for r in report.results]


def cmd_axioms(args) -> int:
    model = _load(args)
    report = logic.check_axioms(model)
    rows = _axiom_payload(model.domain, report)
    text = ["schema\tvalid\twitness"] + [
        f"{r['schema']}\t{r['valid']}\t"
        + ("-" if r["witness"] is None else " ".join("{" + ",".join(w) + "}" for w in r["witness"]))
        for r in rows]
    _emit(args, {"sound": report.sound, "schemas": rows}, "\n".join(text))
    if not report.sound:
        raise Failure("an ABBS schema is not valid on this model")
    return 0


def cmd_convert(args) -> int:
    data = load_json(args.model)
    if args.to == "neighborhood":
        model = model_from_json(data, strict=args.strict, close=args.close, max_worlds=args.max_worlds)
        nm = logic.to_neighborhood(model)
        out = model_to_json(model)
        out["neighborhood"] = logic.neighborhood_to_json(nm)["neighborhood"]
    else:
        nm = logic.neighborhood_from_json(data)
        out = model_to_json(logic.from_neighborhood(nm, max_worlds=args.max_worlds))
    print(json.dumps(out, indent=2))
    return 0


def cmd_prob(args) -> int:
    pmodel = prob.pmodel_from_json(load_json(args.model))
    if args.correspond:
        c = prob.pb_grounded_correspondence(pmodel)
        d = pmodel.domain
        payload = {
            "holds": c.holds,
            "lfp_equals_threshold_sets": c.lfp_matches,
            "grounded": [list(d.members(t)) for t in canonical(c.grounded)],
            "threshold_sets": [list(d.members(t)) for t in canonical(c.threshold_sets)],
            "attack_violations": len(c.violations),
            "conditional_transitivity_failures": len(c.transitivity_failures),
            "disagreements": [list(d.members(p)) for p in c.disagreements],
        }
        _emit(args, payload, "\n".join(f"{k}\t{v}" for k, v in payload.items()))
        if not c.holds:
            raise Failure("probabilistic and grounded belief do not correspond")
        return 0
    if not args.formula:
        raise ModelError("prob needs --formula or --correspond")
    phi = logic.parse(args.formula)
    ext = logic.extension(pmodel, phi)
    believed = pmodel.believes(ext)
    _emit(args, {"formula": logic.to_text(phi), "extension": list(pmodel.domain.members(ext)),
                 "measure": str(pmodel.measure(ext)), "PB": believed},
          f"extension\t{pmodel.domain.format(ext)}\nmeasure\t{pmodel.measure(ext)}\nPB\t{believed}")
    return 0


def cmd_random(args) -> int:
    config = GeneratorConfig(world_count=args.worlds, evidence_density=args.density,
                             attack_mode=args.mode, seed=args.seed or 0, max_worlds=args.max_worlds)
    print(json.dumps(model_to_json(generate_random_model(config)), indent=2))
    return 0


def cmd_sweep(args) -> int:
    names = [n for n in args.properties.split(",") if n] if args.properties else list(REGISTRY)
    base = args.seed or 0
    if args.neighborhood:
        configs = [NeighborhoodConfig(base + k, 1 + (base + k) % args.max_world_count)
                   for k in range(args.count)]
    else:
        configs = sweep_configs(args.count, modes=args.modes.split(","),
                                max_world_count=args.max_world_count, base_seed=base,
                                density=args.density)
    report = run_sweep(names, configs, workers=args.workers)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print("property\tkind\tpassed\tfailed")
        for n, k, p, f in report.summary():
            print(f"{n}\t{k}\t{p}\t{f}")
        print(f"# {len(report.results)} models, seeds {base}..{base + args.count - 1}, "
              f"{report.seconds:.2f}s")
        for cx in report.counterexamples[:3]:
            print(f"# counterexample {cx['property']} seed {cx['seed']}: {json.dumps(cx['model'])}")
    if not report.ok:
        raise Failure("sweep found property failures")
    return 0


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--strict", action="store_true",
                        help="reject evidence lacking the whole domain instead of adding it")
    common.add_argument("--close", action="store_true",
                        help="close explicit attacks downward before validation")
    common.add_argument("--max-worlds", type=int, default=DEFAULT_MAX_WORLDS)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="topoarg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, model=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if model:
            p.add_argument("model")
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "load and validate a model")
    p.add_argument("--property", action="append", choices=sorted(REGISTRY),
                   help="also check a registered property (repeatable)")
    p = add("topology", cmd_topology, "list the opens")
    p.add_argument("--dot", action="store_true", help="print the attack graph as DOT")
    p = add("grounded", cmd_grounded, "grounded extension and its iteration trace")
    p.add_argument("--dot", action="store_true", help="print the attack graph as DOT")
    p = add("classify", cmd_classify, "argumentation flags for a family of opens")
    p.add_argument("--set", required=True, help='JSON array of sets, e.g. [["1"],["1","2"]]')
    p = add("believes", cmd_believes, "one belief query")
    p.add_argument("--prop", required=True, help='JSON array of worlds, e.g. ["1","2"]')
    p.add_argument("--notion", choices=sorted(NOTION_ALIASES), default="grounded")
    add("compare", cmd_compare, "B and Bel for every proposition")
    p = add("check", cmd_check, "model-check a formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--world")
    p.add_argument("--missing-atoms-empty", action="store_true",
                   help="treat atoms without a valuation as false everywhere")
    add("axioms", cmd_axioms, "validity of the ABBS schemas and of C")
    p = add("convert", cmd_convert, "convert to or from belief neighborhood models")
    p.add_argument("--to", choices=["neighborhood", "tam"], required=True)
    p = add("prob", cmd_prob, "probabilistic belief models")
    p.add_argument("--formula")
    p.add_argument("--correspond", action="store_true")
    p = add("random", cmd_random, "print a seeded random model", model=False)
    p.add_argument("--worlds", type=int, default=3)
    p.add_argument("--density", type=float, default=0.35)
    p.add_argument("--mode", choices=ATTACK_MODES, default="explicit-random")
    p = add("sweep", cmd_sweep, "check properties over seeded random models", model=False)
    p.add_argument("--properties", help="comma-separated names (default: all)")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--modes", default="explicit-random,symmetric,measure")
    p.add_argument("--density", type=float, default=0.35)
    p.add_argument("--max-world-count", type=int, default=4)
    p.add_argument("--neighborhood", action="store_true",
                   help="sweep models converted from random belief neighborhood models")
    p.add_argument("--workers", type=int, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except Failure as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    except (ModelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
