"""Command-line front end: ``python -m toricphases <command> MODEL ...``.

MODEL is a JSON model file or ``catalog:NAME``.  Exit codes: 0 success,
2 invalid input, 3 computation infeasible, 4 a requested check failed.
"""

from __future__ import annotations

import argparse
import datetime
import itertools
import json
import sys
from pathlib import Path

from . import __version__, catalog
from .errors import ComputationError, NoGeometricPhase, NotAdjacent, ParseError, ValidationError
from .io import SCHEMA_VERSION, dumps_report, load_model, model_to_dict
from .ktheory import (
    groebner_basis,
    ideal_member,
    normal_form,
    quotient_rank,
    relation_ideal,
)
from .laurent import LaurentElement
from .mf import koszul_mf, superpotential, verify_mf
from .relations import phase_relations, refined_geometric_relations
from .secondary import (
    Phase,
    enumerate_phases,
    identify_geometric_phase,
    landau_ginzburg_phases,
    wall_data,
)
from .toric import GLSMModel

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION, EXIT_CHECK = 0, 2, 3, 4


# --- report sections --------------------------------------------------------------


# windows larger than this are reported by start, unit and size only
WINDOW_LIST_LIMIT = 64


def _names(model: GLSMModel, s) -> list[str]:
    return [model.names[i] for i in sorted(s)]


def _phase_kind(model, phase: Phase, lg_ids) -> str:
    if phase.is_geometric:
        return "geometric"
    if phase.id in lg_ids:
        return "landau-ginzburg"
    return "hybrid"


def command_phases(model: GLSMModel) -> dict:
    phases = enumerate_phases(model)
    lg = landau_ginzburg_phases(phases)
    try:
        geo = identify_geometric_phase(phases)
    except NoGeometricPhase:
        geo = None
    walls = []
    for p1, p2 in itertools.combinations(phases, 2):
        try:
            w = wall_data(model, p1, p2)
        except NotAdjacent:
            continue
        walls.append(
            {
                "phases": list(w.phase_pair),
                "T": list(w.T),
                "sigma": w.sigma,
                "positive": _names(model, w.zplus),
                "negative": _names(model, w.zminus),
                "window": {
                    "start": 0,
                    "unit": list(w.unit),
                    "size": w.sigma,
                    "degrees": [list(q) for q in w.window(0)] if w.sigma <= WINDOW_LIST_LIMIT else None,
                },
            }
        )
    return {
        "geometric_phase": geo,
        "lg_phases": lg,
        "phases": [
            {
                "id": p.id,
                "eta": list(p.eta),
                "kind": _phase_kind(model, p, lg),
                "minimal_exceptional_sets": [_names(model, s) for s in p.minimal_exceptional_sets],
                "removed_rays": _names(model, p.removed_rays),
                "stanley_reisner_ideal": p.stanley_reisner.render(model.names),
                "irrelevant_ideal": p.irrelevant_ideal.render(model.names),
            }
            for p in phases
        ],
        "walls": walls,
    }


def select_phase(model: GLSMModel, selector: str) -> Phase:
    phases = enumerate_phases(model)
    if selector == "geometric":
        return phases[identify_geometric_phase(phases)]
    if selector == "lg":
        lg = landau_ginzburg_phases(phases)
        if len(lg) != 1:
            raise ComputationError(f"expected one Landau-Ginzburg phase, found {len(lg)}; select by id")
        return phases[lg[0]]
    try:
        pid = int(selector)
    except ValueError:
        raise ValidationError(f"unknown phase selector {selector!r}") from None
    if not 0 <= pid < len(phases):
        raise ValidationError(f"phase id {pid} out of range 0..{len(phases) - 1}")
    return phases[pid]


def command_relations(model: GLSMModel, selector: str, refined: bool = False) -> dict:
    phase = select_phase(model, selector)
    rels = refined_geometric_relations(model, phase) if refined else phase_relations(model, phase)
    return {"phase": phase.id, "refined": refined, "relations": [r.to_dict() for r in rels]}


def command_ktheory(model: GLSMModel, selector: str, refined: bool | None = None, checks=(),
                    reductions=(), order: str = "grlex") -> dict:
    phase = select_phase(model, selector)
    if refined is None:
        refined = phase.is_geometric
    ideal = relation_ideal(model, phase, refined=refined, order=order)
    rank = quotient_rank(ideal)
    out = {
        "phase": phase.id,
        "refined": refined,
        "order": order,
        "generators": [str(g) for g in ideal.generators],
        "groebner_basis": [str(g) for g in groebner_basis(list(ideal.generators), order)],
        "quotient_rank": "infinite" if rank == float("inf") else rank,
        "checks": [],
        "reductions": [],
    }
    for text in checks:
        f = _parse_laurent(text, model.k, "--check")
        member, cert = ideal_member(f, ideal)
        out["checks"].append(
            {
                "element": str(f),
                "member": member,
                "certificate": None
                if cert is None
                else [{"generator": str(g), "cofactor": str(c)} for g, c in zip(cert.generators, cert.cofactors)],
            }
        )
    for text in reductions:
        f = _parse_laurent(text, model.k, "--reduce")
        out["reductions"].append({"element": str(f), "normal_form": str(normal_form(f, ideal))})
    return out


def _parse_laurent(text: str, k: int, field: str) -> LaurentElement:
    try:
        return LaurentElement.parse(text, k)
    except ParseError as exc:
        raise ParseError(str(exc), field=field) from None


def command_verify_mf(model: GLSMModel, sections=None) -> dict:
    """Koszul factorization of ``Σ p_a G_a``; Fermat sections unless ``sections`` is given."""
    source = "fermat" if sections is None else "file"
    if sections is None:
        sections = catalog.fermat_sections(model)
    ring, pairs, W = superpotential(model, sections)
    mf = koszul_mf(pairs)
    report = verify_mf(mf, W)
    return {
        "sections": source,
        "potential": str(W),
        "rank": mf.rank,
        "f": mf.f.tolist(),
        "g": mf.g.tolist(),
        "verification": report.to_dict(),
    }


def command_catalog() -> dict:
    return {
        "models": [
            {"name": e.name, "ambient": e.ambient, "weights": list(e.weights), "degrees": list(e.degrees)}
            for e in catalog.ENTRIES
        ],
        "aliases": dict(sorted(catalog.ALIASES.items())),
    }


def _load_sections(path: str) -> list[str]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None
    secs = data.get("sections") if isinstance(data, dict) else data
    if not isinstance(secs, list) or not all(isinstance(s, str) for s in secs):
        raise ParseError("expected a list of polynomial strings", field="sections")
    return secs


# --- text rendering ---------------------------------------------------------------


def _text(command: str, body: dict) -> str:
    lines = []
    if command == "phases":
        for p in body["phases"]:
            sets = "; ".join("{" + ", ".join(s) + "}" for s in p["minimal_exceptional_sets"])
            lines.append(f"phase {p['id']} ({p['kind']}), eta={tuple(p['eta'])}: minimal sets {sets}")
            lines.append(f"  irrelevant ideal {p['irrelevant_ideal']}")
        for w in body["walls"]:
            lines.append(f"wall {w['phases'][0]}|{w['phases'][1]}: T={tuple(w['T'])} sigma={w['sigma']}")
    elif command == "relations":
        lines.append(f"phase {body['phase']}" + (" (refined)" if body["refined"] else ""))
        lines += ["  " + r["text"] for r in body["relations"]]
    elif command == "ktheory":
        lines.append(f"phase {body['phase']} ideal generators:")
        lines += ["  " + g for g in body["generators"]]
        lines.append(f"quotient rank: {body['quotient_rank']}")
        for c in body["checks"]:
            lines.append(f"{c['element']}: {'member' if c['member'] else 'not a member'}")
        for r in body["reductions"]:
            lines.append(f"{r['element']} reduces to {r['normal_form']}")
    elif command == "verify-mf":
        v = body["verification"]
        lines.append(f"W = {body['potential']}")
        lines.append(f"rank {body['rank']} Koszul factorization: {'verified' if v['ok'] else 'FAILED'}")
        for f in v["failures"]:
            lines.append(f"  {f['check']} {f['matrix']}[{f['row']},{f['col']}]: expected {f['expected']}, got {f['actual']}")
    elif command == "catalog":
        for m in body["models"]:
            lines.append(f"{m['name']:12s} {m['ambient']}")
    return "\n".join(lines) + "\n"


# --- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricphases", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--no-meta", action="store_true", help="omit the timestamp from the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phases", parents=[common], help="phases and walls of the secondary fan")
    p.add_argument("model")

    p = sub.add_parser("relations", parents=[common], help="relations among twists in a phase")
    p.add_argument("model")
    p.add_argument("--phase", default="geometric", help="geometric, lg, or a phase id")
    p.add_argument("--refined", action="store_true")

    p = sub.add_parser("ktheory", parents=[common], help="K-theory ideal and membership checks")
    p.add_argument("model")
    p.add_argument("--phase", default="geometric")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--refined", dest="refined", action="store_true", default=None)
    g.add_argument("--unrefined", dest="refined", action="store_false")
    p.add_argument("--check", action="append", default=[], metavar="POLY")
    p.add_argument("--reduce", action="append", default=[], metavar="POLY")
    p.add_argument("--expect-member", action="store_true", help="exit 4 unless every --check is a member")
    p.add_argument("--order", default="grlex", choices=["grlex", "grevlex", "lex"])

    p = sub.add_parser("verify-mf", parents=[common], help="verify the Koszul factorization of W")
    p.add_argument("model")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fermat", action="store_true")
    src.add_argument("--sections", metavar="FILE")

    p = sub.add_parser("catalog", parents=[common], help="built-in models")
    p.add_argument("action", choices=["list"])
    return parser


def run(args) -> tuple[str, dict, int]:
    status = EXIT_OK
    if args.command == "catalog":
        return "catalog", command_catalog(), status
    model = load_model(args.model)
    if args.command == "phases":
        body = command_phases(model)
    elif args.command == "relations":
        body = command_relations(model, args.phase, args.refined)
    elif args.command == "ktheory":
        body = command_ktheory(model, args.phase, args.refined, args.check, args.reduce, args.order)
        if args.expect_member and not all(c["member"] for c in body["checks"]):
            status = EXIT_CHECK
    else:
        sections = None if args.fermat else _load_sections(args.sections)
        body = command_verify_mf(model, sections)
        if not body["verification"]["ok"]:
            status = EXIT_CHECK
    body = {"model": model_to_dict(model), **body}
    return args.command, body, status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        command, body, status = run(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ComputationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    if args.json:
        report = {"schema": SCHEMA_VERSION, "command": command, "tool": {"name": "toricphases", "version": __version__},
                  "seed": None, **body}
        if not args.no_meta:
            report["meta"] = {"generated": datetime.datetime.now(datetime.timezone.utc).isoformat()}
        sys.stdout.write(dumps_report(report))
    else:
        sys.stdout.write(_text(command, body))
    return status
