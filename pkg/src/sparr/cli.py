"""Command-line front end.

Arrangement documents are JSON::

    {"space": {"kind": "closed_surface", "genus": 1},
     "n": 2, "points": ["x1", "x2"], "generators": [[1, 0], [0, 1]]}

Exit codes: 0 success, 1 invalid input, 2 failed selftest.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any

from .arrangement_homology import complement_tables, union_betti, union_decomposition
from .divisor_poset import Arrangement, Divisor, PointSet, ideal, intersection_poset
from .endspace import distinguish, end_cohomology_closed, end_cohomology_pipeline
from .errors import SparrError, UnsupportedSpaceError, ValidationError
from .selftest import DEFAULT_SEED, battery
from .simplicial import BettiTable
from .sp_tables import KINDS, SpaceModel

log = logging.getLogger("sparr")

COMMANDS = ("poset", "union", "complement", "endspace", "distinguish", "selftest")
ARRANGEMENT_COMMANDS = ("poset", "union", "complement")


@dataclass(frozen=True)
class Params:
    genus: int
    punctures: int
    power: int
    genus2: int | None = None
    punctures2: int | None = None


@dataclass(frozen=True)
class JobSpec:
    command: str
    input: Arrangement | Params | None
    format: str = "json"
    seed: int = DEFAULT_SEED


def _field_int(doc: dict, key: str, where: str, *, minimum: int = 0) -> int:
    if key not in doc:
        raise ValidationError(f"{where}: missing field {key!r}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where}.{key}: expected an integer, got {value!r}")
    if value < minimum:
        raise ValidationError(f"{where}.{key}: must be >= {minimum}, got {value}")
    return value


def _parse_space(doc: Any) -> SpaceModel:
    if not isinstance(doc, dict):
        raise ValidationError("space: expected an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise UnsupportedSpaceError(f"space.kind: unsupported space {kind!r}; expected one of {', '.join(KINDS)}")
    if kind == "closed_surface":
        return SpaceModel.closed_surface(_field_int(doc, "genus", "space"))
    if kind == "punctured_surface":
        return SpaceModel.punctured_surface(_field_int(doc, "genus", "space"),
                                            _field_int(doc, "punctures", "space", minimum=1))
    return SpaceModel.wedge_of_circles(_field_int(doc, "circles", "space"))


def parse_arrangement(doc: Any) -> Arrangement:
    if not isinstance(doc, dict):
        raise ValidationError("document: expected a JSON object")
    space = _parse_space(doc.get("space"))
    n = _field_int(doc, "n", "document", minimum=1)
    points = doc.get("points")
    if not isinstance(points, list) or not points or not all(isinstance(p, str) for p in points):
        raise ValidationError("points: expected a non-empty list of strings")
    if len(set(points)) != len(points):
        raise ValidationError(f"points: labels must be distinct, got {points}")
    gens = doc.get("generators")
    if not isinstance(gens, list):
        raise ValidationError("generators: expected a list of multiplicity vectors")
    divisors = []
    for i, vec in enumerate(gens):
        where = f"generators[{i}]"
        if not isinstance(vec, list) or len(vec) != len(points):
            raise ValidationError(f"{where}: expected {len(points)} multiplicities aligned with points")
        if not all(isinstance(m, int) and not isinstance(m, bool) for m in vec):
            raise ValidationError(f"{where}: multiplicities must be integers")
        if any(m < 0 for m in vec):
            raise ValidationError(f"{where}: negative multiplicity in {vec}")
        order = sum(vec)
        if not 1 <= order <= n:
            raise ValidationError(f"{where}: order {order} outside [1, n={n}]")
        divisors.append(Divisor(tuple(vec)))
    arr = Arrangement(space, n, PointSet(tuple(points)), tuple(divisors))
    for i in arr.duplicates:
        log.warning("generators[%d] repeats an earlier generator; dropped", i)
    return arr


def parse_params(doc: Any) -> Params:
    if not isinstance(doc, dict):
        raise ValidationError("document: expected a JSON object")
    g2 = _field_int(doc, "genus2", "document") if "genus2" in doc else None
    k2 = _field_int(doc, "punctures2", "document", minimum=1) if "punctures2" in doc else None
    return Params(_field_int(doc, "genus", "document"), _field_int(doc, "punctures", "document", minimum=1),
                  _field_int(doc, "power", "document", minimum=1), g2, k2)


def parse_input(text: str, command: str = "union") -> Arrangement | Params:
    """Parse and validate a JSON document for ``command``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if command in ARRANGEMENT_COMMANDS:
        return parse_arrangement(doc)
    return parse_params(doc)


def _betti_json(table: BettiTable) -> dict[str, int]:
    return {str(d): r for d, r in table.items()}


def _ranks_json(ranks) -> dict[str, int]:
    return {str(d): r for d, r in enumerate(ranks)}


def poset_document(arr: Arrangement) -> dict:
    P = intersection_poset(arr)
    return {
        "space": arr.space.to_json(),
        "n": arr.n,
        "points": list(arr.points.labels),
        "generators": [list(D.multiplicities) for D in arr.generators],
        "elements": [
            {"id": i, "divisor": list(D.multiplicities), "label": D.format(arr.points),
             "order": D.order, "mu": P.mu(D)}
            for i, D in enumerate(P.elements)
        ],
        "covers": [list(edge) for edge in P.covers()],
        "ideals": {str(j): len(ideal(P, j)) for j in range(P.max_mu + 1)},
    }


def union_document(arr: Arrangement) -> dict:
    table = union_betti(arr)
    return {
        "betti": _betti_json(table),
        "euler_characteristic": table.euler_characteristic(),
        "terms": [{"j": t.j, "p": t.p, "q": t.q, "mult": t.multiplicity} for t in union_decomposition(arr)],
    }


def complement_document(arr: Arrangement) -> dict:
    table = complement_tables(arr)
    return {"n": arr.n, "A": _betti_json(table.A), "B": _betti_json(table.B),
            "cohomology": _ranks_json(table.cohomology.as_tuple(2 * arr.n + 1))}


def endspace_document(p: Params) -> dict:
    closed = end_cohomology_closed(p.genus, p.punctures, p.power)
    pipeline = end_cohomology_pipeline(p.genus, p.punctures, p.power)
    return {
        "g": p.genus, "k": p.punctures, "n": p.power,
        "ranks": _ranks_json(closed.ranks),
        "annotations": {str(closed.pipeline_determined_degree): "pipeline-determined"},
        "pipeline_agrees": closed.ranks == pipeline.ranks,
    }


def distinguish_document(p: Params) -> dict:
    if p.genus2 is None or p.punctures2 is None:
        raise ValidationError("distinguish needs --genus2 and --punctures2")
    rep = distinguish(p.genus, p.punctures, p.genus2, p.punctures2, p.power)
    return {
        "first": {"g": rep.g, "k": rep.k, "ranks": _ranks_json(rep.first.ranks)},
        "second": {"g": rep.g2, "k": rep.k2, "ranks": _ranks_json(rep.second.ranks)},
        "n": rep.n,
        "homotopy_equivalent": rep.homotopy_equivalent,
        "distinguishable": rep.distinguishable,
        "differing_degrees": list(rep.differing_degrees),
    }


def selftest_document(seed: int) -> dict:
    groups = {}
    ok = True
    for name, fn in battery(seed).items():
        reports = list(fn())
        failed = [r for r in reports if not r.passed]
        ok = ok and not failed
        groups[name] = {"checks": len(reports), "failed": len(failed),
                        "failures": [r.to_json() for r in failed]}
    return {"seed": seed, "passed": ok, "groups": groups}


def _render_table(command: str, doc: dict) -> str:
    lines = []
    if command == "poset":
        lines.append(f"{'id':>4}  {'order':>5}  {'mu':>3}  divisor")
        for e in doc["elements"]:
            lines.append(f"{e['id']:>4}  {e['order']:>5}  {e['mu']:>3}  {e['label']}")
        lines.append("covers: " + ", ".join(f"{a}<{b}" for a, b in doc["covers"]))
    elif command == "union":
        lines.append(f"{'degree':>6}  {'rank':>6}")
        lines += [f"{d:>6}  {r:>6}" for d, r in doc["betti"].items()]
        lines.append("")
        lines.append(f"{'j':>3} {'p':>3} {'q':>3} {'mult':>6}")
        lines += [f"{t['j']:>3} {t['p']:>3} {t['q']:>3} {t['mult']:>6}" for t in doc["terms"]]
    elif command == "complement":
        lines.append(f"{'t':>4}  {'H^t':>6}")
        lines += [f"{t:>4}  {r:>6}" for t, r in doc["cohomology"].items()]
    elif command == "endspace":
        lines.append(f"{'p':>4}  {'rank':>6}")
        for p, r in doc["ranks"].items():
            note = doc["annotations"].get(p, "")
            lines.append(f"{p:>4}  {r:>6}  {note}".rstrip())
    elif command == "distinguish":
        a, b = doc["first"], doc["second"]
        lines.append(f"{'p':>4}  {'M_%d,%d' % (a['g'], a['k']):>8}  {'M_%d,%d' % (b['g'], b['k']):>8}")
        for p in a["ranks"]:
            lines.append(f"{p:>4}  {a['ranks'][p]:>8}  {b['ranks'][p]:>8}")
        lines.append(f"homotopy equivalent: {doc['homotopy_equivalent']}")
        lines.append(f"distinguishable:     {doc['distinguishable']}")
    elif command == "selftest":
        for name, g in doc["groups"].items():
            status = "PASS" if not g["failed"] else "FAIL"
            lines.append(f"{status}  {name:<26} {g['checks']:>5} checks, {g['failed']} failed")
    return "\n".join(lines) + "\n"


def run(job: JobSpec) -> tuple[int, str]:
    """Execute a job; returns (exit code, rendered document)."""
    if job.command == "poset":
        doc = poset_document(job.input)
    elif job.command == "union":
        doc = union_document(job.input)
    elif job.command == "complement":
        doc = complement_document(job.input)
    elif job.command == "endspace":
        doc = endspace_document(job.input)
    elif job.command == "distinguish":
        doc = distinguish_document(job.input)
    elif job.command == "selftest":
        doc = selftest_document(job.seed)
    else:
        raise ValidationError(f"unknown command {job.command!r}")
    code = 2 if job.command == "selftest" and not doc["passed"] else 0
    if job.format == "table":
        return code, _render_table(job.command, doc)
    return code, json.dumps(doc, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparr", description=(
        "Rational homology of arrangements in symmetric products of surfaces, "
        "and end cohomology of symmetric powers of punctured surfaces."))
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="JSON document (arrangement or parameter record); '-' for stdin")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--genus", type=int)
    parser.add_argument("--punctures", type=int)
    parser.add_argument("--power", type=int)
    parser.add_argument("--genus2", type=int, help="second surface, for distinguish")
    parser.add_argument("--punctures2", type=int, help="second surface, for distinguish")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized selftest checks")
    parser.add_argument("--output", help="write the document here instead of stdout")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def make_job(args: argparse.Namespace) -> JobSpec:
    if args.command == "selftest":
        return JobSpec("selftest", None, args.format, args.seed)
    if args.command in ARRANGEMENT_COMMANDS:
        if not args.input:
            raise ValidationError(f"{args.command} needs --input <file>")
        return JobSpec(args.command, parse_input(_read(args.input), args.command), args.format)
    base: dict[str, Any] = {}
    if args.input:
        base = json.loads(_read(args.input))
        if not isinstance(base, dict):
            raise ValidationError("document: expected a JSON object")
    for key in ("genus", "punctures", "power", "genus2", "punctures2"):
        if getattr(args, key) is not None:
            base[key] = getattr(args, key)
    return JobSpec(args.command, parse_params(base), args.format)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        job = make_job(args)
        code, text = run(job)
    except (SparrError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
