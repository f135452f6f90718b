"""Command-line front end: machine-readable verification reports and exports.

Subcommands: ``catalog``, ``verify``, ``prove``, ``critical``, ``export-cnf``,
``majorana``.  Structural reports are JSON (``--json``) with a fixed schema
version; exact values are serialized both as canonical strings like
``(2-1*sqrt2)/4`` and as floats.  Exit status is 0 iff every check passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Sequence

from . import catalog as cat
from . import kscolor, majorana, orthograph
from .rays import Ray, overlap2
from .scalar import QRoot2, to_approx

SCHEMA_VERSION = 1
DEFAULT_SEED = 42

#: Squared 9-14 overlap witnesses: ((2-sqrt2)/4)^2 for the real catalog,
#: (sqrt6/4)^2 for the complex one.
REAL_WITNESS_OVERLAP2 = (QRoot2(2, -1) / 4) * (QRoot2(2, -1) / 4)
COMPLEX_WITNESS_OVERLAP2 = QRoot2(Fraction(3, 8))


@dataclass
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)


@dataclass
class Report:
    command: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, **details) -> bool:
        self.checks.append(Check(name, bool(passed), details))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": self.params,
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details}
                for c in self.checks
            ],
            "passed": self.passed,
        }


def report_to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def _emit(report: Report, as_json: bool, out=None) -> int:
    out = out or sys.stdout
    if as_json:
        out.write(report_to_json(report))
    else:
        for c in report.checks:
            out.write(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}\n")
            if not c.passed and c.details:
                out.write(f"       {json.dumps(c.details, sort_keys=True)}\n")
        n = len(report.checks)
        ok = sum(1 for c in report.checks if c.passed)
        out.write(f"{'OK' if report.passed else 'FAILED'} ({ok}/{n} checks)\n")
    return 0 if report.passed else 1


def _qroot2_details(value: QRoot2) -> dict:
    return {"exact": value.canonical_str(), "float": float(value)}


# ---------------------------------------------------------------------------
# catalog


def _ray_row(ray: Ray) -> dict:
    row: dict = {"index": ray.index, "ray_class": cat.class_of(ray.index).value}
    comps = []
    for c in ray.components:
        z = to_approx(c)
        entry = {"re": z.real, "im": z.imag}
        if ray.is_exact:
            entry["exact"] = c.canonical_str()
        comps.append(entry)
    row["components"] = comps
    return row


def _catalog_payload(args) -> tuple[list[dict], dict]:
    if args.set == "peres":
        return [_ray_row(r) for r in cat.peres_rays()], {}
    if args.set == "penrose":
        rows = []
        for i, p in enumerate(cat.penrose_mpairs(), start=1):
            rows.append(
                {
                    "index": i,
                    "ray_class": cat.class_of(i).value,
                    "m_vectors": [
                        [int(p.first.x), int(p.first.y), int(p.first.z)],
                        [int(p.second.x), int(p.second.y), int(p.second.z)],
                    ],
                }
            )
        return rows, {}
    params = cat.FamilyParams(args.alpha, args.beta, args.gamma)
    a, b, c = params.scalars()
    k = cat.family_k(a, b, c)
    rows = [_ray_row(r) for r in cat.family_rays(params)]
    return rows, {"k_modulus": abs(to_approx(k))}


def cmd_catalog(args) -> int:
    rows, extra = _catalog_payload(args)
    if args.format == "json":
        payload = {"set": args.set, "rows": rows, **extra}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf)
    if args.set == "penrose":
        writer.writerow(["index", "ray_class", "m1_x", "m1_y", "m1_z", "m2_x", "m2_y", "m2_z"])
        for row in rows:
            writer.writerow([row["index"], row["ray_class"], *row["m_vectors"][0], *row["m_vectors"][1]])
    else:
        writer.writerow(
            ["index", "ray_class"]
            + [f"c{i}_{part}" for i in range(3) for part in ("exact", "re", "im")]
        )
        for row in rows:
            cells = [row["index"], row["ray_class"]]
            for comp in row["components"]:
                cells += [comp.get("exact", ""), comp["re"], comp["im"]]
            writer.writerow(cells)
    sys.stdout.write(buf.getvalue())
    return 0


# ---------------------------------------------------------------------------
# verify


def _diagram_checks(report: Report, graph: orthograph.OrthoGraph) -> None:
    reference = orthograph.reference_decomposition()
    decomposition = orthograph.decompose(graph)
    report.add("edge_count_72", graph.edge_count == 72, edges=graph.edge_count)
    report.add(
        "triads_16_dyads_24",
        len(decomposition.triads) == 16 and len(decomposition.dyads) == 24,
        triads=len(decomposition.triads),
        dyads=len(decomposition.dyads),
    )
    report.add(
        "matches_reference_table",
        set(decomposition.triads) == set(reference.triads)
        and set(decomposition.dyads) == set(reference.dyads),
    )


def cmd_verify(args) -> int:
    report = Report("verify", {"set": args.set, "seed": args.seed, "tol": args.tol})
    if args.set == "peres":
        rays = cat.peres_rays()
        graph = orthograph.build_graph(rays, tol=args.tol)
        _diagram_checks(report, graph)
        witness = overlap2(rays[8], rays[13])
        report.add(
            "overlap_9_14_witness",
            witness == REAL_WITNESS_OVERLAP2,
            overlap2=_qroot2_details(witness),
            magnitude_float=math.sqrt(float(witness)),
        )
    elif args.set == "penrose":
        pairs = cat.penrose_mpairs()
        graph = orthograph.build_graph(pairs, tol=args.tol)
        _diagram_checks(report, graph)
        witness = majorana.overlap2_closed_form(pairs[8], pairs[13])
        report.add(
            "overlap_9_14_witness",
            witness == COMPLEX_WITNESS_OVERLAP2,
            overlap2=_qroot2_details(witness),
            magnitude_float=math.sqrt(float(witness)),
        )
    else:
        rng = Random(args.seed)
        reference_edges = orthograph.reference_decomposition().edges()
        matches = 0
        for _ in range(args.samples):
            params = cat.FamilyParams(
                rng.uniform(0.0, 2.0 * math.pi),
                rng.uniform(0.0, 2.0 * math.pi),
                rng.uniform(0.0, 2.0 * math.pi),
            )
            sample_graph = orthograph.build_graph(cat.family_rays(params), tol=args.tol)
            if sample_graph.edges == reference_edges:
                matches += 1
        report.add(
            "family_samples_match_reference",
            matches == args.samples,
            matched=matches,
            samples=args.samples,
        )
    return _emit(report, args.json)


# ---------------------------------------------------------------------------
# prove


def _trace_payload(trace: kscolor.ProofTrace) -> dict:
    steps = []
    for step in trace.steps:
        if isinstance(step, kscolor.Choice):
            steps.append({"kind": "choice", "greens": list(step.greens), "why": step.why})
        else:
            steps.append(
                {
                    "kind": "forced",
                    "ray": step.ray,
                    "color": step.color.value,
                    "constraint": list(step.constraint),
                }
            )
    payload = {"steps": steps, "green_rays": sorted(trace.green_rays)}
    if trace.contradiction is not None:
        payload["contradiction"] = {
            "kind": trace.contradiction.kind,
            "constraint": list(trace.contradiction.constraint),
        }
    return payload


def cmd_prove(args) -> int:
    report = Report("prove", {"mode": args.mode})
    cs = kscolor.ConstraintSet.from_graph(orthograph.reference_graph())
    replay_unsat = search_unsat = None
    if args.mode in ("replay", "both"):
        trace = kscolor.replay_proof(cs)
        replay_unsat = trace.contradiction is not None
        report.add(
            "replay_contradiction",
            replay_unsat
            and trace.choice_count == 2
            and len(trace.green_rays) == 7
            and tuple(sorted(trace.contradiction.constraint)) == (7, 15, 16),
            trace=_trace_payload(trace),
        )
    if args.mode in ("search", "both"):
        result = kscolor.search(cs)
        search_unsat = result.coloring is None
        report.add("search_unsat", search_unsat, nodes=result.nodes)
    if args.mode == "both":
        report.add(
            "routes_agree",
            replay_unsat is True and search_unsat is True,
            replay_unsat=replay_unsat,
            search_unsat=search_unsat,
        )
    return _emit(report, args.json)


# ---------------------------------------------------------------------------
# critical


def _check_deletion(report: Report, graph: orthograph.OrthoGraph, ray: int) -> None:
    reduced = kscolor.ConstraintSet.from_graph(graph.delete_vertex(ray))
    coloring = kscolor.search_coloring(reduced)
    ok = coloring is not None and kscolor.validate_coloring(coloring, reduced)
    greens = sorted(r for r, c in (coloring or {}).items() if c is kscolor.Color.GREEN)
    report.add(f"delete_{ray}_colorable", ok, greens=greens)
    if ray == 1:
        known = kscolor.coloring_from_greens(
            kscolor.KNOWN_DELETE1_GREENS, reduced.vertices
        )
        report.add(
            "delete_1_known_coloring_valid",
            kscolor.validate_coloring(known, reduced),
            greens=sorted(kscolor.KNOWN_DELETE1_GREENS),
        )


def cmd_critical(args) -> int:
    report = Report("critical", {"ray": args.ray})
    graph = orthograph.reference_graph()
    if args.ray == "all":
        audit = kscolor.criticality_audit(graph)
        report.add(
            "all_33_deletions_colorable",
            len(audit) == 33,
            colorable=len(audit),
        )
        _check_deletion(report, graph, 1)
    else:
        _check_deletion(report, graph, int(args.ray))
    return _emit(report, args.json)


# ---------------------------------------------------------------------------
# export-cnf


def dimacs_lines(cs: kscolor.ConstraintSet, comments: Sequence[str] = ()) -> list[str]:
    """DIMACS clauses: variable i true iff ray i is green.

    Each exactly-one triple (a, b, c) yields (a|b|c) and the three pairwise
    exclusions; each at-most-one pair yields one exclusion.  Variables are
    always numbered over the full 1..33 catalog; a deleted ray is simply
    unconstrained.
    """
    clauses: list[list[int]] = []
    for t in cs.exactly_one:
        clauses.append(list(t))
        for u, v in combinations(t, 2):
            clauses.append([-u, -v])
    for p in cs.at_most_one:
        for u, v in combinations(p, 2):
            clauses.append([-u, -v])
    lines = [f"c {text}" for text in comments]
    lines.append(f"p cnf {orthograph.CATALOG_SIZE} {len(clauses)}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in clauses)
    return lines


def cmd_export_cnf(args) -> int:
    graph = orthograph.reference_graph()
    comments = [
        "green-coloring constraints of the shared 33-ray orthogonality diagram",
        "variable i <=> ray i is green",
    ]
    if args.delete is not None:
        graph = graph.delete_vertex(args.delete)
        comments.append(f"ray {args.delete} deleted")
    cs = kscolor.ConstraintSet.from_graph(graph)
    lines = dimacs_lines(cs, comments)
    try:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        sys.stderr.write(f"cannot write {args.out}: {exc}\n")
        return 1
    sys.stdout.write(
        f"wrote {args.out}: {orthograph.CATALOG_SIZE} variables, "
        f"{len(lines) - len(comments) - 1} clauses\n"
    )
    return 0


# ---------------------------------------------------------------------------
# majorana


def cmd_majorana(args) -> int:
    report = Report(
        "majorana", {"samples": args.samples, "seed": args.seed, "tol": args.tol}
    )
    rng = Random(args.seed)
    max_dev = 0.0
    for _ in range(args.samples):
        pa = majorana.MPair(majorana.random_mvector(rng), majorana.random_mvector(rng))
        pb = majorana.MPair(majorana.random_mvector(rng), majorana.random_mvector(rng))
        closed = majorana.overlap2_closed_form(pa, pb)
        explicit = majorana.state_overlap2(
            majorana.state_from_mpair(pa), majorana.state_from_mpair(pb)
        )
        max_dev = max(max_dev, abs(closed - explicit))
    report.add(
        "closed_form_matches_states",
        max_dev < args.tol,
        max_deviation=max_dev,
        tol=args.tol,
    )

    pairs = cat.penrose_mpairs()
    reference_edges = orthograph.reference_decomposition().edges()
    zeros = set()
    positive_elsewhere = True
    for (i, a), (j, b) in combinations(enumerate(pairs, start=1), 2):
        value = majorana.overlap2_closed_form(a, b)
        if value == 0:
            zeros.add((i, j))
        elif not value > 0:
            positive_elsewhere = False
    report.add(
        "catalog_sweep_zero_pattern",
        zeros == set(reference_edges) and positive_elsewhere,
        zero_count=len(zeros),
    )

    recovered = cat.recovered_penrose_mpairs()
    matched = sum(
        1 for got, want in zip(recovered, pairs) if majorana.mpairs_match(got, want)
    )
    report.add("recovery_pipeline_33_matches", matched == 33, matched=matched)
    return _emit(report, args.json)


# ---------------------------------------------------------------------------
# parser


def _ray_or_all(text: str) -> str:
    if text == "all":
        return text
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'all' or an integer, got {text!r}") from exc
    if not 1 <= value <= 33:
        raise argparse.ArgumentTypeError(f"ray index must be in 1..33, got {value}")
    return text


def _delete_ray(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 33:
        raise argparse.ArgumentTypeError(f"ray index must be in 1..33, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bks33",
        description="Verification suite for the 33-ray Kochen-Specker constructions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed (printed in the report)")
    common.add_argument("--tol", type=float, default=1e-9, help="floating-point tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="dump one of the three catalogs")
    p.add_argument("--set", choices=("peres", "penrose", "family"), required=True)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", parents=[common], help="check a catalog against the reference diagram")
    p.add_argument("--set", choices=("peres", "penrose", "family"), required=True)
    p.add_argument("--samples", type=int, default=50, help="random family samples")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("prove", parents=[common], help="replay and/or search the non-colorability proof")
    p.add_argument("--mode", choices=("replay", "search", "both"), default="both")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("critical", parents=[common], help="audit single-ray deletions for colorability")
    p.add_argument("--ray", type=_ray_or_all, default="all", help="'all' or an index in 1..33")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("export-cnf", parents=[common], help="write the coloring constraints as DIMACS CNF")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--delete", type=_delete_ray, default=None, help="delete one ray first")
    p.set_defaults(func=cmd_export_cnf)

    p = sub.add_parser("majorana", parents=[common], help="cross-check the closed-form overlap machinery")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_majorana)
    p.set_defaults(tol=1e-10)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
