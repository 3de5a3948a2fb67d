"""Command-line interface.

    orbitcount [--format text|structured] orbits   SPEC
    orbitcount [--format text|structured] count    SPEC
    orbitcount [--format text|structured] verify   SPEC
    orbitcount [--format text|structured] estimate SPEC --samples N --seed S --quantity Q [--x P]

SPEC is a UTF-8 JSON document::

    {"degree": 4,
     "generators": ["(0 1 2 3)"],
     "action": "natural" | {"colorings": {"colors": 2}} | {"table": ROWS, "labels": [...]},
     "options": {"max_order": 1000000, "space_cap": 1000000}}

ROWS is either a list with one row per group element (in generation order) or
an object mapping each element, written in cycle notation, to its row.
Exit codes: 0 ok, 2 input error, 3 internal consistency failure, 4 identity failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .action import (
    DEFAULT_SPACE_CAP,
    ActionSpace,
    GroupAction,
    InvalidActionError,
    SpaceCapExceeded,
    coloring_action,
    natural_action,
    orbit_partition,
    table_action,
)
from .counting import ConsistencyError, count_report
from .montecarlo import estimate_event, estimate_orbit_count
from .perm import (
    DEFAULT_MAX_ORDER,
    GroupOrderExceeded,
    PermutationError,
    generate_group,
    parse_cycles,
)
from .proof import render, verify_proof

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONSISTENCY = 3
EXIT_IDENTITY = 4

QUANTITIES = {
    "orbit-count": None,
    "gy-eq-x": "gy=x",
    "y-in-orb": "y_in_orb",
    "gx-eq-x": "gx=x",
}


class SpecError(ValueError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass
class ProblemSpec:
    degree: int
    generators: list[str]
    action: Any = "natural"
    max_order: int = DEFAULT_MAX_ORDER
    space_cap: int = DEFAULT_SPACE_CAP

    @classmethod
    def from_dict(cls, doc: Any) -> ProblemSpec:
        if not isinstance(doc, dict):
            raise SpecError("<root>", "expected a JSON object")
        degree = doc.get("degree")
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise SpecError("degree", f"expected a positive integer, got {degree!r}")
        gens = doc.get("generators", [])
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise SpecError("generators", "expected a list of cycle-notation strings")
        options = doc.get("options", {})
        if not isinstance(options, dict):
            raise SpecError("options", "expected an object")
        limits = {}
        for key, default in (("max_order", DEFAULT_MAX_ORDER), ("space_cap", DEFAULT_SPACE_CAP)):
            value = options.get(key, doc.get(key, default))
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise SpecError(f"options.{key}", f"expected a positive integer, got {value!r}")
            limits[key] = value
        return cls(degree, gens, doc.get("action", "natural"), **limits)

    def build(self) -> GroupAction:
        gens = []
        for i, text in enumerate(self.generators):
            try:
                gens.append(parse_cycles(text, self.degree))
            except PermutationError as exc:
                raise SpecError(f"generators[{i}] {text!r}", str(exc)) from None
        try:
            group = generate_group(gens, self.max_order, degree=self.degree)
        except GroupOrderExceeded as exc:
            raise SpecError("options.max_order", str(exc)) from None

        action = self.action
        if action == "natural":
            return natural_action(group)
        if isinstance(action, dict) and "colorings" in action:
            col = action["colorings"]
            colors = col.get("colors") if isinstance(col, dict) else None
            if not isinstance(colors, int) or isinstance(colors, bool) or colors < 1:
                raise SpecError("action.colorings.colors", f"expected a positive integer, got {colors!r}")
            try:
                return coloring_action(group, colors, self.space_cap)
            except SpaceCapExceeded as exc:
                raise SpecError("action.colorings.colors", str(exc)) from None
        if isinstance(action, dict) and "table" in action:
            return self._table_action(group, action["table"], action.get("labels"))
        raise SpecError("action", f'expected "natural", {{"colorings": ...}} or {{"table": ...}}, got {action!r}')

    def _table_action(self, group, rows, labels) -> GroupAction:
        if isinstance(rows, dict):
            by_index = {}
            for key, row in rows.items():
                try:
                    p = parse_cycles(key, self.degree)
                except PermutationError as exc:
                    raise SpecError(f"action.table[{key!r}]", str(exc)) from None
                if p not in group:
                    raise SpecError(f"action.table[{key!r}]", "element is not in the generated group")
                by_index[group.index(p)] = row
            missing = [i for i in range(group.order) if i not in by_index]
            if missing:
                raise SpecError("action.table", f"no row for element {group[missing[0]]}")
            rows = [by_index[i] for i in range(group.order)]
        if not isinstance(rows, list) or not rows:
            raise SpecError("action.table", "expected a non-empty list or object of rows")
        if len(rows) != group.order:
            raise SpecError("action.table", f"{len(rows)} rows given but |G| = {group.order}")
        for i, row in enumerate(rows):
            if not isinstance(row, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
                raise SpecError(f"action.table[{i}]", "expected a list of integers")
        size = len(rows[0])
        if size > self.space_cap:
            raise SpecError("action.table", f"|X| = {size} exceeds space_cap={self.space_cap}")
        try:
            space = ActionSpace(size, tuple(labels) if labels else ())
        except ValueError as exc:
            raise SpecError("action.labels", str(exc)) from None
        try:
            return table_action(group, space, rows)
        except InvalidActionError as exc:
            raise SpecError("action.table", str(exc)) from None


def load_spec(path: str | Path) -> ProblemSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(str(path), exc.strerror or str(exc)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(str(path), f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return ProblemSpec.from_dict(doc)


def load_action(path: str | Path) -> GroupAction:
    return load_spec(path).build()


# ------------------------------------------------------------------ commands


def _point_label(action: GroupAction, x: int) -> str:
    if action.kind == "colorings":
        return f"{action.space.labels[x]}={x}"
    return action.space.labels[x]


def cmd_orbits(action: GroupAction) -> tuple[dict, list[str], int]:
    part = orbit_partition(action)
    orbits = []
    lines = [f"orbits: {part.orbit_count}"]
    for i, members in enumerate(part.orbit_members):
        orbits.append({
            "index": i,
            "members": list(members),
            "labels": [action.space.labels[x] for x in members],
        })
        shown = ", ".join(_point_label(action, x) for x in members)
        lines.append(f"  orbit {i} (size {len(members)}): {{{shown}}}")
    doc = {"command": "orbits", "orbit_count": part.orbit_count, "orbits": orbits}
    return doc, lines, EXIT_OK


def cmd_count(action: GroupAction) -> tuple[dict, list[str], int]:
    r = count_report(action)
    total = sum(r.fix_sizes)
    burnside = f"{total}/{r.group_order} = {render(r.burnside_value)}"
    per_element = [
        {"element": g, "cycles": action.describe_element(g), "fix": s}
        for g, s in enumerate(r.fix_sizes)
    ]
    lines = [
        f"direct count:   {r.direct_count}",
        f"burnside value: {burnside}",
        f"fixed pairs:    {r.fixed_pairs}",
        f"group order:    {r.group_order}",
        "per-element |fix(g)|:",
    ]
    lines += [f"  {e['element']:>4}  {e['cycles']:<24} {e['fix']}" for e in per_element]
    code = EXIT_OK
    if not r.agrees:
        lines.append(f"CONSISTENCY FAILURE: direct {r.direct_count} != burnside {render(r.burnside_value)}")
        code = EXIT_CONSISTENCY
    doc = {
        "command": "count",
        "direct_count": r.direct_count,
        "burnside_sum": total,
        "burnside_value": render(r.burnside_value),
        "fixed_pairs": r.fixed_pairs,
        "group_order": r.group_order,
        "fix": per_element,
        "agrees": r.agrees,
    }
    return doc, lines, code


def _step_summary(rep) -> str:
    if rep.step == 1:
        return f"sum_x P(gy=x) = {render(rep.lhs)}"
    if rep.step == 3:
        return f"{rep.lhs}/{rep.rhs} (x, y, k) triples map transporter(y,x) onto stabilizer(x)"
    if rep.step == 5:
        n_inv = rep.rhs[0]
        return f"P(y in orb(x)) = {render(n_inv)} for all {len(rep.lhs) - 1} points; (1/N) sum_x P(gx=x) = {render(rep.lhs[-1])}"
    if rep.step == 6:
        return f"sum_x P(gx=x) = {render(rep.lhs[0])} = N"
    return f"{rep.statement} ({len(rep.lhs)} equalities)"


def cmd_verify(action: GroupAction) -> tuple[dict, list[str], int]:
    reports = verify_proof(action)
    lines = []
    for rep in reports:
        status = "PASS" if rep.holds else "FAIL"
        lines.append(f"step {rep.step} {rep.identity_name}: {status}  {_step_summary(rep)}")
        if rep.witness:
            lines.append(f"  witness: {rep.witness}")
    ok = all(r.holds for r in reports)
    doc = {
        "command": "verify",
        "all_hold": ok,
        "reports": [
            {
                "step": r.step,
                "identity": r.identity_name,
                "statement": r.statement,
                "holds": r.holds,
                "lhs": _exact_json(r.lhs),
                "rhs": _exact_json(r.rhs),
                "witness": r.witness,
            }
            for r in reports
        ],
    }
    return doc, lines, EXIT_OK if ok else EXIT_IDENTITY


def _exact_json(v):
    if isinstance(v, tuple):
        return [_exact_json(t) for t in v]
    return render(v)


def cmd_estimate(action: GroupAction, samples: int, seed: int, quantity: str, x: int):
    if quantity not in QUANTITIES:
        raise SpecError("--quantity", f"unknown quantity {quantity!r}; choose from {', '.join(QUANTITIES)}")
    if samples < 1:
        raise SpecError("--samples", "must be >= 1")
    if seed < 0:
        raise SpecError("--seed", "must be non-negative")
    event = QUANTITIES[quantity]
    if event is None:
        rep = estimate_orbit_count(action, samples, seed)
    else:
        if not 0 <= x < action.size:
            raise SpecError("--x", f"point {x} out of range for |X| = {action.size}")
        rep = estimate_event(action, event, x, samples, seed)
    z = rep.error / rep.standard_error if rep.standard_error else (0.0 if rep.error == 0 else float("inf"))
    doc = {
        "command": "estimate",
        "quantity": rep.quantity,
        "point": rep.point,
        "estimate": rep.estimate,
        "exact": render(rep.exact),
        "standard_error": rep.standard_error,
        "samples": rep.samples,
        "seed": rep.seed,
    }
    lines = [f"quantity:       {rep.quantity}" + (f"  (x = {rep.point})" if rep.point is not None else "")]
    lines += [
        f"estimate:       {rep.estimate!r}",
        f"exact:          {render(rep.exact)}",
        f"standard error: {rep.standard_error!r}",
        f"|error| / SE:   {z!r}",
        f"samples:        {rep.samples}",
        f"seed:           {rep.seed}",
    ]
    return doc, lines, EXIT_OK


# ------------------------------------------------------------------ driver


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="orbitcount", description="Orbit counting for finite group actions.")
    parser.add_argument("--format", choices=("text", "structured"), default="text",
                        help="text (default) or structured (JSON)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("orbits", "list the orbits"),
        ("count", "count orbits directly and by fixed points"),
        ("verify", "check every identity of the probabilistic argument exactly"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("spec")
    p = sub.add_parser("estimate", parents=[fmt], help="Monte Carlo estimate of a quantity")
    p.add_argument("spec")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quantity", default="orbit-count", help=", ".join(QUANTITIES))
    p.add_argument("--x", type=int, default=0, help="point for event quantities (default 0)")
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run the CLI and return ``(exit_code, stdout, stderr)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        action = load_action(args.spec)
        if args.command == "orbits":
            doc, lines, code = cmd_orbits(action)
        elif args.command == "count":
            doc, lines, code = cmd_count(action)
        elif args.command == "verify":
            doc, lines, code = cmd_verify(action)
        else:
            doc, lines, code = cmd_estimate(action, args.samples, args.seed, args.quantity, args.x)
    except SpecError as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    except ConsistencyError as exc:
        return EXIT_CONSISTENCY, "", f"consistency failure: {exc}\n"
    doc["exit_code"] = code
    if args.format == "structured":
        out = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        out = "\n".join(lines) + "\n"
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
