"""Command-line front end.

Rotation inputs (any subcommand except ``verify``)::

    --axis x,y,z --angle v      axis-angle; --unit deg|rad, --group so3|su2
    --matrix r11,r12,...,r33    row-major rotation matrix
    --su2 w,vx,vy,vz            U = w 1 - i v.sigma
    --turn tx,ty,tz:hx,hy,hz    arc from tail to head

``compose`` takes any number of them; list order is application order, so
the result is last * ... * first.  Values starting with ``-`` must be
attached with ``=`` (``--axis=-1,0,0``).

Exit status: 0 ok, 1 verification failure, 2 usage error, 3 validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import so3, su2, turns
from .base import DEFAULT_TOL, AxisAngle, Group, InvalidInput
from .verify import run_suites

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    pass


def fmt(x: float) -> str:
    return "%.17g" % (float(x) + 0.0)


def fmt_vec(v, sep=" ") -> str:
    return sep.join(fmt(c) for c in v)


def _flag(name: str, value: str) -> str:
    return f"--{name}={value}" if value.startswith("-") else f"--{name} {value}"


@dataclass(frozen=True)
class RotationSpec:
    """One parsed rotation input.  ``values`` are kept exactly as typed
    (angle in ``unit``), so formatting a canonical input reproduces it."""

    tag: str  # axis-angle | matrix | su2 | turn
    values: tuple
    group: Group = Group.SO3
    unit: str = "rad"

    def format(self) -> str:
        g = self.group.value
        if self.tag == "axis-angle":
            axis, angle = self.values
            return " ".join([_flag("axis", fmt_vec(axis, ",")), _flag("angle", fmt(angle)),
                             f"--unit {self.unit}", f"--group {g}"])
        if self.tag == "turn":
            tail, head = self.values
            return " ".join([_flag("turn", fmt_vec(tail, ",") + ":" + fmt_vec(head, ",")),
                             f"--group {g}"])
        return " ".join([_flag(self.tag, fmt_vec(self.values, ",")), f"--group {g}"])

    def to_json(self) -> dict:
        d = {"representation": self.tag, "group": self.group.value}
        if self.tag == "axis-angle":
            d.update(axis=list(self.values[0]), angle=self.values[1], unit=self.unit)
        elif self.tag == "turn":
            d.update(tail=list(self.values[0]), head=list(self.values[1]))
        else:
            d["values"] = list(self.values)
        return d

    def radians(self, angle: float) -> float:
        return np.deg2rad(angle) if self.unit == "deg" else angle


def _numbers(text: str, count: int, where: str) -> tuple:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"{where}: expected {count} comma-separated numbers, got {len(parts)}")
    out = []
    for i, p in enumerate(parts, 1):
        try:
            x = float(p)
        except ValueError:
            raise UsageError(f"{where}: component {i} {p!r} is not a number") from None
        if not np.isfinite(x):
            raise UsageError(f"{where}: component {i} {p!r} is not finite")
        out.append(x)
    return tuple(out)


def _near_unit(v, what: str) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > DEFAULT_TOL.cli_unit:
        raise InvalidInput(f"{what} must be a unit vector (|{what}| = {float(n):.17g})")
    return v / n


def parse_specs(raw: list, group: Group, unit: str) -> list[RotationSpec]:
    specs = []
    for pos, (tag, text, angle) in enumerate(raw, 1):
        where = f"rotation #{pos} (--{tag})"
        if tag == "axis":
            if angle is None:
                raise UsageError(f"{where}: --axis needs a following --angle")
            axis = _numbers(text, 3, where)
            ang = _numbers(angle, 1, f"rotation #{pos} (--angle)")[0]
            specs.append(RotationSpec("axis-angle", (axis, ang), group, unit))
        elif tag == "matrix":
            specs.append(RotationSpec("matrix", _numbers(text, 9, where), group, unit))
        elif tag == "su2":
            specs.append(RotationSpec("su2", _numbers(text, 4, where), group, unit))
        elif tag == "turn":
            halves = text.split(":")
            if len(halves) != 2:
                raise UsageError(f"{where}: expected tail:head")
            specs.append(RotationSpec("turn", (_numbers(halves[0], 3, where + " tail"),
                                               _numbers(halves[1], 3, where + " head")),
                                      group, unit))
    return specs


def spec_turn(spec: RotationSpec, gauge: float = 0.0) -> turns.Turn:
    """A turn for ``spec``: the typed arc itself, or one built with ``gauge``."""
    if spec.tag == "turn":
        tail, head = spec.values
        return turns.Turn(_near_unit(tail, "tail"), _near_unit(head, "head"), spec.group)
    return turns.turn_from_axis_angle(to_axis_angle(spec_element(spec), spec.group), gauge)


def spec_element(spec: RotationSpec):
    """Rotation matrix for SO3 specs, SU2Element for SU2 specs."""
    so3_group = spec.group is Group.SO3
    if spec.tag == "axis-angle":
        axis = _near_unit(spec.values[0], "axis")
        angle = spec.radians(spec.values[1])
        if so3_group:
            return so3.so3_from_axis_angle(so3.so3_canonicalize(axis, angle))
        return su2.su2_element(axis, angle)
    if spec.tag == "matrix":
        R = so3.check_rotation(np.reshape(spec.values, (3, 3)))
        return R if so3_group else su2.lift(R)[0]
    if spec.tag == "su2":
        q = spec.values
        n = np.linalg.norm(q)
        if abs(n - 1.0) > DEFAULT_TOL.cli_unit:
            raise InvalidInput(f"su2 entries must have unit norm (|q| = {float(n):.17g})")
        U = su2.SU2Element.from_quaternion(np.asarray(q) / n)
        return su2.phi(U) if so3_group else U
    t = spec_turn(spec)
    if so3_group:
        return so3.so3_from_axis_angle(turns.turn_to_group(t))
    return turns.turn_element(t)


def to_axis_angle(element, group: Group) -> AxisAngle:
    if group is Group.SO3:
        return so3.so3_to_axis_angle(element)
    return su2.su2_to_axis_angle(element)


class Report:
    """Ordered key/value output, printed as lines or as one JSON document."""

    def __init__(self):
        self.items: list[tuple[str, object, str]] = []

    def add(self, key: str, value, text: str | None = None):
        if text is None:
            if isinstance(value, (list, tuple, np.ndarray)):
                text = fmt_vec(value)
            elif isinstance(value, float):
                text = fmt(value)
            else:
                text = str(value)
        if isinstance(value, np.ndarray):
            value = [float(x) + 0.0 for x in value]
        elif isinstance(value, float):
            value = value + 0.0
        self.items.append((key, value, text))

    def emit(self, as_json: bool, out=None):
        out = out or sys.stdout
        if as_json:
            out.write(json.dumps({k: v for k, v, _ in self.items}, indent=2) + "\n")
        else:
            for k, _, text in self.items:
                out.write(f"{k}: {text}\n")


def _angle_out(angle: float, unit: str) -> float:
    return float(np.rad2deg(angle)) if unit == "deg" else float(angle)


def _report_element(rep: Report, element, group: Group, unit: str):
    a = to_axis_angle(element, group)
    rep.add("axis", a.axis)
    rep.add("angle", _angle_out(a.angle, unit))
    rep.add("unit", unit)
    if group is Group.SU2:
        rep.add("su2", element.quaternion)


def _report_turn(rep: Report, t: turns.Turn, unit: str):
    rep.add("turn-tail", t.tail)
    rep.add("turn-head", t.head)
    rep.add("turn-arc", _angle_out(t.arc, unit))


def _single(specs):
    if len(specs) != 1:
        raise UsageError(f"expected exactly one rotation, got {len(specs)}")
    return specs[0]


def cmd_convert(spec: RotationSpec, target: str, gauge: float = 0.0):
    element = spec_element(spec)
    group, unit = spec.group, spec.unit
    rep = Report()
    rep.add("input", spec.to_json(), spec.format())
    rep.add("representation", target)
    rep.add("group", group.value)
    if target == "axis-angle":
        a = to_axis_angle(element, group)
        rep.add("axis", a.axis)
        rep.add("angle", _angle_out(a.angle, unit))
        rep.add("unit", unit)
        out = RotationSpec("axis-angle", (tuple(a.axis), _angle_out(a.angle, unit)), group, unit)
        rep.add("spec", out.format())
    elif target == "matrix":
        R = element if group is Group.SO3 else su2.phi(element)
        rep.add("matrix", np.asarray(R).reshape(-1))
        rep.add("spec", RotationSpec("matrix", tuple(np.asarray(R).reshape(-1)), Group.SO3).format())
    elif target == "su2":
        U = su2.lift(element)[0] if group is Group.SO3 else element
        rep.add("su2", U.quaternion)
        rep.add("spec", RotationSpec("su2", tuple(U.quaternion), Group.SU2).format())
    elif target == "turn":
        t = spec_turn(spec, gauge)
        _report_turn(rep, t, unit)
        rep.add("spec", RotationSpec("turn", (tuple(t.tail), tuple(t.head)), group).format())
    return rep


def _elements_close(x, y, group: Group) -> float:
    if group is Group.SO3:
        return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))
    return float(np.max(np.abs(x.quaternion - y.quaternion)))


def cmd_compose(specs: list[RotationSpec], engine: str, normalize=False):
    if not specs:
        raise UsageError("compose needs at least one rotation")
    group = specs[0].group
    unit = specs[0].unit

    elements = [spec_element(s) for s in specs]
    product = elements[0]
    for e in elements[1:]:
        product = so3.so3_compose(e, product) if group is Group.SO3 else su2.su2_compose(e, product)

    turn = spec_turn(specs[0])
    for s in specs[1:]:
        turn = turns.turn_compose(spec_turn(s), turn)
    if normalize and group is Group.SO3:
        turn = turns.normalize_turn_so3(turn)
    if group is Group.SO3:
        turn_product = so3.so3_from_axis_angle(turns.turn_to_group(turn))
    else:
        turn_product = turns.turn_element(turn)

    deviation = _elements_close(product, turn_product, group)
    if deviation > DEFAULT_TOL.oracle:
        raise VerificationFailure(
            f"matrix and turn engines disagree by {deviation:.3e}")

    rep = Report()
    rep.add("engine", engine)
    rep.add("group", group.value)
    rep.add("count", len(specs))
    _report_element(rep, product if engine == "matrix" else turn_product, group, unit)
    if engine == "turn":
        _report_turn(rep, turn, unit)
    rep.add("engine-deviation", deviation, "%.3e" % deviation)
    return rep


def cmd_turn(spec: RotationSpec, gauge=0.0, normalize=False):
    t = spec_turn(spec, gauge)
    if normalize and t.group is Group.SO3:
        t = turns.normalize_turn_so3(t)
    rep = Report()
    rep.add("group", t.group.value)
    _report_turn(rep, t, spec.unit)
    pole = t.pole
    rep.add("turn-pole", pole if pole is not None else "none")
    a = turns.turn_to_group(t)
    rep.add("axis", a.axis)
    rep.add("angle", _angle_out(a.angle, spec.unit))
    rep.add("unit", spec.unit)
    return rep


def cmd_arc_points(t: turns.Turn, count: int) -> tuple[np.ndarray, bool]:
    if count < 2:
        raise UsageError("--count must be at least 2")
    return turns.arc_points(t, count), t.pole is None


def cmd_verify(samples: int, seed: int, tol: float | None = None):
    return run_suites(samples, seed, tol)


class _SpecAction(argparse.Action):
    """Collect rotation options in command-line order; --angle pairs with the
    most recent --axis."""

    def __call__(self, parser, namespace, values, option_string=None):
        raw = list(getattr(namespace, "raw_specs", None) or [])
        if self.const == "angle":
            for i in range(len(raw) - 1, -1, -1):
                if raw[i][0] == "axis" and raw[i][2] is None:
                    raw[i] = ("axis", raw[i][1], values)
                    break
            else:
                parser.error("--angle must follow an --axis")
        else:
            raw.append((self.const, values, None))
        namespace.raw_specs = raw


def _add_spec_options(p: argparse.ArgumentParser):
    helps = {
        "axis": "unit axis x,y,z (pair with --angle)",
        "angle": "rotation angle in --unit",
        "matrix": "row-major 3x3 rotation, nine values",
        "su2": "w,x,y,z with U = w - i(x,y,z).sigma",
        "turn": "arc endpoints tx,ty,tz:hx,hy,hz",
    }
    for name, text in helps.items():
        p.add_argument(f"--{name}", action=_SpecAction, const=name, dest="raw_specs",
                       metavar=name.upper(), default=None, help=text)
    p.add_argument("--unit", choices=("rad", "deg"), default="rad")
    p.add_argument("--group", choices=("so3", "su2"), default="so3")
    p.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamilton-turns",
                                     description="SO(3)/SU(2) rotations and their great-circle turns")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert one rotation to another representation")
    _add_spec_options(p)
    p.add_argument("--to", choices=("axis-angle", "matrix", "su2", "turn"), required=True)
    p.add_argument("--gauge", type=float, default=0.0, help="turn gauge angle (rad)")

    p = sub.add_parser("compose", help="compose rotations, first listed acts first")
    _add_spec_options(p)
    p.add_argument("--engine", choices=("matrix", "turn"), default="matrix")
    p.add_argument("--normalize", action="store_true",
                   help="fold the reported SO3 turn to arc <= pi/2")

    p = sub.add_parser("turn", help="show the turn of one rotation")
    _add_spec_options(p)
    p.add_argument("--gauge", type=float, default=0.0)
    p.add_argument("--normalize", action="store_true")

    p = sub.add_parser("arc-points", help="sample points along a turn's arc")
    _add_spec_options(p)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--gauge", type=float, default=0.0)

    p = sub.add_parser("verify", help="run the randomized identity suites")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None,
                   help="override every suite's tolerance")
    p.add_argument("--json", action="store_true")
    return parser


def _run(args, out) -> int:
    if args.command == "verify":
        if args.samples < 0:
            raise UsageError("--samples must be non-negative")
        results = cmd_verify(args.samples, args.seed, args.tol)
        ok = all(r.passed for r in results)
        if args.json:
            doc = {"samples": args.samples, "seed": args.seed, "passed": ok,
                   "suites": [{"name": r.name, "max_error": r.max_error, "tol": r.tol,
                               "passed": r.passed} for r in results]}
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            for r in results:
                out.write(f"suite {r.name} samples={r.samples} max_error={r.max_error:.6e} "
                          f"tol={r.tol:.0e} {'PASS' if r.passed else 'FAIL'}\n")
            out.write(f"result: {'PASS' if ok else 'FAIL'}\n")
        return EXIT_OK if ok else EXIT_VERIFY

    specs = parse_specs(args.raw_specs or [], Group(args.group), args.unit)
    if args.command == "convert":
        rep = cmd_convert(_single(specs), args.to, args.gauge)
    elif args.command == "compose":
        rep = cmd_compose(specs, args.engine, args.normalize)
    elif args.command == "turn":
        rep = cmd_turn(_single(specs), args.gauge, args.normalize)
    else:
        pts, degenerate = cmd_arc_points(spec_turn(_single(specs), args.gauge), args.count)
        if degenerate:
            sys.stderr.write("warning: degenerate turn, emitting its tail repeatedly\n")
        if args.json:
            out.write(json.dumps([[float(c) + 0.0 for c in p] for p in pts]) + "\n")
        else:
            for p in pts:
                out.write(fmt_vec(p) + "\n")
        return EXIT_OK
    rep.emit(args.json, out)
    return EXIT_OK


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out or sys.stdout)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except InvalidInput as exc:
        sys.stderr.write(f"validation error: {exc}\n")
        return EXIT_INVALID
    except VerificationFailure as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
