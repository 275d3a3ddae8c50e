"""Command-line front end and the enumeration cross-validation harness.

Configuration files are minimal JSON: ``{"n": 3, "points": [[1,1,1], ...]}``
with 1-based integer levels and an optional parallel ``"labels"`` list.
Exit codes: 0 success, 1 harness assertion failure, 2 input error; a
negative verdict never changes the exit code.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .constructions import (
    DirectionForm,
    LiaisonInput,
    add_layer,
    liaison_addition,
    verify_hf_additivity,
    verify_layer_hf,
)
from .errors import InputError
from .grid_model import GridPoint, PointSet, canonicalize
from .hilbert_function import DeltaTable, HilbertTable, delta_table, hilbert_table
from .level_structure import inclusion_property, interface_set, level_sets, remove_level
from .reisner_oracle import first_cm_failure, is_cm
from .star_property import check_star, find_path, is_acm


@dataclass(frozen=True)
class ConfigurationFile:
    """Parsed configuration: raw points plus optional display labels."""

    n: int
    points: tuple[GridPoint, ...]
    labels: tuple[str, ...] | None = None

    def point_set(self) -> PointSet:
        return canonicalize(self.points)


def load_configuration(path: str | Path) -> ConfigurationFile:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    n = data.get("n")
    pts = data.get("points")
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{path}: 'n' must be a positive integer")
    if not isinstance(pts, list) or not pts:
        raise InputError(f"{path}: 'points' must be a nonempty list")
    points = []
    for p in pts:
        if (
            not isinstance(p, list)
            or len(p) != n
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in p)
        ):
            raise InputError(f"{path}: bad point {p!r}; expected {n} integers")
        points.append(tuple(p))
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != len(points) or not all(
            isinstance(s, str) for s in labels
        ):
            raise InputError(f"{path}: 'labels' must be strings parallel to 'points'")
        labels = tuple(labels)
    return ConfigurationFile(n=n, points=tuple(points), labels=labels)


def save_configuration(X: PointSet, path: str | Path) -> None:
    data = {"n": X.n, "points": [list(p) for p in X.sorted_points()]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
        fh.write("\n")


def _fmt_point(p: GridPoint) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise InputError(f"bad {what} {text!r}: expected comma-separated integers") from e


def cmd_check(args: argparse.Namespace) -> int:
    cfg = load_configuration(args.file)
    X = cfg.point_set()
    top = args.star_level if args.star_level is not None else X.n
    if args.star_level is not None and X.n < 2:
        raise InputError("star levels are undefined for a single direction")
    if X.n >= 2 and not 2 <= top <= X.n:
        raise InputError(f"star level {top} outside 2..{X.n}")
    dims = "x".join(map(str, X.dims))
    print(f"configuration: {X.size} points on grid {dims}")
    if cfg.labels:
        pairs = ", ".join(f"{lab}={_fmt_point(p)}" for lab, p in zip(cfg.labels, cfg.points))
        print(f"labels: {pairs}")
    if X.n >= 2:
        for s in range(2, top + 1):
            verdict, wits = check_star(X, s)
            if verdict:
                print(f"star_{s}: satisfied")
            else:
                w = wits[0]
                print(f"star_{s}: VIOLATED ({w.kind} P={_fmt_point(w.P)} Q={_fmt_point(w.Q)})")
    print(f"ACM: {_fmt_bool(is_acm(X))}")
    for i in range(1, X.n + 1):
        sizes = level_sets(X, i).sizes()
        if X.n >= 2:
            incl = _fmt_bool(inclusion_property(X, i))
            print(f"direction {i}: level sizes {sizes}; inclusion: {incl}")
        else:
            print(f"direction {i}: level sizes {sizes}")
    return 0


def _render_table(table: HilbertTable | DeltaTable, name: str) -> None:
    T = table.box
    n = len(T)
    if n == 1:
        row = " ".join(str(table.values[(t,)]) for t in range(T[0] + 1))
        print(f"{name}(t), t = 0..{T[0]}: {row}")
        return
    prefixes = itertools.product(*[range(Ti + 1) for Ti in T[:-2]])
    for prefix in prefixes:
        if n > 2:
            head = ",".join(map(str, prefix))
            print(f"{name}({head},j,k), rows j = 0..{T[-2]}, columns k = 0..{T[-1]}:")
        else:
            print(f"{name}(j,k), rows j = 0..{T[-2]}, columns k = 0..{T[-1]}:")
        for j in range(T[-2] + 1):
            cells = [str(table.values[prefix + (j, k)]) for k in range(T[-1] + 1)]
            print("  " + " ".join(cells))


def cmd_hilbert(args: argparse.Namespace) -> int:
    cfg = load_configuration(args.file)
    X = cfg.point_set()
    box = _parse_int_list(args.box, "box")
    if len(box) != X.n:
        raise InputError(f"box {box} has {len(box)} entries, expected {X.n}")
    if args.delta:
        _render_table(delta_table(X, box), "delta_h")
    else:
        _render_table(hilbert_table(X, box), "h")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = load_configuration(args.file)
    X = cfg.point_set()
    failure = first_cm_failure(X)
    if failure is None:
        print("CM: true")
    else:
        face, degree, rank = failure
        face_str = "{" + ",".join(sorted(map(str, face))) + "}" if face else "empty"
        print(f"CM: false; link={face_str}, reduced homology degree {degree} rank {rank}")
    return 0


def cmd_path(args: argparse.Namespace) -> int:
    cfg = load_configuration(args.file)
    X = cfg.point_set()
    P = _parse_int_list(getattr(args, "from"), "--from point")
    Q = _parse_int_list(args.to, "--to point")
    if len(P) != X.n or len(Q) != X.n:
        raise InputError(f"endpoints must have {X.n} coordinates")
    path = find_path(X, P, Q, X.n)
    print(" -> ".join(_fmt_point(p) for p in path))
    return 0


def _load_construct_config(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict) or data.get("mode") not in {"liaison", "layer"}:
        raise InputError(f"{path}: 'mode' must be 'liaison' or 'layer'")
    return data


def _construct_liaison(data: dict, out: str | None) -> int:
    summands = data.get("summands")
    supports = data.get("supports")
    if not isinstance(summands, list) or not isinstance(supports, list):
        raise InputError("liaison config needs 'summands' and 'supports' lists")
    try:
        parts = tuple(frozenset(tuple(map(int, p)) for p in part) for part in summands)
        forms = tuple(
            DirectionForm(direction=i, support=frozenset(map(int, sup)))
            for i, sup in enumerate(supports, start=1)
        )
    except (TypeError, ValueError) as e:
        raise InputError(f"bad liaison config: {e}") from e
    inp = LiaisonInput(summands=parts, forms=forms)
    result = liaison_addition(inp)
    Z = result.point_set
    counts: dict[str, int] = {}
    for label in result.provenance.values():
        counts[label] = counts.get(label, 0) + 1
    parts_txt = ", ".join(f"{k}: {counts[k]} point(s)" for k in sorted(counts))
    print(f"liaison addition: {Z.size} points ({parts_txt})")
    box = tuple(data["box"]) if "box" in data else None
    ok = verify_hf_additivity(inp, Z, box)
    box_txt = ",".join(map(str, box)) if box else "default"
    print(f"hf additivity: {'verified' if ok else 'FAILED'} on box ({box_txt})")
    if out:
        save_configuration(Z, out)
        print(f"wrote {out}")
    return 0 if ok else 1


def _construct_layer(data: dict, out: str | None) -> int:
    pts = data.get("points")
    direction = data.get("direction")
    if not isinstance(pts, list) or not isinstance(direction, int):
        raise InputError("layer config needs 'points' and integer 'direction'")
    fresh = bool(data.get("fresh", True))
    X = canonicalize([tuple(map(int, p)) for p in pts])
    Z = add_layer(X, direction, fresh)
    print(f"layer construction: {X.size} points + {Z.size - X.size} layer points = {Z.size}")
    box = tuple(data["box"]) if "box" in data else (2,) * X.n
    ok = verify_layer_hf(X, direction, box, fresh)
    print(f"hf additivity: {'verified' if ok else 'FAILED'} on box ({','.join(map(str, box))})")
    if out:
        save_configuration(Z, out)
        print(f"wrote {out}")
    return 0 if ok else 1


def cmd_construct(args: argparse.Namespace) -> int:
    data = _load_construct_config(args.config)
    if data["mode"] == "liaison":
        return _construct_liaison(data, args.out)
    return _construct_layer(data, args.out)


def _acm_or_empty(points: list[GridPoint]) -> bool:
    if not points:
        return True
    return is_acm(canonicalize(points))


def _structure_failures(X: PointSet) -> list[str]:
    """Consequence checks for an ACM configuration: level sets, their
    complements, unions of levels, and interface sets must all be ACM."""
    problems = []
    for i in range(1, X.n + 1):
        parts = [sorted(part) for _, part in level_sets(X, i).levels]
        t = len(parts)
        for mask in range(1, (1 << t) - 1):
            union = [p for k in range(t) if mask >> k & 1 for p in parts[k]]
            if not _acm_or_empty(union):
                problems.append(f"union of levels mask={mask} direction={i} not ACM")
        if t >= 2:
            for j in range(1, t + 1):
                if not is_acm(remove_level(X, i, j)):
                    problems.append(f"complement of level {j} direction {i} not ACM")
                iface = interface_set(X, i, j)
                if iface.size and not is_acm(iface):
                    problems.append(f"interface of level {j} direction {i} not ACM")
    return problems


def _subset_bitmask(cells: list[GridPoint], chosen: set[GridPoint]) -> int:
    mask = 0
    for b, cell in enumerate(cells):
        if cell in chosen:
            mask |= 1 << b
    return mask


def cmd_enumerate(args: argparse.Namespace) -> int:
    dims = _parse_int_list(args.grid, "grid")
    if any(r < 1 for r in dims):
        raise InputError("grid entries must be positive")
    cells = sorted(itertools.product(*[range(1, r + 1) for r in dims]))
    ncells = len(cells)
    if args.random is None:
        if ncells > 27:
            raise InputError(f"exhaustive run over {ncells} cells exceeds the 27-cell cap")
        masks = range(1, 1 << ncells)
    else:
        if args.seed is None:
            raise InputError("--random requires --seed")
        rng = random.Random(args.seed)
        masks = []
        for _ in range(args.random):
            k = rng.randint(1, ncells)
            chosen = set(rng.sample(cells, k))
            masks.append(_subset_bitmask(cells, chosen))

    rows = []
    failures: list[str] = []
    acm_count = 0
    agree_count = 0
    for mask in masks:
        subset = [cells[b] for b in range(ncells) if mask >> b & 1]
        X = canonicalize(subset)
        star = is_acm(X)
        cm = is_cm(X)
        incl = [inclusion_property(X, i) for i in range(1, X.n + 1)] if X.n >= 2 else []
        agree = star == cm
        if agree:
            agree_count += 1
        else:
            failures.append(f"id={mask}: star={star} but reisner={cm}")
        if star:
            acm_count += 1
            for problem in _structure_failures(X):
                failures.append(f"id={mask}: {problem}")
        elif any(incl):
            failures.append(f"id={mask}: inclusion holds but configuration is not ACM")
        rows.append(
            {
                "grid": "x".join(map(str, dims)),
                "id": mask,
                "size": X.size,
                "star_acm": _fmt_bool(star),
                "reisner_cm": _fmt_bool(cm),
                "inclusion": ";".join(_fmt_bool(v) for v in incl),
                "agree": _fmt_bool(agree),
            }
        )

    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["grid", "id", "size", "star_acm", "reisner_cm", "inclusion", "agree"]
        )
        writer.writeheader()
        writer.writerows(rows)
    grid_txt = "x".join(map(str, dims))
    print(
        f"grid {grid_txt}: {len(rows)} configurations, {acm_count} ACM, "
        f"star/reisner agreement {agree_count}/{len(rows)}"
    )
    for message in failures:
        print(f"FAIL {message}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acmpts",
        description="Decide and explore the ACM property of grid point configurations in (P^1)^n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="star levels, ACM verdict, level sizes, inclusion")
    p.add_argument("file")
    p.add_argument("--star-level", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hilbert", help="Hilbert function or first-difference table")
    p.add_argument("file")
    p.add_argument("--box", required=True, help="comma-separated box corner, e.g. 3,3,3")
    p.add_argument("--delta", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("oracle", help="Reisner-criterion Cohen-Macaulay verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("path", help="unit-step chain between two configuration points")
    p.add_argument("file")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("construct", help="liaison addition or layer construction")
    p.add_argument("config")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="exhaustive or random cross-validation harness")
    p.add_argument("--grid", required=True, help="comma-separated level counts, e.g. 2,2,2")
    p.add_argument("--random", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True, help="CSV report path")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
