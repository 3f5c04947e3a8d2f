"""Command-line front end.

Exit codes: 0 success, 1 when a check comes back negative, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence

from .core.complex import (
    EnumerationBudgetExceeded,
    MalformedRational,
    SimplicialComplex,
    format_rational,
    parse_rational,
)
from .core.fixtures import UnknownFixture, fixture
from .core.io import complex_from_json, complex_to_json, complexes_from_json
from .descriptors import DescriptorType, compute
from .filtration import Direction, random_tie_rule

EXIT_OK, EXIT_VERDICT, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_json(path: str):
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc


def load_complex(path: str) -> SimplicialComplex:
    return complex_from_json(_load_json(path))


def load_directions(path: str) -> List[Direction]:
    """JSON list of coordinate lists, or one "a/b,c/d" direction per line."""
    text = _read(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = None
    if isinstance(obj, dict):
        obj = obj.get("directions")
    if isinstance(obj, list):
        return [Direction(d) if isinstance(d, list) else Direction.parse(str(d)) for d in obj]
    return [Direction.parse(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _parse_point(text: str):
    return tuple(parse_rational(c.strip()) for c in text.split(","))


def _universe(text: str, K: SimplicialComplex, budget: Optional[int]):
    from .faithfulness import AdversaryUniverse
    kind, _, rest = text.partition(":")
    if kind == "enumerate":
        opts = dict(part.split("=", 1) for part in rest.split(",") if part)
        try:
            max_dim = int(opts.get("maxdim", 1))
        except ValueError:
            raise InputError(f"bad maxdim in universe {text!r}") from None
        subsets = opts.get("subsets", "0") in ("1", "true", "yes")
        pts = [K.vertex_coords[v] for v in K.vertices]
        return AdversaryUniverse.on_vertices(pts, max_dim, subsets=subsets, budget=budget)
    if kind == "list":
        return AdversaryUniverse.explicit([K] + complexes_from_json(_load_json(rest)))
    raise InputError(f"universe must be enumerate:maxdim=N or list:FILE, got {text!r}")


# -- verbs ----------------------------------------------------------------------

def cmd_compute(args) -> int:
    from .serialize import value_to_json
    K = load_complex(args.complex)
    D = DescriptorType.parse(args.descriptor)
    if D.parameter_kind == "point":
        if args.point is None:
            raise InputError("dr needs --point")
        p = _parse_point(args.point)
    else:
        if args.direction is None:
            raise InputError(f"{D.value} needs --direction")
        p = Direction.parse(args.direction)
    rule = random_tie_rule(random.Random(args.tie_seed)) if args.tie_seed is not None else None
    out = value_to_json(compute(D, K, p, tie_rule=rule))
    out["parameter"] = p.to_json() if isinstance(p, Direction) else [format_rational(c) for c in p]
    _emit(out)
    return EXIT_OK


def _random_direction(rng: random.Random, d: int) -> Direction:
    while True:
        v = [rng.randint(-9, 9) for _ in range(d)]
        if any(v):
            return Direction(v)


def cmd_compare(args) -> int:
    K, L = load_complex(args.complex), load_complex(args.complex2)
    D = DescriptorType.parse(args.descriptor)
    if args.directions:
        dirs = load_directions(args.directions)
    elif args.random:
        rng = random.Random(args.seed)
        dirs = [_random_direction(rng, K.ambient_dim) for _ in range(args.random)]
    else:
        raise InputError("compare needs --directions FILE or --random N")
    rows = []
    for s in dirs:
        rows.append({"direction": s.to_json(), "equal": compute(D, K, s) == compute(D, L, s)})
    if args.json:
        _emit({"descriptor": D.value, "rows": rows})
    else:
        for r in rows:
            print(f"{','.join(r['direction']):>16}  {'equal' if r['equal'] else 'unequal'}")
    return EXIT_OK


def cmd_faithful(args) -> int:
    from .faithfulness import relative_faithful
    K = load_complex(args.complex)
    U = _universe(args.universe, K, args.budget)
    report = relative_faithful(args.descriptor, K, load_directions(args.directions), U)
    _emit(report.to_json())
    return EXIT_OK if report.faithful else EXIT_VERDICT


def cmd_min_set(args) -> int:
    from .faithfulness import min_faithful_size
    K = load_complex(args.complex)
    U = _universe(args.universe, K, args.budget)
    res = min_faithful_size(args.descriptor, K, load_directions(args.candidates), U, budget=args.budget)
    _emit(res.to_json())
    return EXIT_OK if res.bound.finite else EXIT_VERDICT


def cmd_envelope_check(args) -> int:
    from .geometry import check_concise_conditions
    report = check_concise_conditions(load_complex(args.complex), load_directions(args.directions))
    _emit(report.to_json())
    return EXIT_OK if report.satisfied else EXIT_VERDICT


def cmd_observability(args) -> int:
    from . import observability as obs
    if args.clothespin:
        K = load_complex(args.clothespin)
        regions = obs.clothespin_regions(K)
        named = {"W": regions.W, "R1": regions.R1, "R2": regions.R2, "R3": regions.R3, "R4": regions.R4}
        out = regions.to_json()
        ok = True
    else:
        from .core.constructions import build_clothesline
        K = build_clothesline(args.clothesline)
        ws = obs.clothesline_regions(K)
        named = {f"W{i + 1}": w for i, w in enumerate(ws)}
        ok = obs.regions_disjoint(K)
        out = {"complex": complex_to_json(K), "regions": [w.to_json() for w in ws], "disjoint": ok}
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(obs.regions_svg(named) + "\n")
    _emit(out)
    return EXIT_OK if ok else EXIT_VERDICT


def _fixture_arg(text: str):
    try:
        return int(text)
    except ValueError:
        raise InputError(f"fixture parameters are integers, got {text!r}") from None


def cmd_gen(args) -> int:
    K = fixture(args.fixture, *[_fixture_arg(p) for p in args.params])
    _emit(complex_to_json(K))
    return EXIT_OK


def cmd_export(args) -> int:
    from .serialize import value_from_json, value_to_csv, value_to_svg
    v = value_from_json(_load_json(args.value))
    text = value_to_svg(v) + "\n" if args.format == "svg" else value_to_csv(v)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="topodesc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)
    descriptors = [t.value for t in DescriptorType]

    p = sub.add_parser("compute", help="descriptor of one complex for one parameter")
    p.add_argument("--complex", required=True, help="complex JSON file, or - for stdin")
    p.add_argument("--descriptor", required=True, choices=descriptors)
    p.add_argument("--direction", help='e.g. "1,0" or "3/5,4/5"')
    p.add_argument("--point", help="query point for dr")
    p.add_argument("--tie-seed", type=int, help="use a random compatible tie rule with this seed")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="per-direction equality of two complexes")
    p.add_argument("--complex", required=True)
    p.add_argument("--complex2", required=True)
    p.add_argument("--descriptor", required=True, choices=descriptors)
    p.add_argument("--directions")
    p.add_argument("--random", type=int, metavar="N", help="N random integer directions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    for name, func, dirs_flag in (("faithful", cmd_faithful, "--directions"),
                                  ("min-set", cmd_min_set, "--candidates")):
        p = sub.add_parser(name)
        p.add_argument("--complex", required=True)
        p.add_argument("--descriptor", required=True, choices=descriptors)
        p.add_argument(dirs_flag, required=True)
        p.add_argument("--universe", default="enumerate:maxdim=1",
                       help="enumerate:maxdim=N[,subsets=1] or list:FILE")
        p.add_argument("--budget", type=int, help="overrides FD_BUDGET")
        p.set_defaults(func=func)

    p = sub.add_parser("envelope-check", help="necessary conditions for concise faithfulness")
    p.add_argument("--complex", required=True)
    p.add_argument("--directions", required=True)
    p.set_defaults(func=cmd_envelope_check)

    p = sub.add_parser("observability")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--clothespin", metavar="FILE")
    g.add_argument("--clothesline", type=int, metavar="M")
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=cmd_observability)

    p = sub.add_parser("gen", help="print a named fixture as complex JSON")
    p.add_argument("--fixture", required=True)
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export")
    p.add_argument("--value", required=True, help="descriptor JSON from compute")
    p.add_argument("--format", choices=["svg", "csv"], default="svg")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    from .faithfulness import SearchBudgetExceeded
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownFixture as exc:
        print(f"error: {exc}", file=sys.stderr)
    except MalformedRational as exc:
        print(f"error: malformed rational: {exc}", file=sys.stderr)
    except (EnumerationBudgetExceeded, SearchBudgetExceeded) as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
    except (InputError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
