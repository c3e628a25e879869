"""Command-line front end.

Every subcommand prints one JSON report on stdout (``verify-tables`` can also
print markdown). Exit status is 0 on success, 1 when a verification fails and
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import platform
import sys
import time

import numpy

from . import __version__
from .catalog import verify_tables
from .cliques import two_color_profile
from .constructions import SPECS, generate, verify_claims
from .core import (ColorPermutation, EdgeColoring, ParseError, PatternFamily, TrichromeError,
                   apply_color_permutation, find_forbidden)
from .exact import exact_h2, f_exact, g_exact
from .extract import extract_dispatch, gallai_partition
from .patterns import canonical_family, enumerate_orbits

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _family(text: str) -> PatternFamily:
    try:
        return PatternFamily.parse(text.lower())
    except (ValueError, TrichromeError) as exc:
        raise UsageError(f"bad family {text!r}: {exc}") from exc


def _family_params(fam: PatternFamily) -> dict:
    rep, pi = canonical_family(fam)
    return {"family": fam.spec(), "canonical_family": rep.spec(), "permutation": str(pi)}


def _read_coloring(path: str) -> EdgeColoring:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return EdgeColoring.from_text(text)


# ------------------------------------------------------------------ commands

def cmd_orbits(a):
    out = {}
    for k in ([a.k] if a.k else [1, 2, 3]):
        cat = enumerate_orbits(k)
        out[str(k)] = [{"family": r.spec(), "orbit_size": cat.orbit_size(r)}
                       for r in cat.representatives]
    return {"k": a.k}, out, True


def cmd_gen(a):
    spec = SPECS.get(a.id)
    if spec is None:
        raise UsageError(f"unknown construction id {a.id}")
    try:
        c, spec = generate(a.id, a.n, a.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if a.permute:
        try:
            c = apply_color_permutation(c, ColorPermutation.parse(a.permute))
        except ValueError as exc:
            raise UsageError(f"bad permutation {a.permute!r}: {exc}") from exc
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(c.to_text())
    res = {"spec": spec.to_dict(), "n": c.n, "coloring": c.to_string(), "file": a.out}
    params = {"id": a.id, "n": a.n, "seed": a.seed if spec.needs_seed else None,
              "permute": a.permute}
    return params, res, True


def cmd_check(a):
    fam = _family(a.family)
    c = _read_coloring(a.file)
    hit = find_forbidden(c, fam)
    res = {"n": c.n, "avoiding": hit is None}
    if hit is not None:
        res["pattern"] = str(hit[0])
        res["triangle"] = list(hit[1])
    return {"file": a.file, **_family_params(fam)}, res, hit is None


def cmd_h2(a):
    c = _read_coloring(a.file)
    prof = two_color_profile(c, a.budget)
    return {"file": a.file, "budget": a.budget}, {"n": c.n, **prof.to_dict()}, True


def cmd_exact(a):
    fam = _family(a.family)
    res = exact_h2(a.n, fam, a.budget, threads=a.threads, symmetry=not a.no_symmetry)
    params = {"n": a.n, "budget": a.budget, "threads": a.threads, **_family_params(fam)}
    return params, res.to_dict(), res.status != "interval" or not a.strict


def cmd_fg(a):
    fn = f_exact if a.which == "f" else g_exact
    rows = [fn(n).to_dict() for n in range(a.n_min, a.n + 1)]
    return {"which": a.which, "n_min": a.n_min, "n": a.n}, rows, True


def cmd_extract(a):
    fam = _family(a.family)
    c = _read_coloring(a.file)
    hit = find_forbidden(c, fam)
    if hit is not None:
        return ({"file": a.file, **_family_params(fam)},
                {"error": "coloring is not avoiding", "pattern": str(hit[0]),
                 "triangle": list(hit[1])}, False)
    out = extract_dispatch(c, fam, allow_subfamily=a.allow_subfamily)
    res = out.to_dict()
    if a.decompose:
        try:
            res["gallai"] = gallai_partition(c).to_dict()
        except TrichromeError as exc:
            res["gallai"] = {"error": str(exc)}
    return {"file": a.file, **_family_params(fam)}, res, out.size >= out.guarantee


def cmd_verify_constructions(a):
    if not a.ids or "all" in a.ids:
        ids = sorted(SPECS)
    else:
        try:
            ids = [int(x) for x in a.ids]
        except ValueError as exc:
            raise UsageError(f"construction ids must be integers or 'all': {a.ids}") from exc
    bad = [i for i in ids if i not in SPECS]
    if bad:
        raise UsageError(f"unknown construction ids {bad}")
    reports = [verify_claims(i, range(a.n_min, a.n_max + 1), a.seed, a.clique_budget) for i in ids]
    ok = all(r["ok"] for r in reports)
    return ({"ids": ids, "n_min": a.n_min, "n_max": a.n_max, "seed": a.seed}, reports, ok)


def cmd_verify_tables(a):
    rep = verify_tables(n_max_exact=a.exact_n, n_max_constructions=a.sweep_n, seed=a.seed,
                        sweep_points=tuple(a.points))
    return ({"exact_n": a.exact_n, "sweep_n": a.sweep_n, "seed": a.seed, "points": a.points},
            rep, rep["ok"])


def tables_markdown(rep: dict) -> str:
    lines = ["| family | kind | value | checks |", "|---|---|---|---|"]
    fails = {}
    for f in rep["failures"]:
        fails.setdefault(f["family"], []).append(f)
    for er in rep["entries"]:
        e = er["entry"]
        note = "ok" if er["ok"] else "; ".join(
            f"{f['check']} n={f.get('n')}" for f in fails.get(e["family"], []))
        if "sweep" in er:
            meas = ", ".join(f"h2({r['n']})={r.get('h2', '-')}" for r in er["sweep"])
            note += f" ({meas})"
        lines.append(f"| {{{e['family']}}} | {e['kind']} | {e['expression']} | {note} |")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trichrome", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("json", "markdown"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbits", parents=[common], help="pattern-family orbit representatives")
    s.add_argument("--k", type=int, choices=(1, 2, 3))
    s.set_defaults(fn=cmd_orbits)

    s = sub.add_parser("gen", parents=[common], help="generate a construction")
    s.add_argument("--id", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", help="write the coloring file here")
    s.add_argument("--permute", help="recolor by the images of r,b,y, e.g. 'ryb' swaps b and y")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("check", parents=[common], help="test a coloring file for avoidance")
    s.add_argument("--family", required=True)
    s.add_argument("file")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("h2", parents=[common], help="largest two-colored clique of a coloring")
    s.add_argument("--budget", type=int)
    s.add_argument("file")
    s.set_defaults(fn=cmd_h2)

    s = sub.add_parser("exact", parents=[common], help="exact h2(n, F) by exhaustive search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--family", required=True)
    s.add_argument("--budget", type=int, default=5_000_000)
    s.add_argument("--no-symmetry", action="store_true")
    s.add_argument("--strict", action="store_true", help="exit 1 if only an interval is found")
    s.set_defaults(fn=cmd_exact)

    s = sub.add_parser("fg", parents=[common], help="exact f(n) or g(n) by graph enumeration")
    s.add_argument("--which", choices=("f", "g"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--n-min", type=int, default=1)
    s.set_defaults(fn=cmd_fg)

    s = sub.add_parser("extract", parents=[common], help="certified two-colored clique")
    s.add_argument("--family", required=True)
    s.add_argument("--allow-subfamily", action="store_true")
    s.add_argument("--decompose", action="store_true", help="also report a Gallai partition")
    s.add_argument("file")
    s.set_defaults(fn=cmd_extract)

    s = sub.add_parser("verify-constructions", parents=[common], help="check construction claims")
    s.add_argument("--id", "--ids", dest="ids", nargs="*", help="construction ids or 'all'")
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=30)
    s.add_argument("--clique-budget", type=int, default=50_000)
    s.set_defaults(fn=cmd_verify_constructions)

    s = sub.add_parser("verify-tables", parents=[common], help="check the value tables")
    s.add_argument("--exact-n", type=int, default=6)
    s.add_argument("--sweep-n", type=int, default=30)
    s.add_argument("--points", type=int, nargs="*", default=[50, 100, 200])
    s.set_defaults(fn=cmd_verify_tables)
    return p


def run(argv=None) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), None
    t0 = time.perf_counter()
    try:
        params, results, ok = a.fn(a)
    except (UsageError, ParseError, OSError) as exc:
        print(f"trichrome {a.command}: {exc}", file=sys.stderr)
        return 2, None
    params = {**params, "seed": a.seed, "threads": a.threads}
    report = {"schema_version": SCHEMA_VERSION, "command": a.command, "parameters": params,
              "results": results, "ok": ok,
              "versions": {"trichrome": __version__, "python": platform.python_version(),
                           "numpy": numpy.__version__},
              "wall_time": round(time.perf_counter() - t0, 3)}
    if a.format == "markdown" and a.command == "verify-tables":
        sys.stdout.write(tables_markdown(results))
    else:
        json.dump(report, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    return (0 if ok else 1), report


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
