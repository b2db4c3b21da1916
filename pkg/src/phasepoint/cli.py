"""Command-line front end: ``phasepoint <command> --n N ...``.

Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 infeasible method,
4 tolerance collision.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .catalog import DEFAULT_CACHE_DIR, cache_path, cached_text, dumps, make_catalog
from .checks import SUITES, run_suite, summarize
from .errors import Infeasible, PhasePointError, ToleranceCollision
from .finite_field import check_odd_prime
from .hw_clifford import affine_plane_operators, mub_projector, wigner_distribution
from .mat_group import class_labels, class_representative, class_size, element_order
from .orbit_engine import (
    BURNSIDE_MAX_N,
    EXPLICIT_MAX_N,
    burnside_count,
    fixed_point_table,
    orbit_decomposition,
)
from .phasespace_coords import plane_representative
from .spectra_census import CENSUS_MAX_N, DEFAULT_TOL, export_float, spectra_census

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_TOLERANCE = range(5)
MAX_N = 19


class BadInput(PhasePointError, ValueError):
    pass


def _n(args, limit: int = MAX_N) -> int:
    N = check_odd_prime(args.n)
    if N > limit:
        raise BadInput(f"n must be an odd prime <= {limit}, got {N}")
    return N


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(header, rows) -> str:
    cells = [[str(h) for h in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _render(fmt: str, header, rows) -> str:
    return _csv(header, rows) if fmt == "csv" else _table(header, rows)


def _cached(args, kind: str, N: int, group: str, build, extra: str = "") -> str:
    if args.no_cache:
        return dumps(build())
    text, _ = cached_text(cache_path(args.cache_dir, kind, N, group, extra), build)
    return text


# -- commands ----------------------------------------------------------------


def _class_rows(N: int, group: str) -> list[dict]:
    rows = []
    for lab in class_labels(N, group):
        F = class_representative(lab, N)
        rows.append({
            "class": lab.name,
            "det": lab.delta,
            "trace": lab.t,
            "kind": lab.kind,
            "size": class_size(lab, N),
            "order": element_order(F),
            "representative": [[F.a, F.b], [F.c, F.d]],
        })
    return rows


def cmd_classes(args) -> int:
    N = _n(args)
    if args.format == "json":
        build = lambda: make_catalog(N, args.group, "class_table", _class_rows(N, args.group))  # noqa: E731
        _emit(_cached(args, "class_table", N, args.group, build), args.out)
        return EXIT_OK
    header = ["class", "det", "trace", "size", "order", "representative"]
    rows = [
        [r["class"], r["det"], r["trace"], r["size"], r["order"],
         "({},{};{},{})".format(*r["representative"][0], *r["representative"][1])]
        for r in _class_rows(N, args.group)
    ]
    _emit(_render(args.format, header, rows), args.out)
    return EXIT_OK


def cmd_fixed_points(args) -> int:
    N = _n(args)
    det = args.det
    if args.format == "json":
        def build():
            payload = [r.as_dict() for r in fixed_point_table(N, args.group, det)]
            return make_catalog(N, args.group, "fixed_points", payload)
        extra = f"det{det}" if det is not None else ""
        _emit(_cached(args, "fixed_points", N, args.group, build, extra), args.out)
        return EXIT_OK
    header = ["N", "Class", "number of elements", "order of cyclic subgroup",
              "fixed points in plane", "fixed As", "fixed planes"]
    rows = [
        [N, r.name, r.size, r.order, r.fixed_points, r.fixed_rvectors, r.fixed_planes]
        for r in fixed_point_table(N, args.group, det)
    ]
    _emit(_render(args.format, header, rows), args.out)
    return EXIT_OK


def cmd_orbits(args) -> int:
    N = _n(args)
    if args.method == "burnside":
        if N > BURNSIDE_MAX_N:
            raise Infeasible(f"Burnside counting limited to n <= {BURNSIDE_MAX_N}")

        def build():
            count = burnside_count(N, args.group)
            return make_catalog(N, args.group, "orbit_catalog", {"method": "burnside", "count": count})
    else:
        if N > EXPLICIT_MAX_N:
            raise Infeasible(f"explicit orbit decomposition limited to n <= {EXPLICIT_MAX_N}")

        def build():
            payload = orbit_decomposition(N, args.group).payload()
            return make_catalog(N, args.group, "orbit_catalog", {"method": "explicit", **payload})
    text = _cached(args, "orbit_catalog", N, args.group, build, args.method)
    if args.out:
        _emit(text, args.out)
    doc = json.loads(text)
    if args.format == "json":
        if not args.out:
            _emit(text)
        return EXIT_OK
    payload = doc["payload"]
    print(f"N={N} group={args.group} method={args.method} orbits={payload['count']}")
    if args.method == "explicit":
        sizes = {}
        for o in payload["orbits"]:
            sizes[o["size"]] = sizes.get(o["size"], 0) + 1
        rows = [[s, c, s * c] for s, c in sorted(sizes.items())]
        _emit(_render(args.format, ["orbit size", "orbits", "planes"], rows))
    return EXIT_OK


def cmd_spectra(args) -> int:
    N = check_odd_prime(args.n)
    if N > CENSUS_MAX_N:
        raise Infeasible(f"spectra census limited to n <= {CENSUS_MAX_N}")
    if not args.tol > 0:
        raise BadInput("tol must be positive")

    def build():
        return make_catalog(N, "esl", "spectra_census", spectra_census(N, args.tol).payload())

    text = _cached(args, "spectra_census", N, "esl", build, f"tol{args.tol:g}")
    if args.out:
        _emit(text, args.out)
    if args.format == "json":
        if not args.out:
            _emit(text)
        return EXIT_OK
    payload = json.loads(text)["payload"]
    header = [f"l{i + 1}" for i in range(N)] + ["occurrences"]
    rows = [[f"{round(v, 5) + 0.0:.5f}" for v in s["eigenvalues"]] + [s["occurrences"]] for s in payload["spectra"]]
    print(f"N={N} distinct spectra={payload['count']} planes={payload['total']}")
    _emit(_render(args.format, header, rows))
    return EXIT_OK


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise BadInput(f"{what} must be comma-separated integers, got {text!r}") from None


def cmd_wigner(args) -> int:
    N = _n(args, 11)
    label = _parse_ints(args.plane, "plane") if args.plane else [0] * (N - 1)
    if len(label) != N - 1:
        raise BadInput(f"plane label needs {N - 1} entries (alpha_2..alpha_N)")
    if args.state == "mixed":
        rho = np.eye(N) / N
    else:
        mr = _parse_ints(args.state, "state")
        if len(mr) != 2 or not 0 <= mr[0] <= N:
            raise BadInput("state must be 'mixed' or 'm,r' with 0 <= m <= n (m = n is infinity)")
        rho = mub_projector(mr[0], mr[1], N)
    rvec = plane_representative(np.array(label) % N, N)
    W = wigner_distribution(rho, affine_plane_operators(rvec))
    grid = [[export_float(W[(q, p)]) for p in range(N)] for q in range(N)]
    if args.format == "json":
        doc = {"N": N, "plane": [x % N for x in label], "rvector": rvec.tolist(),
               "state": args.state, "wigner": grid}
        _emit(dumps(doc), args.out)
        return EXIT_OK
    header = ["p\\q"] + list(range(N))
    rows = [[p] + [f"{round(grid[q][p], 6) + 0.0:.6f}" for q in range(N)] for p in reversed(range(N))]
    _emit(_render(args.format, header, rows), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    N = _n(args)
    print(f"phasepoint {__version__} verify n={N} suite={args.suite} seed={args.seed}")
    results = run_suite(args.suite, N, args.seed)
    for r in results:
        print(r.line())
    tally = summarize(results)
    print(f"{tally['pass']} passed, {tally['fail']} failed")
    return EXIT_VERIFY if tally["fail"] else EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phasepoint", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("table", "csv", "json"), cache=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--n", type=int, required=True, help="odd prime dimension")
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.set_defaults(func=func)
        if cache:
            sp.add_argument("--cache-dir", default=DEFAULT_CACHE_DIR)
            sp.add_argument("--no-cache", action="store_true", help="recompute and do not touch the cache")
        return sp

    sp = add("classes", cmd_classes, "conjugacy classes with sizes and cyclic orders", cache=True)
    sp.add_argument("--group", choices=("sl", "esl"), default="sl")
    sp.add_argument("--out")

    sp = add("fixed-points", cmd_fixed_points, "fixed points, r-vectors and planes per class", cache=True)
    sp.add_argument("--group", choices=("sl", "esl"), default="sl")
    sp.add_argument("--det", type=int, choices=(1, -1))
    sp.add_argument("--out")

    sp = add("orbits", cmd_orbits, "orbits of the group on affine planes", cache=True)
    sp.add_argument("--group", choices=("sl", "esl"), default="sl")
    sp.add_argument("--method", choices=("burnside", "explicit"), default="burnside")
    sp.add_argument("--out", help="write the JSON catalog here")

    sp = add("spectra", cmd_spectra, "census of phase point operator spectra", cache=True)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--out", help="write the JSON catalog here")

    sp = add("wigner", cmd_wigner, "Wigner function of a MUB state on one affine plane")
    sp.add_argument("--plane", help="alpha_2,...,alpha_N (default all zero)")
    sp.add_argument("--state", default="0,0", help="'m,r' for MUB vector |m,r>, or 'mixed'")
    sp.add_argument("--out")

    sp = add("verify", cmd_verify, "run property suites", formats=("table",))
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"phasepoint: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ToleranceCollision as exc:
        print(f"phasepoint: tolerance collision: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except (PhasePointError, OSError) as exc:
        print(f"phasepoint: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
