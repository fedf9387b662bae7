"""Command line front end.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hall, schmitt
from .canon import DEFAULT_BOUND, canonical_form, catalog_upto, enumerate_matroids, find_isomorphism
from .catalog import Catalog, catalog_from_environment, load_matroid, matroid_to_document
from .category import verify_proto_exact
from .errors import MatroidError, ParseError, ValidationError
from .kth import decompose, flags, grid_square_failures, k0_class, simplicial_identity_failures
from .matroid import check_closure_axioms, contract, restrict

OK, CHECK_FAILED, USAGE = 0, 1, 2


class Output:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream
        self.data = {}

    def text(self, line):
        if self.fmt == "text":
            print(line, file=self.stream)

    def put(self, key, value):
        self.data[key] = value

    def finish(self):
        if self.fmt == "json":
            print(json.dumps(self.data, indent=2, sort_keys=True), file=self.stream)


def _subset(M, text):
    if not text:
        return []
    return [x for x in text.split(",") if x]


def _summary(M):
    c = canonical_form(M)
    return {
        "ground": list(M.labels),
        "degree": M.degree,
        "rank": M.rank,
        "flats": len(M.flats),
        "class": c.hex,
    }


def cmd_validate(args, out):
    try:
        M = load_matroid(args.matroid)
    except ValidationError as exc:
        out.text(f"invalid: {exc}")
        out.put("valid", False)
        out.put("error", str(exc))
        return CHECK_FAILED
    problems = check_closure_axioms(M)
    info = _summary(M)
    out.put("valid", not problems)
    out.put("matroid", info)
    out.put("problems", problems)
    out.text(f"valid degree={info['degree']} rank={info['rank']} flats={info['flats']} class={info['class']}")
    for p in problems:
        out.text(f"problem: {p}")
    return CHECK_FAILED if problems else OK


def cmd_iso(args, out):
    M, N = load_matroid(args.first), load_matroid(args.second)
    witness = find_isomorphism(M, N)
    out.put("isomorphic", witness is not None)
    out.put("witness", witness)
    if witness is None:
        out.text("not isomorphic")
        return CHECK_FAILED
    out.text("isomorphic")
    for x, y in witness.items():
        out.text(f"{x} -> {y}")
    return OK


def cmd_minor(args, out):
    M = load_matroid(args.matroid)
    S = _subset(M, args.restrict) if args.restrict is not None else list(M.labels[1:])
    N = restrict(M, S)
    N = contract(N, _subset(N, args.contract))
    doc = matroid_to_document(N)
    out.put("minor", doc)
    out.put("class", canonical_form(N).hex)
    out.text(json.dumps(doc))
    return OK


def _emit_combination(out, x, key):
    out.put(key, x.to_json())
    for line in x.text().splitlines():
        out.text(line)
    if x.is_zero():
        out.text("0")


def cmd_hall_product(args, out):
    bound = args.bound
    x = hall.one()
    for name in args.matroids:
        x = hall.product(x, hall.delta(load_matroid(name)), bound)
    _emit_combination(out, x, "product")
    return OK


def cmd_hall_coproduct(args, out):
    _emit_combination(out, hall.coproduct(hall.delta(load_matroid(args.matroid))), "coproduct")
    return OK


def cmd_structure_constant(args, out):
    A, C, B = (load_matroid(x) for x in (args.A, args.C, args.B))
    g = hall.structure_constant(A, C, B)
    out.put("structure_constant", g)
    out.text(str(g))
    return OK


def cmd_mm_coproduct(args, out):
    _emit_combination(out, schmitt.mm_coproduct(schmitt.basis(load_matroid(args.matroid))), "coproduct")
    return OK


def cmd_antipode(args, out):
    if args.degree_table:
        table = {}
        for d in range(args.max_degree + 1):
            for B in enumerate_matroids(d, max(args.max_degree, DEFAULT_BOUND)):
                S = schmitt.antipode(schmitt.basis(B))
                table[B.hex] = S.to_json()
                out.text(f"# degree {d} class {B.hex}")
                for line in S.text().splitlines():
                    out.text(line)
        out.put("antipode", table)
        return OK
    if args.matroid is None:
        raise ParseError("give a matroid or --degree-table", "antipode")
    _emit_combination(out, schmitt.antipode(schmitt.basis(load_matroid(args.matroid))), "antipode")
    return OK


def cmd_duality(args, out):
    if args.matroid is not None:
        targets = [canonical_form(load_matroid(args.matroid))]
    else:
        targets = catalog_upto(args.max_degree, max(args.max_degree, DEFAULT_BOUND))
    bound = max(DEFAULT_BOUND, max(t.degree for t in targets))
    results = {B.hex: schmitt.duality_check(B, bound) for B in targets}
    failures = [h for h, ok in results.items() if not ok]
    out.put("checked", len(results))
    out.put("failures", failures)
    out.text(f"duality checked={len(results)} failures={len(failures)}")
    for h in failures:
        out.text(f"fail {h}")
    return CHECK_FAILED if failures else OK


def cmd_k0(args, out):
    k = k0_class(load_matroid(args.matroid))
    out.put("r", k.r)
    out.put("c", k.c)
    out.text(str(k))
    return OK


def cmd_decompose(args, out):
    word = decompose(load_matroid(args.matroid))
    out.put("word", word)
    out.text(" ".join(word) if word else "(empty)")
    return OK


def cmd_flags(args, out):
    M = load_matroid(args.matroid)
    fl = flags(M, args.n)
    out.put("n", args.n)
    out.put("count", len(fl))
    out.text(f"n={args.n} count={len(fl)}")
    if not args.check:
        return OK
    square_bad = sum(len(grid_square_failures(F)) for F in fl)
    ident_bad = sum(len(simplicial_identity_failures(F)) for F in fl)
    out.put("square_failures", square_bad)
    out.put("identity_failures", ident_bad)
    out.text(f"square_failures={square_bad} identity_failures={ident_bad}")
    return CHECK_FAILED if square_bad or ident_bad else OK


def cmd_verify_axioms(args, out):
    classes = catalog_upto(args.max_degree, max(args.max_degree, DEFAULT_BOUND))
    matroids = [c.matroid for c in classes]
    closure_bad = sum(bool(check_closure_axioms(M)) for M in matroids)
    report = verify_proto_exact(matroids)
    out.put("closure_axiom_failures", closure_bad)
    out.put("properties", {f"PROP{k}": {"instances": i, "failures": f} for k, (i, f) in report.counts.items()})
    out.put("observations", report.observations)
    out.text(f"FLATS {len(matroids)} {closure_bad}")
    for line in report.lines():
        out.text(line)
    for key, value in sorted(report.observations.items()):
        out.text(f"# {key} {value}")
    return CHECK_FAILED if closure_bad or not report.ok else OK


def cmd_build_catalog(args, out):
    catalog = Catalog.build(args.n, bound=args.n)
    if args.out:
        catalog.write(args.out)
    counts = catalog.counts()
    out.put("counts", counts)
    for d, c in enumerate(counts):
        out.text(f"degree {d} count {c}")
    if not args.out:
        out.text(catalog.text().rstrip("\n"))
    return OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    parser = argparse.ArgumentParser(prog="matroidhall", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("validate", cmd_validate, "validate a matroid document")
    p.add_argument("matroid")
    p = add("iso", cmd_iso, "test isomorphism and print a witness bijection")
    p.add_argument("first")
    p.add_argument("second")
    p = add("minor", cmd_minor, "compute (M|S)/T")
    p.add_argument("matroid")
    p.add_argument("--restrict", help="comma separated labels (default: everything)")
    p.add_argument("--contract", default="", help="comma separated labels")
    p = add("hall-product", cmd_hall_product, "product of delta functions, left to right")
    p.add_argument("matroids", nargs="+")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p = add("hall-coproduct", cmd_hall_coproduct, "Hall coproduct of a delta function")
    p.add_argument("matroid")
    p = add("structure-constant", cmd_structure_constant, "g^B_{A,C}")
    p.add_argument("--A", required=True)
    p.add_argument("--C", required=True)
    p.add_argument("--B", required=True)
    p = add("mm-coproduct", cmd_mm_coproduct, "minor coproduct of a class")
    p.add_argument("matroid")
    p = add("antipode", cmd_antipode, "antipode of a class or of every class")
    p.add_argument("matroid", nargs="?")
    p.add_argument("--degree-table", action="store_true")
    p.add_argument("--max-degree", type=int, default=3)
    p = add("duality", cmd_duality, "compare structure constants with coproduct coefficients")
    p.add_argument("matroid", nargs="?")
    p.add_argument("--max-degree", type=int, default=4)
    p = add("k0", cmd_k0, "class in K0")
    p.add_argument("matroid")
    p = add("decompose", cmd_decompose, "peel elements into a word in a, b")
    p.add_argument("matroid")
    p = add("flags", cmd_flags, "count flags and optionally check their grids")
    p.add_argument("matroid")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--check", action="store_true")
    p = add("verify-axioms", cmd_verify_axioms, "flat axioms and proto-exact properties")
    p.add_argument("--max-degree", type=int, default=3)
    p = add("build-catalog", cmd_build_catalog, "enumerate classes and write the catalog")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    return parser


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    out = Output(args.format, stream)
    try:
        catalog_from_environment()
        code = args.func(args, out)
    except (ParseError, ValidationError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    out.finish()
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
