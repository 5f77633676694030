"""Command-line front end.

Subcommand groups mirror the library modules::

    positroids perm columnar --k 4 --n 8 --x "2 4 7 8 1 3 5 6"
    positroids plabic bridge --k 2 --n 5 --x "3 5 1 2 4" | positroids plabic faces --mode target
    positroids seed classify --lambda "2 2"
    positroids le skew --k 3 --n 8 --x "..." --v "..." | positroids le leify
    positroids ppalg module --k 3 --n 7 --v "..." --x "..." --j 14

Graph-consuming commands read graph JSON from ``--in`` or stdin; producers
write JSON to ``--out`` or stdout, so commands compose under pipes.  Exit
codes: 0 success, 1 verification failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from positroids import lediag, perm, plabic, pluecker, ppalg, seeds, shapes

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def parse_perm(text: str, k: int | None = None, n: int | None = None) -> perm.Permutation:
    text = text.strip()
    if text in ("e", "identity"):
        if n is None:
            raise UsageError("named permutation needs --n")
        return perm.identity(n)
    if text == "w0":
        if n is None:
            raise UsageError("named permutation needs --n")
        return perm.longest_element(n)
    if text == "wK":
        if n is None or k is None:
            raise UsageError("wK needs --k and --n")
        return perm.parabolic_longest(k, n)
    images = tuple(int(t) for t in text.replace(",", " ").split())
    if not perm.is_permutation(images):
        raise UsageError(f"not a permutation: {text!r}")
    return images


def parse_subset(text: str) -> frozenset[int]:
    return frozenset(int(t) for t in text.replace(",", " ").split())


def read_graph(args) -> plabic.PlabicGraph:
    if getattr(args, "infile", None):
        with open(args.infile) as fh:
            return plabic.from_json(json.load(fh))
    return plabic.from_json(json.load(sys.stdin))


def write_json(data, args) -> None:
    text = json.dumps(data, indent=None, sort_keys=False)
    if getattr(args, "outfile", None):
        with open(args.outfile, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def fmt_word(word) -> str:
    """Display a reduced word in product order (leftmost letter acts last)."""
    return " ".join(f"s{i}" for i in reversed(word))


def fmt_subset(s) -> str:
    return " ".join(str(i) for i in sorted(s))


def run_report(command: str, checks: list[dict], rng_seed: int | None, **inputs) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "checks": checks,
        "failures": sum(1 for c in checks if c["status"] != "ok"),
        "rng_seed": rng_seed,
    }


# ---------------------------------------------------------------------------
# perm subcommands
# ---------------------------------------------------------------------------

def cmd_perm(args) -> int:
    if args.sub == "columnar":
        x = parse_perm(args.x, args.k, args.n)
        word = perm.columnar_expression(x, args.k)
        print(fmt_word(word))
        return EXIT_OK
    if args.sub == "pds":
        n = args.n or (max(int(t) for t in args.v.split()) if args.v[0].isdigit() else None)
        v = parse_perm(args.v, args.k, n)
        if args.w:
            w = parse_perm(args.w, args.k, len(v))
            word = perm.any_reduced_word(w)
        else:
            word = tuple(int(t) for t in args.word.replace(",", " ").split())
        used = perm.positive_distinguished_subexpression(v, word)
        print("positions:", fmt_subset(used))
        print("index set:", fmt_subset(perm.summand_index_set(v, word)))
        return EXIT_OK
    if args.sub == "necklace":
        pi = parse_perm(args.pi, args.k, args.n)
        white = parse_subset(args.white) if args.white else frozenset()
        sigma = perm.DecoratedPermutation(pi, white)
        for J in perm.grassmann_necklace(sigma):
            print(fmt_subset(J))
        return EXIT_OK
    if args.sub == "bounded-affine":
        pi = parse_perm(args.pi, args.k, args.n)
        white = parse_subset(args.white) if args.white else frozenset()
        lifted = perm.bounded_affine(perm.DecoratedPermutation(pi, white))
        print(" ".join(str(f) for f in lifted.window))
        return EXIT_OK
    raise UsageError(f"unknown perm subcommand {args.sub!r}")


# ---------------------------------------------------------------------------
# plabic subcommands
# ---------------------------------------------------------------------------

def cmd_plabic(args) -> int:
    if args.sub == "bridge":
        x = parse_perm(args.x, args.k, args.n)
        G = plabic.bridge_graph(args.k, args.n, x)
        write_json(plabic.to_json(G), args)
        return EXIT_OK
    G = read_graph(args)
    if args.sub == "trips":
        _, sigma = plabic.trips(G)
        print(" ".join(str(i) for i in sigma.perm))
        if sigma.white_fixed:
            print("white fixed:", fmt_subset(sigma.white_fixed))
        return EXIT_OK
    if args.sub == "faces":
        labeling = plabic.face_labeling(G, args.mode)
        for i, lab in enumerate(labeling.labels):
            kind = "boundary" if labeling.faces.faces[i].boundary else "internal"
            print(f"{fmt_subset(lab)}  [{kind}]")
        return EXIT_OK
    if args.sub == "relabel":
        u = parse_perm(args.perm, None, G.n)
        write_json(plabic.to_json(plabic.relabel_boundary(G, u)), args)
        return EXIT_OK
    if args.sub == "mirror":
        write_json(plabic.to_json(plabic.mirror(G)), args)
        return EXIT_OK
    if args.sub == "move":
        if args.kind != "square":
            raise UsageError("only 'square' moves are addressable by face")
        try:
            H = plabic.square_move(G, parse_subset(args.face))
        except plabic.NotSquareEligible as exc:
            print(f"NotSquareEligible: {exc}", file=sys.stderr)
            return EXIT_USAGE
        write_json(plabic.to_json(H), args)
        return EXIT_OK
    if args.sub == "dualquiver":
        seed = seeds.seed_from_graph(G, "target")
        if args.dot:
            print(seeds.seed_to_dot(seed))
        else:
            write_json(seeds.seed_to_json(seed), args)
        return EXIT_OK
    raise UsageError(f"unknown plabic subcommand {args.sub!r}")


# ---------------------------------------------------------------------------
# seed subcommands
# ---------------------------------------------------------------------------

def cmd_seed(args) -> int:
    if args.sub == "rectangles":
        v = parse_perm(args.v, args.k, args.n)
        x = parse_perm(args.x, args.k, args.n)
        S = seeds.rectangles_seed(args.k, args.n, v, x)
        write_json(seeds.seed_to_json(S), args)
        return EXIT_OK
    if args.sub == "classify":
        lam = shapes.normalize(int(t) for t in args.lam.replace(",", " ").split())
        print(seeds.classify_mutable_shape(lam))
        return EXIT_OK
    if args.sub == "from-graph":
        G = read_graph(args)
        delete = parse_subset(args.delete) if args.delete else None
        S = seeds.seed_from_graph(G, args.mode, delete)
        write_json(seeds.seed_to_json(S), args)
        return EXIT_OK
    if args.sub == "mutate":
        G = read_graph(args)
        S = seeds.seed_from_graph(G, args.mode)
        for step in args.seq.split(";"):
            S = seeds.mutate_seed(S, frozenset(parse_subset(step)))
        write_json(seeds.seed_to_json(S), args)
        return EXIT_OK
    if args.sub == "verify-exchange":
        return _verify_exchange(args)
    raise UsageError(f"unknown seed subcommand {args.sub!r}")


def _verify_exchange(args) -> int:
    rng = random.Random(args.rng_seed)
    v = parse_perm(args.v, args.k, args.n)
    x = parse_perm(args.x, args.k, args.n)
    S0 = seeds.rectangles_seed(args.k, args.n, v, x)
    vi = perm.inverse(v)
    cell = frozenset(vi[:args.k])
    necklace = perm.grassmann_necklace(perm.positroid_decoration(v, perm.multiply(x, v), args.k))
    samples = [
        pluecker.sample_schubert_cell(args.k, args.n, cell, rng, require_nonzero=necklace).matrix
        for _ in range(args.samples)
    ]
    checks = []
    S = S0
    for step in range(args.steps):
        mutable = S.quiver.mutable_vertices()
        if not mutable:
            break
        q = mutable[rng.randrange(len(mutable))]
        old = S.labels[q]
        S = seeds.mutate_seed(S, q)
        new = S.labels[q]
        ok = all(
            new.evaluate(M, {}) * old.evaluate(M, {})
            == _product(S, q, M, outgoing=True) + _product(S, q, M, outgoing=False)
            for M in samples
        )
        checks.append({"name": f"exchange step {step} at {_vertex_name(q)}", "status": "ok" if ok else "fail"})
    report = run_report(
        "seed verify-exchange", checks, args.rng_seed,
        k=args.k, n=args.n, v=list(v), x=list(x), samples=args.samples,
    )
    write_json(report, args)
    return EXIT_OK if report["failures"] == 0 else EXIT_VERIFY


def _product(S, q, M, outgoing: bool):
    from fractions import Fraction

    vs = S.quiver.arrows_from(q) if outgoing else S.quiver.arrows_into(q)
    val = Fraction(1)
    for r in vs:
        val *= S.labels[r].evaluate(M, {})
    return val


def _vertex_name(q) -> str:
    if isinstance(q, frozenset):
        return "".join(str(i) for i in sorted(q))
    return str(q)


# ---------------------------------------------------------------------------
# le subcommands
# ---------------------------------------------------------------------------

def cmd_le(args) -> int:
    if args.sub == "skew":
        x = parse_perm(args.x, args.k, args.n)
        v = parse_perm(args.v, args.k, args.n)
        print(lediag.skew_oplus(args.k, args.n, x, v).render())
        return EXIT_OK
    text = open(args.infile).read() if getattr(args, "infile", None) else sys.stdin.read()
    O = lediag.parse(text)
    if args.sub == "leify":
        print(lediag.leify(O).render())
        return EXIT_OK
    if args.sub == "read":
        if args.k is None or args.n is None:
            raise UsageError("le read needs --k and --n")
        r = lediag.reading_word(O, args.k, args.n)
        print(" ".join(str(i) for i in r))
        return EXIT_OK
    raise UsageError(f"unknown le subcommand {args.sub!r}")


# ---------------------------------------------------------------------------
# ppalg subcommands
# ---------------------------------------------------------------------------

def cmd_ppalg(args) -> int:
    if args.sub == "module":
        v = parse_perm(args.v, args.k, args.n)
        x = parse_perm(args.x, args.k, args.n)
        word = perm.standard_reduced_expression(x, v, args.k)
        M = ppalg.tilting_summand(args.k, args.n, v, word, args.j)
        print(M.render())
        return EXIT_OK
    if args.sub == "quiver":
        v = parse_perm(args.v, args.k, args.n)
        x = parse_perm(args.x, args.k, args.n)
        quiver, labels = ppalg.endomorphism_quiver(args.k, args.n, v, x)
        S = seeds.LabeledSeed(quiver, {b: seeds.PluckerSymbol(l) for b, l in labels.items()})
        write_json(seeds.seed_to_json(S), args)
        return EXIT_OK
    if args.sub == "crosscheck":
        return _ppalg_crosscheck(args)
    raise UsageError(f"unknown ppalg subcommand {args.sub!r}")


def _crosscheck_instance(task) -> dict:
    n, k, lam_v, lam_x = task
    v = perm.max_rep_from_image(shapes.vert_sw(lam_v, k, n), k, n)
    x = perm.grassmannian_from_image(shapes.vert_ne(lam_x, k, n), k, n)
    word = perm.standard_reduced_expression(x, v, k)
    mismatches = 0
    for j in perm.summand_index_set(v, word):
        P = ppalg.plucker_of_module(k, n, v, word, j)
        a = ppalg.tilting_summand(k, n, v, word, j).normalized()
        b = ppalg.region_module(k, n, v, P)
        if a != b:
            mismatches += 1
    return {
        "name": f"n={n} k={k} lam_v={list(lam_v)} lam_x={list(lam_x)}",
        "status": "ok" if mismatches == 0 else "fail",
    }


def _ppalg_crosscheck(args) -> int:
    tasks = [
        (n, k, lam_v, lam_x)
        for n in range(2, args.n + 1)
        for k in range(1, n)
        for lam_v in shapes.partitions_in_box(k, n - k)
        for lam_x in shapes.subpartitions(lam_v)
    ]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            checks = list(pool.map(_crosscheck_instance, tasks, chunksize=16))
    else:
        checks = [_crosscheck_instance(t) for t in tasks]
    report = run_report("ppalg crosscheck", checks, None, n=args.n)
    summary = {"checks": len(checks), "failures": report["failures"]}
    write_json(summary if not args.verbose else report, args)
    return EXIT_OK if report["failures"] == 0 else EXIT_VERIFY


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="positroids", description=__doc__.splitlines()[0])
    groups = top.add_subparsers(dest="group", required=True)

    def io(p):
        p.add_argument("--in", dest="infile")
        p.add_argument("--out", dest="outfile")

    g = groups.add_parser("perm")
    sub = g.add_subparsers(dest="sub", required=True)
    p = sub.add_parser("columnar")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--x", required=True)
    p = sub.add_parser("pds")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--v", required=True)
    p.add_argument("--w")
    p.add_argument("--word", help="reduced word letters in application order")
    p = sub.add_parser("necklace")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--pi", required=True)
    p.add_argument("--white")
    p = sub.add_parser("bounded-affine")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--pi", required=True)
    p.add_argument("--white")
    g.set_defaults(func=cmd_perm)

    g = groups.add_parser("plabic")
    sub = g.add_subparsers(dest="sub", required=True)
    p = sub.add_parser("bridge")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True)
    io(p)
    for name in ("trips", "mirror"):
        p = sub.add_parser(name)
        io(p)
    p = sub.add_parser("faces")
    p.add_argument("--mode", choices=("source", "target"), required=True)
    io(p)
    p = sub.add_parser("relabel")
    p.add_argument("--perm", required=True)
    io(p)
    p = sub.add_parser("move")
    p.add_argument("kind", choices=("square",))
    p.add_argument("--face", required=True)
    io(p)
    p = sub.add_parser("dualquiver")
    p.add_argument("--dot", action="store_true")
    io(p)
    g.set_defaults(func=cmd_plabic)

    g = groups.add_parser("seed")
    sub = g.add_subparsers(dest="sub", required=True)
    p = sub.add_parser("rectangles")
    for flag in ("--v", "--x"):
        p.add_argument(flag, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    io(p)
    p = sub.add_parser("classify")
    p.add_argument("--lambda", dest="lam", required=True)
    p = sub.add_parser("from-graph")
    p.add_argument("--mode", choices=("source", "target"), default="target")
    p.add_argument("--delete")
    io(p)
    p = sub.add_parser("mutate")
    p.add_argument("--mode", choices=("source", "target"), default="target")
    p.add_argument("--seq", required=True, help="semicolon-separated face labels")
    io(p)
    p = sub.add_parser("verify-exchange")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--rng-seed", type=int, default=0)
    io(p)
    g.set_defaults(func=cmd_seed)

    g = groups.add_parser("le")
    sub = g.add_subparsers(dest="sub", required=True)
    p = sub.add_parser("skew")
    for flag in ("--x", "--v"):
        p.add_argument(flag, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    for name in ("leify", "read"):
        p = sub.add_parser(name)
        p.add_argument("--k", type=int)
        p.add_argument("--n", type=int)
        io(p)
    g.set_defaults(func=cmd_le)

    g = groups.add_parser("ppalg")
    sub = g.add_subparsers(dest="sub", required=True)
    p = sub.add_parser("module")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--j", type=int, required=True)
    p = sub.add_parser("quiver")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--x", required=True)
    io(p)
    p = sub.add_parser("crosscheck")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    io(p)
    g.set_defaults(func=cmd_ppalg)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, plabic.PlabicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
