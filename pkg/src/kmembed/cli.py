"""Command-line front end.

Exit status: 0 success, 1 domain error (bad values, failed preconditions),
2 usage error (unknown command, malformed flags or expressions).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .adjoint_cocycle import EmbeddingSpec, embed_element
from .boundedness import (
    certify_unbounded_embedding,
    cyclic_boundedness,
    degree_profile,
    growth_explore,
)
from .errors import AlgebraError, ParseError
from .matrices import bruhat_decompose_sl2
from .number_fields import (
    NumberField,
    decompose_3N0,
    double_embedding_orbit,
    expand_power_combination,
    is_primitive,
    primitive_power_search,
    vandermonde_span_solve,
)
from .parsing import load_matrices, narrowest_ring, parse_matrix, parse_scalar_expression
from .rings import DEFAULT_WINDOW, KT

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

COMMANDS = ("embed", "probe", "growth", "bruhat", "decompose", "primitive", "vandermonde", "double-embed")


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# argument handling

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list:
    try:
        return [Fraction(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "record"), default="text")
    common.add_argument("--input", metavar="FILE", help="read matrices from FILE")

    p = _Parser(prog="kmembed", description="Exact constructions for SL2 embeddings and bounded generation.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    c = add("embed", "image of g under the derivation-cocycle embedding")
    c.add_argument("matrix", nargs="?")
    c.add_argument("--window", type=_positive, default=DEFAULT_WINDOW)
    c.add_argument("--group-size", type=int, default=2)

    c = add("probe", "unboundedness witnesses for D = 1..M")
    c.add_argument("--window", type=_positive, default=DEFAULT_WINDOW)
    c.add_argument("--group-size", type=int, default=2)
    c.add_argument("--target-degree", type=int, default=None)

    c = add("growth", "breadth-first degree growth of a generated subgroup")
    c.add_argument("matrices", nargs="*")
    c.add_argument("--max-length", type=_positive, default=4)

    c = add("bruhat", "elementary word of length <= 11 for g in SL2")
    c.add_argument("matrix", nargs="?")

    c = add("decompose", "factorization over SL2(Q) and a congruence subgroup")
    c.add_argument("matrix", nargs="?")
    c.add_argument("--min-poly", type=_int_list, required=True)
    c.add_argument("--level", type=_positive, default=2)

    c = add("primitive", "first a + i whose powers up to n are primitive")
    c.add_argument("--min-poly", type=_int_list, required=True)
    c.add_argument("--max-power", type=_positive, default=None)
    c.add_argument("--cap", type=_positive, default=10000)

    c = add("vandermonde", "write a polynomial as a combination of (t - a_i)^k")
    c.add_argument("--points", type=_rational_list, required=True)
    c.add_argument("--target", required=True, help="polynomial in t, e.g. 't' or '3*t^2 + 1'")
    c.add_argument("--k", type=int, default=None)

    c = add("double-embed", "does diag(g, sigma(g)) preserve <(1,0,1,0), (0,1,0,1)>?")
    c.add_argument("matrix", nargs="?")
    c.add_argument("--min-poly", type=_int_list, required=True)
    return p


def _matrices(args, ring, *, single: bool):
    found = []
    inline = getattr(args, "matrix", None)
    if inline is None:
        inline = getattr(args, "matrices", None) or []
    elif inline is not None:
        inline = [inline]
    for text in inline:
        found.append(parse_matrix(text, ring))
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                found.extend(load_matrices(fh.read(), ring))
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}")
    if not found:
        raise UsageError("no matrix given (inline or via --input)")
    if single and len(found) != 1:
        raise UsageError(f"expected exactly one matrix, got {len(found)}")
    return found


# --------------------------------------------------------------------------
# commands; each returns (result record, text lines)

def _matrix_text(g, indent="  "):
    width = [max(len(g.ring.serialize(g[i, j])) for i in range(g.n)) for j in range(g.n)]
    return [
        indent + "[ " + "  ".join(g.ring.serialize(x).rjust(w) for x, w in zip(r, width)) + " ]"
        for r in g.rows
    ]


def cmd_embed(args):
    from .rings import K

    spec = EmbeddingSpec(args.group_size, args.window)
    (g,) = _matrices(args, K, single=True)
    image = embed_element(g, spec)
    block = image.block_matrix()
    prof = degree_profile(block)
    rec = {
        "spec": {"m": spec.m, "window": spec.window},
        "input": g.to_record(),
        "ad_part": image.ad_part.to_record(),
        "vec_part": [KT.serialize(v) for v in image.vec_part],
        "block_matrix": block.to_record(),
        "profile": {"deg_t": prof.deg_t, "deg_tinv": prof.deg_tinv},
    }
    lines = [f"embedding m={spec.m} window={spec.window}", "g ="] + _matrix_text(g)
    lines += ["phi(g) ="] + _matrix_text(block)
    lines.append(f"degree profile: deg_t={prof.deg_t} deg_tinv={prof.deg_tinv}")
    return rec, lines


def cmd_probe(args):
    spec = EmbeddingSpec(args.group_size, args.window)
    targets = [args.target_degree] if args.target_degree is not None else range(1, spec.window + 1)
    rows = []
    for D in targets:
        w = certify_unbounded_embedding(spec, D)
        rows.append({
            "D": D,
            "element": w.element_word,
            "deg_t": w.profile.deg_t,
            "deg_tinv": w.profile.deg_tinv,
            "witness_degree": w.degree,
            "ok": w.degree == D,
        })
    lines = [f"unboundedness witnesses m={spec.m} window={spec.window}",
             f"{'D':>4}  {'element':<18} {'deg_t':>6} {'deg_tinv':>8} {'witness':>8}"]
    for r in rows:
        lines.append(f"{r['D']:>4}  {r['element']:<18} {r['deg_t']:>6} {r['deg_tinv']:>8} {r['witness_degree']:>8}")
    return {"spec": {"m": spec.m, "window": spec.window}, "witnesses": rows}, lines


def cmd_growth(args):
    gens = _matrices(args, KT, single=False)
    report = growth_explore(gens, args.max_length)
    cyclic = cyclic_boundedness(gens[0]) if len(gens) == 1 else None
    rows = [
        {"length": r.length, "count": r.count, "max_abs_deg_t": r.max_abs_deg_t,
         "max_abs_deg_tinv": r.max_abs_deg_tinv}
        for r in report.rows
    ]
    if report.is_strictly_growing():
        evidence = "strict growth (evidence of unboundedness)"
    elif report.is_plateau():
        evidence = "plateau (evidence of boundedness)"
    else:
        evidence = "inconclusive"
    lines = [f"{'length':>6} {'count':>8} {'max|deg_t|':>11} {'max|deg_tinv|':>14}"]
    for r in report.rows:
        lines.append(f"{r.length:>6} {r.count:>8} {r.max_abs_deg_t:>11} {r.max_abs_deg_tinv:>14}")
    lines.append(f"evidence: {evidence}")
    if cyclic:
        lines.append(f"certified (cyclic closed form): {cyclic}")
    rec = {"generators": [g.to_record() for g in gens], "rows": rows,
           "evidence": evidence, "cyclic_certificate": cyclic}
    return rec, lines


def cmd_bruhat(args):
    from .rings import K

    (g,) = _matrices(args, K, single=True)
    g = narrowest_ring(g)
    word = bruhat_decompose_sl2(g)
    ok = word.evaluate() == g
    rec = {"input": g.to_record(), "word": word.to_strings(), "length": len(word),
           "budget": 11, "verified": ok}
    lines = ["g ="] + _matrix_text(g)
    lines.append(f"word ({len(word)} factors): {word}")
    lines.append(f"verification: {'PASS' if ok and len(word) <= 11 else 'FAIL'}")
    return rec, lines


def cmd_decompose(args):
    L = NumberField(args.min_poly)
    (g,) = _matrices(args, L, single=True)
    cert = decompose_3N0(g, L, args.level)
    ok = cert.verify()
    rec = {
        "input": g.to_record(),
        "level": args.level,
        "budget": cert.budget,
        "length": len(cert),
        "factors": [{"tag": tag, "matrix": f.to_record()} for tag, f in cert.factors],
        "verified": ok,
    }
    lines = [f"field: {L.poly_string()}  level N={args.level}", "g ="] + _matrix_text(g)
    for k, (tag, f) in enumerate(cert.factors, 1):
        lines.append(f"{k:>3} {tag:<9} {f}")
    lines.append(f"length {len(cert)} <= {cert.budget}; verification: {'PASS' if ok else 'FAIL'}")
    return rec, lines


def cmd_primitive(args):
    L = NumberField(args.min_poly)
    n = args.max_power or L.degree
    y, offset = primitive_power_search(L, n, args.cap)
    checks = []
    p = y
    for k in range(1, n + 1):
        checks.append(is_primitive(p, L))
        p = p * y
    rec = {"min_poly": list(L.min_poly), "n": n, "offset": offset, "y": y.to_string(),
           "y_coords": [str(c) for c in y.coords], "powers_primitive": checks}
    lines = [f"field: {L.poly_string()}",
             f"y = a + {offset} = {y}",
             "powers y^1..y^%d primitive: %s" % (n, " ".join("yes" if c else "no" for c in checks))]
    return rec, lines


def cmd_vandermonde(args):
    target = parse_scalar_expression(args.target, KT)
    coeffs = []
    for e in target.exponents():
        if e < 0:
            raise UsageError("target must be a polynomial in t (no negative powers)")
    if not target.is_zero():
        top = max(target.exponents())
        for e in range(top + 1):
            c = target.coefficient(e)
            if not c.is_constant():
                raise UsageError("target coefficients must be rational")
            coeffs.append(c.constant_value())
    k = args.k if args.k is not None else len(args.points) - 1
    sol = vandermonde_span_solve(args.points, k, coeffs)
    back = expand_power_combination(args.points, k, sol)
    ok = back == [c for c in coeffs] or (not back and not any(coeffs))
    rec = {"points": [str(p) for p in args.points], "k": k, "target": args.target,
           "coefficients": [str(c) for c in sol], "verified": ok}
    lines = [f"{args.target} = " + " + ".join(
        f"({c})*(t - {p})^{k}" for c, p in zip(sol, args.points))]
    lines.append(f"verification by expansion: {'PASS' if ok else 'FAIL'}")
    return rec, lines


def cmd_double_embed(args):
    L = NumberField(args.min_poly)
    (g,) = _matrices(args, L, single=True)
    res = double_embedding_orbit(g, L)
    imgs = [[L.serialize(x) for x in v] for v in res.images]
    rec = {"input": g.to_record(), "verdict": res.verdict,
           "subspace": [["1", "0", "1", "0"], ["0", "1", "0", "1"]], "images": imgs}
    lines = ["g ="] + _matrix_text(g)
    lines.append("(1,0,1,0) -> (" + ", ".join(imgs[0]) + ")")
    lines.append("(0,1,0,1) -> (" + ", ".join(imgs[1]) + ")")
    lines.append(f"verdict: {res.verdict}")
    return rec, lines


HANDLERS = {
    "embed": cmd_embed,
    "probe": cmd_probe,
    "growth": cmd_growth,
    "bruhat": cmd_bruhat,
    "decompose": cmd_decompose,
    "primitive": cmd_primitive,
    "vandermonde": cmd_vandermonde,
    "double-embed": cmd_double_embed,
}


def _echo(args) -> dict:
    return {k: (v if isinstance(v, (int, str, type(None))) else [str(x) for x in v] if isinstance(v, list) else str(v))
            for k, v in sorted(vars(args).items())}


def run_command(argv) -> tuple:
    """Run one command; returns ``(exit_status, output_text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}\n{parser.format_usage()}"
    try:
        rec, lines = HANDLERS[args.command](args)
    except (UsageError, ParseError) as exc:
        return EXIT_USAGE, f"usage error: {exc}\n"
    except (AlgebraError, ValueError, ZeroDivisionError) as exc:
        return EXIT_DOMAIN, f"error in {args.command}: {exc}\ninput: {' '.join(argv)}\n"
    if args.format == "record":
        report = {"command": args.command, "options": _echo(args), "result": rec}
        return EXIT_OK, json.dumps(report, indent=2, sort_keys=True) + "\n"
    return EXIT_OK, "\n".join([f"$ kmembed {args.command}"] + lines) + "\n"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        status, out = run_command(argv)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    (sys.stdout if status == EXIT_OK else sys.stderr).write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
