"""Command-line front end: JSON in, canonical JSON out.

Exit codes: 0 success, 1 bad input, 2 an internal invariant failed (for
example a --check cross-path mismatch or a failing self-test suite).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from . import verify
from .bk import bk_coeff_via_words, bk_expand, degrees_match
from .isotropic import pr_shape_of, signed_perm_of_gamma, t_shape_of, translate, translate_inverse
from .jdt import lr_coeff
from .lrrule import lr_lattice_word
from .partitions import partitions_in_box
from .pieri import pieri_LG, pieri_OG
from .render import render_flag, render_isotropic, render_two_row
from .roots import FlagShape
from .ryd import enumerate_isotropic_diagrams, enumerate_k_diagrams, ryd_from_perm, ryd_from_signed_perm
from .schubert import cup_expand, poly_add, poly_mul, schubert_poly_from_top
from .star import (
    AdjointRYD,
    CoadjointRYD,
    pieri_element_LG,
    pieri_elements_OG,
    star_LG,
    star_OG,
    translate_k2,
)
from .weyl import EnumerationBoundError, enumerate_cells, is_permutation, perm_to_word
from .wire import (
    WireError,
    canonical,
    emit_flag_class,
    emit_index,
    emit_isotropic,
    emit_two_row,
    parse_flag_class,
    parse_index,
    parse_isotropic,
    parse_two_row,
    sort_terms,
)

__all__ = ["main", "build_parser", "InvariantViolation"]


class InvariantViolation(RuntimeError):
    """Two computation paths disagreed, or a verified property failed."""


def _read_input(args) -> Any:
    if args.data is not None:
        text = args.data
    elif args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    else:
        return {}
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise WireError(f"invalid JSON: {exc}") from None


def _field(data: dict, key: str, default: Any = None, required: bool = False) -> Any:
    if not isinstance(data, dict):
        raise WireError("input must be a JSON object")
    if key not in data:
        if required:
            raise WireError(f"missing field: {key}")
        return default
    return data[key]


def _terms(pairs, emit) -> list[dict]:
    return sort_terms([{"coeff": int(c), "class": emit(x)} for x, c in pairs])


def _mismatch(what: str, a: Any, b: Any) -> InvariantViolation:
    return InvariantViolation(f"{what}: {canonical(a)} != {canonical(b)}")


# ------------------------------------------------------------------ subcommands

def cmd_bk(args, data) -> Any:
    lam = parse_flag_class(_field(data, "left", required=True))
    mu = parse_flag_class(_field(data, "right", required=True))
    if lam.shape != mu.shape:
        raise WireError("the two classes have different flag shapes")
    route = _field(data, "route", "jdt")
    if route not in ("jdt", "words"):
        raise WireError("route must be 'jdt' or 'words'")

    def by_words():
        shape = lam.shape
        out = {}
        wl, wm = (perm_to_word(x, shape) for x in (perm_of(lam), perm_of(mu)))
        for w in enumerate_cells(shape):
            nu = ryd_from_perm(w, shape)
            if degrees_match(lam, mu, nu):
                c = bk_coeff_via_words(wl, wm, perm_to_word(w, shape))
                if c:
                    out[nu] = c
        return out

    jdt = bk_expand(lam, mu) if (route == "jdt" or args.check) else None
    words = by_words() if (route == "words" or args.check) else None
    if args.check and jdt != words:
        raise _mismatch("jdt and word routes differ", _terms(jdt.items(), emit_flag_class), _terms(words.items(), emit_flag_class))
    result = jdt if jdt is not None else words
    return _terms(result.items(), emit_flag_class)


def perm_of(ryd) -> tuple[int, ...]:
    return tuple(emit_flag_class(ryd)["perm"])


def _perm(x: Any, what: str) -> tuple[int, ...]:
    if isinstance(x, dict):
        return perm_of(parse_flag_class(x))
    if not isinstance(x, list) or not is_permutation(tuple(x)):
        raise WireError(f"{what} must be a permutation or a flag class")
    return tuple(x)


def cmd_cup(args, data) -> Any:
    u = _perm(_field(data, "left", required=True), "left")
    v = _perm(_field(data, "right", required=True), "right")
    if len(u) != len(v):
        raise WireError("permutations have different lengths")
    n = len(u)
    out = cup_expand(u, v, n)
    if args.check:
        # rebuild the product from Schubert polynomials computed down from w0
        lhs = poly_mul(schubert_poly_from_top(u, n), schubert_poly_from_top(v, n))
        rhs: dict = {}
        for w, c in out.items():
            rhs = poly_add(rhs, schubert_poly_from_top(w, len(w)), c)
        if lhs != rhs:
            raise InvariantViolation("the expansion does not reproduce the polynomial product")
    return sort_terms([{"coeff": c, "class": {"perm": list(w)}} for w, c in out.items()])


def cmd_lr(args, data) -> Any:
    lam = tuple(_field(data, "lam", required=True))
    mu = tuple(_field(data, "mu", required=True))
    rows = _field(data, "rows", required=True)
    cols = _field(data, "cols", required=True)
    nu = _field(data, "nu")
    targets = [tuple(nu)] if nu is not None else partitions_in_box(rows, cols, sum(lam) + sum(mu))
    out = []
    for t in targets:
        c = lr_coeff(lam, mu, t, rows, cols)
        if args.check:
            other = lr_lattice_word(lam, mu, t)
            if c != other:
                raise InvariantViolation(f"jeu de taquin gives {c}, the lattice-word rule {other} for nu={t}")
        if c or nu is not None:
            out.append({"coeff": c, "class": {"nu": list(t)}})
    return sort_terms(out)


def _two_row_of_index(variant: str, g) -> CoadjointRYD | AdjointRYD:
    r = translate_inverse(g)
    top = bool(r.top[0])
    if variant == "LG":
        return CoadjointRYD(g.n, r.base, top)
    return AdjointRYD(g.n, r.base, top, r.charge)


def cmd_pieri(args, data) -> Any:
    variant = _field(data, "variant", required=True)
    p = _field(data, "p", required=True)
    family = {"LG": "B", "OG": "D"}.get(variant)
    if family is None:
        raise WireError("variant must be LG or OG")
    gamma = parse_index({**data, "family": family, "k": 2})
    primed = bool(_field(data, "primed", False))
    if variant == "LG":
        if primed:
            raise WireError("LG has no primed class")
        out = pieri_LG(p, gamma)
    else:
        out = pieri_OG(p, gamma, primed)
    if args.check:
        mu = _two_row_of_index(variant, gamma)
        if variant == "LG":
            star = star_LG(pieri_element_LG(p, gamma.n), mu)
        else:
            elems = [a for a, pr in pieri_elements_OG(p, gamma.n) if pr == primed]
            if not elems:
                raise WireError("primed requires p = n-2")
            star = star_OG(elems[0], mu)
        via = {translate_k2(x): c for x, c in star.items()}
        if via != out:
            raise _mismatch("Pieri rule and star product differ", _terms(out.items(), emit_index), _terms(via.items(), emit_index))
    return _terms(out.items(), emit_index)


def cmd_star(args, data) -> Any:
    variant = _field(data, "variant", required=True)
    n = _field(data, "n", required=True)
    lam = parse_two_row(_field(data, "left", required=True), variant, n)
    mu = parse_two_row(_field(data, "right", required=True), variant, n)
    product = star_LG if variant == "LG" else star_OG
    out = product(lam, mu)
    if args.check:
        swapped = product(mu, lam)
        if swapped != out:
            raise _mismatch("star product is not commutative here", _terms(out.items(), emit_two_row), _terms(swapped.items(), emit_two_row))
        for a, b in ((lam, mu), (mu, lam)):
            if a.base[1] == 0:
                rule = _pieri_of(variant, a, b)
                via = {translate_k2(x): c for x, c in out.items()}
                if rule is not None and rule != via:
                    raise _mismatch("star product and Pieri rule differ", _terms(via.items(), emit_index), _terms(rule.items(), emit_index))
    return _terms(out.items(), emit_two_row)


def _pieri_of(variant: str, a, b):
    """The Pieri rule for a Pieri factor a, or None when a is not a Pieri class."""
    n = a.n
    g = translate_k2(a)
    p = g.gamma[0]
    if g.gamma[1] != 0 or p == 0:
        return None
    if variant == "LG":
        return pieri_LG(p, translate_k2(b))
    for elem, primed in pieri_elements_OG(p, n):
        if elem == a:
            return pieri_OG(p, translate_k2(b), primed)
    return None


def cmd_translate(args, data) -> Any:
    if "gamma" in data:
        g = parse_index(data)
        ryd = translate_inverse(g)
        if args.check and translate(ryd) != g:
            raise InvariantViolation("inverse translation does not round-trip")
        return emit_isotropic(ryd)
    ryd = parse_isotropic(data)
    g = translate(ryd)
    if args.check:
        w = signed_perm_of_gamma(g)
        if ryd_from_signed_perm(w) != ryd:
            raise InvariantViolation("the diagram is not the one of the signed permutation indexed by gamma")
        shape = pr_shape_of(w) if w.family == "B" else t_shape_of(w)
        if tuple(shape.gamma()) != g.gamma:
            raise InvariantViolation("gamma through the shape pair differs")
    out = {"gamma": list(g.gamma)}
    if g.family == "D":
        out["type"] = g.marker
    return out


def _cells_shard(args: tuple) -> list:
    n, k, first = args
    shape = FlagShape(n, k)
    return [list(w) for w in enumerate_cells(shape) if w[: shape.sizes[0]] == first]


def cmd_enumerate(args, data) -> Any:
    kind = _field(data, "kind", "cells")
    n = args.n if args.n is not None else _field(data, "n", required=True)
    k = args.k if args.k is not None else _field(data, "k", required=True)
    if args.max_n is not None and n > args.max_n:
        raise EnumerationBoundError(f"n={n} exceeds --max-n {args.max_n}")
    if kind in ("cells", "k-diagrams"):
        shape = FlagShape(n, tuple(k))
        if args.count:
            return {"count": math.factorial(n) // math.prod(math.factorial(r) for r in shape.sizes)} if kind == "cells" \
                else {"count": sum(1 for _ in enumerate_k_diagrams(shape))}
        if kind == "k-diagrams":
            return [sorted([r.a, r.b] for r in s) for s in sorted(enumerate_k_diagrams(shape), key=sorted)]
        if args.parallel and args.parallel > 1:
            import itertools
            firsts = list(itertools.combinations(range(1, n + 1), shape.sizes[0]))
            with ProcessPoolExecutor(max_workers=args.parallel) as pool:
                shards = pool.map(_cells_shard, [(n, tuple(k), f) for f in firsts])
                cells = sorted(w for shard in shards for w in shard)
        else:
            cells = [list(w) for w in enumerate_cells(shape)]
        return [emit_flag_class(ryd_from_perm(tuple(w), shape)) for w in cells]
    if kind == "isotropic":
        family = _field(data, "family", required=True)
        items = [emit_isotropic(r) for r in enumerate_isotropic_diagrams(family, n, k)]
        if args.count:
            return {"count": len(items)}
        return sorted(items, key=canonical)
    raise WireError("kind must be cells, k-diagrams or isotropic")


def cmd_render(args, data) -> str:
    if "family" in data:
        return render_isotropic(parse_isotropic(data))
    if "variant" in data:
        return render_two_row(parse_two_row(data, data["variant"], _field(data, "n", required=True)))
    return render_flag(parse_flag_class(data))


def _run_suite(job: tuple) -> dict:
    number, max_n = job
    res = verify.run_suite(number, max_n)
    return {"criterion": number, **res.to_json()}


def cmd_selftest(args, data) -> Any:
    numbers = args.suite or sorted(verify.SUITES)
    jobs = [(k, args.max_n) for k in numbers]
    if args.parallel and args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(_run_suite, jobs))
    else:
        results = [_run_suite(j) for j in jobs]
    return {"passed": all(r["passed"] for r in results), "suites": results}


COMMANDS = {
    "bk": (cmd_bk, "Belkale-Kumar expansion of two flag classes"),
    "cup": (cmd_cup, "cup product of two Schubert classes of a complete flag variety"),
    "lr": (cmd_lr, "Grassmannian structure constants by jeu de taquin"),
    "pieri": (cmd_pieri, "Pieri rule for LG(2,2n) or OG(2,2n)"),
    "star": (cmd_star, "star product of two two-row shapes"),
    "translate": (cmd_translate, "isotropic diagram <-> strict partition index"),
    "enumerate": (cmd_enumerate, "list or count cells and diagrams"),
    "render": (cmd_render, "ASCII picture of a diagram"),
    "selftest": (cmd_selftest, "run the exhaustive verification suites"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rydcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("data", nargs="?", help="input JSON given inline")
        p.add_argument("--input", help="JSON input file, or - for stdin")
        p.add_argument("--output", default="-", help="output file, or - for stdout")
        p.add_argument("--check", action="store_true", help="compute by a second route and compare")
        p.add_argument("--max-n", type=int, default=None, help="bound on n for enumerations and self-tests")
        p.add_argument("--parallel", type=int, default=0, help="worker processes for heavy subcommands")
        if name == "enumerate":
            p.add_argument("--count", action="store_true", help="print only the number of items")
            p.add_argument("--n", type=int, default=None)
            p.add_argument("--k", type=int, nargs="*", default=None)
        if name == "selftest":
            p.add_argument("--suite", type=int, action="append", choices=sorted(verify.SUITES))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    handler, _ = COMMANDS[args.command]
    try:
        data = _read_input(args)
        result = handler(args, data)
    except (InvariantViolation, ArithmeticError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    text = result if isinstance(result, str) else canonical(result)
    if args.output == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.command == "selftest" and not result["passed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
