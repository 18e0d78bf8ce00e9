"""Exhaustive verification suites shared by the CLI self-test and the acceptance tests.

Every suite returns a SuiteResult; failures carry a short description of the
first few offending inputs.
"""

from __future__ import annotations

import math
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

from .bk import bk_coeff, bk_coeff_via_words, bk_expand
from .isotropic import (
    gamma_of_signed_perm,
    gamma_via_shape,
    signed_perm_of_gamma,
    strict_index_set,
    translate,
    translate_inverse,
)
from .jdt import lr_coeff, rectification_tally
from .lrrule import lr_lattice_word
from .partitions import contains, partitions_in_box
from .pieri import PieriGeometry, analyze, count_N_LG, count_N_OG, gamma_star, is_index, pieri_LG, pieri_OG
from .roots import FlagShape
from .ryd import enumerate_isotropic_diagrams, enumerate_k_diagrams, ryd_from_perm, ryd_from_signed_perm
from .schubert import cup_expand
from .star import all_adjoint, all_coadjoint, pieri_element_LG, pieri_elements_OG, star_LG, star_OG, translate_k2
from .weyl import all_shapes, enumerate_cells, enumerate_signed, perm_to_word, word_to_perm

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all", "hook_length_count"]

MAX_REPORTED = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    budget: float | None = None

    @property
    def passed(self) -> bool:
        within = self.budget is None or self.seconds <= self.budget
        return not self.failures and self.checked > 0 and within

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(describe())

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures, {self.seconds:.2f}s"
        if self.budget is not None and self.seconds > self.budget:
            text += f" (over the {self.budget:g}s budget)"
        return text

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": len(self.failures),
            "examples": self.failures[:MAX_REPORTED],
            "seconds": round(self.seconds, 3),
        }


def _timed(name: str, budget: float | None = None):
    def wrap(fn):
        def run(*args, **kwargs) -> SuiteResult:
            res = SuiteResult(name, budget=budget)
            start = time.perf_counter()
            fn(res, *args, **kwargs)
            res.seconds = time.perf_counter() - start
            return res

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def _word(s: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in s)


# ------------------------------------------------------------------ flag varieties

@_timed("golden examples", budget=1.0)
def golden_examples(res: SuiteResult) -> None:
    """The Fl(3,6; C^7) triple has coefficient 2 and the Fl(2,4; C^5) word triple has 1."""
    shape = FlagShape(7, (3, 6))
    words = [_word(w) for w in ("1212312", "1231212", "3212121")]
    lam, mu, nu = (ryd_from_perm(word_to_perm(w), shape) for w in words)
    res.check(bk_coeff(lam, mu, nu) == 2, lambda: "Fl(3,6;C^7) triple is not 2")
    small = [_word(w) for w in ("23112", "12132", "32121")]
    grass = FlagShape(5, (2, 4))
    rs = [ryd_from_perm(word_to_perm(w), grass) for w in small]
    res.check(bk_coeff(*rs) == 1, lambda: "Fl(2,4;C^5) word triple is not 1")
    res.check(bk_coeff_via_words(*small) == 1, lambda: "word route on the Fl(2,4;C^5) triple is not 1")


@_timed("cup oracle example", budget=5.0)
def cup_example(res: SuiteResult) -> None:
    """sigma_12453 . sigma_34125 has three unit terms, none Levi-movable."""
    u, v = (1, 2, 4, 5, 3), (3, 4, 1, 2, 5)
    expected = {(3, 4, 2, 5, 1): 1, (3, 5, 1, 4, 2): 1, (4, 5, 1, 2, 3): 1}
    got = cup_expand(u, v, 5)
    res.check(got == expected, lambda: f"cup expansion {got}")
    shape = FlagShape(5, (2, 4))
    bk = bk_expand(ryd_from_perm(u, shape), ryd_from_perm(v, shape))
    res.check(bk == {}, lambda: f"BK expansion {bk} is not empty")


def _sweep_shapes(max_n: int, extra_n: int | None, extra_d: tuple[int, ...]) -> list[FlagShape]:
    shapes = [s for n in range(2, max_n + 1) for s in all_shapes(n) if s.d >= 2]
    if extra_n is not None and extra_n > max_n:
        shapes += [s for s in all_shapes(extra_n) if s.d in extra_d]
    return shapes


def _degree_matched_triples(shape: FlagShape):
    """(u, v, w) with matching per-region degrees, plus their diagrams."""
    cells = list(enumerate_cells(shape))
    ryd = {w: ryd_from_perm(w, shape) for w in cells}
    by_degree = defaultdict(list)
    for w in cells:
        by_degree[ryd[w].degrees()].append(w)
    for u in cells:
        for v in cells:
            target = tuple(a + b for a, b in zip(ryd[u].degrees(), ryd[v].degrees()))
            for w in by_degree.get(target, ()):
                yield u, v, w, ryd


@_timed("BK coefficients match the cup-product oracle", budget=600.0)
def bk_matches_cup(res: SuiteResult, max_n: int = 5, extra_n: int | None = 6, extra_d=(2, 3)) -> None:
    """With degrees matched, Levi-movability is a nonzero cup coefficient, so bk = cup."""
    for shape in _sweep_shapes(max_n, extra_n, extra_d):
        for u, v, w, ryd in _degree_matched_triples(shape):
            # degrees already match, so Levi-movable means a nonzero cup coefficient
            cup = cup_expand(u, v, shape.n).get(w, 0)
            got = bk_coeff(ryd[u], ryd[v], ryd[w])
            res.check(got == cup, lambda: f"{shape}: {u} {v} {w} bk={got} cup={cup}")


@_timed("word route matches jeu de taquin")
def word_route_matches_jdt(res: SuiteResult, max_n: int = 5, extra_n: int | None = 6, extra_d=(2, 3)) -> None:
    for shape in _sweep_shapes(max_n, extra_n, extra_d):
        words = {w: perm_to_word(w, shape) for w in enumerate_cells(shape)}
        for u, v, w, ryd in _degree_matched_triples(shape):
            a = bk_coeff(ryd[u], ryd[v], ryd[w])
            b = bk_coeff_via_words(words[u], words[v], words[w])
            res.check(a == b, lambda: f"{shape}: {u} {v} {w} jdt={a} words={b}")


@_timed("hook-valid k-diagram count")
def k_diagram_count(res: SuiteResult, max_n: int = 7) -> None:
    """The hook-valid diagrams of each shape number n! / prod r_i!."""
    for n in range(1, max_n + 1):
        for shape in all_shapes(n):
            expected = math.factorial(n) // math.prod(math.factorial(r) for r in shape.sizes)
            got = sum(1 for _ in enumerate_k_diagrams(shape))
            res.check(got == expected, lambda: f"{shape}: {got} diagrams, expected {expected}")


# ------------------------------------------------------------------ isotropic indexing

@_timed("isotropic translation squares")
def isotropic_squares(res: SuiteResult, max_n: int = 6) -> None:
    """gamma read off a signed permutation agrees with gamma through its diagram and its shape."""
    for family in ("B", "D"):
        for n in range(2, max_n + 1):
            for k in range(1, n):
                image = set()
                for w in enumerate_signed(family, n, k):
                    direct = gamma_of_signed_perm(w)
                    ryd = ryd_from_signed_perm(w)
                    via_ryd = translate(ryd)
                    res.check(direct == via_ryd, lambda: f"{family} n={n} k={k} {w}: {direct} vs {via_ryd}")
                    res.check(direct == gamma_via_shape(w), lambda: f"{family} n={n} k={k} {w}: shape route")
                    res.check(signed_perm_of_gamma(direct) == w, lambda: f"{family} n={n} k={k} {w}: inverse")
                    res.check(translate_inverse(via_ryd) == ryd, lambda: f"{family} n={n} k={k} {ryd}: diagram inverse")
                    image.add(direct)
                index = set(strict_index_set(family, n, k))
                expected = 2**k * math.comb(n, k)
                res.check(image == index, lambda: f"{family} n={n} k={k}: image differs from the index set")
                res.check(len(index) == expected, lambda: f"{family} n={n} k={k}: {len(index)} indices")
                diagrams = {translate(r) for r in enumerate_isotropic_diagrams(family, n, k)}
                res.check(diagrams == index, lambda: f"{family} n={n} k={k}: support-valid diagrams")


# ------------------------------------------------------------------ Pieri rules

@_timed("LG star product matches the Pieri rule", budget=60.0)
def lg_pieri_agreement(res: SuiteResult, ns=range(3, 7)) -> None:
    for n in ns:
        for p in range(1, 2 * n - 1):
            a = pieri_element_LG(p, n)
            for mu in all_coadjoint(n):
                star = {translate_k2(x): c for x, c in star_LG(a, mu).items()}
                swapped = {translate_k2(x): c for x, c in star_LG(mu, a).items()}
                rule = pieri_LG(p, translate_k2(mu))
                res.check(star == rule and star == swapped, lambda: f"n={n} p={p} mu={mu}")


@_timed("OG star product matches the Pieri rule", budget=300.0)
def og_pieri_agreement(res: SuiteResult, ns=range(4, 8)) -> None:
    for n in ns:
        for p in range(1, 2 * n - 2):
            for a, primed in pieri_elements_OG(p, n):
                for mu in all_adjoint(n):
                    try:
                        star = {translate_k2(x): c for x, c in star_OG(a, mu).items()}
                        swapped = {translate_k2(x): c for x, c in star_OG(mu, a).items()}
                        rule = pieri_OG(p, translate_k2(mu), primed)
                    except ArithmeticError as exc:
                        res.check(False, lambda: f"n={n} {a} * {mu}: {exc}")
                        continue
                    res.check(star == rule and star == swapped, lambda: f"n={n} {a} * {mu}")


# ------------------------------------------------------------------ jeu de taquin

def hook_length_count(mu) -> int:
    """Number of standard tableaux of shape mu."""
    mu = [x for x in mu if x]
    size = sum(mu)
    conj = [sum(1 for r in mu if r > c) for c in range(mu[0])] if mu else []
    hooks = math.prod(mu[t] - s + conj[s] - t - 1 for t in range(len(mu)) for s in range(mu[t]))
    return math.factorial(size) // hooks


@_timed("jeu de taquin properties")
def jdt_properties(res: SuiteResult, box: int = 4) -> None:
    """Independence of the target labelling, and lr_coeff against the lattice-word rule."""
    shapes = partitions_in_box(box, box)
    for lam in shapes:
        for nu in shapes:
            if not contains(nu, lam):
                continue
            by_shape = defaultdict(list)
            for key, count in rectification_tally(lam, nu, box, box).items():
                rows = [0] * box
                for (t, _), _label in key:
                    rows[t - 1] += 1
                by_shape[tuple(rows)].append(count)
            for mu, counts in by_shape.items():
                f = hook_length_count(mu)
                res.check(
                    len(counts) == f and len(set(counts)) == 1,
                    lambda: f"lam={lam} nu={nu} mu={mu}: counts {sorted(counts)} over {f} labellings",
                )
            for mu in shapes:
                if sum(mu) + sum(lam) != sum(nu):
                    continue
                a, b = lr_coeff(lam, mu, nu, box, box), lr_lattice_word(lam, mu, nu)
                res.check(a == b, lambda: f"lam={lam} mu={mu} nu={nu}: jdt={a} lattice={b}")


# ------------------------------------------------------------------ Pieri lemma sweeps

def _interval(row: int, lo: int, hi: int) -> frozenset:
    return frozenset((row, c) for c in range(lo, hi + 1))


def _lemma_checks(res: SuiteResult, g: PieriGeometry, gamma, delta, p: int) -> None:
    a = analyze(gamma, delta, g)
    n, T, W = g.n, g.threshold, g.width
    lg = g.variant == "LG"
    tag = f"{g.variant} n={n} p={p} {gamma}->{delta}"
    sg, sd = sum(gamma), sum(delta)
    subset = contains(delta, gamma)

    # where the (delta \ gamma)-boxes past column n-2 lie
    d1 = _interval(1, max(gamma[0] + 1, n - 1), delta[0])
    d2 = _interval(2, max(gamma[1] + 1, n - 1), delta[1])
    res.check(a.D1 == d1 and a.D2 == d2, lambda: f"{tag}: D intervals")

    if not subset:
        res.check(delta == gamma_star(gamma, p), lambda: f"{tag}: a removal must give gamma*")
    if sd <= T or sg > T:
        res.check(subset, lambda: f"{tag}: no removal away from the threshold")

    if subset:
        s1 = _interval(1, W - gamma[0], W - 1 - delta[1])
        t1 = _interval(1, W + 1 - gamma[1], W)
        t2 = _interval(2, W - gamma[1], W - 1)
        immune = (lambda b: b[1] == n - 1) if lg else (lambda b: False)
        for b in a.D1:
            by_s = b in a.killed_by_S
            by_t = b in a.killed_by_T
            res.check(by_s == (b in s1 and not immune(b)), lambda: f"{tag}: {b} killed by S")
            res.check(by_t == (b in t1 and not immune(b)), lambda: f"{tag}: {b} killed by T")
        for b in a.D2:
            res.check(b not in a.killed_by_S, lambda: f"{tag}: {b} killed by S in row 2")
            res.check((b in a.killed_by_T) == (b in t2 and not immune(b)), lambda: f"{tag}: {b} killed by T")
        corner = (1, W - delta[1])
        if corner in a.D1:
            res.check(corner not in a.killed, lambda: f"{tag}: {corner} must survive")
        big_first = gamma[0] >= (n - 1 if lg else n - 2)
        if sg <= T < sd and big_first and a.D1:
            res.check(not a.D1 <= a.killed, lambda: f"{tag}: every D1 box is killed")

    cut = n - 1 if lg else n - 2
    expected = sg <= T < sd and subset and gamma[0] < cut and delta[1] < gamma[0]
    res.check(a.bisected() == expected, lambda: f"{tag}: bisected={a.bisected()}")
    if a.bisected():
        if lg:
            res.check(count_N_LG(gamma, delta, n) == 1, lambda: f"{tag}: bisected but N != 1")
        else:
            res.check(len(a.A_components) == 2, lambda: f"{tag}: bisected but A has {len(a.A_components)} parts")

    if delta == gamma_star(gamma, p):
        if lg:
            res.check(count_N_LG(gamma, delta, n) == 0, lambda: f"{tag}: N(gamma, gamma*) != 0")
        else:
            want = 1 if gamma[0] < n - 2 and p <= n - 2 else 0
            res.check(count_N_OG(gamma, delta, p, n) == want, lambda: f"{tag}: N'(gamma, gamma*) != {want}")


@_timed("Pieri lemma sweeps")
def pieri_lemma_sweeps(res: SuiteResult, max_n: int = 6) -> None:
    """Killed-box intervals, the bisection criterion and survival, for every gamma -> delta."""
    for variant, lo in (("LG", 3), ("OG", 4)):
        for n in range(lo, max_n + 1):
            g = PieriGeometry(variant, n)
            shapes = [s for s in partitions_in_box(2, g.width) if is_index(s, g)]
            for gamma in shapes:
                for p in range(1, g.max_p + 1):
                    star = gamma_star(gamma, p)
                    if sum(gamma) <= g.threshold < sum(gamma) + p and star[1] >= 0 and is_index(star, g):
                        res.check(analyze(gamma, star, g) is not None, lambda: f"{variant} n={n} {gamma}->{star}")
                    for delta in shapes:
                        if sum(delta) == sum(gamma) + p and analyze(gamma, delta, g) is not None:
                            _lemma_checks(res, g, gamma, delta, p)


# ------------------------------------------------------------------ registry

SUITES: dict[int, tuple[str, Callable[..., SuiteResult]]] = {
    1: ("golden examples", golden_examples),
    2: ("cup oracle example", cup_example),
    3: ("bk equals cup on Levi-movable triples", bk_matches_cup),
    4: ("word route equals jdt route", word_route_matches_jdt),
    5: ("k-diagram count", k_diagram_count),
    6: ("isotropic translation squares", isotropic_squares),
    7: ("LG star equals Pieri", lg_pieri_agreement),
    8: ("OG star equals Pieri", og_pieri_agreement),
    9: ("jdt properties", jdt_properties),
    10: ("Pieri lemma sweeps", pieri_lemma_sweeps),
}


def _bounded_kwargs(number: int, max_n: int | None) -> dict:
    if max_n is None:
        return {}
    if number in (3, 4):
        return {"max_n": min(max_n, 5), "extra_n": 6 if max_n >= 6 else None}
    if number == 5:
        return {"max_n": min(max_n, 7)}
    if number == 6:
        return {"max_n": min(max_n, 6)}
    if number == 7:
        return {"ns": range(3, min(max_n, 6) + 1)}
    if number == 8:
        return {"ns": range(4, min(max_n, 7) + 1)}
    if number == 9:
        return {"box": min(max_n, 4)}
    if number == 10:
        return {"max_n": min(max_n, 6)}
    return {}


def run_suite(number: int, max_n: int | None = None) -> SuiteResult:
    _, fn = SUITES[number]
    return fn(**_bounded_kwargs(number, max_n))


def run_all(max_n: int | None = None, numbers=None) -> list[SuiteResult]:
    return [run_suite(k, max_n) for k in (numbers or sorted(SUITES))]
