"""Reproduction harness: one row per acceptance criterion.

Each check returns a :class:`CriterionResult`.  ``quick`` trims sizes so the
whole table runs in seconds; ``full`` uses the sizes stated for each
criterion.  Timings are kept out of the table so reruns with one seed print
identical text.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .brauer import (BrauerGraph, algebra_of_brauer_graph, brauer_star, classify_graph, gamma_of_gentle,
                     is_brauer_tree, is_cycle, tau_tilting_finite)
from .corpus import (CorpusConfig, brauer_corpus, gentle_corpus, linear_orientations, rad_square_zero_cycle,
                     random_gentle_tree)
from .gentle import Shape, is_tree, quiver_shape, rad_square_zero
from .presentation import AlgebraPresentation
from .repmod import syzygy
from .stt import InfiniteTypeError, SttResult, hasse_quiver, support_tau_tilting
from .strings import brick_band, detect_bands, string_quotient


@dataclass(frozen=True)
class VerifyConfig:
    level: str = "quick"     # "quick" | "full"
    seed: int = 20240601

    @property
    def full(self) -> bool:
        return self.level == "full"


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    elapsed_ms: int = 0


@dataclass
class _Context:
    cfg: VerifyConfig
    # every stt computation, reused by the tau and Hasse checks
    runs: list[tuple[str, AlgebraPresentation, SttResult]] = field(default_factory=list)
    _corpus = None

    def stt(self, label: str, pres: AlgebraPresentation) -> SttResult:
        res = support_tau_tilting(pres)
        self.runs.append((label, pres, res))
        return res

    @property
    def corpus(self):
        if self._corpus is None:
            self._corpus = gentle_corpus(CorpusConfig(seed=self.cfg.seed))
        return self._corpus


def trivext(pres: AlgebraPresentation) -> AlgebraPresentation:
    return algebra_of_brauer_graph(gamma_of_gentle(pres), name=f"T({pres.name})")


def _count_rows(ctx: _Context, items, expected: Callable[[AlgebraPresentation], int]) -> tuple[bool, str]:
    bad = []
    for label, pres in items:
        got = len(ctx.stt(label, trivext(pres)).pairs)
        want = expected(pres)
        if got != want:
            bad.append(f"{label}: {got} != {want}")
    return not bad, f"{len(items)} algebras" + ("" if not bad else "; " + "; ".join(bad[:3]))


def c1_brauer_tree_counts(ctx: _Context) -> tuple[bool, str]:
    sizes = (2, 3, 4) if ctx.cfg.full else (2, 3)
    items = [(p.name, p) for n in sizes for p in linear_orientations(n)]
    return _count_rows(ctx, items, lambda p: comb(2 * len(p.vertices), len(p.vertices)))


def c2_gentle_tree_counts(ctx: _Context) -> tuple[bool, str]:
    rng = random.Random(ctx.cfg.seed + 2)
    items = [(f"gt{k}", random_gentle_tree(rng, rng.randint(2, 4), name=f"gt{k}")) for k in range(25)]
    return _count_rows(ctx, items, lambda p: comb(2 * len(p.vertices), len(p.vertices)))


def c3_odd_cycle_counts(ctx: _Context) -> tuple[bool, str]:
    sizes = (3, 5) if ctx.cfg.full else (3,)
    items = [(f"At{n}_rad2", rad_square_zero_cycle(n)) for n in sizes]
    return _count_rows(ctx, items, lambda p: 2 ** (2 * len(p.vertices) - 1))


def c4_tree_equivalence(ctx: _Context) -> tuple[bool, str]:
    corpus = ctx.corpus.all
    bad = [p.name for p in corpus if is_brauer_tree(gamma_of_gentle(p)) != is_tree(p)]
    return not bad, f"{len(corpus)} presentations, {len(bad)} exceptions {bad[:3]}"


def c5_star_line(ctx: _Context) -> tuple[bool, str]:
    bad = []
    for p in ctx.corpus.trees:
        cls = classify_graph(gamma_of_gentle(p))
        if cls.is_star != (quiver_shape(p).shape == Shape.LINEAR_A):
            bad.append(f"{p.name}:star")
        if cls.is_line != rad_square_zero(p):
            bad.append(f"{p.name}:line")
    return not bad, f"{len(ctx.corpus.trees)} trees, {len(bad)} exceptions {bad[:3]}"


def c6_cycle(ctx: _Context) -> tuple[bool, str]:
    items = ctx.corpus.tilde_a
    bad = [p.name for p in items if is_cycle(gamma_of_gentle(p)) != rad_square_zero(p)]
    return not bad and bool(items), f"{len(items)} cycle presentations, {len(bad)} exceptions {bad[:3]}"


def c7_structure(ctx: _Context) -> tuple[bool, str]:
    bad = []
    items = ctx.corpus.all
    for p in items:
        t = trivext(p)
        ca, ct = p.cartan_matrix(), t.cartan_matrix()
        n = len(ca)
        if t.dimension != 2 * p.dimension or ct != [[ca[i][j] + ca[j][i] for j in range(n)] for i in range(n)]:
            bad.append(p.name)
    return not bad, f"{len(items)} presentations, {len(bad)} exceptions {bad[:3]}"


def c8_tau_syzygy(ctx: _Context) -> tuple[bool, str]:
    checked = 0
    bad = []
    seen = set()
    for label, pres, res in ctx.runs:
        if pres in seen:
            continue
        seen.add(pres)
        for e in res.catalog.entries:
            if e.projective:
                continue
            checked += 1
            if syzygy(syzygy(e.module)).dims != e.tau.dims:
                bad.append(f"{label}:{e.label}")
    return checked > 0 and not bad, f"{checked} non-projective modules over {len(seen)} algebras, {len(bad)} mismatches"


def c9_hasse(ctx: _Context) -> tuple[bool, str]:
    bad = []
    for label, pres, res in ctx.runs:
        try:
            hq = hasse_quiver(res.catalog, res.pairs)
            if not hq.is_regular(len(pres.vertices)):
                bad.append(label)
        except Exception as exc:  # any orientation failure counts as an exception
            bad.append(f"{label}:{exc}")
    return bool(ctx.runs) and not bad, f"{len(ctx.runs)} Hasse quivers, {len(bad)} exceptions {bad[:3]}"


def band_finiteness(g: BrauerGraph) -> bool:
    """Finiteness read off the string quotient: no band, or no band module that is a brick."""
    pres = algebra_of_brauer_graph(g)
    if detect_bands(string_quotient(pres)) is None:
        return True
    return brick_band(pres) is None


def c10_band_criterion(ctx: _Context) -> tuple[bool, str]:
    graphs = brauer_corpus(ctx.cfg.seed + 10, per_kind=6 if ctx.cfg.full else 5)
    bad = [f"{kind}#{k}" for k, (kind, g) in enumerate(graphs) if band_finiteness(g) != tau_tilting_finite(g)]
    return len(graphs) >= 20 and not bad, f"{len(graphs)} graphs, {len(bad)} disagreements {bad[:3]}"


def c11_multiplicity(ctx: _Context) -> tuple[bool, str]:
    counts = []
    for m in (1, 2):
        g = brauer_star(2, center_multiplicity=m)
        counts.append(len(ctx.stt(f"star2_m{m}", algebra_of_brauer_graph(g)).pairs))
    return counts[0] == counts[1] == 6, f"counts {counts[0]} and {counts[1]}"


CRITERIA: list[tuple[int, str, Callable[[_Context], tuple[bool, str]]]] = [
    (1, "Brauer tree counts over all orientations of A_n", c1_brauer_tree_counts),
    (2, "gentle tree counts", c2_gentle_tree_counts),
    (3, "odd Brauer cycle counts", c3_odd_cycle_counts),
    (4, "tree quiver iff Brauer tree", c4_tree_equivalence),
    (5, "star iff linear A_n, line iff rad^2 = 0", c5_star_line),
    (6, "cycle iff rad^2 = 0 on oriented cycles", c6_cycle),
    (7, "dimension and Cartan of the trivial extension", c7_structure),
    (8, "tau equals second syzygy on dimension vectors", c8_tau_syzygy),
    (9, "Hasse quivers are regular with one source and sink", c9_hasse),
    (10, "brick bands agree with the cycle criterion", c10_band_criterion),
    (11, "star counts independent of multiplicity", c11_multiplicity),
]


def run_verification(cfg: VerifyConfig = VerifyConfig(), only: set[int] | None = None) -> list[CriterionResult]:
    """Run the criteria in order; 8 and 9 reuse every stt run made by 1, 2, 3 and 11."""
    ctx = _Context(cfg)
    order = sorted(CRITERIA, key=lambda c: c[0] in (8, 9))
    out = {}
    for num, title, fn in order:
        if only is not None and num not in only:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn(ctx)
        except InfiniteTypeError as exc:
            ok, detail = False, f"unexpected infinite type: {exc}"
        out[num] = CriterionResult(num, title, ok, detail, int((time.perf_counter() - t0) * 1000))
    return [out[k] for k in sorted(out)]


def format_table(rows: list[CriterionResult]) -> str:
    lines = [f"{'#':>3}  {'result':6}  criterion / detail"]
    for r in rows:
        lines.append(f"{r.number:>3}  {'PASS' if r.passed else 'FAIL':6}  {r.title}: {r.detail}")
    return "\n".join(lines) + "\n"
