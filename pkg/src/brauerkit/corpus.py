"""Seeded generators for gentle presentations and Brauer graphs."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .brauer import BrauerGraph, SelfFoldedError, gamma_of_gentle
from .gentle import is_gentle
from .presentation import AlgebraPresentation, NonAdmissibleError, make_presentation


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240601
    random_trees: int = 60
    random_nontrees: int = 60
    max_vertices: int = 6
    relation_prob: float = 0.5
    tilde_a_sizes: tuple[int, ...] = (2, 3, 4, 5)


def _compositions(arrows):
    return [(a, b) for a in arrows for b in arrows if a[2] == b[1]]


def _build(vertices, arrows, zero, name) -> AlgebraPresentation | None:
    """A gentle, admissible presentation whose Brauer graph has no self-folded edge, or None."""
    if any(sum(1 for a in arrows if a[1] == v) > 2 or sum(1 for a in arrows if a[2] == v) > 2
           for v in vertices):
        return None
    zs = set(zero)
    for a in arrows:
        after = [(a, b) in zs for b in arrows if b[1] == a[2]]
        before = [(c, a) in zs for c in arrows if c[2] == a[1]]
        if max(after.count(True), after.count(False), before.count(True), before.count(False)) > 1:
            return None  # not gentle; skip before building normal forms
    try:
        pres = make_presentation(vertices, arrows, zero=[(a[0], b[0]) for a, b in zero], name=name)
    except NonAdmissibleError:
        return None
    if not is_gentle(pres):
        return None
    try:
        gamma_of_gentle(pres)
    except SelfFoldedError:
        return None
    return pres


def linear_orientations(n: int) -> list[AlgebraPresentation]:
    """All ``2^(n-1)`` orientations of the path quiver on ``n`` vertices, no relations."""
    vs = [str(k) for k in range(1, n + 1)]
    out = []
    for bits in itertools.product((0, 1), repeat=n - 1):
        arrows = [(f"a{k}", vs[k - 1], vs[k]) if b == 0 else (f"a{k}", vs[k], vs[k - 1])
                  for k, b in enumerate(bits, start=1)]
        tag = "".join("r" if b == 0 else "l" for b in bits)
        out.append(make_presentation(vs, arrows, name=f"A{n}_{tag}" if tag else f"A{n}"))
    return out


def random_gentle_tree(rng: random.Random, n: int, relation_prob: float = 0.5, tries: int = 500,
                       name: str = "") -> AlgebraPresentation:
    vs = [str(k) for k in range(1, n + 1)]
    for _ in range(tries):
        arrows = []
        for k in range(1, n):
            p = rng.randrange(k)
            a = (f"a{k}", vs[p], vs[k]) if rng.random() < 0.5 else (f"a{k}", vs[k], vs[p])
            arrows.append(a)
        zero = [c for c in _compositions(arrows) if rng.random() < relation_prob]
        pres = _build(vs, arrows, zero, name)
        if pres is not None:
            return pres
    raise RuntimeError(f"no gentle tree found with {n} vertices")


def random_gentle_nontree(rng: random.Random, n: int, extra_edges: int = 1, relation_prob: float = 0.5,
                          tries: int = 2000, name: str = "") -> AlgebraPresentation:
    """Connected, loop-free, with ``n - 1 + extra_edges`` arrows (so never a tree)."""
    vs = [str(k) for k in range(1, n + 1)]
    for _ in range(tries):
        pairs = [(rng.randrange(k), k) for k in range(1, n)]
        for _ in range(extra_edges):
            u, w = rng.sample(range(n), 2) if n > 1 else (0, 0)
            if u == w:
                break
            pairs.append((u, w))
        else:
            arrows = []
            for k, (u, w) in enumerate(pairs, start=1):
                if rng.random() < 0.5:
                    u, w = w, u
                arrows.append((f"a{k}", vs[u], vs[w]))
            zero = [c for c in _compositions(arrows) if rng.random() < relation_prob]
            pres = _build(vs, arrows, zero, name)
            if pres is not None:
                return pres
    raise RuntimeError(f"no gentle non-tree found with {n} vertices")


def tilde_a_corpus(n: int) -> list[AlgebraPresentation]:
    """Every orientation and relation choice on the ``n``-cycle that passes :func:`_build`."""
    vs = [str(k) for k in range(1, n + 1)]
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        arrows = [(f"a{k}", vs[k - 1], vs[k % n]) if b == 0 else (f"a{k}", vs[k % n], vs[k - 1])
                  for k, b in enumerate(bits, start=1)]
        comps = _compositions(arrows)
        for mask in itertools.product((0, 1), repeat=len(comps)):
            zero = [c for c, m in zip(comps, mask) if m]
            tag = "".join(map(str, bits)) + "_" + "".join(map(str, mask))
            pres = _build(vs, arrows, zero, f"At{n}_{tag}")
            if pres is not None:
                out.append(pres)
    return out


def rad_square_zero_cycle(n: int) -> AlgebraPresentation:
    """The cyclically oriented ``n``-cycle with every length-2 path zero."""
    vs = [str(k) for k in range(1, n + 1)]
    arrows = [(f"a{k}", vs[k - 1], vs[k % n]) for k in range(1, n + 1)]
    zero = [(f"a{k}", f"a{k % n + 1}") for k in range(1, n + 1)]
    return make_presentation(vs, arrows, zero=zero, name=f"At{n}_rad2")


@dataclass(frozen=True)
class GentleCorpus:
    trees: tuple[AlgebraPresentation, ...]
    nontrees: tuple[AlgebraPresentation, ...]
    tilde_a: tuple[AlgebraPresentation, ...]

    @property
    def all(self) -> tuple[AlgebraPresentation, ...]:
        return self.trees + self.nontrees + self.tilde_a


def gentle_corpus(cfg: CorpusConfig = CorpusConfig()) -> GentleCorpus:
    rng = random.Random(cfg.seed)
    trees = [random_gentle_tree(rng, rng.randint(1, cfg.max_vertices), cfg.relation_prob, name=f"tree{k}")
             for k in range(cfg.random_trees)]
    nontrees = []
    for k in range(cfg.random_nontrees):
        n = rng.randint(2, cfg.max_vertices)
        extra = rng.randint(1, 2) if n > 2 else 1
        nontrees.append(random_gentle_nontree(rng, n, extra, cfg.relation_prob, name=f"cyc{k}"))
    tilde = [p for n in cfg.tilde_a_sizes for p in tilde_a_corpus(n)]
    return GentleCorpus(tuple(trees), tuple(nontrees), tuple(tilde))


# ---------------------------------------------------------------------- Brauer graphs

BRAUER_KINDS = ("tree", "odd_cycle", "even_cycle", "two_cycles")


def _graph_from_edges(rng: random.Random, nverts: int, pairs: list[tuple[int, int]],
                      mult: dict[int, int] | None = None) -> BrauerGraph:
    mult = mult or {}
    verts = [(f"v{k}", mult.get(k, 1)) for k in range(nverts)]
    edges = [(f"E{k}", f"v{u}", f"v{w}") for k, (u, w) in enumerate(pairs, start=1)]
    rotation = {}
    for v in range(nverts):
        inc = [f"E{k}" for k, (u, w) in enumerate(pairs, start=1) if v in (u, w)]
        rng.shuffle(inc)
        if len(inc) > 1 or mult.get(v, 1) > 1:
            rotation[f"v{v}"] = inc
    return BrauerGraph(verts, edges, rotation)


def _attach_pendants(rng: random.Random, nverts: int, pairs: list, count: int) -> int:
    for _ in range(count):
        pairs.append((rng.randrange(nverts), nverts))
        nverts += 1
    return nverts


def random_brauer_graph(rng: random.Random, kind: str, max_edges: int = 5) -> BrauerGraph:
    if kind == "tree":
        n = rng.randint(1, max_edges)
        pairs: list[tuple[int, int]] = []
        nv = _attach_pendants(rng, 1, pairs, n)
        mult = {rng.randrange(nv): 2} if rng.random() < 0.3 else {}
        return _graph_from_edges(rng, nv, pairs, mult)
    if kind in ("odd_cycle", "even_cycle"):
        lengths = [L for L in range(2, max_edges + 1) if (L % 2 == 1) == (kind == "odd_cycle")]
        L = rng.choice(lengths)
        pairs = [(k, (k + 1) % L) for k in range(L)]
        nv = _attach_pendants(rng, L, pairs, rng.randint(0, max_edges - L))
        return _graph_from_edges(rng, nv, pairs)
    if kind == "two_cycles":
        a = rng.choice([2, 3])
        b = rng.choice([2, 3])
        pairs = [(k, (k + 1) % a) for k in range(a)]
        # second cycle shares vertex 0 with the first
        ring = [0] + list(range(a, a + b - 1))
        pairs += [(ring[k], ring[(k + 1) % b]) for k in range(b)]
        return _graph_from_edges(rng, a + b - 1, pairs)
    raise ValueError(f"unknown Brauer graph kind {kind!r}")


def brauer_corpus(seed: int, per_kind: int = 6, max_edges: int = 5) -> list[tuple[str, BrauerGraph]]:
    rng = random.Random(seed)
    return [(kind, random_brauer_graph(rng, kind, max_edges)) for kind in BRAUER_KINDS for _ in range(per_kind)]
