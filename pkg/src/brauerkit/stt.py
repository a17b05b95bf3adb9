"""Support tau-tilting pairs of special biserial algebras.

The catalog of indecomposables is made of string modules of the string
quotient plus the missing projectives.  Pairs are the size-``n`` cliques of
the compatibility graph on tau-rigid modules and vertex marks.  When the
string quotient has bands but none of them is a brick, the catalog is grown
by string length until every pair can be mutated at every position.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Union

import networkx as nx

from .presentation import AlgebraPresentation
from .repmod import (RepModule, fac_contains, hom_dim, is_isomorphic, is_projective,
                     projective_at, tau)
from .strings import (EnumerationCapError, InfiniteTypeError, StringAlgebra, StringWord, brick_band,
                      detect_bands, enumerate_strings, string_module, string_quotient)

__all__ = [
    "SttConfig", "CatalogEntry", "Catalog", "Mark", "SttPair", "SttResult", "HasseQuiver",
    "indecomposable_catalog", "compatible", "enumerate_stt_pairs", "support_tau_tilting",
    "hasse_quiver", "hasse_dot", "count_json", "InfiniteTypeError", "EnumerationCapError",
    "HasseError",
]


class HasseError(RuntimeError):
    pass


@dataclass(frozen=True)
class SttConfig:
    max_strings: int = 100_000
    start_length: int = 4          # first string length tried when bands exist
    length_step: int = 2
    max_length: int = 40
    band_length_bound: int | None = None
    max_band_candidates: int = 5000


@dataclass
class CatalogEntry:
    module: RepModule
    word: StringWord | None       # None for a projective that is not a string module
    tau: RepModule
    projective: bool
    tau_rigid: bool

    @property
    def label(self) -> str:
        return self.module.label


@dataclass
class Catalog:
    pres: AlgebraPresentation
    entries: list[CatalogEntry]
    complete: bool                 # False when strings were cut off by length
    _hom: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def hom(self, x: int, y: int, *, to_tau: bool = False) -> int:
        key = (x, y, to_tau)
        if key not in self._hom:
            tgt = self.entries[y].tau if to_tau else self.entries[y].module
            src = self.entries[x].module
            if not any(a and b for a, b in zip(src.dims, tgt.dims)):
                self._hom[key] = 0
            else:
                self._hom[key] = hom_dim(src, tgt)
        return self._hom[key]

    def rigid_indices(self) -> list[int]:
        return [k for k, e in enumerate(self.entries) if e.tau_rigid]


@dataclass(frozen=True, order=True)
class Mark:
    """The shifted projective at a vertex."""
    vertex: str


Element = Union[int, Mark]


def _catalog_from_words(pres: AlgebraPresentation, words: list[StringWord], complete: bool) -> Catalog:
    mods: list[tuple[RepModule, StringWord | None]] = [(string_module(pres, w), w) for w in words]
    for v in pres.vertices:
        p = projective_at(pres, v)
        if not any(m.dims == p.dims and is_isomorphic(m, p) for m, _ in mods):
            mods.append((p, None))
    mods.sort(key=lambda mw: (mw[0].dims, mw[0].label))
    entries = []
    for m, w in mods:
        proj = is_projective(m)
        t = tau(m)
        rigid = proj or not any(a and b for a, b in zip(m.dims, t.dims)) or hom_dim(m, t) == 0
        entries.append(CatalogEntry(m, w, t, proj, rigid))
    return Catalog(pres, entries, complete)


def indecomposable_catalog(pres: AlgebraPresentation, *, config: SttConfig = SttConfig(),
                           max_length: int | None = None) -> Catalog:
    """Indecomposables for a band-free string quotient, or those up to a string length."""
    sq = string_quotient(pres)
    sa = StringAlgebra(sq)
    if max_length is None:
        band = detect_bands(sa)
        if band is not None:
            raise InfiniteTypeError(f"string quotient has band {band}", band)
        words = enumerate_strings(sa, max_words=config.max_strings)
        return _catalog_from_words(pres, words, True)
    words = enumerate_strings(sa, max_words=config.max_strings, max_length=max_length)
    return _catalog_from_words(pres, words, False)


def compatible(cat: Catalog, x: Element, y: Element) -> bool:
    if isinstance(x, Mark) and isinstance(y, Mark):
        return True
    if isinstance(x, Mark) or isinstance(y, Mark):
        mark, mod = (x, y) if isinstance(x, Mark) else (y, x)
        return cat.entries[mod].module.dim(mark.vertex) == 0
    if x == y:
        return cat.entries[x].tau_rigid
    return cat.hom(x, y, to_tau=True) == 0 and cat.hom(y, x, to_tau=True) == 0


@dataclass(frozen=True)
class SttPair:
    modules: tuple[int, ...]       # catalog indices, sorted
    marks: tuple[str, ...]         # vertices, in presentation order

    @property
    def elements(self) -> frozenset:
        return frozenset(self.modules) | frozenset(Mark(v) for v in self.marks)

    def g_label(self, cat: Catalog) -> tuple:
        order = {v: k for k, v in enumerate(cat.pres.vertices)}
        return (len(self.marks), tuple(cat.entries[k].module.dims for k in self.modules),
                tuple(order[v] for v in self.marks))

    def describe(self, cat: Catalog) -> str:
        mods = " + ".join(cat.entries[k].label for k in self.modules) or "0"
        marks = ",".join(self.marks)
        return f"({mods} | {marks})" if marks else f"({mods})"


def _cliques(cat: Catalog) -> list[SttPair]:
    pres = cat.pres
    n = len(pres.vertices)
    nodes: list[Element] = cat.rigid_indices() + [Mark(v) for v in pres.vertices]
    g = nx.Graph()
    g.add_nodes_from(range(len(nodes)))
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            if compatible(cat, nodes[a], nodes[b]):
                g.add_edge(a, b)
    order = {v: k for k, v in enumerate(pres.vertices)}
    pairs = []
    for cl in nx.find_cliques(g):
        if len(cl) != n:
            continue
        elems = [nodes[k] for k in cl]
        mods = tuple(sorted(e for e in elems if not isinstance(e, Mark)))
        marks = tuple(sorted((e.vertex for e in elems if isinstance(e, Mark)), key=order.get))
        pairs.append(SttPair(mods, marks))
    pairs.sort(key=lambda p: p.g_label(cat))
    return pairs


def _mutation_partners(pairs: list[SttPair]) -> dict[tuple[int, Element], list[int]]:
    """For each (pair, element) the pairs obtained by swapping that element."""
    by_rest: dict[frozenset, list[tuple[int, Element]]] = {}
    for k, p in enumerate(pairs):
        for e in p.elements:
            by_rest.setdefault(p.elements - {e}, []).append((k, e))
    out: dict[tuple[int, Element], list[int]] = {}
    for group in by_rest.values():
        for k, e in group:
            out[(k, e)] = [j for j, _ in group if j != k]
    return out


def _closed_under_mutation(pairs: list[SttPair]) -> bool:
    return bool(pairs) and all(len(v) == 1 for v in _mutation_partners(pairs).values())


@dataclass
class SttResult:
    catalog: Catalog
    pairs: list[SttPair]
    string_length: int | None      # None when all strings were used


def support_tau_tilting(pres: AlgebraPresentation, config: SttConfig = SttConfig()) -> SttResult:
    """All support tau-tilting pairs, or :class:`InfiniteTypeError` with a band witness."""
    sq = string_quotient(pres)
    sa = StringAlgebra(sq)
    band = detect_bands(sa)
    if band is None:
        cat = indecomposable_catalog(pres, config=config)
        return SttResult(cat, _cliques(cat), None)
    brick = brick_band(sq, length_bound=config.band_length_bound,
                       max_candidates=config.max_band_candidates)
    if brick is not None:
        raise InfiniteTypeError(f"band {brick} gives a brick; tau-tilting infinite", brick)
    length = config.start_length
    while length <= config.max_length:
        cat = indecomposable_catalog(pres, config=config, max_length=length)
        pairs = _cliques(cat)
        if _closed_under_mutation(pairs):
            return SttResult(cat, pairs, length)
        length += config.length_step
    raise EnumerationCapError(f"pairs did not close under mutation with strings up to length {config.max_length}",
                              band)


def enumerate_stt_pairs(pres: AlgebraPresentation, config: SttConfig = SttConfig()) -> list[SttPair]:
    return support_tau_tilting(pres, config).pairs


# ---------------------------------------------------------------------- Hasse quiver

@dataclass
class HasseQuiver:
    pairs: list[SttPair]
    edges: list[tuple[int, int]]   # covering arrows, larger to smaller
    source: int
    sink: int

    def degrees(self) -> list[int]:
        deg = [0] * len(self.pairs)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def is_regular(self, n: int) -> bool:
        return all(d == n for d in self.degrees())

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.pairs)))
        g.add_edges_from(self.edges)
        return g


def _fac(cat: Catalog, modules: Iterable[int], x: int) -> bool:
    mods = [cat.entries[k].module for k in modules]
    return bool(mods) and fac_contains(mods, cat.entries[x].module)


def hasse_quiver(cat: Catalog, pairs: list[SttPair]) -> HasseQuiver:
    """Mutation graph oriented by inclusion of Fac; checks one source and one sink."""
    edges = []
    partners = _mutation_partners(pairs)
    done = set()
    for (k, _), js in partners.items():
        for j in js:
            if (min(k, j), max(k, j)) in done:
                continue
            done.add((min(k, j), max(k, j)))
            p, q = pairs[k], pairs[j]
            fwd = all(_fac(cat, p.modules, x) for x in q.modules)
            bwd = all(_fac(cat, q.modules, x) for x in p.modules)
            if fwd == bwd:
                raise HasseError(f"cannot orient the edge between {p.describe(cat)} and {q.describe(cat)}")
            edges.append((k, j) if fwd else (j, k))
    edges.sort()
    g = nx.DiGraph()
    g.add_nodes_from(range(len(pairs)))
    g.add_edges_from(edges)
    sources = [v for v in g if g.in_degree(v) == 0]
    sinks = [v for v in g if g.out_degree(v) == 0]
    if len(sources) != 1 or len(sinks) != 1:
        raise HasseError(f"expected one source and one sink, found {len(sources)} and {len(sinks)}")
    if not nx.is_directed_acyclic_graph(g):
        raise HasseError("Hasse quiver has an oriented cycle")
    src, snk = sources[0], sinks[0]
    if pairs[src].marks or any(not cat.entries[k].projective for k in pairs[src].modules):
        raise HasseError("source is not the pair of all projectives")
    if pairs[snk].modules:
        raise HasseError("sink is not the pair of all marks")
    return HasseQuiver(pairs, edges, src, snk)


def hasse_dot(cat: Catalog, hq: HasseQuiver, name: str = "hasse") -> str:
    """DOT text; nodes show the dimension vectors of the modules and the marks."""
    def node_label(p: SttPair) -> str:
        parts = ["".join(map(str, cat.entries[k].module.dims)) for k in p.modules]
        parts += [f"[{v}]" for v in p.marks]
        return " ".join(parts)

    lines = [f'digraph "{name}" {{', "  rankdir=TB;", "  node [shape=box, fontsize=10];"]
    for k, p in enumerate(hq.pairs):
        lines.append(f'  n{k} [label="{node_label(p)}"];')
    for a, b in hq.edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def count_json(algebra: str, n: int, count: int | None, finite: bool, formula: str | None) -> str:
    return json.dumps({"algebra": algebra, "n": n, "count": count, "finite": finite, "formula": formula},
                      sort_keys=False)
