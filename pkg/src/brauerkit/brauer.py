"""Brauer graphs, their algebras, and the graph attached to a gentle algebra."""
from __future__ import annotations

import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Sequence

from .gentle import NotGentleError, maximal_paths, is_gentle, path_vertices
from .presentation import (AlgebraPresentation, Arrow, ParseError, Path, Quiver, RelationSet,
                           ValidationError)


class SelfFoldedError(ValidationError):
    """A quiver vertex lies twice in one maximal path, which would need a loop edge."""


def _canonical_cycle(seq: tuple[str, ...]) -> tuple[str, ...]:
    if not seq:
        return seq
    k = min(range(len(seq)), key=lambda i: seq[i:] + seq[:i])
    return seq[k:] + seq[:k]


class BrauerGraph:
    """Connected multigraph with multiplicities and a cyclic edge order at each vertex.

    ``rotation[v]`` lists the edges at ``v`` in cyclic order.  Equality ignores
    where each cyclic sequence starts, but never reverses it.
    """

    def __init__(self, vertices: Sequence[tuple[str, int]], edges: Sequence[tuple[str, str, str]],
                 rotation: dict[str, Sequence[str]] | None = None):
        self.vertices: tuple[tuple[str, int], ...] = tuple((str(v), int(m)) for v, m in vertices)
        self.edges: tuple[tuple[str, str, str], ...] = tuple(tuple(map(str, e)) for e in edges)
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate Brauer vertex id")
        eids = [e for e, _, _ in self.edges]
        if len(set(eids)) != len(eids):
            raise ValidationError("duplicate edge id")
        if set(ids) & set(eids):
            raise ValidationError("vertex and edge ids must be distinct")
        self.multiplicity = dict(self.vertices)
        for v, m in self.vertices:
            if m < 1:
                raise ValidationError(f"multiplicity of {v} must be >= 1")
        incident: dict[str, list[str]] = {v: [] for v in ids}
        for e, u, w in self.edges:
            if u not in incident or w not in incident:
                raise ValidationError(f"edge {e} uses an undeclared vertex")
            if u == w:
                raise ValidationError(f"edge {e} is a loop; loop edges are not supported")
            incident[u].append(e)
            incident[w].append(e)
        rotation = dict(rotation or {})
        rot = {}
        for v in ids:
            given = rotation.pop(v, None)
            if given is None:
                if len(incident[v]) > 1:
                    raise ValidationError(f"vertex {v} has degree {len(incident[v])} but no cyclic order")
                given = incident[v]
            given = tuple(map(str, given))
            if sorted(given) != sorted(incident[v]):
                raise ValidationError(f"cyclic order at {v} must list each incident edge exactly once")
            rot[v] = given
        if rotation:
            raise ValidationError(f"cyclic order given for unknown vertices {sorted(rotation)}")
        self.rotation: dict[str, tuple[str, ...]] = rot
        if not self._connected():
            raise ValidationError("Brauer graph is not connected")

    def _connected(self) -> bool:
        if not self.vertices:
            return False
        adj = defaultdict(set)
        for _, u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        start = self.vertices[0][0]
        seen = {start}
        todo = deque([start])
        while todo:
            x = todo.popleft()
            for y in adj[x] - seen:
                seen.add(y)
                todo.append(y)
        return len(seen) == len(self.vertices)

    def _key(self):
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)),
                tuple(sorted((v, _canonical_cycle(r)) for v, r in self.rotation.items())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BrauerGraph) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"BrauerGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    @property
    def vertex_ids(self) -> list[str]:
        return [v for v, _ in self.vertices]

    @property
    def edge_ids(self) -> list[str]:
        return [e for e, _, _ in self.edges]

    def endpoints(self, e: str) -> tuple[str, str]:
        for eid, u, w in self.edges:
            if eid == e:
                return u, w
        raise KeyError(e)

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def is_truncated(self, v: str) -> bool:
        return self.degree(v) == 1 and self.multiplicity[v] == 1

    def with_multiplicity(self, v: str, m: int) -> "BrauerGraph":
        verts = [(x, m if x == v else k) for x, k in self.vertices]
        return BrauerGraph(verts, self.edges, self.rotation)


# ---------------------------------------------------------------------- text formats

def parse_brauer_graph(text: str) -> BrauerGraph:
    verts, edges, rot = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        toks = rest.split()
        if not sep:
            raise ParseError(f"unrecognised line {line!r}", lineno)
        key = key.strip()
        if key == "bvertex":
            m = re.fullmatch(r"m=(\d+)", toks[1]) if len(toks) == 2 else None
            if len(toks) == 1:
                verts.append((toks[0], 1))
            elif m:
                verts.append((toks[0], int(m.group(1))))
            else:
                raise ParseError("expected 'bvertex: <id> m=<int>'", lineno, len(key) + 2)
        elif key == "bedge":
            if len(toks) != 3:
                raise ParseError("expected 'bedge: <id> <vertex> <vertex>'", lineno, len(key) + 2)
            edges.append(tuple(toks))
        elif key == "cyclic":
            if len(toks) < 2:
                raise ParseError("expected 'cyclic: <vertex> <edge> ...'", lineno, len(key) + 2)
            if toks[0] in rot:
                raise ParseError(f"duplicate cyclic order for {toks[0]}", lineno, len(key) + 2)
            rot[toks[0]] = toks[1:]
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno, 1)
    return BrauerGraph(verts, edges, rot)


def looks_like_brauer_graph(text: str) -> bool:
    """Whether the first non-comment line uses the Brauer graph keywords."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.startswith(("bvertex", "bedge", "cyclic"))
    return False


def format_brauer_graph(g: BrauerGraph) -> str:
    lines = [f"bvertex: {v} m={m}" for v, m in g.vertices]
    lines += [f"bedge: {e} {u} {w}" for e, u, w in g.edges]
    lines += [f"cyclic: {v} " + " ".join(g.rotation[v]) for v, _ in g.vertices if g.degree(v) >= 1]
    return "\n".join(lines) + "\n"


def brauer_graph_dot(g: BrauerGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v, m in g.vertices:
        label = v if m == 1 else f"{v} (m={m})"
        out.append(f'  "{v}" [label="{label}"];')
    for e, u, w in g.edges:
        out.append(f'  "{u}" -- "{w}" [label="{e}"];')
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------- constructions

def _mark_name(p: Path) -> str:
    return f"e{p.source}" if p.is_trivial else "".join(p.arrows)


def gamma_of_gentle(pres: AlgebraPresentation) -> BrauerGraph:
    """The Brauer graph whose algebra (all multiplicities 1) is the trivial extension."""
    if not is_gentle(pres):
        raise NotGentleError("the trivial-extension graph needs a gentle presentation")
    mps = maximal_paths(pres)
    members = list(mps.combined)
    names: list[str] = []
    for p in members:
        base = "v(" + _mark_name(p) + ")"
        n = base
        k = 2
        while n in names:
            n = f"{base}#{k}"
            k += 1
        names.append(n)
    incid: dict[str, list[int]] = defaultdict(list)
    rotation: dict[str, list[str]] = {}
    for idx, p in enumerate(members):
        seq = path_vertices(p, pres)
        if len(set(seq)) != len(seq):
            raise SelfFoldedError(
                f"vertex {Counter(seq).most_common(1)[0][0]} lies twice in the maximal path {p}; "
                "the induced graph would need a loop edge, which is not supported")
        rotation[names[idx]] = [f"E{i}" for i in seq]
        for i in seq:
            incid[i].append(idx)
    edges = []
    for i in pres.vertices:
        a, b = incid[i]
        if a == b:
            raise SelfFoldedError(f"vertex {i} lies twice in the same member of the maximal path set")
        edges.append((f"E{i}", names[a], names[b]))
    return BrauerGraph([(n, 1) for n in names], edges, rotation)


def algebra_of_brauer_graph(g: BrauerGraph, name: str = "") -> AlgebraPresentation:
    """The Brauer graph algebra: quiver vertices are edges, arrows follow the cyclic orders."""
    qverts = g.edge_ids
    arrows: list[Arrow] = []
    # arrow at v leaving the edge in position k
    at: dict[tuple[str, str], str] = {}
    owner: dict[str, str] = {}
    live = [v for v in g.vertex_ids if not g.is_truncated(v)]
    if not live:
        # a single edge between two truncated ends: the algebra K[x]/(x^2)
        e, u, _ = g.edges[0]
        q = Quiver(qverts, [Arrow(f"{u}_1", e, e)])
        return AlgebraPresentation(q, RelationSet((q.path([f"{u}_1", f"{u}_1"]),)), name=name)
    for v in live:
        rot = g.rotation[v]
        s = len(rot)
        for k in range(s):
            nm = f"{v}_{k + 1}"
            arrows.append(Arrow(nm, rot[k], rot[(k + 1) % s]))
            at[(v, rot[k])] = nm
            owner[nm] = v
    q = Quiver(qverts, arrows)
    live_set = set(live)

    def cycle(v: str, e: str) -> list[str]:
        rot = g.rotation[v]
        k = rot.index(e)
        return [at[(v, rot[(k + j) % len(rot)])] for j in range(len(rot))] * g.multiplicity[v]

    monos: list[Path] = []
    binos: list[tuple[Path, Path]] = []
    for e, u, w in g.edges:
        if u in live_set and w in live_set:
            binos.append((q.path(cycle(u, e)), q.path(cycle(w, e))))
        for v in (u, w):
            if v in live_set:
                c = cycle(v, e)
                monos.append(q.path(c + [c[0]]))
    for a in arrows:
        for b in q.out_arrows(a.target):
            if owner[a.name] != owner[b.name]:
                monos.append(q.path([a.name, b.name]))
    return AlgebraPresentation(q, RelationSet(tuple(monos), tuple(binos)), name=name)


# ---------------------------------------------------------------------- classification

class GraphTag(str, Enum):
    TREE = "Tree"
    LINE = "Line"
    STAR = "Star"
    CYCLE = "Cycle"
    OTHER = "Other"


@dataclass(frozen=True)
class CycleCensus:
    independent_cycles: int
    parities: tuple[str, ...]  # "odd"/"even" per fundamental cycle


@dataclass(frozen=True)
class GraphClass:
    tag: GraphTag
    exceptional_vertices: tuple[str, ...]
    cycle_census: CycleCensus
    is_line: bool = False
    is_star: bool = False


def cycle_census(g: BrauerGraph) -> CycleCensus:
    """Cyclomatic number and parities of a fundamental cycle basis."""
    adj: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for e, u, w in g.edges:
        adj[u].append((w, e))
        adj[w].append((u, e))
    root = g.vertex_ids[0]
    parent: dict[str, tuple[str | None, str | None]] = {root: (None, None)}
    depth = {root: 0}
    order = deque([root])
    tree_edges = set()
    while order:
        x = order.popleft()
        for y, e in adj[x]:
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = (x, e)
                tree_edges.add(e)
                order.append(y)

    def ancestors(x):
        out = []
        while x is not None:
            out.append(x)
            x = parent[x][0]
        return out

    parities = []
    for e, u, w in g.edges:
        if e in tree_edges:
            continue
        au = ancestors(u)
        aw = set(ancestors(w))
        lca = next(x for x in au if x in aw)
        length = depth[u] + depth[w] - 2 * depth[lca] + 1
        parities.append("odd" if length % 2 else "even")
    return CycleCensus(len(g.edges) - len(g.vertices) + 1, tuple(parities))


def _all_simple(g: BrauerGraph) -> bool:
    return all(m == 1 for _, m in g.vertices)


def is_line(g: BrauerGraph) -> bool:
    if not g.edges or cycle_census(g).independent_cycles or not _all_simple(g):
        return False
    return all(g.degree(v) <= 2 for v in g.vertex_ids)


def is_star(g: BrauerGraph) -> bool:
    if not g.edges or cycle_census(g).independent_cycles or not _all_simple(g):
        return False
    return any(g.degree(v) == len(g.edges) for v in g.vertex_ids)


def is_cycle(g: BrauerGraph) -> bool:
    return (len(g.vertices) >= 2 and len(g.edges) == len(g.vertices) and _all_simple(g)
            and all(g.degree(v) == 2 for v in g.vertex_ids))


def classify_graph(g: BrauerGraph) -> GraphClass:
    census = cycle_census(g)
    exceptional = tuple(v for v, m in g.vertices if m >= 2)
    line, star = is_line(g), is_star(g)
    if line:
        tag = GraphTag.LINE
    elif star:
        tag = GraphTag.STAR
    elif is_cycle(g):
        tag = GraphTag.CYCLE
    elif census.independent_cycles == 0 and len(exceptional) <= 1:
        tag = GraphTag.TREE
    else:
        tag = GraphTag.OTHER
    return GraphClass(tag, exceptional, census, line, star)


def is_brauer_tree(g: BrauerGraph) -> bool:
    return cycle_census(g).independent_cycles == 0 and sum(m >= 2 for _, m in g.vertices) <= 1


def tau_tilting_finite(g: BrauerGraph) -> bool:
    """At most one cycle, and that cycle (if any) has odd length."""
    c = cycle_census(g)
    return c.independent_cycles == 0 or (c.independent_cycles == 1 and c.parities == ("odd",))


class CountStatus(str, Enum):
    INFINITE = "Infinite"
    KNOWN = "KnownCount"
    FINITE_UNKNOWN = "FiniteUnknown"


class Formula(str, Enum):
    TREE_BINOMIAL = "TreeBinomial"
    ODD_CYCLE_POWER = "OddCyclePower"
    NONE = "None"


@dataclass(frozen=True)
class CountPrediction:
    status: CountStatus
    value: int | None = None
    formula: Formula = Formula.NONE


def predicted_count(g: BrauerGraph) -> CountPrediction:
    n = len(g.edges)
    if not tau_tilting_finite(g):
        return CountPrediction(CountStatus.INFINITE)
    if is_brauer_tree(g):
        return CountPrediction(CountStatus.KNOWN, comb(2 * n, n), Formula.TREE_BINOMIAL)
    if is_cycle(g) and n % 2 == 1:
        return CountPrediction(CountStatus.KNOWN, 2 ** (2 * n - 1), Formula.ODD_CYCLE_POWER)
    return CountPrediction(CountStatus.FINITE_UNKNOWN)


# ---------------------------------------------------------------------- standard graphs

def brauer_line(n: int) -> BrauerGraph:
    verts = [(f"v{k}", 1) for k in range(n + 1)]
    edges = [(f"E{k}", f"v{k - 1}", f"v{k}") for k in range(1, n + 1)]
    rot = {f"v{k}": [f"E{k}", f"E{k + 1}"] for k in range(1, n)}
    return BrauerGraph(verts, edges, rot)


def brauer_star(n: int, center_multiplicity: int = 1) -> BrauerGraph:
    verts = [("c", center_multiplicity)] + [(f"l{k}", 1) for k in range(1, n + 1)]
    edges = [(f"E{k}", "c", f"l{k}") for k in range(1, n + 1)]
    return BrauerGraph(verts, edges, {"c": [f"E{k}" for k in range(1, n + 1)]})


def brauer_cycle(n: int) -> BrauerGraph:
    verts = [(f"v{k}", 1) for k in range(n)]
    edges = [(f"E{k + 1}", f"v{k}", f"v{(k + 1) % n}") for k in range(n)]
    rot = {f"v{k}": [f"E{k}" if k else f"E{n}", f"E{k + 1}"] for k in range(n)}
    return BrauerGraph(verts, edges, rot)
