"""Quivers, paths, relations and bound quiver algebra presentations.

Paths compose left to right: the path ``a b`` traverses ``a`` first and
then ``b``, so it requires ``target(a) == source(b)``.  Every presentation
computes a normal-form basis of ``KQ/I`` on construction, by exact Gaussian
elimination on the span of relation-free paths, one (source, target) block at
a time.
"""
from __future__ import annotations

import os
import re
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import rref

DEFAULT_MAX_PATH_LEN = 64

Element = dict  # Path -> Fraction, a linear combination of normal-form paths


class PresentationError(ValueError):
    """Base class for everything that can go wrong with a presentation."""


class ParseError(PresentationError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(PresentationError):
    pass


class NonAdmissibleError(ValidationError):
    pass


def max_path_len_default() -> int:
    raw = os.environ.get("BRAUERKIT_MAX_PATH_LEN")
    if raw is None:
        return DEFAULT_MAX_PATH_LEN
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"BRAUERKIT_MAX_PATH_LEN must be an integer, got {raw!r}") from None
    if value < 2:
        raise ValidationError("BRAUERKIT_MAX_PATH_LEN must be at least 2")
    return value


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=True)
class Path:
    """A path in a quiver; trivial paths have no arrows and ``source == target``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self) -> tuple:
        return (len(self.arrows), self.arrows, self.source)

    def __str__(self) -> str:
        return f"e{self.source}" if not self.arrows else " ".join(self.arrows)


class Quiver:
    """Finite quiver with ordered vertex ids and named arrows."""

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Arrow | tuple[str, str, str]]):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        self.arrows: tuple[Arrow, ...] = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise ValidationError(f"duplicate arrow name {dup!r}")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValidationError(f"arrow {a.name!r} uses an undeclared vertex")
        self._by_name = {a.name: a for a in self.arrows}
        self._out: dict[str, list[Arrow]] = defaultdict(list)
        self._in: dict[str, list[Arrow]] = defaultdict(list)
        for a in self.arrows:
            self._out[a.source].append(a)
            self._in[a.target].append(a)
        self.vertex_index = {v: k for k, v in enumerate(self.vertices)}
        self.arrow_index = {a.name: k for k, a in enumerate(self.arrows)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver(vertices={list(self.vertices)}, arrows={[(a.name, a.source, a.target) for a in self.arrows]})"

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown arrow {name!r}") from None

    def out_arrows(self, v: str) -> list[Arrow]:
        return list(self._out.get(v, ()))

    def in_arrows(self, v: str) -> list[Arrow]:
        return list(self._in.get(v, ()))

    def trivial(self, v: str) -> Path:
        if v not in self.vertex_index:
            raise ValidationError(f"unknown vertex {v!r}")
        return Path(v, v, ())

    def path(self, names: Sequence[str]) -> Path:
        """Build the path traversing ``names`` left to right, checking composability."""
        if not names:
            raise ValidationError("a nontrivial path needs at least one arrow")
        arrows = [self.arrow(n) for n in names]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValidationError(f"arrows {a.name!r} and {b.name!r} do not compose")
        return Path(arrows[0].source, arrows[-1].target, tuple(names))

    def extend(self, p: Path, name: str) -> Path | None:
        a = self.arrow(name)
        if a.source != p.target:
            return None
        return Path(p.source, a.target, p.arrows + (name,))

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj: dict[str, set[str]] = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        todo = deque(seen)
        while todo:
            v = todo.popleft()
            for w in adj[v] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == len(self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])


@dataclass(frozen=True)
class RelationSet:
    monomials: tuple[Path, ...] = ()
    binomials: tuple[tuple[Path, Path], ...] = ()

    def __post_init__(self):
        for p in self.monomials:
            if len(p) < 2:
                raise ValidationError(f"relation {p} has length < 2")
        for p, q in self.binomials:
            if len(p) < 2 or len(q) < 2:
                raise ValidationError(f"binomial {p} = {q} has a side of length < 2")
            if (p.source, p.target) != (q.source, q.target):
                raise ValidationError(f"binomial sides {p} and {q} are not parallel")

    @property
    def is_empty(self) -> bool:
        return not self.monomials and not self.binomials


def _reverse(p: Path) -> Path:
    return Path(p.target, p.source, tuple(reversed(p.arrows)))


class AlgebraPresentation:
    """A bound quiver algebra ``KQ/I`` together with its normal-form tables.

    The tables are computed eagerly and never mutated afterwards.
    """

    def __init__(self, quiver: Quiver, relations: RelationSet = RelationSet(), *,
                 max_path_len: int | None = None, name: str = ""):
        self.quiver = quiver
        self.relations = relations
        self.name = name
        self.max_path_len = max_path_len_default() if max_path_len is None else max_path_len
        if not quiver.is_connected():
            raise ValidationError("quiver is not connected")
        for p in list(relations.monomials) + [x for pq in relations.binomials for x in pq]:
            quiver.path(p.arrows)  # re-validates composition against this quiver
        self._monomials = {p.arrows for p in relations.monomials}
        self._mono_lengths = sorted({len(a) for a in self._monomials})
        self._compute_normal_forms()
        self._opposite: AlgebraPresentation | None = None

    # -- equality is structural on the presentation data
    def __eq__(self, other: object) -> bool:
        return (isinstance(other, AlgebraPresentation) and self.quiver == other.quiver
                and self.relations == other.relations)

    def __hash__(self) -> int:
        return hash((self.quiver, self.relations))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<AlgebraPresentation{label}: {len(self.vertices)} vertices, dim {self.dimension}>"

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    # ------------------------------------------------------------------ normal forms
    def _has_monomial_suffix(self, arrows: tuple[str, ...]) -> bool:
        for k in self._mono_lengths:
            if k > len(arrows):
                break
            if arrows[-k:] in self._monomials:
                return True
        return False

    def _relation_free_paths(self, cap: int) -> tuple[list[Path], bool]:
        """All paths avoiding the monomial relations, up to length ``cap``.

        The flag reports whether some such path reached length ``cap``.
        """
        q = self.quiver
        layer = [q.trivial(v) for v in q.vertices]
        out = list(layer)
        for _ in range(cap):
            nxt = []
            for p in layer:
                for a in q.out_arrows(p.target):
                    arrows = p.arrows + (a.name,)
                    if not self._has_monomial_suffix(arrows):
                        nxt.append(Path(p.source, a.target, arrows))
            if not nxt:
                return out, False
            out.extend(nxt)
            layer = nxt
        return out, True

    def _compute_normal_forms(self) -> None:
        cap = self.max_path_len
        free, hit_cap = self._relation_free_paths(cap)
        if hit_cap and not self.relations.binomials:
            raise NonAdmissibleError(
                f"nonzero paths of length {cap} remain; the ideal is not admissible below the cap")
        if not hit_cap:
            cutoff = max(len(p) for p in free) + 1
            self._build_tables(free, cutoff)
            return
        # binomials may still kill long paths: look for the first length where all paths die
        for cutoff in range(2, cap + 1):
            trunc = [p for p in free if len(p) <= cutoff]
            self._build_tables(trunc, cutoff + 1)
            if all(len(b) < cutoff for bs in self._basis.values() for b in bs):
                self._build_tables([p for p in trunc if len(p) < cutoff], cutoff)
                return
        raise NonAdmissibleError(f"no length cutoff found below the cap {cap}; the ideal is not admissible")

    def _build_tables(self, free: list[Path], cutoff: int) -> None:
        """Eliminate ``u (p - q) w`` inside the span of ``free`` (paths of length >= cutoff vanish)."""
        q = self.quiver
        index = {p.arrows if p.arrows else ("", p.source): p for p in free}

        def lookup(source: str, arrows: tuple[str, ...]) -> Path | None:
            if len(arrows) >= cutoff:
                return None
            if not arrows:
                return index.get(("", source))
            return index.get(arrows)

        ending: dict[str, list[Path]] = defaultdict(list)
        starting: dict[str, list[Path]] = defaultdict(list)
        for p in free:
            ending[p.target].append(p)
            starting[p.source].append(p)

        gens: dict[tuple[str, str], list[dict[Path, Fraction]]] = defaultdict(list)
        for p, r in self.relations.binomials:
            for u in ending[p.source]:
                for w in starting[p.target]:
                    if len(u) + len(w) + min(len(p), len(r)) >= cutoff:
                        continue
                    vec: dict[Path, Fraction] = {}
                    for side, sign in ((p, 1), (r, -1)):
                        x = lookup(u.source, u.arrows + side.arrows + w.arrows)
                        if x is not None:
                            vec[x] = vec.get(x, Fraction(0)) + sign
                    vec = {k: v for k, v in vec.items() if v}
                    if vec:
                        gens[(u.source, w.target)].append(vec)

        blocks: dict[tuple[str, str], list[Path]] = defaultdict(list)
        for p in free:
            blocks[(p.source, p.target)].append(p)

        self._basis: dict[tuple[str, str], list[Path]] = {}
        self._rewrite: dict[Path, dict[Path, Fraction]] = {}
        for key in [(i, j) for i in q.vertices for j in q.vertices]:
            paths = sorted(blocks.get(key, ()), key=Path.sort_key, reverse=True)
            rows = gens.get(key)
            if not rows:
                self._basis[key] = sorted(paths, key=Path.sort_key)
                continue
            col = {p: k for k, p in enumerate(paths)}
            dense = [[Fraction(0)] * len(paths) for _ in rows]
            for r, vec in zip(dense, rows):
                for p, c in vec.items():
                    r[col[p]] = c
            red, pivots = rref(dense, len(paths))
            pivset = set(pivots)
            basis = [p for k, p in enumerate(paths) if k not in pivset]
            self._basis[key] = sorted(basis, key=Path.sort_key)
            for row, pc in zip(red, pivots):
                self._rewrite[paths[pc]] = {paths[k]: -row[k] for k in range(len(paths))
                                            if k not in pivset and row[k]}
        self._cutoff = cutoff
        self._basis_set = {b for bs in self._basis.values() for b in bs}
        self._action: dict[tuple[Path, str], dict[Path, Fraction]] = {}
        for b in self._basis_set:
            for a in q.out_arrows(b.target):
                self._action[(b, a.name)] = self._nf_path(Path(b.source, a.target, b.arrows + (a.name,)))

    def _nf_path(self, p: Path) -> dict[Path, Fraction]:
        if p in self._basis_set:
            return {p: Fraction(1)}
        if p in self._rewrite:
            return dict(self._rewrite[p])
        return {}

    # ------------------------------------------------------------------ public algebra API
    def basis(self, i: str, j: str) -> list[Path]:
        """Normal-form basis of ``e_i A e_j`` (paths from ``i`` to ``j``)."""
        return list(self._basis[(i, j)])

    def basis_from(self, i: str) -> list[Path]:
        return [b for j in self.vertices for b in self._basis[(i, j)]]

    @property
    def dimension(self) -> int:
        return sum(len(bs) for bs in self._basis.values())

    @property
    def cutoff(self) -> int:
        """Every path of at least this length is zero in the algebra."""
        return self._cutoff

    def act(self, x: Element, arrow: str) -> Element:
        """Right multiplication of the element ``x`` by an arrow."""
        out: dict[Path, Fraction] = {}
        for b, c in x.items():
            for t, d in self._action.get((b, arrow), {}).items():
                v = out.get(t, Fraction(0)) + c * d
                if v:
                    out[t] = v
                else:
                    out.pop(t, None)
        return out

    def normal_form(self, p: Path) -> Element:
        """Rewrite an arbitrary path as a combination of normal-form paths."""
        x: Element = {self.quiver.trivial(p.source): Fraction(1)}
        for a in p.arrows:
            x = self.act(x, a)
            if not x:
                break
        return x

    def multiply(self, x: Element, y: Element) -> Element:
        out: dict[Path, Fraction] = {}
        for b, d in y.items():
            part = {k: v for k, v in x.items() if k.target == b.source}
            for a in b.arrows:
                part = self.act(part, a)
                if not part:
                    break
            for t, c in part.items():
                v = out.get(t, Fraction(0)) + c * d
                if v:
                    out[t] = v
                else:
                    out.pop(t, None)
        return out

    def is_zero_path(self, p: Path) -> bool:
        return not self.normal_form(p)

    def cartan_matrix(self) -> list[list[int]]:
        """Entry ``[i][j]`` is ``dim e_i A e_j`` in vertex order."""
        return [[len(self._basis[(i, j)]) for j in self.vertices] for i in self.vertices]

    def opposite(self) -> "AlgebraPresentation":
        if self._opposite is None:
            rel = RelationSet(
                tuple(_reverse(p) for p in self.relations.monomials),
                tuple((_reverse(p), _reverse(q)) for p, q in self.relations.binomials))
            op = AlgebraPresentation(self.quiver.opposite(), rel, max_path_len=self.max_path_len,
                                     name=f"{self.name}^op" if self.name else "")
            op._opposite = self
            self._opposite = op
        return self._opposite


# ---------------------------------------------------------------------- text format

_LINE = re.compile(r"^\s*(vertices|arrow|zero|equal)\s*:(.*)$")


def parse_presentation(text: str, *, name: str = "", max_path_len: int | None = None) -> AlgebraPresentation:
    """Parse the line-oriented presentation format (see README)."""
    vertices: list[str] | None = None
    arrows: list[Arrow] = []
    zeros: list[tuple[int, list[str]]] = []
    equals: list[tuple[int, list[str], list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = _LINE.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError(f"unrecognised line {raw.strip()!r}", lineno, col)
        key, rest = m.group(1), m.group(2)
        col = m.start(2) + 1
        toks = rest.split()
        if key == "vertices":
            if vertices is not None:
                raise ParseError("duplicate 'vertices' line", lineno, 1)
            if not toks:
                raise ParseError("no vertices given", lineno, col)
            vertices = toks
        elif key == "arrow":
            if len(toks) != 3:
                raise ParseError("expected 'arrow: <name> <src> <tgt>'", lineno, col)
            arrows.append(Arrow(*toks))
        elif key == "zero":
            if not toks:
                raise ParseError("empty zero relation", lineno, col)
            zeros.append((lineno, toks))
        else:
            if rest.count("=") != 1:
                raise ParseError("expected 'equal: <path> = <path>'", lineno, col)
            lhs, rhs = (s.split() for s in rest.split("="))
            if not lhs or not rhs:
                raise ParseError("empty side in binomial relation", lineno, col)
            equals.append((lineno, lhs, rhs))
    if vertices is None:
        raise ParseError("missing 'vertices' line", 1, 1)
    quiver = Quiver(vertices, arrows)

    def mk(lineno: int, names: list[str]) -> Path:
        try:
            return quiver.path(names)
        except ValidationError as exc:
            raise ValidationError(f"line {lineno}: {exc}") from None

    monos = tuple(mk(n, t) for n, t in zeros)
    binos = []
    for n, lhs, rhs in equals:
        p, q = mk(n, lhs), mk(n, rhs)
        if (p.source, p.target) != (q.source, q.target):
            raise ValidationError(f"line {n}: binomial sides are not parallel")
        binos.append((p, q))
    return AlgebraPresentation(quiver, RelationSet(monos, tuple(binos)), name=name, max_path_len=max_path_len)


def format_presentation(pres: AlgebraPresentation) -> str:
    q = pres.quiver
    lines = ["vertices: " + " ".join(q.vertices)]
    lines += [f"arrow: {a.name} {a.source} {a.target}" for a in q.arrows]
    lines += ["zero: " + " ".join(p.arrows) for p in pres.relations.monomials]
    lines += ["equal: " + " ".join(p.arrows) + " = " + " ".join(r.arrows) for p, r in pres.relations.binomials]
    return "\n".join(lines) + "\n"


def make_presentation(vertices: Iterable, arrows: Iterable[tuple], zero: Iterable[Sequence[str]] = (),
                      equal: Iterable[tuple[Sequence[str], Sequence[str]]] = (), **kw) -> AlgebraPresentation:
    """Convenience constructor from plain Python data."""
    q = Quiver([str(v) for v in vertices], [tuple(map(str, a)) for a in arrows])
    rel = RelationSet(tuple(q.path(list(z)) for z in zero),
                      tuple((q.path(list(p)), q.path(list(r))) for p, r in equal))
    return AlgebraPresentation(q, rel, **kw)


def algebra_dimension(pres: AlgebraPresentation) -> int:
    return pres.dimension


def cartan_matrix(pres: AlgebraPresentation) -> list[list[int]]:
    return pres.cartan_matrix()


def path_normal_forms(pres: AlgebraPresentation) -> dict[tuple[str, str], list[Path]]:
    return {(i, j): pres.basis(i, j) for i in pres.vertices for j in pres.vertices}
