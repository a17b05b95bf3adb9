"""Strings and bands over monomial special biserial presentations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice

import networkx as nx

from .gentle import check_gentle
from .linalg import Matrix
from .presentation import AlgebraPresentation, RelationSet, ValidationError
from .repmod import RepModule, hom_dim


class InfiniteTypeError(Exception):
    """Raised when an enumeration would not terminate; carries a witness word."""

    def __init__(self, message: str, witness: "StringWord | None" = None):
        super().__init__(message)
        self.witness = witness


class EnumerationCapError(InfiniteTypeError):
    pass


Letter = tuple[str, int]  # (arrow name, +1 direct / -1 inverse)


@dataclass(frozen=True, order=True)
class StringWord:
    """A reduced walk; ``letters`` empty means the trivial string at ``vertex``."""

    vertex: str
    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"e{self.vertex}"
        return " ".join(a if s > 0 else f"{a}^-1" for a, s in self.letters)


class StringAlgebra:
    """Letter bookkeeping for a presentation whose relations are all monomials."""

    def __init__(self, pres: AlgebraPresentation):
        if pres.relations.binomials:
            raise ValidationError("string combinatorics needs monomial relations only")
        self.pres = pres
        q = pres.quiver
        self.relations = {p.arrows for p in pres.relations.monomials}
        self.rel_lengths = sorted({len(r) for r in self.relations})
        self.max_rel = max(self.rel_lengths, default=2)
        self.letters: list[Letter] = [(a.name, s) for a in q.arrows for s in (1, -1)]
        self.order = {x: k for k, x in enumerate(self.letters)}
        self._ends = {}
        for a in q.arrows:
            self._ends[(a.name, 1)] = (a.source, a.target)
            self._ends[(a.name, -1)] = (a.target, a.source)
        self.starting = {v: [x for x in self.letters if self._ends[x][0] == v] for v in q.vertices}

    def source(self, x: Letter) -> str:
        return self._ends[x][0]

    def target(self, x: Letter) -> str:
        return self._ends[x][1]

    def can_append(self, word: tuple[Letter, ...], x: Letter) -> bool:
        """Whether ``word + x`` stays a string, given that ``word`` is one."""
        if word:
            last = word[-1]
            if self.target(last) != self.source(x):
                return False
            if last[0] == x[0] and last[1] == -x[1]:
                return False
        for ell in self.rel_lengths:
            if ell > len(word) + 1:
                break
            tail = word[len(word) - ell + 1:] + (x,)
            if any(s != x[1] for _, s in tail):
                continue
            arrows = tuple(a for a, _ in tail)
            if x[1] < 0:
                arrows = arrows[::-1]
            if arrows in self.relations:
                return False
        return True

    def word_key(self, letters: tuple[Letter, ...]) -> tuple:
        return (len(letters), tuple(self.order[x] for x in letters))

    @staticmethod
    def inverse(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
        return tuple((a, -s) for a, s in reversed(letters))

    def canonical(self, letters: tuple[Letter, ...]) -> StringWord:
        inv = self.inverse(letters)
        best = min(letters, inv, key=self.word_key)
        return StringWord(self.source(best[0]), best)

    def is_string(self, letters: tuple[Letter, ...]) -> bool:
        word: tuple[Letter, ...] = ()
        for x in letters:
            if not self.can_append(word, x):
                return False
            word += (x,)
        return True


def string_quotient(pres: AlgebraPresentation) -> AlgebraPresentation:
    """Replace each binomial ``p = q`` by the two monomials ``p`` and ``q``."""
    if not check_gentle(pres).is_special_biserial:
        raise ValidationError("string quotient requires a special biserial presentation")
    rel = pres.relations
    if not rel.binomials:
        return pres
    mons = list(rel.monomials)
    for p, q in rel.binomials:
        for x in (p, q):
            if x not in mons:
                mons.append(x)
    return AlgebraPresentation(pres.quiver, RelationSet(tuple(mons), ()),
                               max_path_len=pres.cutoff, name=f"{pres.name}/soc" if pres.name else "")


# ---------------------------------------------------------------------- enumeration

def enumerate_strings(sa: StringAlgebra | AlgebraPresentation, *, max_words: int = 100_000,
                      max_length: int | None = None) -> list[StringWord]:
    """Canonical strings, trivial ones first, in (length, letter order) order.

    Without ``max_length`` the search must terminate on its own; hitting
    ``max_words`` then raises :class:`EnumerationCapError`.
    """
    if isinstance(sa, AlgebraPresentation):
        sa = StringAlgebra(sa)
    out = [StringWord(v) for v in sa.pres.vertices]
    seen: set[StringWord] = set()
    layer = [(x,) for x in sa.letters]
    length = 1
    while layer and (max_length is None or length <= max_length):
        for w in layer:
            c = sa.canonical(w)
            if c not in seen:
                seen.add(c)
                out.append(c)
        if len(out) > max_words:
            raise EnumerationCapError(f"more than {max_words} strings; presumed infinite type")
        layer = [w + (x,) for w in layer for x in sa.starting[sa.target(w[-1])] if sa.can_append(w, x)]
        length += 1
    nontrivial = sorted(out[len(sa.pres.vertices):], key=lambda s: sa.word_key(s.letters))
    return out[:len(sa.pres.vertices)] + nontrivial


def _state_graph(sa: StringAlgebra) -> nx.DiGraph:
    """States are strings of length ``max_rel - 1``; edges append one letter."""
    k = max(sa.max_rel - 1, 1)
    states = [(x,) for x in sa.letters]
    for _ in range(k - 1):
        states = [w + (x,) for w in states for x in sa.starting[sa.target(w[-1])] if sa.can_append(w, x)]
    g = nx.DiGraph()
    g.add_nodes_from(states)
    for s in states:
        for x in sa.starting[sa.target(s[-1])]:
            if sa.can_append(s, x):
                g.add_edge(s, (s + (x,))[-k:], letter=x)
    return g


def _primitive_root(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return letters[:d]
    return letters


def _cycle_word(g: nx.DiGraph, cycle: list) -> tuple[Letter, ...]:
    return tuple(g.edges[cycle[k], cycle[(k + 1) % len(cycle)]]["letter"] for k in range(len(cycle)))


def _normalize_band(sa: StringAlgebra, letters: tuple[Letter, ...]) -> StringWord:
    """Least rotation of the band or its inverse."""
    rots = []
    for w in (letters, sa.inverse(letters)):
        rots += [w[k:] + w[:k] for k in range(len(w))]
    best = min(rots, key=sa.word_key)
    return StringWord(sa.source(best[0]), best)


def detect_bands(sa: StringAlgebra | AlgebraPresentation) -> StringWord | None:
    """A band witness if infinitely many strings exist, else ``None``."""
    if isinstance(sa, AlgebraPresentation):
        sa = StringAlgebra(sa)
    g = _state_graph(sa)
    try:
        cyc = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        return None
    nodes = [u for u, _ in cyc]
    word = _primitive_root(_cycle_word(g, nodes))
    if all(s > 0 for _, s in word) or all(s < 0 for _, s in word):
        raise ValidationError("an oriented cycle avoids every relation; the presentation is not admissible")
    return _normalize_band(sa, word)


def band_module(pres: AlgebraPresentation, band: StringWord, lam=1, label: str = "") -> RepModule:
    """The one-dimensional-parameter band module ``M(band, lam, 1)``."""
    q = pres.quiver
    letters = band.letters
    verts = []
    for a, s in letters:
        arr = q.arrow(a)
        verts.append(arr.source if s > 0 else arr.target)
    return _walk_module(pres, verts, letters, cyclic=True, lam=Fraction(lam),
                        label=label or f"band({band})")


def _walk_module(pres, verts, letters, *, cyclic, lam=Fraction(1), label=""):
    index = {}
    count = {v: 0 for v in pres.vertices}
    for t, v in enumerate(verts):
        index[t] = count[v]
        count[v] += 1
    entries: dict[str, list] = {a.name: [] for a in pres.quiver.arrows}
    npos = len(verts)
    for t, (a, s) in enumerate(letters, start=1):
        prev, cur = t - 1, t % npos if cyclic else t
        scale = lam if (cyclic and t == len(letters)) else Fraction(1)
        if s > 0:
            entries[a].append((index[prev], index[cur], scale))
        else:
            entries[a].append((index[cur], index[prev], scale))
    maps = {}
    for arr in pres.quiver.arrows:
        rows = [[Fraction(0)] * count[arr.target] for _ in range(count[arr.source])]
        for r, c, x in entries[arr.name]:
            rows[r][c] += x
        maps[arr.name] = Matrix(rows, count[arr.target])
    return RepModule(pres, count, maps, label=label)


def string_module(pres: AlgebraPresentation, word: StringWord, label: str = "") -> RepModule:
    """Basis ``z_0 .. z_L``; a direct letter sends ``z_{t-1}`` to ``z_t``, an inverse one the reverse."""
    if not word.letters:
        return _walk_module(pres, [word.vertex], (), cyclic=False, label=label or str(word))
    q = pres.quiver
    verts = [word.vertex]
    for a, s in word.letters:
        arr = q.arrow(a)
        verts.append(arr.target if s > 0 else arr.source)
    return _walk_module(pres, verts, word.letters, cyclic=False, label=label or str(word))


def brick_band(pres: AlgebraPresentation, *, length_bound: int | None = None,
               max_candidates: int = 5000) -> StringWord | None:
    """A band whose band module has one-dimensional endomorphisms, searched up to a length bound."""
    sq = string_quotient(pres) if pres.relations.binomials else pres
    sa = StringAlgebra(sq)
    g = _state_graph(sa)
    if length_bound is None:
        length_bound = 2 * len(pres.quiver.arrows) + 2
    seen = set()
    for cyc in islice(nx.simple_cycles(g, length_bound=length_bound), max_candidates):
        word = _primitive_root(_cycle_word(g, cyc))
        if all(s > 0 for _, s in word) or all(s < 0 for _, s in word):
            continue
        band = _normalize_band(sa, word)
        if band in seen:
            continue
        seen.add(band)
        m = band_module(sq, band)
        if hom_dim(m, m) == 1:
            return band
    return None
