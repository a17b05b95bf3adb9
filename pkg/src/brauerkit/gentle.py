"""Gentle and special biserial checks, maximal paths, and quiver shapes."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .presentation import AlgebraPresentation, Path, ValidationError


class NotGentleError(ValidationError):
    pass


@dataclass(frozen=True)
class Violation:
    condition: str  # "degree" | "in-ideal" | "outside-ideal" | "relations"
    where: str
    message: str


@dataclass(frozen=True)
class GentleReport:
    is_special_biserial: bool
    is_gentle: bool
    violations: tuple[Violation, ...] = ()


def _nonzero_continuations(pres: AlgebraPresentation, name: str) -> tuple[list[str], list[str]]:
    q = pres.quiver
    a = q.arrow(name)
    after = [b.name for b in q.out_arrows(a.target) if not pres.is_zero_path(q.path([a.name, b.name]))]
    before = [c.name for c in q.in_arrows(a.source) if not pres.is_zero_path(q.path([c.name, a.name]))]
    return after, before


def check_gentle(pres: AlgebraPresentation) -> GentleReport:
    q = pres.quiver
    rels = pres.relations
    viol: list[Violation] = []
    sb_ok = True

    for v in q.vertices:
        nin, nout = len(q.in_arrows(v)), len(q.out_arrows(v))
        if nin > 2 or nout > 2:
            viol.append(Violation("degree", v, f"vertex {v} has {nin} incoming and {nout} outgoing arrows"))
            sb_ok = False

    # special biserial: at most one nonzero continuation on each side, in the algebra
    for a in q.arrows:
        after, before = _nonzero_continuations(pres, a.name)
        if len(after) > 1 or len(before) > 1:
            sb_ok = False

    length2 = {p.arrows for p in rels.monomials if len(p) == 2}
    if rels.binomials or any(len(p) != 2 for p in rels.monomials):
        viol.append(Violation("relations", "-", "relations must be monomials of length 2"))
    for a in q.arrows:
        in_after = [b.name for b in q.out_arrows(a.target) if (a.name, b.name) in length2]
        out_after = [b.name for b in q.out_arrows(a.target) if (a.name, b.name) not in length2]
        in_before = [c.name for c in q.in_arrows(a.source) if (c.name, a.name) in length2]
        out_before = [c.name for c in q.in_arrows(a.source) if (c.name, a.name) not in length2]
        if len(in_after) > 1 or len(in_before) > 1:
            viol.append(Violation("in-ideal", a.name,
                                  f"arrow {a.name} has more than one composition inside the ideal on one side"))
        if len(out_after) > 1 or len(out_before) > 1:
            viol.append(Violation("outside-ideal", a.name,
                                  f"arrow {a.name} has more than one composition outside the ideal on one side"))
    return GentleReport(is_special_biserial=sb_ok, is_gentle=not viol, violations=tuple(viol))


def is_gentle(pres: AlgebraPresentation) -> bool:
    return check_gentle(pres).is_gentle


def path_vertices(p: Path, pres: AlgebraPresentation) -> list[str]:
    """Vertex sequence visited by ``p`` (a single vertex for trivial paths)."""
    out = [p.source]
    for name in p.arrows:
        out.append(pres.quiver.arrow(name).target)
    return out


@dataclass(frozen=True)
class MaximalPathSet:
    maximal: tuple[Path, ...]
    trivial_marks: tuple[str, ...]  # a vertex id may repeat only for the one-vertex, arrow-free quiver

    @property
    def combined(self) -> tuple[Path, ...]:
        return self.maximal + tuple(Path(v, v, ()) for v in self.trivial_marks)


def maximal_paths(pres: AlgebraPresentation) -> MaximalPathSet:
    """The maximal nonzero paths of a gentle algebra plus the trivial-path set."""
    if not is_gentle(pres):
        raise NotGentleError("maximal paths are only defined here for gentle presentations")
    q = pres.quiver
    rel = {p.arrows for p in pres.relations.monomials}

    def nxt(name: str) -> str | None:
        a = q.arrow(name)
        cont = [b.name for b in q.out_arrows(a.target) if (name, b.name) not in rel]
        return cont[0] if cont else None

    starts = [a.name for a in q.arrows
              if all((c.name, a.name) in rel for c in q.in_arrows(a.source))]
    maximal = []
    for s in starts:
        walk = [s]
        while (b := nxt(walk[-1])) is not None:
            walk.append(b)
            if len(walk) > pres.cutoff:
                raise ValidationError("maximal path search ran past the admissibility cutoff")
        maximal.append(q.path(walk))

    marks = []
    for v in q.vertices:
        ins, outs = q.in_arrows(v), q.out_arrows(v)
        if not ins and len(outs) == 1:
            marks.append(v)
        elif not outs and len(ins) == 1:
            marks.append(v)
        elif len(ins) == 1 and len(outs) == 1 and (ins[0].name, outs[0].name) not in rel:
            marks.append(v)
        elif not ins and not outs:
            marks += [v, v]  # the algebra K: the lone vertex sits in two trivial paths
    mps = MaximalPathSet(tuple(maximal), tuple(marks))
    _check_maximal_invariants(pres, mps)
    return mps


def _check_maximal_invariants(pres: AlgebraPresentation, mps: MaximalPathSet) -> None:
    arrow_count = Counter(a for p in mps.maximal for a in p.arrows)
    for a in pres.quiver.arrows:
        if arrow_count[a.name] != 1:
            raise ValidationError(f"arrow {a.name} lies in {arrow_count[a.name]} maximal paths")
    occ = Counter(v for p in mps.combined for v in path_vertices(p, pres))
    for v in pres.vertices:
        if occ[v] != 2:
            raise ValidationError(f"vertex {v} occurs {occ[v]} times in the maximal path set")


def rad_square_zero(pres: AlgebraPresentation) -> bool:
    q = pres.quiver
    return all(pres.is_zero_path(q.path([a.name, b.name]))
               for a in q.arrows for b in q.out_arrows(a.target))


class Shape(str, Enum):
    LINEAR_A = "LinearAOriented"
    TYPE_A_TREE = "TypeATree"
    GENERAL_TREE = "GeneralTree"
    TILDE_A_CYCLE = "TildeACycle"
    OTHER = "Other"


@dataclass(frozen=True)
class QuiverShape:
    shape: Shape
    branching_witness: str | None = None


def underlying_degrees(pres: AlgebraPresentation) -> dict[str, int]:
    deg = {v: 0 for v in pres.vertices}
    for a in pres.quiver.arrows:
        deg[a.source] += 1
        deg[a.target] += 1
    return deg


def quiver_shape(pres: AlgebraPresentation) -> QuiverShape:
    q = pres.quiver
    nv, na = len(q.vertices), len(q.arrows)
    deg = underlying_degrees(pres)
    witness = next((v for v in q.vertices if deg[v] >= 3), None)
    has_loop = any(a.source == a.target for a in q.arrows)
    if na == nv - 1 and not has_loop:  # connected, so a tree
        if witness is not None:
            return QuiverShape(Shape.GENERAL_TREE, witness)
        linear = all(len(q.in_arrows(v)) <= 1 and len(q.out_arrows(v)) <= 1 for v in q.vertices)
        if linear and pres.relations.is_empty:
            return QuiverShape(Shape.LINEAR_A)
        return QuiverShape(Shape.TYPE_A_TREE)
    if na == nv and nv >= 2 and not has_loop and all(d == 2 for d in deg.values()):
        return QuiverShape(Shape.TILDE_A_CYCLE)
    return QuiverShape(Shape.OTHER, witness)


def is_tree(pres: AlgebraPresentation) -> bool:
    return quiver_shape(pres).shape in (Shape.LINEAR_A, Shape.TYPE_A_TREE, Shape.GENERAL_TREE)
