"""Explicit representations: projectives, Hom spaces, syzygies and the AR translate.

A module assigns a vector space to each vertex and a matrix to each arrow.
Vectors are rows, so an arrow ``a: i -> j`` is a ``dim_i x dim_j`` matrix and
the path ``a b`` acts by the product ``M_a @ M_b``.  These are right modules.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Matrix, Row, complement_basis, coordinates, left_kernel, row_space, sparse_nullspace
from .presentation import AlgebraPresentation, Path


class ModuleError(ValueError):
    pass


class RepModule:
    """A finite-dimensional right module over a presentation."""

    __slots__ = ("pres", "dims", "maps", "label", "_path_cache")

    def __init__(self, pres: AlgebraPresentation, dims: dict[str, int] | Sequence[int],
                 maps: dict[str, Matrix] | None = None, label: str = "", check: bool = True):
        self.pres = pres
        if isinstance(dims, dict):
            dims = tuple(int(dims.get(v, 0)) for v in pres.vertices)
        self.dims: tuple[int, ...] = tuple(dims)
        if len(self.dims) != len(pres.vertices):
            raise ModuleError("dimension vector has the wrong length")
        maps = dict(maps or {})
        full = {}
        for a in pres.quiver.arrows:
            shape = (self.dim(a.source), self.dim(a.target))
            m = maps.pop(a.name, None)
            if m is None:
                m = Matrix.zeros(*shape)
            if m.shape != shape:
                raise ModuleError(f"matrix for arrow {a.name} has shape {m.shape}, expected {shape}")
            full[a.name] = m
        if maps:
            raise ModuleError(f"matrices given for unknown arrows {sorted(maps)}")
        self.maps: dict[str, Matrix] = full
        self.label = label
        self._path_cache: dict[tuple[str, ...], Matrix] = {}
        if check:
            self.check_relations()

    def dim(self, v: str) -> int:
        return self.dims[self.pres.quiver.vertex_index[v]]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def dim_vector(self) -> dict[str, int]:
        return dict(zip(self.pres.vertices, self.dims))

    def __repr__(self) -> str:
        lab = f" {self.label}" if self.label else ""
        return f"<RepModule{lab} dims={self.dims}>"

    def path_matrix(self, p: Path) -> Matrix:
        if p.is_trivial:
            return Matrix.identity(self.dim(p.source))
        m = self._path_cache.get(p.arrows)
        if m is None:
            m = self.maps[p.arrows[0]]
            for a in p.arrows[1:]:
                m = m @ self.maps[a]
            self._path_cache[p.arrows] = m
        return m

    def check_relations(self) -> None:
        rel = self.pres.relations
        for p in rel.monomials:
            if not self.path_matrix(p).is_zero():
                raise ModuleError(f"relation {p} does not vanish on {self.label or 'module'}")
        for p, q in rel.binomials:
            if self.path_matrix(p) != self.path_matrix(q):
                raise ModuleError(f"binomial {p} = {q} fails on {self.label or 'module'}")

    def dump(self) -> str:
        """Diagnostic text: dimension vector then one matrix per arrow."""
        lines = [f"module {self.label or '?'}", "dims: " + " ".join(f"{v}:{d}" for v, d in
                                                                  zip(self.pres.vertices, self.dims))]
        for a in self.pres.quiver.arrows:
            m = self.maps[a.name]
            if m.nrows and m.ncols:
                lines.append(f"{a.name}: " + " | ".join(" ".join(str(x) for x in r) for r in m.rows))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ModuleMap:
    source: RepModule
    target: RepModule
    mats: dict[str, Matrix]

    def is_iso(self) -> bool:
        return all(m.nrows == m.ncols and m.rank() == m.nrows for m in self.mats.values())

    def check(self) -> None:
        for a in self.source.pres.quiver.arrows:
            lhs = self.mats[a.source] @ self.target.maps[a.name]
            rhs = self.source.maps[a.name] @ self.mats[a.target]
            if lhs != rhs:
                raise ModuleError(f"map does not intertwine arrow {a.name}")


# ---------------------------------------------------------------------- basic modules

def zero_module(pres: AlgebraPresentation) -> RepModule:
    return RepModule(pres, [0] * len(pres.vertices), label="0", check=False)


def simple_module(pres: AlgebraPresentation, i: str) -> RepModule:
    return RepModule(pres, {i: 1}, label=f"S{i}")


def projective_at(pres: AlgebraPresentation, i: str) -> RepModule:
    """``e_i A`` with basis the normal-form paths starting at ``i``."""
    if i not in pres.quiver.vertex_index:
        raise ModuleError(f"unknown vertex {i!r}")
    bases = {j: pres.basis(i, j) for j in pres.vertices}
    maps = {}
    for a in pres.quiver.arrows:
        src, tgt = bases[a.source], bases[a.target]
        col = {b: k for k, b in enumerate(tgt)}
        rows = []
        for b in src:
            r = [Fraction(0)] * len(tgt)
            for t, c in pres.act({b: Fraction(1)}, a.name).items():
                r[col[t]] = c
            rows.append(r)
        maps[a.name] = Matrix(rows, len(tgt))
    return RepModule(pres, {j: len(bases[j]) for j in pres.vertices}, maps, label=f"P{i}")


def direct_sum(mods: Sequence[RepModule], pres: AlgebraPresentation | None = None) -> RepModule:
    if not mods:
        if pres is None:
            raise ModuleError("empty direct sum needs a presentation")
        return zero_module(pres)
    pres = mods[0].pres
    dims = [sum(m.dims[k] for m in mods) for k in range(len(pres.vertices))]
    maps = {}
    for a in pres.quiver.arrows:
        nc = sum(m.dim(a.target) for m in mods)
        rows = []
        off = 0
        for m in mods:
            for r in m.maps[a.name].rows:
                rows.append([Fraction(0)] * off + list(r) + [Fraction(0)] * (nc - off - len(r)))
            off += m.dim(a.target)
        maps[a.name] = Matrix(rows, nc)
    return RepModule(pres, dims, maps, label=" + ".join(m.label for m in mods), check=False)


# ---------------------------------------------------------------------- Hom

def _check_same(m: RepModule, n: RepModule) -> None:
    if m.pres is not n.pres and m.pres != n.pres:
        raise ModuleError("modules live over different presentations")


def hom_basis(m: RepModule, n: RepModule) -> list[ModuleMap]:
    """Basis of ``Hom(M, N)``: solutions of ``f_i N_a = M_a f_j`` for every arrow."""
    _check_same(m, n)
    pres = m.pres
    offset = {}
    total = 0
    for v in pres.vertices:
        offset[v] = total
        total += m.dim(v) * n.dim(v)
    if total == 0:
        return []

    def var(v, r, c):
        return offset[v] + r * n.dim(v) + c

    eqs = []
    for a in pres.quiver.arrows:
        i, j = a.source, a.target
        ma, na = m.maps[a.name], n.maps[a.name]
        for r in range(m.dim(i)):
            for c2 in range(n.dim(j)):
                eq: dict[int, Fraction] = {}
                for c in range(n.dim(i)):
                    x = na.rows[c][c2]
                    if x:
                        k = var(i, r, c)
                        eq[k] = eq.get(k, 0) + x
                for r2 in range(m.dim(j)):
                    x = ma.rows[r][r2]
                    if x:
                        k = var(j, r2, c2)
                        eq[k] = eq.get(k, 0) - x
                if eq:
                    eqs.append(eq)
    sols = sparse_nullspace(eqs, total)
    out = []
    for s in sols:
        mats = {}
        for v in pres.vertices:
            dm, dn = m.dim(v), n.dim(v)
            o = offset[v]
            mats[v] = Matrix([s[o + r * dn: o + (r + 1) * dn] for r in range(dm)], dn)
        out.append(ModuleMap(m, n, mats))
    return out


def hom_dim(m: RepModule, n: RepModule) -> int:
    return len(hom_basis(m, n))


# ---------------------------------------------------------------------- sub and quotient modules

def radical_rows(m: RepModule) -> dict[str, list[Row]]:
    rows: dict[str, list] = {v: [] for v in m.pres.vertices}
    for a in m.pres.quiver.arrows:
        rows[a.target].extend(m.maps[a.name].rows)
    return {v: row_space(rs, m.dim(v)) for v, rs in rows.items()}


def top_generators(m: RepModule) -> list[tuple[str, Row]]:
    """Vectors whose classes form a basis of ``M / rad M``, vertex by vertex."""
    rad = radical_rows(m)
    gens = []
    for v in m.pres.vertices:
        for g in complement_basis(rad[v], m.dim(v)):
            gens.append((v, g))
    return gens


def submodule(m: RepModule, rows: dict[str, Sequence[Row]], label: str = "") -> RepModule:
    """The submodule with the given (independent) basis rows at each vertex."""
    maps = {}
    for a in m.pres.quiver.arrows:
        src, tgt = rows[a.source], rows[a.target]
        images = [m.maps[a.name].row_vector(r) for r in src]
        maps[a.name] = Matrix([coordinates(x, tgt) for x in images], len(tgt))
    return RepModule(m.pres, {v: len(rows[v]) for v in m.pres.vertices}, maps, label=label, check=False)


def quotient_module(m: RepModule, rows: dict[str, Sequence[Row]], label: str = "") -> RepModule:
    """``M / N`` where ``N`` is spanned by ``rows`` (assumed to be a submodule)."""
    sub = {v: row_space(rows.get(v, ()), m.dim(v)) for v in m.pres.vertices}
    comp = {v: complement_basis(sub[v], m.dim(v)) for v in m.pres.vertices}
    maps = {}
    for a in m.pres.quiver.arrows:
        basis = list(sub[a.target]) + list(comp[a.target])
        k = len(sub[a.target])
        out = []
        for c in comp[a.source]:
            x = m.maps[a.name].row_vector(c)
            out.append(coordinates(x, basis)[k:])
        maps[a.name] = Matrix(out, len(comp[a.target]))
    return RepModule(m.pres, {v: len(comp[v]) for v in m.pres.vertices}, maps, label=label, check=False)


# ---------------------------------------------------------------------- projective presentations

@dataclass(frozen=True)
class ProjectiveCover:
    summands: tuple[str, ...]                 # vertex of each indecomposable projective summand
    generators: tuple[Row, ...]               # image of e_{i_s} in M
    projective: RepModule                      # the direct sum P0
    blocks: dict[str, list[tuple[int, Path]]]  # basis of P0 at each vertex: (summand, path)
    surjection: dict[str, Matrix]              # P0_v -> M_v
    kernel_rows: dict[str, list[Row]]          # kernel basis in P0 coordinates


def projective_cover(m: RepModule) -> ProjectiveCover:
    pres = m.pres
    gens = top_generators(m)
    summands = tuple(v for v, _ in gens)
    projective = direct_sum([projective_at(pres, v) for v in summands], pres)
    blocks: dict[str, list[tuple[int, Path]]] = {}
    surj: dict[str, Matrix] = {}
    kernel: dict[str, list[Row]] = {}
    for j in pres.vertices:
        blk = [(s, b) for s, i in enumerate(summands) for b in pres.basis(i, j)]
        blocks[j] = blk
        rows = [m.path_matrix(b).row_vector(gens[s][1]) for s, b in blk]
        mat = Matrix(rows, m.dim(j))
        surj[j] = mat
        kernel[j] = left_kernel(mat)
    return ProjectiveCover(summands, tuple(g for _, g in gens), projective, blocks, surj, kernel)


def syzygy(m: RepModule) -> RepModule:
    """Kernel of the projective cover of ``M``."""
    if m.is_zero():
        raise ModuleError("syzygy of the zero module")
    cov = projective_cover(m)
    return submodule(cov.projective, cov.kernel_rows, label=f"Omega({m.label})")


@dataclass(frozen=True)
class ProjectivePresentation:
    p0: tuple[str, ...]
    p1: tuple[str, ...]
    # components[t][s] is the element of e_{p0[s]} A e_{p1[t]} mapping e_{p1[t]} into summand s
    components: tuple[tuple[dict, ...], ...]


def minimal_projective_presentation(m: RepModule) -> ProjectivePresentation:
    if m.is_zero():
        raise ModuleError("projective presentation of the zero module")
    cov = projective_cover(m)
    k = submodule(cov.projective, cov.kernel_rows)
    p1 = []
    comps = []
    for j, g in top_generators(k):
        vec = Matrix(cov.kernel_rows[j], cov.projective.dim(j)).row_vector(g)
        elems = [dict() for _ in cov.summands]
        for coeff, (s, b) in zip(vec, cov.blocks[j]):
            if coeff:
                elems[s][b] = elems[s].get(b, Fraction(0)) + coeff
        p1.append(j)
        comps.append(tuple(elems))
    return ProjectivePresentation(cov.summands, tuple(p1), tuple(comps))


def is_projective(m: RepModule) -> bool:
    if m.is_zero():
        return True
    return all(not rows for rows in projective_cover(m).kernel_rows.values())


def _reverse_element(x: dict, op: AlgebraPresentation) -> dict:
    out: dict = {}
    for p, c in x.items():
        rp = Path(p.target, p.source, tuple(reversed(p.arrows)))
        for b, d in op.normal_form(rp).items():
            v = out.get(b, Fraction(0)) + c * d
            if v:
                out[b] = v
            else:
                out.pop(b, None)
    return out


def transpose(m: RepModule) -> RepModule:
    """``Tr M``: cokernel of ``Hom(P0, A) -> Hom(P1, A)``, as a module over the opposite algebra."""
    op = m.pres.opposite()
    pp = minimal_projective_presentation(m)
    if not pp.p1:
        return zero_module(op)
    target = direct_sum([projective_at(op, j) for j in pp.p1], op)
    xop = [[_reverse_element(pp.components[t][s], op) for t in range(len(pp.p1))]
           for s in range(len(pp.p0))]
    image: dict[str, list[Row]] = {}
    for k in op.vertices:
        tgt = [(t, b) for t, j in enumerate(pp.p1) for b in op.basis(j, k)]
        col = {key: c for c, key in enumerate(tgt)}
        rows = []
        for s, i in enumerate(pp.p0):
            for b in op.basis(i, k):
                r = [Fraction(0)] * len(tgt)
                for t in range(len(pp.p1)):
                    prod = op.multiply(xop[s][t], {b: Fraction(1)})
                    for path, c in prod.items():
                        r[col[(t, path)]] += c
                rows.append(r)
        image[k] = rows
    return quotient_module(target, image, label=f"Tr({m.label})")


def dual(n: RepModule, pres: AlgebraPresentation) -> RepModule:
    """Vertex-wise linear dual of a module over ``pres^op``, as a module over ``pres``."""
    maps = {a.name: n.maps[a.name].transpose() for a in pres.quiver.arrows}
    return RepModule(pres, n.dims, maps, check=False)


def tau(m: RepModule) -> RepModule:
    """Auslander-Reiten translate ``D Tr M``; zero exactly on projectives."""
    if m.is_zero():
        raise ModuleError("tau of the zero module")
    t = dual(transpose(m), m.pres)
    t.label = f"tau({m.label})"
    t.check_relations()
    return t


# ---------------------------------------------------------------------- Fac and isomorphism

def trace_rows(ms: Iterable[RepModule], x: RepModule) -> dict[str, list[Row]]:
    rows: dict[str, list] = {v: [] for v in x.pres.vertices}
    for m in ms:
        for f in hom_basis(m, x):
            for v in x.pres.vertices:
                rows[v].extend(f.mats[v].rows)
    return {v: row_space(rs, x.dim(v)) for v, rs in rows.items()}


def fac_contains(m: RepModule | Sequence[RepModule], x: RepModule) -> bool:
    """Whether ``X`` is a quotient of a finite direct sum of copies of ``M``."""
    ms = [m] if isinstance(m, RepModule) else list(m)
    for y in ms:
        _check_same(y, x)
    if x.is_zero():
        return True
    tr = trace_rows(ms, x)
    return all(len(tr[v]) == x.dim(v) for v in x.pres.vertices)


_ISO_TRIALS = ((1,), (1, 2), (1, 3, 9), (2, 5, 7, 11), (1, -1, 2, -3, 5))


def is_isomorphic(m: RepModule, n: RepModule) -> bool:
    _check_same(m, n)
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    fs = hom_basis(m, n)
    if not fs or not hom_basis(n, m):
        return False
    for trial in _ISO_TRIALS:
        for shift in range(3):
            coeffs = [trial[(k + shift) % len(trial)] * (k + 1) ** shift for k in range(len(fs))]
            mats = {}
            for v in m.pres.vertices:
                acc = Matrix.zeros(m.dim(v), n.dim(v))
                for c, f in zip(coeffs, fs):
                    acc = acc + f.mats[v].scale(c)
                mats[v] = acc
            if ModuleMap(m, n, mats).is_iso():
                return True
    return False
