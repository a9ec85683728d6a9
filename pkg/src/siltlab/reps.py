"""Finite-dimensional representations of a quotient path algebra.

A representation assigns a vector space over F_p to each vertex and a
matrix to each arrow; a morphism is a family of vertex matrices making
every arrow square commute.  Kernels, images, cokernels, direct sums,
Hom spaces and isomorphism testing all reduce to exact linear algebra.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import linalg
from .linalg import MalformedInputError
from .pathalg import Algebra, Path


class AlgebraMismatchError(ValueError):
    """Operands live over different algebras."""


class UndecidableError(RuntimeError):
    """A decision procedure refused rather than guess."""


class Representation:
    """Immutable by convention: never mutate dims or arrow_maps."""

    def __init__(self, algebra: Algebra, dims, arrow_maps, name: str = ""):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.arrow_maps = tuple(
            linalg.reduce_mod(m, algebra.p) for m in arrow_maps
        )
        self.name = name
        self._cache: dict = {}
        if len(self.dims) != algebra.n_vertices:
            raise MalformedInputError("dimension vector has wrong length")
        if len(self.arrow_maps) != len(algebra.quiver.arrows):
            raise MalformedInputError("one matrix per arrow required")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def vdim(self, v: str) -> int:
        return self.dims[self.algebra.quiver.vertex_index(v)]

    def path_action(self, path: Path) -> np.ndarray:
        """Matrix of the path's action, M_end x M_start."""
        alg = self.algebra
        q = alg.quiver
        mat = linalg.identity(self.vdim(path.start))
        for ai in path.arrows:
            mat = linalg.matmul(self.arrow_maps[ai], mat, alg.p)
        return mat

    def __repr__(self):
        tag = self.name or "rep"
        return f"<{tag} dims={self.dims}>"


class Morphism:
    def __init__(self, source: Representation, target: Representation,
                 vertex_maps):
        if source.algebra is not target.algebra:
            raise AlgebraMismatchError("morphism across different algebras")
        self.source = source
        self.target = target
        self.vertex_maps = tuple(
            linalg.reduce_mod(m, source.algebra.p) for m in vertex_maps
        )
        for i, m in enumerate(self.vertex_maps):
            if m.shape != (target.dims[i], source.dims[i]):
                raise MalformedInputError(
                    f"vertex map {i} has shape {m.shape}, expected "
                    f"{(target.dims[i], source.dims[i])}"
                )

    def is_natural(self) -> bool:
        alg = self.source.algebra
        for ai, arrow in enumerate(alg.quiver.arrows):
            u = alg.quiver.vertex_index(arrow.source)
            w = alg.quiver.vertex_index(arrow.target)
            lhs = linalg.matmul(self.target.arrow_maps[ai],
                                self.vertex_maps[u], alg.p)
            rhs = linalg.matmul(self.vertex_maps[w],
                                self.source.arrow_maps[ai], alg.p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_zero(self) -> bool:
        return all(not m.any() for m in self.vertex_maps)

    def is_mono(self) -> bool:
        p = self.source.algebra.p
        return all(linalg.rank(m, p) == m.shape[1] for m in self.vertex_maps)

    def is_epi(self) -> bool:
        p = self.source.algebra.p
        return all(linalg.rank(m, p) == m.shape[0] for m in self.vertex_maps)

    def is_iso(self) -> bool:
        return (self.source.dims == self.target.dims and self.is_mono()
                and self.is_epi())

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        if other.target is not self.source and (
            other.target.dims != self.source.dims
        ):
            raise MalformedInputError("composition shape mismatch")
        p = self.source.algebra.p
        maps = [linalg.matmul(f, g, p)
                for f, g in zip(self.vertex_maps, other.vertex_maps)]
        return Morphism(other.source, self.target, maps)

    def __add__(self, other: "Morphism") -> "Morphism":
        p = self.source.algebra.p
        maps = [(f + g) % p
                for f, g in zip(self.vertex_maps, other.vertex_maps)]
        return Morphism(self.source, self.target, maps)

    def scale(self, c: int) -> "Morphism":
        p = self.source.algebra.p
        return Morphism(self.source, self.target,
                        [(c * m) % p for m in self.vertex_maps])

    def flatten(self) -> np.ndarray:
        if not self.vertex_maps:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([m.reshape(-1) for m in self.vertex_maps])


def zero_representation(algebra: Algebra) -> Representation:
    n = algebra.n_vertices
    dims = [0] * n
    maps = []
    for arrow in algebra.quiver.arrows:
        maps.append(linalg.zeros(0, 0))
    return Representation(algebra, dims, maps, name="0")


def zero_morphism(source: Representation, target: Representation) -> Morphism:
    maps = [linalg.zeros(target.dims[i], source.dims[i])
            for i in range(len(source.dims))]
    return Morphism(source, target, maps)


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, [linalg.identity(d) for d in m.dims])


# ---------------------------------------------------------------------------
# validation


def validate(m: Representation) -> list[str]:
    """Empty list when the representation is well-formed."""
    problems: list[str] = []
    alg = m.algebra
    q = alg.quiver
    for ai, arrow in enumerate(q.arrows):
        u = q.vertex_index(arrow.source)
        w = q.vertex_index(arrow.target)
        mat = m.arrow_maps[ai]
        if mat.shape != (m.dims[w], m.dims[u]):
            problems.append(
                f"arrow {arrow.name}: matrix shape {mat.shape}, expected "
                f"{(m.dims[w], m.dims[u])}"
            )
    if problems:
        return problems
    for rel in alg.relations.relations:
        acc = None
        for coeff, path in rel:
            term = (coeff * m.path_action(path)) % alg.p
            acc = term if acc is None else (acc + term) % alg.p
        if acc is not None and acc.any():
            labels = " + ".join(
                f"{c}*{path.label(q)}" for c, path in rel
            )
            problems.append(f"relation {labels} acts nontrivially")
    return problems


# ---------------------------------------------------------------------------
# standard modules


def simple_module(algebra: Algebra, v: str) -> Representation:
    q = algebra.quiver
    vi = q.vertex_index(v)
    dims = [1 if i == vi else 0 for i in range(algebra.n_vertices)]
    maps = []
    for arrow in q.arrows:
        u = q.vertex_index(arrow.source)
        w = q.vertex_index(arrow.target)
        maps.append(linalg.zeros(dims[w], dims[u]))
    return Representation(algebra, dims, maps, name=f"S({v})")


def projective_module(algebra: Algebra, v: str) -> Representation:
    """Re_v: basis the classes of paths with source v."""
    q = algebra.quiver
    paths = algebra.paths_from(v)
    by_vertex: dict[str, list[int]] = {u: [] for u in q.vertices}
    for bi, path in paths:
        by_vertex[path.end_in(q)].append(bi)
    dims = [len(by_vertex[u]) for u in q.vertices]
    maps = []
    for arrow in q.arrows:
        src_list = by_vertex[arrow.source]
        tgt_list = by_vertex[arrow.target]
        arrow_class = algebra.basis_index[
            Path(arrow.source, (q.arrow_index(arrow.name),))
        ]
        mat = linalg.zeros(len(tgt_list), len(src_list))
        for col, bi in enumerate(src_list):
            prod = algebra.mult(arrow_class, bi)
            for row, bj in enumerate(tgt_list):
                mat[row, col] = prod[bj]
        maps.append(mat)
    return Representation(algebra, dims, maps, name=f"P({v})")


def injective_module(algebra: Algebra, v: str) -> Representation:
    """Dual of e_v R: basis dual to the classes of paths with target v."""
    q = algebra.quiver
    paths = algebra.paths_into(v)
    by_vertex: dict[str, list[int]] = {u: [] for u in q.vertices}
    for bi, path in paths:
        by_vertex[path.start].append(bi)
    dims = [len(by_vertex[u]) for u in q.vertices]
    maps = []
    for arrow in q.arrows:
        # transpose of right multiplication by the arrow:
        # paths target->v  composed with the arrow give paths source->v
        arrow_class_path = Path(arrow.source, (q.arrow_index(arrow.name),))
        src_list = by_vertex[arrow.source]  # paths source -> v
        tgt_list = by_vertex[arrow.target]  # paths target -> v
        rm = linalg.zeros(len(src_list), len(tgt_list))
        arrow_ci = algebra.basis_index[arrow_class_path]
        for col, bi in enumerate(tgt_list):
            prod = algebra.mult(bi, arrow_ci)  # traverse arrow, then path
            for row, bj in enumerate(src_list):
                rm[row, col] = prod[bj]
        maps.append(rm.T.copy())
    return Representation(algebra, dims, maps, name=f"I({v})")


def injective_layout(algebra: Algebra, v: str) -> dict[str, list[Path]]:
    """Paths with target v grouped by source, in the basis order used by
    injective_module's coordinate spaces."""
    by_vertex: dict[str, list[Path]] = {u: [] for u in algebra.vertices}
    for _, path in algebra.paths_into(v):
        by_vertex[path.start].append(path)
    return by_vertex


def regular_module(algebra: Algebra) -> Representation:
    reps = [projective_module(algebra, v) for v in algebra.vertices]
    summed, _, _ = direct_sum(algebra, reps)
    summed.name = "R"
    return summed


def standard_module(algebra: Algebra, v: str, kind: str) -> Representation:
    if kind == "simple":
        return simple_module(algebra, v)
    if kind == "projective":
        return projective_module(algebra, v)
    if kind == "injective":
        return injective_module(algebra, v)
    raise MalformedInputError(f"unknown standard module kind {kind!r}")


def projective_generator_position(algebra: Algebra, v: str) -> int:
    """Row index of e_v inside P(v)'s space at vertex v."""
    q = algebra.quiver
    paths = algebra.paths_from(v)
    at_v = [bi for bi, path in paths if path.end_in(q) == v]
    return at_v.index(algebra.trivial_path_index(v))


def hom_from_projective(algebra: Algebra, v: str, pv: Representation,
                        target: Representation, x: np.ndarray) -> Morphism:
    """The morphism P(v) -> target sending the generator e_v to x.

    x is a vector in target's space at v; the basis path b: v -> u maps
    to (action of b) applied to x.  This realizes Hom(P(v), M) = M_v.
    """
    q = algebra.quiver
    paths = algebra.paths_from(v)
    by_vertex: dict[str, list[Path]] = {u: [] for u in q.vertices}
    for _, path in paths:
        by_vertex[path.end_in(q)].append(path)
    maps = []
    for ui, u in enumerate(q.vertices):
        cols = []
        for path in by_vertex[u]:
            cols.append(linalg.matmul(
                target.path_action(path), x.reshape(-1, 1), algebra.p))
        if cols:
            maps.append(np.hstack(cols))
        else:
            maps.append(linalg.zeros(target.dims[ui], 0))
    return Morphism(pv, target, maps)


# ---------------------------------------------------------------------------
# Hom spaces


def hom_space(m: Representation, n: Representation) -> list[Morphism]:
    """Deterministic basis of Hom(M, N)."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatchError("hom_space across different algebras")
    key = ("hom", id(n))
    cached = m._cache.get(key)
    if cached is not None:
        return cached
    alg = m.algebra
    q = alg.quiver
    nv = alg.n_vertices
    sizes = [n.dims[i] * m.dims[i] for i in range(nv)]
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    total = int(offsets[-1])
    rows = []
    for ai, arrow in enumerate(q.arrows):
        u = q.vertex_index(arrow.source)
        w = q.vertex_index(arrow.target)
        # equation: N_a f_u - f_w M_a = 0, with row-major vec(f_v)
        neq = n.dims[w] * m.dims[u]
        if neq == 0:
            continue
        block = linalg.zeros(neq, total)
        left = np.kron(n.arrow_maps[ai], linalg.identity(m.dims[u]))
        block[:, offsets[u]:offsets[u + 1]] = left
        right = np.kron(linalg.identity(n.dims[w]), m.arrow_maps[ai].T)
        block[:, offsets[w]:offsets[w + 1]] = (
            block[:, offsets[w]:offsets[w + 1]] - right
        ) % alg.p
        rows.append(block % alg.p)
    system = np.vstack(rows) if rows else linalg.zeros(0, total)
    basis_vectors = linalg.kernel(system, alg.p)
    result = []
    for k in range(basis_vectors.shape[1]):
        vec = basis_vectors[:, k]
        maps = [vec[offsets[i]:offsets[i + 1]].reshape(n.dims[i], m.dims[i])
                for i in range(nv)]
        result.append(Morphism(m, n, maps))
    m._cache[key] = result
    return result


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_space(m, n))


def morphism_coordinates(f: Morphism, basis: list[Morphism]) -> np.ndarray:
    """Express f in a Hom-space basis; raises if it is not in the span."""
    p = f.source.algebra.p
    if not basis:
        if f.is_zero():
            return np.zeros(0, dtype=np.int64)
        raise MalformedInputError("morphism outside the empty span")
    mat = np.stack([g.flatten() for g in basis], axis=1)
    sol = linalg.solve(mat, f.flatten(), p)
    if sol is None:
        raise MalformedInputError("morphism is not in the span of the basis")
    return sol.particular[:, 0]


# ---------------------------------------------------------------------------
# sub/quotient machinery


def _canonical_spans(n: Representation, spans: list[np.ndarray]):
    p = n.algebra.p
    return [linalg.column_space_basis(s, p) for s in spans]


def sub_representation(n: Representation, spans: list[np.ndarray],
                       canonical: bool = True):
    """Subrepresentation on per-vertex column spans (must be action-closed).

    Returns (sub, inclusion).
    """
    alg = n.algebra
    p = alg.p
    q = alg.quiver
    basis = _canonical_spans(n, spans) if canonical else spans
    dims = [b.shape[1] for b in basis]
    maps = []
    for ai, arrow in enumerate(q.arrows):
        u = q.vertex_index(arrow.source)
        w = q.vertex_index(arrow.target)
        rhs = linalg.matmul(n.arrow_maps[ai], basis[u], p)
        sol = linalg.solve(basis[w], rhs, p)
        if sol is None:
            raise MalformedInputError("spans are not closed under the action")
        maps.append(sol.particular)
    sub = Representation(alg, dims, maps)
    incl = Morphism(sub, n, basis)
    return sub, incl


def quotient_representation(n: Representation, spans: list[np.ndarray]):
    """Quotient by the subrepresentation spanned per vertex.

    Returns (quotient, projection).
    """
    alg = n.algebra
    p = alg.p
    q = alg.quiver
    basis = _canonical_spans(n, spans)
    projections = []
    sections = []
    for i in range(alg.n_vertices):
        b = basis[i]
        dim = n.dims[i]
        r = b.shape[1]
        ech = linalg.row_reduce(b.T, p)
        pivots = set(ech.pivot_columns)
        free = [c for c in range(dim) if c not in pivots]
        comp = linalg.zeros(dim, len(free))
        for k, c in enumerate(free):
            comp[c, k] = 1
        change = np.hstack([b, comp]) if dim else linalg.zeros(0, 0)
        inv = linalg.invert(change, p) if dim else linalg.zeros(0, 0)
        projections.append(inv[r:, :])
        sections.append(change[:, r:] if dim else linalg.zeros(0, 0))
    dims = [pr.shape[0] for pr in projections]
    maps = []
    for ai, arrow in enumerate(q.arrows):
        u = q.vertex_index(arrow.source)
        w = q.vertex_index(arrow.target)
        mat = linalg.matmul(
            projections[w],
            linalg.matmul(n.arrow_maps[ai], sections[u], p), p)
        maps.append(mat)
    quot = Representation(alg, dims, maps)
    proj = Morphism(n, quot, projections)
    return quot, proj


def span_closure(m: Representation, vectors: list[np.ndarray]):
    """Per-vertex spans of the submodule generated by the given vectors.

    Each vector is a concatenated coordinate tuple over all vertices.
    """
    alg = m.algebra
    q = alg.quiver
    p = alg.p
    nv = alg.n_vertices
    offsets = np.concatenate([[0], np.cumsum(m.dims)])
    spans = [linalg.zeros(m.dims[i], 0) for i in range(nv)]
    cols: list[list[np.ndarray]] = [[] for _ in range(nv)]
    for vec in vectors:
        vec = linalg.reduce_mod(vec, p).reshape(-1)
        if vec.shape[0] != m.total_dim:
            raise MalformedInputError("generator vector has wrong length")
        for i in range(nv):
            comp = vec[offsets[i]:offsets[i + 1]]
            if comp.any():
                cols[i].append(comp)
    spans = [
        np.stack(c, axis=1) if c else linalg.zeros(m.dims[i], 0)
        for i, c in enumerate(cols)
    ]
    ranks = [linalg.rank(s, p) for s in spans]
    while True:
        new_spans = list(spans)
        for ai, arrow in enumerate(q.arrows):
            u = q.vertex_index(arrow.source)
            w = q.vertex_index(arrow.target)
            pushed = linalg.matmul(m.arrow_maps[ai], spans[u], p)
            if pushed.shape[1]:
                new_spans[w] = np.hstack([new_spans[w], pushed])
        new_spans = [linalg.column_space_basis(s, p) for s in new_spans]
        new_ranks = [s.shape[1] for s in new_spans]
        if new_ranks == ranks:
            return new_spans
        spans, ranks = new_spans, new_ranks


def sub_quotient(m: Representation, generators: list[np.ndarray], mode: str):
    """Submodule generated by vectors (with inclusion) or its quotient."""
    spans = span_closure(m, generators)
    if mode == "submodule":
        return sub_representation(m, spans)
    if mode == "quotient":
        return quotient_representation(m, spans)
    raise MalformedInputError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# kernels, images, cokernels


def factorize(f: Morphism):
    """Kernel, image and cokernel of a morphism.

    Returns a dict with keys kernel, kernel_inclusion, image,
    image_inclusion, image_projection, cokernel, cokernel_projection.
    """
    alg = f.source.algebra
    p = alg.p
    ker_spans = [linalg.kernel(mat, p) for mat in f.vertex_maps]
    kernel_rep, kernel_incl = sub_representation(f.source, ker_spans)
    im_spans = [mat for mat in f.vertex_maps]
    image_rep, image_incl = sub_representation(f.target, im_spans)
    # corestriction source -> image: solve incl . g = f vertexwise
    g_maps = []
    for i in range(alg.n_vertices):
        sol = linalg.solve(image_incl.vertex_maps[i], f.vertex_maps[i], p)
        g_maps.append(sol.particular)
    image_proj = Morphism(f.source, image_rep, g_maps)
    cokernel_rep, cokernel_proj = quotient_representation(f.target, im_spans)
    return {
        "kernel": kernel_rep,
        "kernel_inclusion": kernel_incl,
        "image": image_rep,
        "image_inclusion": image_incl,
        "image_projection": image_proj,
        "cokernel": cokernel_rep,
        "cokernel_projection": cokernel_proj,
    }


# ---------------------------------------------------------------------------
# direct sums


def direct_sum(algebra: Algebra, reps: list[Representation],
               multiplicities: list[int] | None = None):
    """Direct sum with injections and projections.

    Returns (sum, injections, projections); the summand order is the
    multiplicity-expanded input order.
    """
    if multiplicities is None:
        multiplicities = [1] * len(reps)
    expanded: list[Representation] = []
    for rep, mult in zip(reps, multiplicities):
        if rep.algebra is not algebra:
            raise AlgebraMismatchError("direct sum across different algebras")
        expanded.extend([rep] * mult)
    nv = algebra.n_vertices
    dims = [sum(r.dims[i] for r in expanded) for i in range(nv)]
    maps = []
    for ai in range(len(algebra.quiver.arrows)):
        blocks = [r.arrow_maps[ai] for r in expanded]
        if blocks:
            maps.append(linalg.block_diag(blocks, algebra.p))
        else:
            arrow = algebra.quiver.arrows[ai]
            u = algebra.quiver.vertex_index(arrow.source)
            w = algebra.quiver.vertex_index(arrow.target)
            maps.append(linalg.zeros(dims[w], dims[u]))
    total = Representation(algebra, dims, maps)
    injections = []
    projections = []
    offsets = [0] * nv
    for r in expanded:
        inj = []
        proj = []
        for i in range(nv):
            col = linalg.zeros(dims[i], r.dims[i])
            col[offsets[i]:offsets[i] + r.dims[i], :] = linalg.identity(
                r.dims[i])
            inj.append(col)
            proj.append(col.T.copy())
        injections.append(Morphism(r, total, inj))
        projections.append(Morphism(total, r, proj))
        for i in range(nv):
            offsets[i] += r.dims[i]
    return total, injections, projections


# ---------------------------------------------------------------------------
# radical / top / socle, composition factors


def radical_spans(m: Representation) -> list[np.ndarray]:
    alg = m.algebra
    q = alg.quiver
    spans = [linalg.zeros(d, 0) for d in m.dims]
    for ai, arrow in enumerate(q.arrows):
        w = q.vertex_index(arrow.target)
        spans[w] = np.hstack([spans[w], m.arrow_maps[ai]])
    return [linalg.column_space_basis(s, alg.p) for s in spans]


def socle_spans(m: Representation) -> list[np.ndarray]:
    alg = m.algebra
    q = alg.quiver
    spans = []
    for ui, u in enumerate(q.vertices):
        stacked = [m.arrow_maps[ai]
                   for ai, a in enumerate(q.arrows) if a.source == u]
        if stacked:
            mat = np.vstack(stacked)
            spans.append(linalg.kernel(mat, alg.p))
        else:
            spans.append(linalg.identity(m.dims[ui]))
    return spans


def top_socle_radical(m: Representation):
    """(rad M with inclusion, top M with projection, soc M with inclusion)."""
    rad_sp = radical_spans(m)
    rad, rad_incl = sub_representation(m, rad_sp)
    top, top_proj = quotient_representation(m, rad_sp)
    soc, soc_incl = sub_representation(m, socle_spans(m))
    return (rad, rad_incl), (top, top_proj), (soc, soc_incl)


def top_multiplicities(m: Representation) -> list[int]:
    """Multiplicity of S(v) in top M, by vertex index."""
    rad_sp = radical_spans(m)
    p = m.algebra.p
    return [m.dims[i] - rad_sp[i].shape[1] for i in range(len(m.dims))]


def socle_multiplicities(m: Representation) -> list[int]:
    sp = socle_spans(m)
    return [s.shape[1] for s in sp]


def composition_factors(m: Representation) -> dict[str, int]:
    """Multiset of simple factors; for basic algebras this is the
    dimension vector."""
    return {v: m.dims[i] for i, v in enumerate(m.algebra.vertices)
            if m.dims[i] > 0}


def jordan_holder_factors(m: Representation) -> dict[str, int]:
    """Slow cross-check oracle: peel socles until nothing is left."""
    alg = m.algebra
    out: dict[str, int] = {}
    current = m
    while not current.is_zero():
        sp = socle_spans(current)
        for i, v in enumerate(alg.vertices):
            mult = linalg.rank(sp[i], alg.p)
            if mult:
                out[v] = out.get(v, 0) + mult
        current, _ = quotient_representation(current, sp)
    return out


# ---------------------------------------------------------------------------
# isomorphism testing


_EXHAUSTIVE_HOM_DIM = 8
_SAMPLE_COUNT = 20000


def _iso_witness_search(m, n, basis):
    p = m.algebra.p
    h = len(basis)
    if h == 0:
        return None
    if p ** h <= p ** _EXHAUSTIVE_HOM_DIM:
        for coeffs in itertools.product(range(p), repeat=h):
            if not any(coeffs):
                continue
            f = basis[0].scale(coeffs[0])
            for c, g in zip(coeffs[1:], basis[1:]):
                if c:
                    f = f + g.scale(c)
            if f.is_iso():
                return f
        return None
    rng = np.random.default_rng(0)
    for _ in range(_SAMPLE_COUNT):
        coeffs = rng.integers(0, p, size=h)
        if not coeffs.any():
            continue
        f = basis[0].scale(int(coeffs[0]))
        for c, g in zip(coeffs[1:], basis[1:]):
            if c:
                f = f + g.scale(int(c))
        if f.is_iso():
            return f
    raise UndecidableError(
        "isomorphism search space too large for exhaustion and sampling "
        "found no witness; refusing to answer"
    )


def is_isomorphic(m: Representation, n: Representation,
                  with_witness: bool = False):
    if m.algebra is not n.algebra:
        raise AlgebraMismatchError("comparison across different algebras")
    if m.dims != n.dims:
        return (False, None) if with_witness else False
    if m.total_dim == 0:
        return (True, zero_morphism(m, n)) if with_witness else True
    basis = hom_space(m, n)
    witness = _iso_witness_search(m, n, basis)
    found = witness is not None
    return (found, witness) if with_witness else found


__all__ = [
    "AlgebraMismatchError",
    "Morphism",
    "Representation",
    "UndecidableError",
    "composition_factors",
    "direct_sum",
    "factorize",
    "hom_dim",
    "hom_from_projective",
    "hom_space",
    "identity_morphism",
    "injective_module",
    "is_isomorphic",
    "jordan_holder_factors",
    "morphism_coordinates",
    "projective_generator_position",
    "projective_module",
    "quotient_representation",
    "regular_module",
    "simple_module",
    "socle_multiplicities",
    "socle_spans",
    "span_closure",
    "standard_module",
    "sub_quotient",
    "sub_representation",
    "top_multiplicities",
    "top_socle_radical",
    "validate",
    "zero_morphism",
    "zero_representation",
]
