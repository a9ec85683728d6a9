"""Enumeration of indecomposable modules and Krull-Schmidt bookkeeping.

Two strategies: a classified corpus for representation-finite families we
recognize (type-A hereditary quivers via interval modules, Nakayama
algebras via uniserial projective quotients), and a capped brute-force
sweep that enumerates all representations up to a total dimension and
deduplicates up to isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .pathalg import Algebra
from .reps import (
    Morphism,
    Representation,
    UndecidableError,
    direct_sum,
    hom_dim,
    hom_space,
    injective_module,
    is_isomorphic,
    projective_module,
    quotient_representation,
    radical_spans,
    simple_module,
    validate,
    zero_representation,
)

_IDEMPOTENT_SEARCH_CAP = 1 << 16


@dataclass
class Corpus:
    algebra: Algebra
    members: list[Representation]
    names: list[str]
    completeness: str  # "certified-by-classification" | "brute-force-up-to-dim-D"

    def __len__(self):
        return len(self.members)

    def name_of(self, i: int) -> str:
        return self.names[i]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown corpus member {name!r}") from None


# ---------------------------------------------------------------------------
# indecomposability


def _end_elements(basis: list[Morphism], p: int):
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        f = basis[0].scale(coeffs[0])
        for c, g in zip(coeffs[1:], basis[1:]):
            if c:
                f = f + g.scale(c)
        yield f


def _is_idempotent(f: Morphism) -> bool:
    return all(
        np.array_equal(linalg.matmul(m, m, f.source.algebra.p), m)
        for m in f.vertex_maps
    )


def _fitting_splits(f: Morphism) -> bool:
    """Does the stable kernel/image decomposition along f split M?"""
    m = f.source
    p = m.algebra.p
    power = f
    for _ in range(m.total_dim):
        power = power.compose(f)
    ker_rank = sum(
        mat.shape[1] - linalg.rank(mat, p) for mat in power.vertex_maps
    )
    im_rank = sum(linalg.rank(mat, p) for mat in power.vertex_maps)
    return ker_rank > 0 and im_rank > 0


def is_indecomposable(m: Representation) -> bool:
    """True iff End(M) has no idempotent besides 0 and 1."""
    if m.is_zero():
        return False
    basis = hom_space(m, m)
    e = len(basis)
    if e == 1:
        return True  # End = k . id is local
    p = m.algebra.p
    if p**e <= _IDEMPOTENT_SEARCH_CAP:
        ident = [linalg.identity(d) for d in m.dims]
        for f in _end_elements(basis, p):
            if not _is_idempotent(f):
                continue
            if all(np.array_equal(a, b)
                   for a, b in zip(f.vertex_maps, ident)):
                continue
            return False
        return True
    # fall back to Fitting decompositions along basis endomorphisms and
    # seeded random combinations
    rng = np.random.default_rng(0)
    candidates = list(basis)
    for _ in range(200):
        coeffs = rng.integers(0, p, size=e)
        if not coeffs.any():
            continue
        f = basis[0].scale(int(coeffs[0]))
        for c, g in zip(coeffs[1:], basis[1:]):
            if c:
                f = f + g.scale(int(c))
        candidates.append(f)
    for f in candidates:
        if _fitting_splits(f):
            return False
    raise UndecidableError(
        "endomorphism algebra too large for exhaustive idempotent search "
        "and no splitting was found; refusing to guess"
    )


# ---------------------------------------------------------------------------
# classified families


def _linear_order(algebra: Algebra) -> list[str] | None:
    """Vertex order of a type-A quiver (underlying graph a simple path),
    or None when the quiver is not of that shape."""
    q = algebra.quiver
    n = len(q.vertices)
    if len(q.arrows) != n - 1 or n == 0:
        return None
    deg = {v: 0 for v in q.vertices}
    nbr: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        if a.source == a.target:
            return None
        deg[a.source] += 1
        deg[a.target] += 1
        nbr[a.source].append(a.target)
        nbr[a.target].append(a.source)
    ends = [v for v in q.vertices if deg[v] == 1]
    if n == 1:
        return list(q.vertices)
    if len(ends) != 2 or any(deg[v] > 2 for v in q.vertices):
        return None
    order = [min(ends)]
    while len(order) < n:
        nxt = [w for w in nbr[order[-1]] if w not in order]
        if len(nxt) != 1:
            return None
        order.append(nxt[0])
    return order


def _interval_modules(algebra: Algebra) -> list[Representation]:
    order = _linear_order(algebra)
    if order is None or algebra.relations.relations:
        raise ValueError(
            "classified hereditary-An strategy needs a relation-free "
            "type-A quiver"
        )
    q = algebra.quiver
    out = []
    n = len(order)
    for i in range(n):
        for j in range(i, n):
            window = set(order[i:j + 1])
            dims = [1 if v in window else 0 for v in q.vertices]
            maps = []
            for a in q.arrows:
                u = q.vertex_index(a.source)
                w = q.vertex_index(a.target)
                if a.source in window and a.target in window:
                    maps.append(linalg.identity(1))
                else:
                    maps.append(linalg.zeros(dims[w], dims[u]))
            out.append(Representation(algebra, dims, maps,
                                      name=f"M[{order[i]},{order[j]}]"))
    return out


def _nakayama_members(algebra: Algebra) -> list[Representation]:
    """Uniserial quotients P(v)/rad^k P(v), deduplicated."""
    out: list[Representation] = []
    for v in algebra.vertices:
        pv = projective_module(algebra, v)
        length = pv.total_dim  # uniserial, so radical length = dimension
        for k in range(1, length + 1):
            quot, _ = quotient_representation(pv, _radical_power_spans(pv, k))
            quot.name = f"{v}|{k}"
            if not any(is_isomorphic(quot, m) for m in out):
                out.append(quot)
    return out


def _radical_power_spans(m: Representation, k: int) -> list[np.ndarray]:
    """Per-vertex spans of J^k . M."""
    spans = [linalg.identity(d) for d in m.dims]
    alg = m.algebra
    q = alg.quiver
    for _ in range(k):
        new = [linalg.zeros(d, 0) for d in m.dims]
        for ai, arrow in enumerate(q.arrows):
            u = q.vertex_index(arrow.source)
            w = q.vertex_index(arrow.target)
            pushed = linalg.matmul(m.arrow_maps[ai], spans[u], alg.p)
            new[w] = np.hstack([new[w], pushed])
        spans = [linalg.column_space_basis(s, alg.p) for s in new]
    return spans


# ---------------------------------------------------------------------------
# brute force


def _all_representations(algebra: Algebra, dim_bound: int):
    q = algebra.quiver
    p = algebra.p
    nv = algebra.n_vertices
    for total in range(1, dim_bound + 1):
        for dims in itertools.product(range(total + 1), repeat=nv):
            if sum(dims) != total:
                continue
            shapes = []
            for a in q.arrows:
                u = q.vertex_index(a.source)
                w = q.vertex_index(a.target)
                shapes.append((dims[w], dims[u]))
            entry_counts = [r * c for r, c in shapes]
            for flat in itertools.product(range(p),
                                          repeat=sum(entry_counts)):
                maps = []
                pos = 0
                for (r, c), cnt in zip(shapes, entry_counts):
                    maps.append(np.array(flat[pos:pos + cnt],
                                         dtype=np.int64).reshape(r, c))
                    pos += cnt
                rep = Representation(algebra, dims, maps)
                if not validate(rep):
                    yield rep


def _canonical_key(m: Representation) -> tuple:
    return (m.total_dim, m.dims,
            tuple(mat.tobytes() for mat in m.arrow_maps))


# ---------------------------------------------------------------------------
# naming and assembly


def _assign_names(algebra: Algebra, members: list[Representation]) -> list[str]:
    standards: list[tuple[str, Representation]] = []
    for v in algebra.vertices:
        standards.append((f"S{v}", simple_module(algebra, v)))
    for v in algebra.vertices:
        standards.append((f"P{v}", projective_module(algebra, v)))
    for v in algebra.vertices:
        standards.append((f"I{v}", injective_module(algebra, v)))
    names = []
    used: set[str] = set()
    for idx, m in enumerate(members):
        name = None
        for label, std in standards:
            if label in used:
                continue
            if m.dims == std.dims and is_isomorphic(m, std):
                name = label
                break
        if name is None:
            name = m.name if m.name and m.name not in used else f"X{idx}"
        used.add(name)
        names.append(name)
    return names


def _sorted_members(members: list[Representation]) -> list[Representation]:
    return sorted(members, key=_canonical_key)


def enumerate_indecomposables(algebra: Algebra, strategy: str = "classified",
                              dim_bound: int = 6) -> Corpus:
    """Complete corpus of indecomposables for the supported families, or a
    bound-limited brute-force corpus."""
    if strategy == "classified":
        if not algebra.relations.relations and _linear_order(algebra):
            members = _interval_modules(algebra)
            completeness = "certified-by-classification"
        elif _is_nakayama(algebra):
            members = _nakayama_members(algebra)
            completeness = "certified-by-classification"
        else:
            raise ValueError(
                "no classification available for this algebra; use the "
                "brute strategy"
            )
        members = _sorted_members(members)
        for m in members:
            if not is_indecomposable(m):
                raise RuntimeError(
                    f"classified member {m!r} failed the indecomposability "
                    "check"
                )
        return Corpus(algebra, members, _assign_names(algebra, members),
                      completeness)
    if strategy == "brute":
        members: list[Representation] = []
        for rep in _all_representations(algebra, dim_bound):
            if not is_indecomposable(rep):
                continue
            if any(rep.dims == m.dims and is_isomorphic(rep, m)
                   for m in members):
                continue
            members.append(rep)
        members = _sorted_members(members)
        return Corpus(algebra, members, _assign_names(algebra, members),
                      f"brute-force-up-to-dim-{dim_bound}")
    raise ValueError(f"unknown strategy {strategy!r}")


def _is_nakayama(algebra: Algebra) -> bool:
    """Every vertex has at most one outgoing and one incoming arrow."""
    q = algebra.quiver
    out_deg = {v: 0 for v in q.vertices}
    in_deg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        out_deg[a.source] += 1
        in_deg[a.target] += 1
    return all(out_deg[v] <= 1 and in_deg[v] <= 1 for v in q.vertices)


# ---------------------------------------------------------------------------
# decomposition


def decompose(m: Representation, corpus: Corpus) -> dict[int, int]:
    """Multiset of corpus indices with direct sum isomorphic to M.

    Uses the hom-dimension criterion: the functions dim Hom(X_i, -) of
    pairwise non-isomorphic indecomposables are linearly independent, so
    the multiplicities are the unique solution of

        sum_i c_i dim Hom(X_i, X_j) = dim Hom(M, X_j)   for all j.

    A non-integral or negative solution, or a dimension-vector mismatch,
    means the corpus cannot decompose M.
    """
    if m.algebra is not corpus.algebra:
        raise ValueError("module and corpus live over different algebras")
    if m.is_zero():
        return {}
    members = corpus.members
    n = len(members)
    h = [[Fraction(hom_dim(members[i], members[j])) for j in range(n)]
         for i in range(n)]
    b = [Fraction(hom_dim(m, members[j])) for j in range(n)]
    coeffs = _solve_rational([list(col) for col in zip(*h)], b)
    if coeffs is None:
        raise RuntimeError(
            "no corpus decomposition found; the corpus is incomplete for "
            f"{m!r}"
        )
    result: dict[int, int] = {}
    for i, c in enumerate(coeffs):
        if c.denominator != 1 or c < 0:
            raise RuntimeError(
                "no corpus decomposition found; the corpus is incomplete "
                f"for {m!r}"
            )
        if c:
            result[i] = int(c)
    check_dims = [
        sum(cnt * members[i].dims[vi] for i, cnt in result.items())
        for vi in range(len(m.dims))
    ]
    if tuple(check_dims) != m.dims:
        raise RuntimeError(
            "no corpus decomposition found; the corpus is incomplete for "
            f"{m!r}"
        )
    return result


def _solve_rational(matrix: list[list[Fraction]],
                    rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gaussian elimination; None when inconsistent.  The system is
    square with independent columns here, so a consistent system has a
    unique solution."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    cols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, n) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][cols]:
            return None
    solution = [Fraction(0)] * cols
    for row, c in enumerate(pivots):
        solution[c] = aug[row][cols]
    return solution


__all__ = [
    "Corpus",
    "decompose",
    "enumerate_indecomposables",
    "is_indecomposable",
]
