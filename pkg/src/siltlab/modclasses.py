"""Membership in Gen T, Pres T, Add T, perpendicular classes, the torsion
decomposition along the trace, and the Subfac/Facsub conditions.

All quantifiers over modules are evaluated in finite-dimensional
semantics: a membership claim about "all modules" means all modules whose
indecomposable summands lie in the supplied corpus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .corpus import Corpus, decompose
from .homology import ext_dim
from .reps import (
    Morphism,
    Representation,
    UndecidableError,
    direct_sum,
    factorize,
    hom_space,
    quotient_representation,
    radical_spans,
    span_closure,
    sub_representation,
    zero_morphism,
)

_PRES_FALLBACK_CAP = 1 << 16


@dataclass
class MembershipWitness:
    verdict: bool
    witness: dict | None = None

    def __bool__(self):
        return self.verdict


# ---------------------------------------------------------------------------
# trace and Gen


def trace_spans(t: Representation, m: Representation) -> list[np.ndarray]:
    """Per-vertex spans of the trace submodule t_T(M)."""
    alg = m.algebra
    basis = hom_space(t, m)
    spans = [linalg.zeros(d, 0) for d in m.dims]
    for f in basis:
        spans = [np.hstack([s, mat])
                 for s, mat in zip(spans, f.vertex_maps)]
    return [linalg.column_space_basis(s, alg.p) for s in spans]


def trace_and_gen(t: Representation, m: Representation):
    """(trace submodule with inclusion, gen membership flag)."""
    spans = trace_spans(t, m)
    sub, incl = sub_representation(m, spans)
    gen_member = sub.dims == m.dims
    return (sub, incl), gen_member


def gen_contains(t: Representation, m: Representation) -> bool:
    spans = trace_spans(t, m)
    return all(s.shape[1] == d for s, d in zip(spans, m.dims))


# ---------------------------------------------------------------------------
# Pres


def _evaluation_map(t: Representation, m: Representation,
                    coefficients: np.ndarray):
    """Map T^r -> M whose columns are the given combinations of the
    Hom(T, M) basis; coefficients has shape (dim Hom, r)."""
    alg = m.algebra
    basis = hom_space(t, m)
    r = coefficients.shape[1]
    total, _, _ = direct_sum(alg, [t], [r])
    maps = []
    for vi in range(alg.n_vertices):
        cols = []
        for j in range(r):
            acc = linalg.zeros(m.dims[vi], t.dims[vi])
            for i, f in enumerate(basis):
                c = int(coefficients[i, j])
                if c:
                    acc = (acc + c * f.vertex_maps[vi]) % alg.p
            cols.append(acc)
        if cols:
            maps.append(np.hstack(cols))
        else:
            maps.append(linalg.zeros(m.dims[vi], 0))
    return Morphism(total, m, maps)


def _column_space_signatures(d: int, r: int, p: int):
    """Full-column-rank coefficient matrices d x r, one per column space."""
    seen: set[bytes] = set()
    for flat in itertools.product(range(p), repeat=d * r):
        c = np.array(flat, dtype=np.int64).reshape(d, r)
        if linalg.rank(c, p) != r:
            continue
        key = linalg.column_space_basis(c, p).tobytes()
        if key in seen:
            continue
        seen.add(key)
        yield c


def pres_contains(t: Representation, m: Representation) -> MembershipWitness:
    """Is M the cokernel of a map between finite Add-T sums?

    Canonical route: the evaluation map T^d -> M over the full Hom basis,
    with its kernel tested for Gen-membership.  When that fails, every
    column space of Hom-coefficient matrices is tried (any Add-T
    presentation reduces to one of these by splitting off redundant
    copies).
    """
    if m.is_zero():
        return MembershipWitness(True, {"route": "zero"})
    if not gen_contains(t, m):
        return MembershipWitness(False, {"reason": "not in Gen T"})
    basis = hom_space(t, m)
    d = len(basis)
    p = m.algebra.p
    canonical = _evaluation_map(t, m, linalg.identity(d))
    parts = factorize(canonical)
    if gen_contains(t, parts["kernel"]):
        return MembershipWitness(True, {"route": "canonical", "copies": d})
    for r in range(1, d + 1):
        if p ** (d * r) > _PRES_FALLBACK_CAP:
            raise UndecidableError(
                "Pres-membership fallback search space exceeds the cap"
            )
        for coeffs in _column_space_signatures(d, r, p):
            h = _evaluation_map(t, m, coeffs)
            if not h.is_epi():
                continue
            parts = factorize(h)
            if gen_contains(t, parts["kernel"]):
                return MembershipWitness(
                    True, {"route": "fallback", "copies": r}
                )
    return MembershipWitness(
        False,
        {"reason": "no Add-T cover has Gen-T kernel",
         "copies_tried": d},
    )


# ---------------------------------------------------------------------------
# Add


def add_contains(t_summands: dict[int, int], m: Representation,
                 corpus: Corpus) -> bool:
    """Add-membership via Krull-Schmidt: every indecomposable summand of M
    must occur among T's summand indices."""
    if m.is_zero():
        return True
    dec = decompose(m, corpus)
    return all(idx in t_summands for idx in dec)


# ---------------------------------------------------------------------------
# perpendicular classes


def perp_contains(t: Representation, m: Representation,
                  degrees: frozenset[int] | set[int],
                  side: str = "right") -> MembershipWitness:
    """Right: Ext^i(T, M) = 0 for i in degrees; left: Ext^i(M, T) = 0."""
    if not degrees or any(i < 0 for i in degrees):
        raise linalg.MalformedInputError("degrees must be nonempty, >= 0")
    for i in sorted(degrees):
        dim = (ext_dim(i, t, m) if side == "right" else ext_dim(i, m, t))
        if dim:
            return MembershipWitness(
                False, {"failing_degree": i, "ext_dim": dim}
            )
    return MembershipWitness(True)


def left_perp0_of_gen(t: Representation, corpus: Corpus) -> list[int]:
    """Corpus indices X with Hom(X, G) = 0 for every corpus G in Gen T."""
    gen_indices = [j for j, g in enumerate(corpus.members)
                   if gen_contains(t, g)]
    out = []
    for i, x in enumerate(corpus.members):
        if all(not hom_space(x, corpus.members[j]) for j in gen_indices):
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# torsion decomposition


def torsion_decompose(t: Representation, m: Representation,
                      presilting_verified: bool = False):
    """Canonical 0 -> t(M) -> M -> M/t(M) -> 0 along the trace.

    Returns a dict with the pieces, re-verified memberships, and a warning
    when the presilting precondition was not certified by the caller.
    """
    spans = trace_spans(t, m)
    sub, incl = sub_representation(m, spans)
    quot, proj = quotient_representation(m, spans)
    result = {
        "torsion": sub,
        "inclusion": incl,
        "quotient": quot,
        "projection": proj,
        "torsion_in_gen": gen_contains(t, sub),
        "quotient_hom_free": not hom_space(t, quot),
        "warning": None if presilting_verified else (
            "presilting precondition not verified; (Gen T, T^perp0) may "
            "fail to be a torsion pair"
        ),
    }
    return result


# ---------------------------------------------------------------------------
# Subfac / Facsub


def _simple_vertex(s: Representation) -> int:
    nonzero = [i for i, d in enumerate(s.dims) if d]
    if len(nonzero) != 1 or s.dims[nonzero[0]] != 1:
        raise linalg.MalformedInputError("module is not simple")
    if any(mat.any() for mat in s.arrow_maps):
        raise linalg.MalformedInputError("module is not simple")
    return nonzero[0]


def subfac_facsub(t: Representation, s: Representation):
    """(in_subfac, in_facsub, witnesses) for a simple module S.

    Subfac witness: quotient Y = T / (J . <x>) in which the image of x is
    a socle copy of S.  Facsub witness: the submodule generated by a
    single vector of T at S's vertex, whose top is S.  Both are verified
    before being reported.
    """
    alg = t.algebra
    vi = _simple_vertex(s)
    v = alg.vertices[vi]
    if t.dims[vi] == 0:
        return False, False, {"reason": f"S{v} is not a composition factor"}
    # witness generator: first standard basis vector at the vertex
    offset = sum(t.dims[:vi])
    x = np.zeros(t.total_dim, dtype=np.int64)
    x[offset] = 1
    # Facsub: the cyclic submodule generated by x has top S(v)
    gen_spans = span_closure(t, [x])
    sub, _ = sub_representation(t, gen_spans)
    sub_rad = radical_spans(sub)
    top_mults = [sub.dims[i] - sub_rad[i].shape[1]
                 for i in range(len(sub.dims))]
    facsub_ok = (top_mults[vi] == 1
                 and all(mlt == 0 for i, mlt in enumerate(top_mults)
                         if i != vi))
    # Subfac: quotient by J . <x> keeps x alive and kills its radical
    rad_of_cyclic = _radical_of_spans(t, gen_spans)
    quot, proj = quotient_representation(t, rad_of_cyclic)
    image_x = (proj.vertex_maps[vi] @ x[offset:offset + t.dims[vi]]) % alg.p
    socle_ok = bool(image_x.any())
    if socle_ok:
        # verify the image of x is killed by every arrow (socle element)
        q = alg.quiver
        for ai, arrow in enumerate(q.arrows):
            if arrow.source != v:
                continue
            if (quot.arrow_maps[ai] @ image_x % alg.p).any():
                socle_ok = False
                break
    witnesses = {
        "vertex": v,
        "facsub_submodule_dims": sub.dims,
        "subfac_quotient_dims": quot.dims,
    }
    return socle_ok, facsub_ok, witnesses


def _radical_of_spans(m: Representation, spans: list[np.ndarray]):
    """Spans of J . U for the subrepresentation with the given spans."""
    alg = m.algebra
    q = alg.quiver
    out = [linalg.zeros(d, 0) for d in m.dims]
    current = spans
    for ai, arrow in enumerate(q.arrows):
        u = q.vertex_index(arrow.source)
        w = q.vertex_index(arrow.target)
        pushed = linalg.matmul(m.arrow_maps[ai], current[u], alg.p)
        out[w] = np.hstack([out[w], pushed])
    closed = span_closure_of_spans(m, out)
    return closed


def span_closure_of_spans(m: Representation, spans: list[np.ndarray]):
    """Close per-vertex spans under the arrow action."""
    alg = m.algebra
    q = alg.quiver
    p = alg.p
    spans = [linalg.column_space_basis(s, p) for s in spans]
    ranks = [s.shape[1] for s in spans]
    while True:
        new = list(spans)
        for ai, arrow in enumerate(q.arrows):
            u = q.vertex_index(arrow.source)
            w = q.vertex_index(arrow.target)
            pushed = linalg.matmul(m.arrow_maps[ai], spans[u], p)
            if pushed.shape[1]:
                new[w] = np.hstack([new[w], pushed])
        new = [linalg.column_space_basis(s, p) for s in new]
        new_ranks = [s.shape[1] for s in new]
        if new_ranks == ranks:
            return new
        spans, ranks = new, new_ranks


__all__ = [
    "MembershipWitness",
    "add_contains",
    "gen_contains",
    "left_perp0_of_gen",
    "perp_contains",
    "pres_contains",
    "subfac_facsub",
    "torsion_decompose",
    "trace_and_gen",
    "trace_spans",
]
