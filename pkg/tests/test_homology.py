import numpy as np
import pytest

from siltlab import linalg
from siltlab.homology import (
    BoundExceededError,
    d_sigma_contains,
    default_resolution_bound,
    ext_dim,
    injective_envelope,
    minimal_presentation,
    minimal_resolution,
    projective_cover,
    projective_dimension,
)
from siltlab.reps import (
    direct_sum,
    factorize,
    hom_dim,
    injective_module,
    projective_module,
    radical_spans,
    simple_module,
)


def test_projective_cover_of_simple(a2_algebra):
    s2 = simple_module(a2_algebra, "2")
    cover = projective_cover(s2)
    assert cover.source.dims == (1, 1)  # P2
    assert cover.is_epi()


def test_cover_minimality_kernel_in_radical(a3_wb, nak3_wb, cyc2_wb):
    for wb in (a3_wb, nak3_wb, cyc2_wb):
        for m in wb.members:
            cover = projective_cover(m)
            parts = factorize(cover)
            incl = parts["kernel_inclusion"]
            rad = radical_spans(cover.source)
            for i in range(wb.algebra.n_vertices):
                assert linalg.in_column_space(
                    rad[i], incl.vertex_maps[i], wb.algebra.p)


def test_pd_examples(a2_algebra, a3_algebra, nak3_algebra):
    assert projective_dimension(projective_module(a2_algebra, "2")) == 0
    assert projective_dimension(simple_module(a2_algebra, "2")) == 1
    assert projective_dimension(simple_module(a2_algebra, "1")) == 0
    assert projective_dimension(simple_module(a3_algebra, "3")) == 1
    # over A3 with alpha*beta = 0 the resolution of S3 has length 2
    assert projective_dimension(simple_module(nak3_algebra, "3")) == 2


def test_pd_undecided_on_cycle(cyc2_algebra):
    s1 = simple_module(cyc2_algebra, "1")
    assert projective_dimension(s1) is None
    res = minimal_resolution(s1, default_resolution_bound(cyc2_algebra))
    assert res.status == "bound-exceeded"
    with pytest.raises(BoundExceededError):
        res.term(len(res.terms))


def test_ext_examples(a2_algebra, nak3_algebra):
    s1 = simple_module(a2_algebra, "1")
    s2 = simple_module(a2_algebra, "2")
    assert ext_dim(1, s2, s1) == 1
    assert ext_dim(1, s1, s2) == 0
    assert ext_dim(2, s2, s1) == 0
    # resolution 0 -> P1 -> P2 -> P3 -> S3 -> 0 gives a nonzero Ext^2
    t3 = simple_module(nak3_algebra, "3")
    t1 = simple_module(nak3_algebra, "1")
    assert ext_dim(2, t3, t1) == 1
    assert ext_dim(1, t3, t1) == 0


def test_ext_zero_is_hom(a3_wb):
    wb = a3_wb
    for i, m in enumerate(wb.members):
        for j, n in enumerate(wb.members):
            assert ext_dim(0, m, n) == hom_dim(m, n)


def test_ext_vanishes_on_projectives(a3_wb, nak3_wb):
    for wb in (a3_wb, nak3_wb):
        for v in wb.algebra.vertices:
            pv = projective_module(wb.algebra, v)
            for m in wb.members:
                assert ext_dim(1, pv, m) == 0
                assert ext_dim(2, pv, m) == 0


def test_ext_additive_over_sums(nak3_wb):
    wb = nak3_wb
    alg = wb.algebra
    import itertools

    for js in itertools.combinations(range(len(wb.members)), 2):
        summed, _, _ = direct_sum(alg, [wb.members[j] for j in js])
        for k, n in enumerate(wb.members):
            for d in (1, 2):
                assert ext_dim(d, summed, n) == sum(
                    ext_dim(d, wb.members[j], n) for j in js)


def test_euler_characteristic(a3_wb):
    """For hereditary algebras: dim Hom - dim Ext^1 = <dim M, dim N>."""
    wb = a3_wb
    alg = wb.algebra
    q = alg.quiver
    for m in wb.members:
        for n in wb.members:
            bilinear = sum(m.dims[i] * n.dims[i]
                           for i in range(alg.n_vertices))
            bilinear -= sum(
                m.dims[q.vertex_index(a.source)]
                * n.dims[q.vertex_index(a.target)]
                for a in q.arrows
            )
            assert hom_dim(m, n) - ext_dim(1, m, n) == bilinear


def test_minimal_presentation_shape(a2_algebra):
    s2 = simple_module(a2_algebra, "2")
    pres = minimal_presentation(s2)
    assert pres.p0.dims == (1, 1)  # P2
    assert pres.p1.dims == (1, 0)  # P1
    assert pres.minimal
    comp = pres.cok_projection.compose(pres.sigma)
    assert comp.is_zero()


def test_d_sigma_inside_perp1(a3_wb, nak3_wb, cyc2_wb):
    """D_sigma membership implies Ext^1(T, X) = 0 for minimal sigma."""
    for wb in (a3_wb, nak3_wb, cyc2_wb):
        for i, t in enumerate(wb.members):
            pres = minimal_presentation(t)
            for j, x in enumerate(wb.members):
                if d_sigma_contains(pres, x):
                    assert ext_dim(1, t, x) == 0


def test_d_sigma_projective_case(a2_algebra):
    """For projective T the presentation is 0 -> P, so D_sigma holds for
    everything with Hom onto covered tops; pd 0 means sigma = 0."""
    p2 = projective_module(a2_algebra, "2")
    pres = minimal_presentation(p2)
    assert pres.p1.is_zero()
    for v in a2_algebra.vertices:
        assert d_sigma_contains(pres, simple_module(a2_algebra, v))


def test_injective_envelope_essential(a3_wb, nak3_wb):
    for wb in (a3_wb, nak3_wb):
        for m in wb.members:
            env = injective_envelope(m)
            assert env.is_mono()
            # the socle multiplicities of M and its envelope agree
            from siltlab.reps import socle_multiplicities
            assert socle_multiplicities(m) == \
                socle_multiplicities(env.target)


def test_resolution_exactness(nak3_wb):
    wb = nak3_wb
    p = wb.algebra.p
    for m in wb.members:
        res = minimal_resolution(m, default_resolution_bound(wb.algebra))
        assert res.status == "terminated"
        assert res.augmentation.is_epi()
        for i in range(1, res.length + 1):
            d_i = res.differential(i)
            prev = (res.augmentation if i == 1 else res.differential(i - 1))
            assert prev.compose(d_i).is_zero()
            # exactness: rank d_i = dim ker(prev)
            ker_prev = sum(
                mat.shape[1] - linalg.rank(mat, p)
                for mat in prev.vertex_maps
            )
            rank_d = sum(linalg.rank(mat, p) for mat in d_i.vertex_maps)
            assert rank_d == ker_prev
