import pytest

from siltlab.corpus import decompose, enumerate_indecomposables, is_indecomposable
from siltlab.reps import (
    direct_sum,
    injective_module,
    is_isomorphic,
    projective_module,
    simple_module,
)


def test_a2_corpus(a2_wb):
    assert len(a2_wb.members) == 3
    assert set(a2_wb.names) == {"S1", "S2", "P2"}
    assert a2_wb.corpus.completeness == "certified-by-classification"


def test_an_counts(a2_wb, a3_wb):
    # interval modules: n(n+1)/2
    assert len(a2_wb.members) == 3
    assert len(a3_wb.members) == 6


def test_nak3_corpus(nak3_wb):
    assert len(nak3_wb.members) == 5
    assert set(nak3_wb.names) == {"S1", "S2", "S3", "P2", "P3"}


def test_cyc2_corpus(cyc2_wb):
    # S1, S2 and the two 2-dimensional uniserials
    assert len(cyc2_wb.members) == 4
    dims = sorted(m.total_dim for m in cyc2_wb.members)
    assert dims == [1, 1, 2, 2]


def test_classified_vs_brute_agree(a2_parsed, nak3_parsed):
    for parsed in (a2_parsed, nak3_parsed):
        alg = parsed.build()
        classified = enumerate_indecomposables(alg, "classified")
        brute = enumerate_indecomposables(alg, "brute", dim_bound=4)
        assert len(classified) == len(brute)
        for m in classified.members:
            assert any(is_isomorphic(m, b) for b in brute.members)


def test_indecomposability(a2_algebra):
    alg = a2_algebra
    p2 = projective_module(alg, "2")
    assert is_indecomposable(p2)
    s1 = simple_module(alg, "1")
    assert is_indecomposable(s1)
    summed, _, _ = direct_sum(alg, [p2, s1])
    assert not is_indecomposable(summed)


def test_decompose_identifies_summands(a3_wb):
    wb = a3_wb
    alg = wb.algebra
    mults = {0: 2, 3: 1}
    reps = [wb.members[i] for i in sorted(mults)]
    counts = [mults[i] for i in sorted(mults)]
    summed, _, _ = direct_sum(alg, reps, counts)
    assert decompose(summed, wb.corpus) == mults


def test_decompose_regular(nak3_wb):
    wb = nak3_wb
    from siltlab.reps import regular_module

    r = regular_module(wb.algebra)
    dec = decompose(r, wb.corpus)
    # R = P1 + P2 + P3; P1 = S1 here
    total = sum(dec.values())
    assert total == 3
    names = sorted(wb.names[i] for i in dec)
    assert names == ["P2", "P3", "S1"]


def test_decompose_incomplete_corpus_raises(a3_wb):
    import numpy as np

    from siltlab.corpus import Corpus

    wb = a3_wb
    truncated = Corpus(wb.algebra, wb.members[:2], wb.names[:2],
                       "truncated-for-test")
    big = wb.members[-1]
    if big.dims != wb.members[0].dims:
        with pytest.raises(RuntimeError):
            decompose(big, truncated)


def test_standard_names_preferred(nak3_wb):
    wb = nak3_wb
    for name in ("S1", "S2", "S3", "P2", "P3"):
        idx = wb.corpus.index_of(name)
        member = wb.members[idx]
        if name.startswith("S"):
            std = simple_module(wb.algebra, name[1:])
        else:
            std = projective_module(wb.algebra, name[1:])
        assert is_isomorphic(member, std)


def test_unknown_strategy_rejected(a2_algebra):
    with pytest.raises(ValueError):
        enumerate_indecomposables(a2_algebra, "magic")
