import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubnil import (
    HType,
    WeightTuple,
    btype,
    ctype,
    dominance_le,
    enumerate_small,
    fundamental_weight,
    highest_short_root,
    is_small,
    positive_roots,
    schubert_dim,
    simple_roots,
)
from schubnil.weights import height

from util_oracles import closed_form_positive_roots, dominant_tuples


def wt(kind, coords):
    return WeightTuple(HType(kind, len(coords)), tuple(coords))


# --- simple roots and highest short root ---------------------------------


def test_simple_roots_b3():
    got = [r.coords for r in simple_roots(btype(3))]
    assert got == [(1, -1, 0), (0, 1, -1), (0, 0, 1)]
    assert highest_short_root(btype(3)).coords == (1, 0, 0)


def test_simple_roots_c3():
    got = [r.coords for r in simple_roots(ctype(3))]
    assert got[-1] == (0, 0, 2)
    assert highest_short_root(ctype(3)).coords == (1, 1, 0)


def test_simple_roots_rank_one():
    assert [r.coords for r in simple_roots(btype(1))] == [(1,)]
    assert highest_short_root(btype(1)).coords == (1,)


@pytest.mark.parametrize("kind", ["B", "C"])
@pytest.mark.parametrize("rank", range(1, 7))
def test_positive_roots_match_closed_form(kind, rank):
    assert set(positive_roots(HType(kind, rank))) == closed_form_positive_roots(
        kind, rank
    )


def test_fundamental_weights():
    assert fundamental_weight(btype(4), 2).coords == (1, 1, 0, 0)
    assert fundamental_weight(ctype(4), 2).coords == (1, 1, 0, 0)
    with pytest.raises(ValueError):
        fundamental_weight(btype(4), 4)  # half-integral
    with pytest.raises(ValueError):
        fundamental_weight(ctype(4), 3)  # outside the even-sum lattice


# --- lattice constraint ---------------------------------------------------


def test_type_c_lattice_enforced():
    with pytest.raises(ValueError):
        wt("C", (1, 0, 0))
    wt("C", (1, 1, 0))  # fine


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6))
def test_json_roundtrip(coords):
    if sum(coords) % 2 != 0:
        coords = coords + [1]
    w = wt("C", tuple(coords))
    assert WeightTuple.from_json(w.to_json()) == w


# --- dominance order -------------------------------------------------------


def test_dominance_examples():
    assert dominance_le(wt("B", (1, 1, 0)), wt("B", (1, 1, 1)))
    lam = wt("C", (2, 1, 1, 0))
    assert dominance_le(lam, lam)
    assert not dominance_le(wt("C", (2, 0, 0, 0, 0)), wt("C", (1, 1, 1, 1, 0)))


def test_dominance_oracle_by_linear_solve():
    # independent check: expand the difference in the simple-root matrix
    from fractions import Fraction

    for kind, rank in [("B", 3), ("C", 3), ("B", 4), ("C", 4)]:
        ht = HType(kind, rank)
        simples = [r.coords for r in simple_roots(ht)]
        for mu in dominant_tuples(kind, rank, 2):
            for lam in dominant_tuples(kind, rank, 2):
                diff = [a - b for a, b in zip(lam, mu)]
                # solve the triangular system diff = sum c_i gamma_i
                coeffs = []
                rem = list(map(Fraction, diff))
                ok = True
                for i, g in enumerate(simples):
                    lead = next(k for k, v in enumerate(g) if v)
                    c = rem[lead] / g[lead]
                    coeffs.append(c)
                    rem = [r - c * v for r, v in zip(rem, g)]
                ok = all(r == 0 for r in rem) and all(
                    c >= 0 and c.denominator == 1 for c in coeffs
                )
                assert ok == dominance_le(
                    WeightTuple(ht, mu), WeightTuple(ht, lam)
                ), (kind, rank, mu, lam)


def test_dominance_mismatch_errors():
    with pytest.raises(ValueError):
        dominance_le(wt("B", (1, 0)), wt("C", (1, 1)))
    with pytest.raises(ValueError):
        dominance_le(wt("B", (0, 1)), wt("B", (1, 1)))


@pytest.mark.parametrize("kind", ["B", "C"])
def test_dominance_order_axioms_exhaustive(kind):
    # reflexive, antisymmetric, transitive on all dominant tuples with
    # entries <= 3 up to rank 4
    for rank in range(1, 5):
        ht = HType(kind, rank)
        tups = [WeightTuple(ht, t) for t in dominant_tuples(kind, rank, 3)]
        for a in tups:
            assert dominance_le(a, a)
        le = {}
        for a in tups:
            for b in tups:
                le[a, b] = dominance_le(a, b)
        for a in tups:
            for b in tups:
                if le[a, b] and le[b, a]:
                    assert a == b
        if rank <= 3:
            for a in tups:
                for b in tups:
                    if not le[a, b]:
                        continue
                    for c in tups:
                        if le[b, c]:
                            assert le[a, c]


# --- smallness ------------------------------------------------------------


def test_is_small_examples():
    assert is_small(wt("B", (1, 1, 1, 1)))
    assert not is_small(wt("B", (2, 0, 0, 0)))
    assert not is_small(wt("C", (2, 2, 0, 0)))


def test_enumerate_small_closed_forms():
    assert [w.coords for w in enumerate_small(btype(3))] == [
        (0, 0, 0),
        (1, 0, 0),
        (1, 1, 0),
        (1, 1, 1),
    ]
    assert [w.coords for w in enumerate_small(ctype(3))] == [
        (0, 0, 0),
        (1, 1, 0),
        (2, 0, 0),
        (2, 1, 1),
    ]
    assert [w.coords for w in enumerate_small(ctype(1))] == [(0,), (2,)]


@pytest.mark.parametrize("rank", range(1, 9))
def test_enumerate_small_counts_and_completeness(rank):
    bs = enumerate_small(btype(rank))
    assert len(bs) == rank + 1
    cs = enumerate_small(ctype(rank))
    assert len(cs) == rank // 2 + (rank - 1) // 2 + 2
    for lst in (bs, cs):
        assert all(is_small(w) for w in lst)
    # completeness: every small dominant tuple with entries <= 2 shows up
    for kind, lst in (("B", bs), ("C", cs)):
        found = {w.coords for w in lst}
        ht = HType(kind, rank)
        for t in dominant_tuples(kind, rank, 2):
            w = WeightTuple(ht, t)
            assert (w.coords in found) == is_small(w)


@pytest.mark.parametrize("kind", ["B", "C"])
@pytest.mark.parametrize("rank", range(1, 6))
def test_small_is_lower_order_ideal(kind, rank):
    ht = HType(kind, rank)
    smalls = enumerate_small(ht)
    for lam in smalls:
        for mu in dominant_tuples(kind, rank, 3):
            muw = WeightTuple(ht, mu)
            if dominance_le(muw, lam):
                assert is_small(muw)


# --- Schubert dimension -----------------------------------------------------


def test_schubert_dim_zero():
    assert schubert_dim(wt("B", (0, 0, 0))) == 0
    assert schubert_dim(wt("C", (0, 0))) == 0


def test_schubert_dim_frozen_values():
    # frozen from the positive-root enumeration (and cross-checked against
    # orbit dimensions below)
    assert schubert_dim(wt("B", (1, 0))) == 4
    assert schubert_dim(wt("C", (1, 1))) == 4
    assert schubert_dim(wt("B", (1, 1, 1))) == 12


def test_schubert_dim_cross_check_orbit_dims():
    # open embeddings identify cell dimensions with orbit dimensions:
    # B: j(2l+1-j) at (1^j 0^...)  /  C: 4j(l-j) at (1^{2j} 0^...)
    for ell in range(1, 7):
        for j in range(ell + 1):
            w = wt("B", tuple([1] * j + [0] * (ell - j)))
            assert schubert_dim(w) == j * (2 * ell + 1 - j)
        for j in range(ell // 2 + 1):
            w = wt("C", tuple([1] * (2 * j) + [0] * (ell - 2 * j)))
            assert schubert_dim(w) == 4 * j * (ell - j)


@pytest.mark.parametrize("kind", ["B", "C"])
def test_schubert_dim_strictly_monotone(kind):
    for rank in range(1, 5):
        ht = HType(kind, rank)
        tups = [WeightTuple(ht, t) for t in dominant_tuples(kind, rank, 3)]
        for a in tups:
            for b in tups:
                if a != b and dominance_le(a, b):
                    assert schubert_dim(a) < schubert_dim(b)
                    assert height(a) < height(b)
