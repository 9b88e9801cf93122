"""Bidegrees, canonical monomials, and enumeration vs a slow reference."""

import random

import pytest

from steenrod_ext.catalog import gen
from steenrod_ext.monomial import (
    Bidegree,
    InvalidStemError,
    Monomial,
    UnsupportedRankError,
    canonicalize,
    enumerate_monomials,
    format_monomial,
    report_key,
)
from support import reference_enumerate, reference_max_index


def names(monomials):
    return [format_monomial(m) for m in monomials]


def test_bidegree_validation():
    b = Bidegree(4, 65)
    assert b.n == 61
    assert Bidegree.from_stem(4, 61) == b
    with pytest.raises(UnsupportedRankError, match="k > 5"):
        Bidegree(6, 10)
    with pytest.raises(UnsupportedRankError):
        Bidegree(0, 10)
    with pytest.raises(InvalidStemError) as exc:
        Bidegree(3, 2)
    assert exc.value.stem == -1
    with pytest.raises(InvalidStemError) as exc:
        Bidegree.from_stem(4, -2)
    assert exc.value.stem == -2
    # stem 0 is allowed
    assert Bidegree.from_stem(5, 0).t == 5


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial(())
    with pytest.raises(ValueError):
        canonicalize([])
    with pytest.raises(ValueError, match="canonical order"):
        Monomial((gen("c", 0), gen("h", 0)))
    m = Monomial((gen("h", 0), gen("c", 0)))
    assert m.homological_degree == 4
    assert m.internal_degree == 12


def test_canonicalize_is_order_independent():
    rng = random.Random(42)
    factors = [gen("h", 0), gen("h", 0), gen("h", 6), gen("c", 2),
               gen("D3", 1), gen("P1h1")]
    expected = canonicalize(factors)
    for _ in range(20):
        shuffled = factors[:]
        rng.shuffle(shuffled)
        assert canonicalize(shuffled) == expected
    assert canonicalize(factors) == canonicalize(expected.factors)


def test_format_monomial():
    cases = [
        ([gen("h", 0)], "h_0"),
        ([gen("h", 5), gen("h", 4), gen("h", 4)], "h_4^2 h_5"),
        ([gen("h", 6), gen("h", 0), gen("h", 0), gen("D3", 1)],
         "h_0^2 h_6 D_3(1)"),
        ([gen("c", 2), gen("h", 0)], "h_0 c_2"),
        ([gen("h", 1), gen("P1h1")], "P^1h_1 h_1"),
        ([gen("h", 2)] * 3, "h_2^3"),
        ([gen("p_prime"), gen("h", 3)], "h_3 p'_0"),
    ]
    for factors, text in cases:
        m = canonicalize(factors)
        assert format_monomial(m) == text
        assert str(m) == text


def test_enumeration_known_bidegrees():
    assert names(enumerate_monomials(Bidegree(4, 65))) == [
        "D_3(0)", "h_0 h_4^2 h_5"]
    assert names(enumerate_monomials(Bidegree(4, 130))) == [
        "D_3(1)", "h_0^2 h_6^2", "h_1 h_5^2 h_6"]
    assert names(enumerate_monomials(Bidegree(4, 45))) == [
        "h_0 c_2", "h_0 h_2 h_3 h_5"]
    assert names(enumerate_monomials(Bidegree(5, 67))) == [
        "H_1(0)", "h_0^3 h_5^2", "h_0 h_1 h_4^2 h_5", "h_1 D_3(0)"]
    assert names(enumerate_monomials(Bidegree(5, 29))) == [
        "h_0 h_1^2 h_3 h_4", "h_0 h_2^3 h_4", "h_0 h_2 h_3^3",
        "h_1 h_4 c_0", "h_3 e_0"]
    assert names(enumerate_monomials(Bidegree(5, 8))) == [
        "h_0^4 h_2", "h_0^2 h_1^3"]
    assert names(enumerate_monomials(Bidegree(3, 6))) == ["h_0^2 h_2", "h_1^3"]
    assert names(enumerate_monomials(Bidegree(3, 11))) == [
        "c_0", "h_0 h_1 h_3"]
    assert names(enumerate_monomials(Bidegree(4, 12))) == [
        "h_0 c_0", "h_0^2 h_1 h_3", "h_1^2 h_2^2"]
    assert names(enumerate_monomials(Bidegree(2, 3))) == ["h_0 h_1"]
    assert names(enumerate_monomials(Bidegree(1, 4))) == ["h_2"]
    assert enumerate_monomials(Bidegree(1, 3)) == []
    assert enumerate_monomials(Bidegree(2, 7)) == []


def test_enumeration_matches_reference_small_degrees():
    for k in range(1, 6):
        for t in range(k, 161):
            got = enumerate_monomials(Bidegree(k, t))
            want = reference_enumerate(k, t)
            assert got == want, (k, t)


def test_enumeration_matches_reference_spot_degrees():
    for k in (4, 5):
        for t in (176, 200, 261, 300, 341, 512, 1024):
            assert enumerate_monomials(Bidegree(k, t)) == \
                reference_enumerate(k, t), (k, t)


def test_enumeration_invariants():
    for k in range(1, 6):
        for t in range(k, 400):
            monomials = enumerate_monomials(Bidegree(k, t))
            keys = [report_key(m) for m in monomials]
            assert keys == sorted(keys)
            assert len(set(monomials)) == len(monomials)
            cap = reference_max_index(t)
            for m in monomials:
                assert m.homological_degree == k
                assert m.internal_degree == t
                assert all(g.index < cap for g in m.factors)
