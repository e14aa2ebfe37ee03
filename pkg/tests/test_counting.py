import pytest

from catseq.core import CatalanError
from catseq.counting import (
    SeriesPrefix,
    binomial,
    catalan_closed,
    catalan_convolution,
    catalan_linear,
    catalan_series,
)

from oracle import brute_count

# frozen from the brute-force word count (oracle.brute_count, re-run below)
FIRST_CATALANS = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_binomial_examples():
    assert binomial(0, 0) == 1
    assert binomial(6, 3) == 20
    assert binomial(4, 7) == 0
    with pytest.raises(CatalanError):
        binomial(-1, 0)


def test_closed_examples():
    assert catalan_closed(0) == 1
    assert catalan_closed(3) == 5
    assert catalan_closed(10) == 16796


def test_convolution_examples():
    assert catalan_convolution(1) == 1
    assert catalan_convolution(4) == 14  # 1*5 + 1*2 + 2*1 + 5*1
    assert catalan_convolution(3) == 5


def test_linear_examples():
    assert catalan_linear(0) == 1
    assert catalan_linear(2) == 2  # C_1 = 2/2 = 1, C_2 = 6/3 = 2
    assert catalan_linear(10) == 16796


def test_series_examples():
    assert catalan_series(1).coefficients == (1,)
    assert catalan_series(4).coefficients == (1, 1, 2, 5)
    assert catalan_series(11).coefficients[-1] == 16796


def test_series_rejects_empty_prefix():
    with pytest.raises(CatalanError):
        catalan_series(0)


def test_negative_index_rejected():
    for fn in (catalan_closed, catalan_convolution, catalan_linear):
        with pytest.raises(CatalanError):
            fn(-1)


def test_cross_method_agreement_to_300():
    series = catalan_series(301).coefficients
    for n in range(301):
        closed = catalan_closed(n)  # exact divisibility asserted inside
        assert closed == catalan_convolution(n)
        assert closed == catalan_linear(n)
        assert closed == series[n]


def test_series_satisfies_the_convolution_identity():
    coeffs = catalan_series(40).coefficients
    for k in range(39):
        assert coeffs[k + 1] == sum(coeffs[i] * coeffs[k - i] for i in range(k + 1))


@pytest.mark.parametrize("n", range(11))
def test_every_method_matches_the_brute_force_word_count(n):
    expected = brute_count(n)
    assert expected == FIRST_CATALANS[n]
    assert catalan_closed(n) == expected
    assert catalan_convolution(n) == expected
    assert catalan_linear(n) == expected
    assert catalan_series(n + 1).coefficients[n] == expected


def test_values_stay_positive():
    assert all(catalan_linear(n) >= 1 for n in range(50))


def test_series_prefix_requires_unit_constant_term():
    with pytest.raises(AssertionError):
        SeriesPrefix((2, 1))
