import doctest

import catseq.core
import catseq.counting


def test_core_doctests():
    failures, _ = doctest.testmod(catseq.core)
    assert failures == 0


def test_counting_doctests():
    failures, _ = doctest.testmod(catseq.counting)
    assert failures == 0
