"""
Tests for the `lucsum.consecutive` module.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

import pytest

from lucsum import FIRST_KIND, KINDS, SECOND_KIND, UnsupportedCase
from lucsum import consecutive, seqlib

import utils


def _supported(params, kind):
    return not (params.branch == seqlib.PQ1 and kind == FIRST_KIND and
                params.q == 1)


class TestConsecutive(object):
    def test_mersenne(self):
        params = seqlib.make_params(3, 2)
        result = consecutive.consecutive_sum(params, FIRST_KIND, 5)
        assert result.value == 57
        assert result.branch_used == seqlib.PQ1
        assert result.division_witness == seqlib.DivisionWitness(57, 1, True)

    def test_mersenne_lucas(self):
        params = seqlib.make_params(3, 2)
        assert consecutive.consecutive_sum(params, SECOND_KIND, 4).value == 34

    def test_fibonacci(self):
        params = seqlib.make_params(1, -1)
        result = consecutive.consecutive_sum(params, FIRST_KIND, 5)
        assert result.value == 12
        assert result.branch_used == seqlib.NOT_PQ1

    def test_lucas(self):
        params = seqlib.make_params(1, -1)
        assert consecutive.consecutive_sum(params, SECOND_KIND, 4).value == 15

    def test_single_term(self):
        for params in utils.parameter_grid(5):
            assert consecutive.consecutive_sum(params, FIRST_KIND,
                                               1).value == 1
            assert consecutive.consecutive_sum(params, SECOND_KIND,
                                               1).value == params.p

    def test_empty(self):
        params = seqlib.make_params(1, -1)
        assert consecutive.consecutive_sum(params, SECOND_KIND, 0).value == 0

    def test_q_is_one(self):
        with pytest.raises(UnsupportedCase) as excinfo:
            consecutive.consecutive_sum(seqlib.make_params(2, 1), FIRST_KIND,
                                        5)
        assert str(excinfo.value) == consecutive.Q_IS_ONE_ERROR

    def test_q_is_one_second_kind(self):
        # V_i = 2 for (2, 1).
        params = seqlib.make_params(2, 1)
        assert consecutive.consecutive_sum(params, SECOND_KIND, 5).value == 10

    def test_negative(self):
        with pytest.raises(ValueError):
            consecutive.consecutive_sum(seqlib.make_params(1, -1), FIRST_KIND,
                                        -1)

    def test_oracle(self):
        for params in utils.parameter_grid(10):
            for kind in KINDS:
                if not _supported(params, kind):
                    continue
                reference = (utils.u if kind == FIRST_KIND
                             else utils.v)(params.p, params.q, 201)
                total = 0
                for n in range(1, 201):
                    total += reference[n]
                    result = consecutive.consecutive_sum(params, kind, n)
                    assert result.value == total
                    assert result.division_witness.remainder_checked_zero

    def test_telescoping(self):
        for params in utils.parameter_grid(6):
            for kind in KINDS:
                if not _supported(params, kind):
                    continue
                for n in range(2, 40):
                    assert (consecutive.consecutive_sum(params, kind, n).value
                            - consecutive.consecutive_sum(params, kind,
                                                          n - 1).value ==
                            seqlib.term_fast(params, kind, n))

    def test_witness(self):
        for params in utils.parameter_grid(6):
            result = consecutive.consecutive_sum(params, SECOND_KIND, 17)
            witness = result.division_witness
            assert result.value * witness.denominator == witness.numerator

    def test_delta_form(self):
        for q in range(-10, 11):
            if q == 1:
                continue
            params = seqlib.make_params(q + 1, q)
            for n in range(201):
                assert (consecutive.consecutive_sum_delta_form(params,
                                                               n).value ==
                        consecutive.consecutive_sum(params, FIRST_KIND,
                                                    n).value)

    def test_delta_form_branch(self):
        with pytest.raises(UnsupportedCase):
            consecutive.consecutive_sum_delta_form(seqlib.make_params(1, -1),
                                                   4)
        with pytest.raises(UnsupportedCase):
            consecutive.consecutive_sum_delta_form(seqlib.make_params(2, 1),
                                                   4)
