"""
Tests for the `lucsum.seqlib` module.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

import pytest

from lucsum import (FIRST_KIND, KINDS, SECOND_KIND, ExactDivisionViolation,
                    UnsupportedCase, ZeroDenominator)
from lucsum import named, seqlib

import utils


class TestSeqlib(object):
    def test_make_params_fibonacci(self):
        params = seqlib.make_params(1, -1)
        assert params.delta == 5
        assert params.branch == seqlib.NOT_PQ1
        assert not params.is_degenerate

    def test_make_params_degenerate(self):
        params = seqlib.make_params(2, 1)
        assert params.is_degenerate
        assert params.degeneracy == 'p^2 = 4q, the discriminant is zero'
        assert params.branch == seqlib.PQ1

    def test_make_params_mersenne(self):
        params = seqlib.make_params(3, 2)
        assert params.branch == seqlib.PQ1
        assert params.delta == 1
        assert not params.is_degenerate

    def test_params_str(self):
        assert str(seqlib.make_params(2, -1)) == '(2, -1)'

    def test_degeneracy(self):
        for p, q in utils.DEGENERATE:
            assert seqlib.make_params(p, q).is_degenerate, (p, q)
        for p, q in utils.NONDEGENERATE:
            assert not seqlib.make_params(p, q).is_degenerate, (p, q)

    def test_degeneracy_coprime(self):
        # Among coprime pairs in a small box, exactly the known ones are
        # degenerate.
        degenerate = set(tuple(params) for params in
                         utils.parameter_grid(10, degenerate=True)
                         if params.is_degenerate and _gcd(*params) == 1)
        assert degenerate == set([(2, 1), (-2, 1), (1, 1), (-1, 1), (0, 1),
                                  (0, -1), (1, 0), (-1, 0)])

    def test_nondegenerate_invariants(self):
        for params in utils.parameter_grid(10):
            assert params.q != 0
            assert params.delta != 0

    def test_seeds(self):
        for params in utils.parameter_grid(5, degenerate=True):
            assert seqlib.term_iter(params, FIRST_KIND, 0) == 0
            assert seqlib.term_iter(params, FIRST_KIND, 1) == 1
            assert seqlib.term_iter(params, SECOND_KIND, 0) == 2
            assert seqlib.term_iter(params, SECOND_KIND, 1) == params.p

    def test_term_iter_table(self):
        for sequence in named.SEQUENCES:
            assert [seqlib.term_iter(sequence.params, sequence.kind, n)
                    for n in range(10)] == utils.TABLE[sequence.name]

    def test_term_fast_table(self):
        for sequence in named.SEQUENCES:
            assert [seqlib.term_fast(sequence.params, sequence.kind, n)
                    for n in range(10)] == utils.TABLE[sequence.name]

    def test_term_binet_table(self):
        for sequence in named.SEQUENCES:
            assert [seqlib.term_binet(sequence.params, sequence.kind, n)
                    for n in range(10)] == utils.TABLE[sequence.name]

    def test_term_examples(self):
        fibonacci = seqlib.make_params(1, -1)
        assert seqlib.term_iter(fibonacci, FIRST_KIND, 9) == 34
        assert seqlib.term_iter(seqlib.make_params(6, 1), SECOND_KIND,
                                4) == 1154
        assert seqlib.term_fast(seqlib.make_params(2, -1), FIRST_KIND,
                                8) == 408
        assert seqlib.term_fast(seqlib.make_params(1, -2), SECOND_KIND,
                                6) == 65
        assert seqlib.term_binet(fibonacci, FIRST_KIND, 5) == 5
        assert seqlib.term_binet(seqlib.make_params(3, 2), SECOND_KIND,
                                 1) == 3
        assert seqlib.term_binet(seqlib.make_params(6, 1), FIRST_KIND,
                                 7) == 40391

    def test_three_way_agreement(self):
        for params in utils.parameter_grid(10):
            for kind in KINDS:
                reference = (utils.u if kind == FIRST_KIND
                             else utils.v)(params.p, params.q, 201)
                for n in (0, 1, 2, 3, 10, 57, 128, 200):
                    assert seqlib.term_fast(params, kind, n) == reference[n]
                    assert seqlib.term_binet(params, kind, n) == reference[n]

    def test_term_iter_reference(self):
        for params in utils.parameter_grid(4, degenerate=True):
            for n in range(30):
                assert seqlib.term_iter(params, FIRST_KIND, n) == utils.u(
                    params.p, params.q, n + 1)[n]
                assert seqlib.term_iter(params, SECOND_KIND, n) == utils.v(
                    params.p, params.q, n + 1)[n]

    def test_term_fast_large(self):
        params = seqlib.make_params(1, -1)
        assert (seqlib.term_fast(params, FIRST_KIND, 200) ==
                seqlib.term_iter(params, FIRST_KIND, 200))
        assert (seqlib.term_fast(params, FIRST_KIND, 200) ==
                280571172992510140037611932413038677189525)

    def test_term_fast_degenerate(self):
        for params in utils.parameter_grid(6, degenerate=True):
            if params.is_degenerate:
                for kind in KINDS:
                    for n in range(40):
                        assert (seqlib.term_fast(params, kind, n) ==
                                seqlib.term_iter(params, kind, n))

    def test_recurrence(self):
        for params in utils.parameter_grid(5):
            for kind in KINDS:
                for n in range(2, 60):
                    assert (seqlib.term_fast(params, kind, n) ==
                            params.p * seqlib.term_fast(params, kind, n - 1)
                            - params.q * seqlib.term_fast(params, kind, n - 2))

    def test_term_binet_degenerate(self):
        with pytest.raises(UnsupportedCase):
            seqlib.term_binet(seqlib.make_params(2, 1), FIRST_KIND, 3)

    def test_negative_index(self):
        params = seqlib.make_params(1, -1)
        for term in (seqlib.term_iter, seqlib.term_fast, seqlib.term_binet):
            with pytest.raises(ValueError):
                term(params, FIRST_KIND, -1)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            seqlib.term_fast(seqlib.make_params(1, -1), 'W', 3)

    def test_binet_special_pq1(self):
        for q in range(-10, 11):
            params = seqlib.make_params(q + 1, q)
            for kind in KINDS:
                for n in range(201):
                    assert (seqlib.binet_special_pq1(params, kind, n) ==
                            seqlib.term_iter(params, kind, n))

    def test_binet_special_pq1_examples(self):
        assert seqlib.binet_special_pq1(seqlib.make_params(3, 2), FIRST_KIND,
                                        5) == 31
        assert seqlib.binet_special_pq1(seqlib.make_params(3, 2), SECOND_KIND,
                                        9) == 513
        assert seqlib.binet_special_pq1(seqlib.make_params(2, 1), FIRST_KIND,
                                        7) == 7

    def test_binet_special_pq1_branch(self):
        with pytest.raises(UnsupportedCase):
            seqlib.binet_special_pq1(seqlib.make_params(1, -1), FIRST_KIND, 3)

    def test_iter_terms(self):
        params = seqlib.make_params(1, -2)
        terms = seqlib.iter_terms(params, SECOND_KIND)
        assert [next(terms) for _ in range(10)] == utils.TABLE[
            'jacobsthal_lucas']

    def test_quadratic_pair(self):
        # (1 + sqrt(5))^2 = 6 + 2 sqrt(5).
        pair = seqlib.QuadraticPair(1, 1)
        assert pair.multiply(pair, 5) == seqlib.QuadraticPair(6, 2)
        assert pair.power(0, 5) == seqlib.QuadraticPair(1, 0)
        assert pair.power(3, 5) == pair.multiply(pair, 5).multiply(pair, 5)

    def test_exact_divide(self):
        quotient, witness = seqlib.exact_divide(-12, -1)
        assert quotient == 12
        assert witness == seqlib.DivisionWitness(-12, -1, True)

    def test_exact_divide_violation(self):
        with pytest.raises(ExactDivisionViolation):
            seqlib.exact_divide(7, 2)

    def test_exact_divide_zero(self):
        with pytest.raises(ZeroDenominator):
            seqlib.exact_divide(7, 0)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)
