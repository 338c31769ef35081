# -*- coding: utf-8 -*-
"""
Tests for the `lucsum.named` module.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

import pytest

from lucsum import (FIRST_KIND, SECOND_KIND, UnknownSequence,
                    UnsupportedCase)
from lucsum import named, seqlib, weighted

import utils


class TestNamed(object):
    def test_lookup(self):
        fibonacci = named.lookup('fibonacci')
        assert fibonacci.params == seqlib.make_params(1, -1)
        assert fibonacci.kind == FIRST_KIND
        assert fibonacci.oeis_id == 'A000045'

        companion_pell = named.lookup('companion_pell')
        assert companion_pell.params == seqlib.make_params(2, -1)
        assert companion_pell.kind == SECOND_KIND
        assert companion_pell.oeis_id == 'A002203'

        balancing = named.lookup('balancing')
        assert balancing.params == seqlib.make_params(6, 1)
        assert balancing.kind == FIRST_KIND
        assert balancing.oeis_id == 'A001109'

    def test_lookup_unknown(self):
        with pytest.raises(UnknownSequence):
            named.lookup('half_companion_pell')

    def test_registry(self):
        assert [s.symbol for s in named.SEQUENCES] == [
            'F', 'L', 'P', 'Q', 'B', 'Ĉ', 'J', 'j', 'M', 'm']
        assert named.lookup('mersenne_lucas').oeis_id == 'A000051'
        assert named.lookup('mersenne_lucas').params == seqlib.make_params(
            3, 2)
        assert named.lookup('double_lucas_balancing').oeis_divisor == 2

    def test_table(self):
        for sequence in named.SEQUENCES:
            assert [sequence.term(n) for n in range(10)] == utils.TABLE[
                sequence.name]

    def test_specialized_examples(self):
        assert named.specialized_weighted_sum('fibonacci', 5) == 46
        assert named.specialized_weighted_sum('pell', 4) == 68
        assert named.specialized_weighted_sum('balancing', 3) == 118
        assert named.specialized_weighted_sum('jacobsthal_lucas', 4) == 100
        assert named.specialized_weighted_sum('mersenne', 4) == 88
        assert named.specialized_weighted_sum('mersenne_lucas', 4) == 108

    def test_specialized_equivalence(self):
        for sequence in named.SEQUENCES:
            total = 0
            for n in range(1, 201):
                total += n * sequence.term(n)
                assert named.specialized_weighted_sum(sequence.name,
                                                      n) == total
                assert weighted.weighted_sum(sequence.params, sequence.kind,
                                             n).value == total

    def test_specialized_unknown(self):
        with pytest.raises(UnknownSequence):
            named.specialized_weighted_sum('tribonacci', 3)

    def test_lucas_balancing(self):
        assert [named.lucas_balancing(n) for n in range(5)] == [
            1, 3, 17, 99, 577]

    def test_lucas_balancing_weighted_sum(self):
        assert named.lucas_balancing_weighted_sum(1) == 3
        assert named.lucas_balancing_weighted_sum(2) == 37
        assert named.lucas_balancing_weighted_sum(3) == 334

    def test_lucas_balancing_weighted_sum_oracle(self):
        total = 0
        for n in range(1, 201):
            total += n * named.lucas_balancing(n)
            assert named.lucas_balancing_weighted_sum(n) == total

    def test_lucas_balancing_square(self):
        # C_n is the square root of 8 B_n^2 + 1.
        balancing = named.lookup('balancing')
        for n in range(51):
            c = named.lucas_balancing(n)
            assert c > 0
            assert c * c == 8 * balancing.term(n) ** 2 + 1

    def test_mersenne_powers(self):
        mersenne = named.lookup('mersenne')
        mersenne_lucas = named.lookup('mersenne_lucas')
        for n in range(201):
            assert mersenne.term(n) == 2 ** n - 1
            assert mersenne_lucas.term(n) == 2 ** n + 1

    def test_omega_psi_specialized(self):
        assert (named.omega_psi_specialized('fibonacci', 4) ==
                weighted.OmegaPsi(11, 23))
        assert (named.omega_psi_specialized('pell', 2) ==
                weighted.OmegaPsi(8, 20))
        assert (named.omega_psi_specialized('balancing', 3) ==
                weighted.OmegaPsi(140, 792))

    def test_omega_psi_specialized_equivalence(self):
        for sequence in named.SEQUENCES:
            if sequence.params.branch == seqlib.PQ1:
                continue
            for n in range(1, 201):
                assert (named.omega_psi_specialized(sequence.name, n) ==
                        weighted.omega_psi(sequence.params, n))

    def test_omega_psi_specialized_mersenne(self):
        for name in ('mersenne', 'mersenne_lucas'):
            with pytest.raises(UnsupportedCase):
                named.omega_psi_specialized(name, 3)
