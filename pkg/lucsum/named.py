# -*- coding: utf-8 -*-
"""
Registry of well-known Lucas sequences and their specialized weighted sums.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from collections import namedtuple

from . import (FIRST_KIND, SECOND_KIND, UnknownSequence, UnsupportedCase,
               check_index)
from .seqlib import exact_divide, make_params, term_fast
from .weighted import OmegaPsi, triangular


class NamedSequence(namedtuple('NamedSequence',
                               ['name', 'symbol', 'params', 'kind',
                                'oeis_id', 'oeis_divisor'])):
    """
    A Lucas sequence known under its own name.

    :arg str name: Identifier, e.g. ``fibonacci``.
    :arg str symbol: Short symbol, e.g. ``F``.
    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg str oeis_id: OEIS identifier.
    :arg int oeis_divisor: The OEIS entry lists the terms divided by this
      number (only the double Lucas-balancing numbers are listed halved).
    """
    __slots__ = ()

    def term(self, n):
        """
        Term with index `n`.
        """
        return term_fast(self.params, self.kind, n)


class DerivedSequence(namedtuple('DerivedSequence',
                                 ['name', 'base', 'divisor'])):
    """
    A sequence whose terms are those of a named sequence divided by a
    constant.
    """
    __slots__ = ()

    def term(self, n):
        return exact_divide(lookup(self.base).term(n), self.divisor)[0]


#: Named sequences in the order of their usual presentation.
SEQUENCES = (
    NamedSequence('fibonacci', 'F', make_params(1, -1), FIRST_KIND,
                  'A000045', 1),
    NamedSequence('lucas', 'L', make_params(1, -1), SECOND_KIND,
                  'A000032', 1),
    NamedSequence('pell', 'P', make_params(2, -1), FIRST_KIND,
                  'A000129', 1),
    NamedSequence('companion_pell', 'Q', make_params(2, -1), SECOND_KIND,
                  'A002203', 1),
    NamedSequence('balancing', 'B', make_params(6, 1), FIRST_KIND,
                  'A001109', 1),
    NamedSequence('double_lucas_balancing', 'Ĉ', make_params(6, 1),
                  SECOND_KIND, 'A001541', 2),
    NamedSequence('jacobsthal', 'J', make_params(1, -2), FIRST_KIND,
                  'A001045', 1),
    NamedSequence('jacobsthal_lucas', 'j', make_params(1, -2), SECOND_KIND,
                  'A014551', 1),
    NamedSequence('mersenne', 'M', make_params(3, 2), FIRST_KIND,
                  'A000225', 1),
    NamedSequence('mersenne_lucas', 'm', make_params(3, 2), SECOND_KIND,
                  'A000051', 1))

sequences = dict((sequence.name, sequence) for sequence in SEQUENCES)

#: Lucas-balancing numbers C_n, half the double Lucas-balancing numbers.
LUCAS_BALANCING = DerivedSequence('lucas_balancing', 'double_lucas_balancing',
                                  2)


def lookup(name):
    """
    Find a named sequence.

    :arg str name: Identifier, e.g. ``fibonacci``.

    :return: The registry entry.
    :rtype: NamedSequence

    :raise UnknownSequence: If there is no sequence with this name.
    """
    try:
        return sequences[name]
    except KeyError:
        raise UnknownSequence('unknown sequence %r (choose from %s)'
                              % (name, ', '.join(s.name for s in SEQUENCES)))


def _wall(s, n):
    # Also known for generalized Fibonacci numbers.
    return n * s(n + 2) - s(n + 3) + s(3)


def _pell(s, n):
    return exact_divide((n - 1) * s(n + 1) + n * s(n) + 1, 2)[0]


def _companion_pell(s, n):
    return exact_divide((n - 1) * s(n + 1) + n * s(n) + 2, 2)[0]


def _balancing(s, n):
    return exact_divide(n * s(n + 1) - (n + 1) * s(n), 4)[0]


def _double_lucas_balancing(s, n):
    return exact_divide(n * s(n + 1) - (n + 1) * s(n) + 2, 4)[0]


def _jacobsthal(s, n):
    return exact_divide(2 * n * s(n + 2) - s(n + 3) + 3, 4)[0]


def _jacobsthal_lucas(s, n):
    return exact_divide(2 * n * s(n + 2) - 8 - s(n + 3) + 15, 4)[0]


def _mersenne(s, n):
    return 2 ** (n + 1) * (n - 1) + 2 - triangular(n)


def _mersenne_lucas(s, n):
    return 2 ** (n + 1) * (n - 1) + 2 + triangular(n)


#: Weighted sum formulas per named sequence, as functions of a term
#: function and `n`.
weighted_sums = {
    'fibonacci': _wall,
    'lucas': _wall,
    'pell': _pell,
    'companion_pell': _companion_pell,
    'balancing': _balancing,
    'double_lucas_balancing': _double_lucas_balancing,
    'jacobsthal': _jacobsthal,
    'jacobsthal_lucas': _jacobsthal_lucas,
    'mersenne': _mersenne,
    'mersenne_lucas': _mersenne_lucas
}


def specialized_weighted_sum(name, n):
    """
    Sum of i S_i for i = 1 up to `n` by the formula specific to the named
    sequence, e.g. n F_n+2 - F_n+3 + F_3 for the Fibonacci numbers.

    :arg str name: Identifier, e.g. ``fibonacci``.
    :arg int n: Number of terms.

    :return: The weighted sum.
    :rtype: int
    """
    sequence = lookup(name)
    check_index(n)
    return weighted_sums[name](sequence.term, n)


def lucas_balancing(n):
    """
    Lucas-balancing number C_n.
    """
    check_index(n)
    return LUCAS_BALANCING.term(n)


def lucas_balancing_weighted_sum(n):
    """
    Sum of i C_i for i = 1 up to `n`, which is
    (n C_n+1 - (n + 1) C_n + 1) / 4.

    :arg int n: Number of terms.

    :return: The weighted sum.
    :rtype: int
    """
    check_index(n)
    return exact_divide(n * lucas_balancing(n + 1)
                        - (n + 1) * lucas_balancing(n) + 1, 4)[0]


#: Correction term shortcuts per parameter pair, as functions of the first
#: and second kind term functions and `n`.
_omega_psi_shortcuts = {
    (1, -1): lambda u, v, n: OmegaPsi(u(n + 3) - 2, v(n + 3) - 6),
    (2, -1): lambda u, v, n: OmegaPsi(2 * u(n + 1) - 2, 2 * v(n + 1) - 8),
    (6, 1): lambda u, v, n: OmegaPsi(4 * u(n), 4 * v(n)),
    (1, -2): lambda u, v, n: OmegaPsi(u(n + 3) - 3, v(n + 3) - 15)
}


def omega_psi_specialized(name, n):
    """
    Correction terms Omega(n) and Psi(n) of the weighted sums by the
    shortcut for the family of the named sequence.

    :arg str name: Identifier, e.g. ``pell``.
    :arg int n: Index, at least 1.

    :return: Omega(n) and Psi(n).
    :rtype: lucsum.weighted.OmegaPsi

    :raise UnsupportedCase: For the Mersenne family, where p - q = 1 and
      there are no correction terms.
    """
    sequence = lookup(name)
    if n < 1:
        raise ValueError('the correction terms are defined for n >= 1')
    try:
        shortcut = _omega_psi_shortcuts[tuple(sequence.params)]
    except KeyError:
        raise UnsupportedCase('%s has p - q = 1 and no correction terms'
                              % name)
    params = sequence.params
    return shortcut(lambda k: term_fast(params, FIRST_KIND, k),
                    lambda k: term_fast(params, SECOND_KIND, k), n)
