"""
Sums over every r-th term, weighted sums of the Fibonacci and Lucas numbers
at even indices and squared, and reverse weighted sums.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

from collections import namedtuple
from fractions import Fraction
import logging

from . import (FIRST_KIND, SECOND_KIND, ZeroDenominator, check_index,
               check_kind)
from .consecutive import consecutive_sum, divided, empty_sum
from .oracle import STRIDE, brute_sum
from .seqlib import make_params, term_fast
from .weighted import weighted_sum


logger = logging.getLogger(__name__)

#: Parameters of the Fibonacci and Lucas numbers.
FIBONACCI_PARAMS = make_params(1, -1)

#: Methods for :func:`reverse_weighted_sum`.
REVERSE_METHODS = ('difference', 'consecutive')


class StrideQuery(namedtuple('StrideQuery', ['params', 'kind', 'n', 'r'])):
    """
    The sum of S_ir for i = 1 up to `n`.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.
    :arg int r: Stride, at least 1.
    """
    __slots__ = ()

    @property
    def denominator(self):
        """
        The denominator 1 + q^r - V_r.
        """
        q_power = self.params.q ** self.r
        return 1 + q_power - term_fast(self.params, SECOND_KIND, self.r)


def _check_query(query):
    check_index(query.n)
    check_kind(query.kind)
    if query.r < 1:
        raise ValueError('the stride must be at least 1')
    if query.denominator == 0:
        raise ZeroDenominator('1 + q^r - V_r vanishes for %s and r = %d'
                              % (query.params, query.r))


def _stride_numerator(query, kind):
    params, _, n, r = query
    q_power = params.q ** r
    return (term_fast(params, kind, r)
            + q_power * term_fast(params, kind, n * r)
            - term_fast(params, kind, (n + 1) * r))


def stride_sum(query):
    """
    Sum of S_ir for i = 1 up to `n`.

    Both kinds share the denominator 1 + q^r - V_r. The numerator is
    U_r + q^r U_nr - U_(n+1)r for the first kind and
    V_r + q^r V_nr - V_(n+1)r - 2q^r for the second kind.

    :arg StrideQuery query: The sum to evaluate.

    :return: The sum.
    :rtype: lucsum.consecutive.SumResult

    :raise ZeroDenominator: If 1 + q^r - V_r = 0. This includes every pair
      with p - q = 1.
    """
    _check_query(query)
    params, kind, n, r = query

    if n == 0:
        return empty_sum(params)

    numerator = _stride_numerator(query, kind)
    if kind == SECOND_KIND:
        numerator -= 2 * params.q ** r
    return divided(params, numerator, query.denominator)


def erratum_demo(query):
    """
    Compare the stride sum of the second kind with the same formula missing
    its -2q^r summand, and with the literal sum.

    The formula without the summand is off by exactly
    2q^r / (1 + q^r - V_r), which need not be an integer.

    :arg StrideQuery query: A stride sum of the second kind.

    :return: Corrected value, uncorrected value and the literal sum.
    :rtype: int, fractions.Fraction, int
    """
    query = query._replace(kind=SECOND_KIND)
    corrected = stride_sum(query).value
    uncorrected = Fraction(_stride_numerator(query, SECOND_KIND),
                           query.denominator)
    oracle = brute_sum(query.params, SECOND_KIND, query.n, STRIDE, query.r)

    logger.debug('Stride sum for %s, n = %d, r = %d: corrected %d, '
                 'uncorrected %s, oracle %d', query.params, query.n, query.r,
                 corrected, uncorrected, oracle)
    return corrected, uncorrected, oracle


def stride_identity_check(params, m, r):
    """
    Check V_m+2r = V_r V_m+r - q^r V_m.

    :arg SequenceParams params: Sequence parameters.
    :arg int m: Index.
    :arg int r: Index offset.

    :return: Whether the identity holds for this instance.
    :rtype: bool
    """
    check_index(m)
    check_index(r)

    def v(k):
        return term_fast(params, SECOND_KIND, k)

    return v(m + 2 * r) == v(r) * v(m + r) - params.q ** r * v(m)


def fib_luc_weighted_stride2(kind, n):
    """
    Sum of i F_2i (first kind) or i L_2i (second kind) for i = 1 up to `n`,
    which is n F_2n+1 - F_2n or n L_2n+1 - L_2n + 2.
    """
    check_index(n)
    check_kind(kind)

    value = (n * term_fast(FIBONACCI_PARAMS, kind, 2 * n + 1)
             - term_fast(FIBONACCI_PARAMS, kind, 2 * n))
    if kind == SECOND_KIND:
        value += 2
    return value


def fib_luc_weighted_square(kind, n):
    """
    Sum of i F_i^2 (first kind) or i L_i^2 (second kind) for i = 1 up to
    `n`.

    The closed forms are n F_n F_n+1 - F_n^2 + (1 - (-1)^n) / 2 and
    n L_n L_n+1 - L_n^2 + (3 + 5 (-1)^n) / 2.

    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.

    :return: The weighted sum of squares.
    :rtype: int
    """
    check_index(n)
    check_kind(kind)

    current = term_fast(FIBONACCI_PARAMS, kind, n)
    value = (n * current * term_fast(FIBONACCI_PARAMS, kind, n + 1)
             - current * current)
    if kind == FIRST_KIND:
        return value + (n % 2)
    return value + (4 if n % 2 == 0 else -1)


def reverse_weighted_sum(params, kind, n, method='difference'):
    """
    Sum of (n - i + 1) S_i for i = 1 up to `n`.

    Two methods are available:

    - ``difference``: (n + 1) times the consecutive sum minus the weighted
      sum.
    - ``consecutive``: the sum of the consecutive sums of lengths 1 up to
      `n`.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.
    :arg str method: One of :data:`REVERSE_METHODS`.

    :return: The reverse weighted sum.
    :rtype: int

    :raise UnsupportedCase: Whenever the underlying consecutive or weighted
      sum does.
    """
    if method not in REVERSE_METHODS:
        raise ValueError('method must be one of %s, not %r'
                         % (', '.join(REVERSE_METHODS), method))

    if method == 'difference':
        return ((n + 1) * consecutive_sum(params, kind, n).value
                - weighted_sum(params, kind, n).value)

    check_index(n)
    total = consecutive_sum(params, kind, 0).value
    for length in range(1, n + 1):
        total += consecutive_sum(params, kind, length).value
    return total
