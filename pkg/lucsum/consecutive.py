"""
Closed forms for sums of consecutive terms.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from collections import namedtuple

from . import (FIRST_KIND, UnsupportedCase, check_index, check_kind)
from .seqlib import PQ1, DivisionWitness, exact_divide, term_fast


Q_IS_ONE_ERROR = 'requires q != 1 when p - q = 1'


class SumResult(namedtuple('SumResult',
                           ['value', 'branch_used', 'division_witness'])):
    """
    Value of a closed-form sum together with the branch of the closed form
    that produced it and the witness of its final exact division.

    :arg int value: The sum.
    :arg str branch_used: :data:`lucsum.seqlib.PQ1` or
      :data:`lucsum.seqlib.NOT_PQ1`.
    :arg DivisionWitness division_witness: The final division.
    """
    __slots__ = ()


def empty_sum(params):
    """
    Result of a sum over no terms.
    """
    return SumResult(0, params.branch, DivisionWitness(0, 1, True))


def divided(params, numerator, denominator):
    """
    Build a :class:`SumResult` from one exact division.
    """
    value, witness = exact_divide(numerator, denominator)
    return SumResult(value, params.branch, witness)


def consecutive_sum(params, kind, n):
    """
    Sum of the terms with index 1 up to `n`.

    With p - q = 1 the sums are (q U_n - n) / (q - 1) and U_n+1 + n - 1,
    otherwise they are (U_n+1 - q U_n - 1) / (p - q - 1) and
    (V_n+1 - q V_n - p + 2q) / (p - q - 1). For `n` = 0 the empty sum 0 is
    returned.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.

    :return: The sum.
    :rtype: SumResult

    :raise UnsupportedCase: For the first kind with p - q = 1 and q = 1.
    """
    check_index(n)
    check_kind(kind)
    p, q = params

    if params.branch == PQ1 and kind == FIRST_KIND and q == 1:
        raise UnsupportedCase(Q_IS_ONE_ERROR)
    if n == 0:
        return empty_sum(params)

    if params.branch == PQ1:
        if kind == FIRST_KIND:
            return divided(params, q * term_fast(params, kind, n) - n, q - 1)
        return divided(params, term_fast(params, FIRST_KIND, n + 1) + n - 1,
                       1)

    numerator = term_fast(params, kind, n + 1) - q * term_fast(params, kind, n)
    if kind == FIRST_KIND:
        numerator -= 1
    else:
        numerator += 2 * q - p
    return divided(params, numerator, p - q - 1)


def consecutive_sum_delta_form(params, n):
    """
    Sum of U_1 up to U_n for p - q = 1 by the power form
    (q^(n+1) - (q - 1) n - q) / delta, where delta = (q - 1)^2.

    :arg SequenceParams params: Sequence parameters with p - q = 1, q != 1.
    :arg int n: Number of terms.

    :return: The sum.
    :rtype: SumResult
    """
    check_index(n)
    q = params.q
    if params.branch != PQ1:
        raise UnsupportedCase('requires p - q = 1')
    if q == 1:
        raise UnsupportedCase(Q_IS_ONE_ERROR)
    if n == 0:
        return empty_sum(params)
    return divided(params, q ** (n + 1) - (q - 1) * n - q, params.delta)
