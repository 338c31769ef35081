"""
Closed forms for sums of consecutive terms weighted by their index, and
Abel's summation by parts.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from collections import namedtuple

import numpy as np

from . import (FIRST_KIND, SECOND_KIND, LengthMismatch, UnsupportedCase,
               check_index, check_kind)
from .consecutive import Q_IS_ONE_ERROR, divided, empty_sum
from .seqlib import PQ1, exact_divide, term_fast


class OmegaPsi(namedtuple('OmegaPsi', ['omega', 'psi'])):
    """
    Correction terms of the weighted sums for p - q != 1:

    - omega = U_n+1 - 2q U_n + q^2 U_n-1 + q - 1
    - psi = V_n+1 - 2q V_n + q^2 V_n-1 + (p - 2q)(q - 1)
    """
    __slots__ = ()


def triangular(n):
    """
    The binomial coefficient C(n + 1, 2) = n (n + 1) / 2.
    """
    return exact_divide(n * (n + 1), 2)[0]


def _correction(params, kind, n):
    p, q = params
    value = (term_fast(params, kind, n + 1)
             - 2 * q * term_fast(params, kind, n)
             + q * q * term_fast(params, kind, n - 1))
    if kind == FIRST_KIND:
        return value + q - 1
    return value + (p - 2 * q) * (q - 1)


def omega_psi(params, n):
    """
    Evaluate the correction terms directly from their definition.

    :arg SequenceParams params: Sequence parameters.
    :arg int n: Index, at least 1.

    :return: Omega(n) and Psi(n).
    :rtype: OmegaPsi
    """
    if n < 1:
        raise ValueError('the correction terms are defined for n >= 1')
    return OmegaPsi(_correction(params, FIRST_KIND, n),
                    _correction(params, SECOND_KIND, n))


def omega_psi_shortcut(params, n):
    """
    Evaluate the correction terms through the shortcuts available when one
    parameter is fixed to 1:

    - p = 1: omega = U_n+3 + q - 1, psi = V_n+3 + (1 - 2q)(q - 1)
    - q = 1: omega = (p - 2) U_n, psi = (p - 2) V_n

    :arg SequenceParams params: Sequence parameters with p = 1 or q = 1.
    :arg int n: Index, at least 1.

    :return: Omega(n) and Psi(n).
    :rtype: OmegaPsi

    :raise UnsupportedCase: If neither p nor q equals 1.
    """
    if n < 1:
        raise ValueError('the correction terms are defined for n >= 1')
    p, q = params
    if p == 1:
        return OmegaPsi(term_fast(params, FIRST_KIND, n + 3) + q - 1,
                        term_fast(params, SECOND_KIND, n + 3)
                        + (1 - 2 * q) * (q - 1))
    if q == 1:
        return OmegaPsi((p - 2) * term_fast(params, FIRST_KIND, n),
                        (p - 2) * term_fast(params, SECOND_KIND, n))
    raise UnsupportedCase('no shortcut for the correction terms unless '
                          'p = 1 or q = 1')


def weighted_sum(params, kind, n):
    """
    Sum of i S_i for i = 1 up to `n`.

    For p - q != 1, both closed forms nest two divisions by p - q - 1. We
    only divide once, by (p - q - 1)^2, since the correction term itself is
    not necessarily divisible by p - q - 1.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.

    :return: The weighted sum.
    :rtype: lucsum.consecutive.SumResult

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
            numerator = (q * (q - 1) * n * term_fast(params, FIRST_KIND, n)
                         - q * (q * term_fast(params, FIRST_KIND, n - 1)
                                - n + 1)
                         - (q - 1) * triangular(n))
            return divided(params, numerator, (q - 1) ** 2)

        u_next = term_fast(params, FIRST_KIND, n + 1)
        if q == 1:
            # Here U_i = i, so (q U_n - n) / (q - 1) is replaced by its
            # limit C(n + 1, 2) and cancels against the binomial.
            return divided(params, n * u_next, 1)
        numerator = ((q - 1) * (n * u_next + triangular(n))
                     - (q * term_fast(params, FIRST_KIND, n) - n))
        return divided(params, numerator, q - 1)

    denominator = p - q - 1
    lead = n * (term_fast(params, kind, n + 1)
                - q * term_fast(params, kind, n))
    if kind == SECOND_KIND:
        lead += 2 * q
    numerator = lead * denominator - _correction(params, kind, n)
    return divided(params, numerator, denominator * denominator)


def weighted_sum_powerform(params, kind, n):
    """
    Sum of i S_i for i = 1 up to `n` for p - q = 1, written with powers of q
    instead of sequence terms:

    - first kind: q/(q-1) ((q^n (nq - n - 1) + 1) / (q-1)^2 - C(n+1, 2) / q)
    - second kind: (q^(n+1) (nq - n - 1) + q) / (q-1)^2 + C(n+1, 2)

    :arg SequenceParams params: Sequence parameters with p - q = 1.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.

    :return: The weighted sum.
    :rtype: lucsum.consecutive.SumResult

    :raise UnsupportedCase: If p - q != 1, if q = 1, or if q = 0 for the
      first kind.
    """
    check_index(n)
    check_kind(kind)
    q = params.q

    if params.branch != PQ1:
        raise UnsupportedCase('the power form requires p - q = 1')
    if q == 1:
        raise UnsupportedCase(Q_IS_ONE_ERROR)
    if kind == FIRST_KIND and q == 0:
        raise UnsupportedCase('the power form of the first kind requires '
                              'q != 0')
    if n == 0:
        return empty_sum(params)

    factor = q ** n * (n * q - n - 1)
    if kind == FIRST_KIND:
        numerator = q * (factor + 1) - (q - 1) ** 2 * triangular(n)
        return divided(params, numerator, (q - 1) ** 3)
    numerator = q * factor + q + (q - 1) ** 2 * triangular(n)
    return divided(params, numerator, (q - 1) ** 2)


def abel_sum(a, b):
    """
    Sum of the products a_i b_i, computed by summation by parts:

        a_n B_n + sum over i < n of (a_i - a_i+1) B_i

    where B_i = b_1 + ... + b_i.

    Arithmetic is done on NumPy arrays of Python integers, so values of any
    magnitude are handled exactly.

    :arg a, b: Integer sequences of equal length.
    :type a, b: iterable(int)

    :return: The sum of products.
    :rtype: int

    :raise LengthMismatch: If the sequences are empty or differ in length.
    """
    a = np.array([int(x) for x in a], dtype=object)
    b = np.array([int(x) for x in b], dtype=object)

    if len(a) != len(b):
        raise LengthMismatch('sequences have lengths %d and %d'
                             % (len(a), len(b)))
    if not len(a):
        raise LengthMismatch('sequences must have at least one term')

    partial = np.cumsum(b)
    return int(a[-1] * partial[-1] + sum((a[:-1] - a[1:]) * partial[:-1]))
