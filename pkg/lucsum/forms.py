"""
Registry of all closed forms by summation mode.

Every entry evaluates as ``evaluate(params, kind, n, r)`` and returns a
:class:`lucsum.consecutive.SumResult`, so the forms can be used
interchangeably by the command line interface and the verification sweep.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from . import UnsupportedCase
from .consecutive import SumResult, consecutive_sum
from .oracle import (CONSECUTIVE, REVERSE, STRIDE, WEIGHTED, WEIGHTED_SQUARE,
                     WEIGHTED_STRIDE2, ClosedForm)
from .stride import (FIBONACCI_PARAMS, StrideQuery, fib_luc_weighted_square,
                     fib_luc_weighted_stride2, reverse_weighted_sum,
                     stride_sum)
from .weighted import weighted_sum, weighted_sum_powerform


def _undivided(params, value):
    return SumResult(value, params.branch, None)


def _check_fibonacci(params):
    if params != FIBONACCI_PARAMS:
        raise UnsupportedCase('only known for the Fibonacci and Lucas '
                              'numbers, (p, q) = %s' % (FIBONACCI_PARAMS,))


def consecutive(params, kind, n, r=None):
    return consecutive_sum(params, kind, n)


def weighted(params, kind, n, r=None):
    return weighted_sum(params, kind, n)


def weighted_powerform(params, kind, n, r=None):
    return weighted_sum_powerform(params, kind, n)


def stride(params, kind, n, r=1):
    return stride_sum(StrideQuery(params, kind, n, r))


def reverse(params, kind, n, r=None):
    return _undivided(params, reverse_weighted_sum(params, kind, n,
                                                   method='difference'))


def reverse_consecutive(params, kind, n, r=None):
    return _undivided(params, reverse_weighted_sum(params, kind, n,
                                                   method='consecutive'))


def weighted_stride2(params, kind, n, r=None):
    _check_fibonacci(params)
    return _undivided(params, fib_luc_weighted_stride2(kind, n))


def weighted_square(params, kind, n, r=None):
    _check_fibonacci(params)
    return _undivided(params, fib_luc_weighted_square(kind, n))


#: Closed forms by mode, each with the brute-force mode it is checked
#: against.
closed_forms = {
    'consecutive': ClosedForm(consecutive, CONSECUTIVE),
    'weighted': ClosedForm(weighted, WEIGHTED),
    'weighted-powerform': ClosedForm(weighted_powerform, WEIGHTED),
    'stride': ClosedForm(stride, STRIDE),
    'reverse': ClosedForm(reverse, REVERSE),
    'reverse-consecutive': ClosedForm(reverse_consecutive, REVERSE),
    'weighted-stride2': ClosedForm(weighted_stride2, WEIGHTED_STRIDE2),
    'weighted-square': ClosedForm(weighted_square, WEIGHTED_SQUARE)
}
