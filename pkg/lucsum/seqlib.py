"""
Lucas sequence base library.

Parameters, degeneracy classification and three independent evaluators for
the terms U_n(p,q) and V_n(p,q): the defining recurrence, index doubling and
the Binet form computed in exact integer arithmetic.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

from collections import namedtuple

from . import (FIRST_KIND, SECOND_KIND, ExactDivisionViolation,
               UnsupportedCase, ZeroDenominator, check_index, check_kind)


#: Branch tag for parameters with p - q = 1.
PQ1 = 'pq1'

#: Branch tag for parameters with p - q != 1.
NOT_PQ1 = 'not-pq1'


class SequenceParams(namedtuple('SequenceParams', ['p', 'q'])):
    """
    The parameter pair (p, q) of the Lucas sequences U_n(p,q) and V_n(p,q).

    Instances are immutable. All derived attributes (discriminant, branch and
    degeneracy) are computed from `p` and `q`, so they cannot go out of sync.
    Instead of using the constructor directly, you should generally use
    :func:`make_params`.

    :arg int p: First parameter.
    :arg int q: Second parameter.
    """
    __slots__ = ()

    @property
    def delta(self):
        """
        Discriminant p^2 - 4q of the characteristic polynomial x^2 - px + q.
        """
        return self.p * self.p - 4 * self.q

    @property
    def branch(self):
        """
        Either :data:`PQ1` (p - q = 1) or :data:`NOT_PQ1`.
        """
        return PQ1 if self.p - self.q == 1 else NOT_PQ1

    @property
    def degeneracy(self):
        """
        Reason why the sequences are degenerate, or `None` if they are not.

        The ratio of the characteristic roots is a root of unity exactly when
        (p^2 - 2q) / q lies in {-2, -1, 0, 1, 2}, that is, when p^2 is one of
        0, q, 2q, 3q or 4q.
        """
        p, q = self
        if q == 0:
            return 'q = 0'
        square = p * p
        for multiple in range(5):
            if square == multiple * q:
                if multiple == 0:
                    return 'p = 0'
                if multiple == 4:
                    return 'p^2 = 4q, the discriminant is zero'
                if multiple == 1:
                    return 'p^2 = q'
                return 'p^2 = %dq' % multiple
        return None

    @property
    def is_degenerate(self):
        return self.degeneracy is not None

    def __str__(self):
        return '(%d, %d)' % self


class DivisionWitness(namedtuple('DivisionWitness',
                                 ['numerator', 'denominator',
                                  'remainder_checked_zero'])):
    """
    Record of one exact division `numerator / denominator`.
    """
    __slots__ = ()


class QuadraticPair(namedtuple('QuadraticPair', ['x', 'y'])):
    """
    The number x + y * sqrt(delta) with integer coefficients.
    """
    __slots__ = ()

    def multiply(self, other, delta):
        """
        Product with `other` in Z[sqrt(delta)].

        :arg QuadraticPair other: Right operand.
        :arg int delta: The radicand.

        :return: The product.
        :rtype: QuadraticPair
        """
        return QuadraticPair(self.x * other.x + delta * self.y * other.y,
                             self.x * other.y + other.x * self.y)

    def power(self, exponent, delta):
        """
        Raise to a non-negative integer power by binary exponentiation.

        :arg int exponent: The exponent.
        :arg int delta: The radicand.

        :return: The power.
        :rtype: QuadraticPair
        """
        result = QuadraticPair(1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result.multiply(base, delta)
            base = base.multiply(base, delta)
            exponent >>= 1
        return result


def exact_divide(numerator, denominator):
    """
    Divide `numerator` by `denominator`, insisting on a zero remainder.

    :arg int numerator: Dividend.
    :arg int denominator: Nonzero divisor.

    :return: The quotient and a witness of the division.
    :rtype: int, DivisionWitness

    :raise ZeroDenominator: If `denominator` is zero.
    :raise ExactDivisionViolation: If the remainder is nonzero.
    """
    if denominator == 0:
        raise ZeroDenominator('division of %d by zero' % numerator)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ExactDivisionViolation(
            '%d is not divisible by %d (remainder %d)'
            % (numerator, denominator, remainder))
    return quotient, DivisionWitness(numerator, denominator, True)


def make_params(p, q):
    """
    Classify the parameter pair (p, q). Degenerate pairs are labelled, never
    refused; every sum declares its own hypotheses.

    :arg int p: First parameter.
    :arg int q: Second parameter.

    :return: Classified parameters.
    :rtype: SequenceParams
    """
    return SequenceParams(int(p), int(q))


def seeds(params, kind):
    """
    The first two terms of a sequence.

    :return: Terms with index 0 and 1.
    :rtype: int, int
    """
    check_kind(kind)
    if kind == FIRST_KIND:
        return 0, 1
    return 2, params.p


def iter_terms(params, kind):
    """
    Generate the terms of a sequence by its defining recurrence, starting at
    index 0. The generator is infinite.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.

    :return: A generator yielding the terms.
    :rtype: iterator(int)
    """
    p, q = params
    previous, current = seeds(params, kind)
    while True:
        yield previous
        previous, current = current, p * current - q * previous


def term_iter(params, kind, n):
    """
    Term with index `n`, using O(n) steps of the recurrence
    S_n = p S_{n-1} - q S_{n-2}.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Index.

    :return: U_n or V_n.
    :rtype: int
    """
    check_index(n)
    p, q = params
    previous, current = seeds(params, kind)
    for _ in range(n):
        previous, current = current, p * current - q * previous
    return previous


def _halve(value):
    if value & 1:
        raise ExactDivisionViolation('%d is odd' % value)
    return value >> 1


def _doubling(params, n):
    """
    Return U_n, V_n and q^n using O(log n) multiplications.

    Doubling uses U_2k = U_k V_k and V_2k = V_k^2 - 2q^k, a step to the next
    index uses 2 U_k+1 = p U_k + V_k and 2 V_k+1 = delta U_k + p V_k.
    """
    p, q = params
    delta = params.delta
    u, v, q_power = 0, 2, 1

    for bit in bin(n)[2:]:
        u, v, q_power = u * v, v * v - 2 * q_power, q_power * q_power
        if bit == '1':
            u, v, q_power = (_halve(p * u + v), _halve(delta * u + p * v),
                             q_power * q)

    return u, v, q_power


def term_fast(params, kind, n):
    """
    Term with index `n`, using O(log n) big integer multiplications.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Index.

    :return: U_n or V_n.
    :rtype: int
    """
    check_index(n)
    check_kind(kind)
    u, v, _ = _doubling(params, n)
    return u if kind == FIRST_KIND else v


def term_binet(params, kind, n):
    """
    Term with index `n` from the Binet form.

    We compute (p + sqrt(delta))^n = x + y sqrt(delta) and use that
    V_n = x / 2^(n-1) and U_n = y / 2^(n-1).

    :arg SequenceParams params: Nondegenerate sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Index.

    :return: U_n or V_n.
    :rtype: int

    :raise UnsupportedCase: If `params` are degenerate.
    """
    check_index(n)
    check_kind(kind)
    if params.is_degenerate:
        raise UnsupportedCase('the Binet form needs nondegenerate parameters, '
                              'but %s has %s' % (params, params.degeneracy))
    if n == 0:
        return seeds(params, kind)[0]

    power = QuadraticPair(params.p, 1).power(n, params.delta)
    numerator = power.y if kind == FIRST_KIND else power.x
    return exact_divide(numerator, 2 ** (n - 1))[0]


def binet_special_pq1(params, kind, n):
    """
    Term with index `n` for parameters with p - q = 1, where the roots of the
    characteristic polynomial are q and 1. This also holds for the degenerate
    pairs (0, -1), (1, 0) and (2, 1).

    :arg SequenceParams params: Sequence parameters with p - q = 1.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Index.

    :return: U_n = (q^n - 1) / (q - 1) or V_n = q^n + 1.
    :rtype: int

    :raise UnsupportedCase: If p - q != 1.
    """
    check_index(n)
    check_kind(kind)
    if params.branch != PQ1:
        raise UnsupportedCase('requires p - q = 1, but %s has p - q = %d'
                              % (params, params.p - params.q))
    q = params.q
    if kind == SECOND_KIND:
        return q ** n + 1
    if q == 1:
        return n
    return exact_divide(q ** n - 1, q - 1)[0]
