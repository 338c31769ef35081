"""
Brute-force reference sums and the verification sweep.

Everything in this module is computed by literal summation over the
defining recurrence. Closed forms are never imported here; :func:`sweep`
receives them as an argument.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

from collections import namedtuple
from itertools import islice, product
import logging
import multiprocessing

from . import (FIRST_KIND, KINDS, SECOND_KIND, ExactDivisionViolation,
               UnsupportedCase, ZeroDenominator, check_index, check_kind)
from .seqlib import iter_terms, make_params, term_iter


logger = logging.getLogger(__name__)

CONSECUTIVE = 'consecutive'
WEIGHTED = 'weighted'
STRIDE = 'stride'
REVERSE = 'reverse'
WEIGHTED_STRIDE2 = 'weighted-stride2'
WEIGHTED_SQUARE = 'weighted-square'

#: Summation modes of :func:`brute_sum`.
MODES = (CONSECUTIVE, WEIGHTED, STRIDE, REVERSE, WEIGHTED_STRIDE2,
         WEIGHTED_SQUARE)

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'

STRIDE_ERROR = 'the stride must be at least 1'


class OracleConfig(namedtuple('OracleConfig',
                              ['p_range', 'q_range', 'n_min', 'n_max',
                               'r_max', 'skip_degenerate', 'kinds',
                               'modes'])):
    """
    The cells of a verification sweep.

    Instead of using the constructor directly, you should generally use
    :func:`make_config`.

    :arg p_range: Smallest and largest value of p (inclusive).
    :type p_range: tuple(int, int)
    :arg q_range: Smallest and largest value of q (inclusive).
    :type q_range: tuple(int, int)
    :arg int n_min: Smallest number of terms.
    :arg int n_max: Largest number of terms. If smaller than `n_min`, the
      sweep is empty.
    :arg int r_max: Largest stride for the stride mode.
    :arg bool skip_degenerate: Leave out degenerate parameter pairs.
    :arg kinds: Kinds to verify.
    :type kinds: tuple(str)
    :arg modes: Closed-form modes to verify, `None` for all.
    :type modes: tuple(str)
    """
    __slots__ = ()

    def parameters(self):
        """
        Parameter pairs of the sweep, in increasing order.

        :return: A generator yielding the parameters.
        :rtype: iterator(SequenceParams)
        """
        for p, q in product(range(self.p_range[0], self.p_range[1] + 1),
                            range(self.q_range[0], self.q_range[1] + 1)):
            params = make_params(p, q)
            if not (self.skip_degenerate and params.is_degenerate):
                yield params


class VerificationReport(namedtuple('VerificationReport',
                                    ['params', 'kind', 'n', 'mode', 'r',
                                     'value', 'expected', 'status',
                                     'witness', 'message'])):
    """
    Outcome of comparing one closed form with the brute-force sum.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: Sequence kind.
    :arg int n: Number of terms.
    :arg str mode: Closed-form mode.
    :arg int r: Stride, or `None`.
    :arg int value: Closed-form value, or `None` if it was not computed.
    :arg int expected: Brute-force value.
    :arg str status: One of :data:`PASS`, :data:`FAIL` or :data:`SKIPPED`.
    :arg DivisionWitness witness: Final division of the closed form, if
      any.
    :arg str message: Error message for skipped and failed cells.
    """
    __slots__ = ()

    @property
    def key(self):
        return (self.params, self.kind, self.mode, self.r or 0, self.n)


ClosedForm = namedtuple('ClosedForm', ['evaluate', 'oracle_mode'])


def make_config(pmax=10, qmax=10, nmax=200, rmax=10, nmin=1,
                include_degenerate=False, kinds=KINDS, modes=None):
    """
    Sweep configuration over -pmax <= p <= pmax and -qmax <= q <= qmax.

    :return: The configuration.
    :rtype: OracleConfig
    """
    if pmax < 0 or qmax < 0:
        raise ValueError('the parameter ranges must not be empty')
    if rmax < 1:
        raise ValueError(STRIDE_ERROR)
    for kind in kinds:
        check_kind(kind)
    return OracleConfig((-pmax, pmax), (-qmax, qmax), max(nmin, 1), nmax,
                        rmax, not include_degenerate, tuple(kinds),
                        None if modes is None else tuple(modes))


def _check_mode(mode, r):
    if mode not in MODES:
        raise ValueError('mode must be one of %s, not %r'
                         % (', '.join(MODES), mode))
    if mode == STRIDE and (r is None or r < 1):
        raise ValueError(STRIDE_ERROR)


def brute_sum(params, kind, n, mode, r=None):
    """
    Sum of `n` terms by literal summation.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.
    :arg str mode: One of :data:`MODES`.
    :arg int r: Stride, only used by the stride mode.

    :return: The sum.
    :rtype: int
    """
    check_index(n)
    check_kind(kind)
    _check_mode(mode, r)

    total = 0

    if mode == CONSECUTIVE:
        for i in range(1, n + 1):
            total += term_iter(params, kind, i)
    elif mode == WEIGHTED:
        for i in range(1, n + 1):
            total += i * term_iter(params, kind, i)
    elif mode == STRIDE:
        for i in range(1, n + 1):
            total += term_iter(params, kind, i * r)
    elif mode == REVERSE:
        for i in range(1, n + 1):
            total += (n - i + 1) * term_iter(params, kind, i)
    elif mode == WEIGHTED_STRIDE2:
        for i in range(1, n + 1):
            total += i * term_iter(params, kind, 2 * i)
    else:
        for i in range(1, n + 1):
            term = term_iter(params, kind, i)
            total += i * term * term

    return total


def running_sums(params, kind, mode, r=None):
    """
    Brute-force sums of 1, 2, 3, ... terms in one pass over the sequence.

    :arg SequenceParams params: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg str mode: One of :data:`MODES`.
    :arg int r: Stride, only used by the stride mode.

    :return: An infinite generator, the n-th value being the sum of `n`
      terms.
    :rtype: iterator(int)
    """
    check_kind(kind)
    _check_mode(mode, r)

    step = {STRIDE: r, WEIGHTED_STRIDE2: 2}.get(mode, 1)
    terms = islice(iter_terms(params, kind), step, None, step)
    total = partial = 0

    for i, term in enumerate(terms, 1):
        if mode in (CONSECUTIVE, STRIDE):
            total += term
        elif mode in (WEIGHTED, WEIGHTED_STRIDE2):
            total += i * term
        elif mode == REVERSE:
            # The reverse weighted sum of n terms is the sum of the first n
            # consecutive sums.
            partial += term
            total += partial
        else:
            total += i * term * term
        yield total


def _verify_cell(closed_form, params, kind, n, mode, r, expected):
    try:
        result = closed_form.evaluate(params, kind, n, r)
    except (UnsupportedCase, ZeroDenominator) as e:
        return VerificationReport(params, kind, n, mode, r, None, expected,
                                  SKIPPED, None, str(e))
    except ExactDivisionViolation as e:
        return VerificationReport(params, kind, n, mode, r, None, expected,
                                  FAIL, None, str(e))

    if result.value == expected:
        return VerificationReport(params, kind, n, mode, r, result.value,
                                  expected, PASS, result.division_witness,
                                  None)
    return VerificationReport(params, kind, n, mode, r, result.value,
                              expected, FAIL, result.division_witness,
                              'closed form %d differs from literal sum %d'
                              % (result.value, expected))


def _verify_group(task):
    """
    Verify one closed form for all numbers of terms between `n_min` and
    `n_max`, sharing a single pass of brute-force summation.
    """
    closed_form, params, kind, mode, r, n_min, n_max = task

    reports = []
    sums = running_sums(params, kind, closed_form.oracle_mode, r)
    for n, expected in enumerate(islice(sums, n_max), 1):
        if n >= n_min:
            reports.append(_verify_cell(closed_form, params, kind, n, mode,
                                        r, expected))
    return reports


def _tasks(config, closed_forms):
    modes = config.modes or sorted(closed_forms)
    for mode in modes:
        if mode not in closed_forms:
            raise ValueError('no closed form for mode %r (choose from %s)'
                             % (mode, ', '.join(sorted(closed_forms))))

    for params in config.parameters():
        for kind in config.kinds:
            for mode in modes:
                closed_form = closed_forms[mode]
                if closed_form.oracle_mode == STRIDE:
                    strides = range(1, config.r_max + 1)
                else:
                    strides = [None]
                for r in strides:
                    yield (closed_form, params, kind, mode, r, config.n_min,
                           config.n_max)


def sweep(config, closed_forms, processes=1):
    """
    Compare closed forms with brute-force sums over all cells of a
    configuration.

    Cells where the closed form does not apply (:exc:`UnsupportedCase` or
    :exc:`ZeroDenominator`) are reported as skipped. A closed form raising
    :exc:`ExactDivisionViolation` is reported as a failure.

    :arg OracleConfig config: The sweep configuration.
    :arg closed_forms: Closed forms to verify by mode name.
    :type closed_forms: dict(str, ClosedForm)
    :arg int processes: Number of worker processes.

    :return: One report per cell, sorted by cell.
    :rtype: list(VerificationReport)
    """
    if config.n_max < config.n_min:
        return []

    tasks = list(_tasks(config, closed_forms))
    logger.info('Verifying %d groups of up to %d cells with %d process(es)',
                len(tasks), config.n_max - config.n_min + 1, processes)

    if processes > 1:
        pool = multiprocessing.Pool(processes=processes)
        try:
            groups = pool.map(_verify_group, tasks, chunksize=8)
        finally:
            pool.close()
            pool.join()
    else:
        groups = [_verify_group(task) for task in tasks]

    reports = sorted((report for group in groups for report in group),
                     key=lambda report: report.key)
    logger.info('Verified %d cells', len(reports))
    return reports


def summary(reports):
    """
    Count reports by status.

    :return: Number of passed, failed and skipped cells.
    :rtype: dict(str, int)
    """
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for report in reports:
        counts[report.status] += 1
    return counts


SupportingIdentity = namedtuple('SupportingIdentity',
                                ['name', 'literal', 'closed'])


def supporting_identities(n):
    """
    Sums of the Fibonacci and Lucas numbers at even indices and of their
    squares, both by literal summation and by their known evaluations:

    - F_2 + F_4 + ... + F_2n = F_2n+1 - 1
    - L_2 + L_4 + ... + L_2n = L_2n+1 - 1
    - F_1^2 + ... + F_n^2 = F_n F_n+1
    - L_1^2 + ... + L_n^2 = L_n L_n+1 - 2

    :arg int n: Number of terms.

    :return: The four identities evaluated at `n`.
    :rtype: list(SupportingIdentity)
    """
    check_index(n)
    params = make_params(1, -1)

    def f(k):
        return term_iter(params, FIRST_KIND, k)

    def l(k):
        return term_iter(params, SECOND_KIND, k)

    identities = [
        SupportingIdentity('fibonacci-even', sum(f(2 * i)
                                                 for i in range(1, n + 1)),
                           f(2 * n + 1) - 1),
        SupportingIdentity('lucas-even', sum(l(2 * i)
                                             for i in range(1, n + 1)),
                           l(2 * n + 1) - 1),
        SupportingIdentity('fibonacci-square', sum(f(i) ** 2
                                                   for i in range(1, n + 1)),
                           f(n) * f(n + 1)),
        SupportingIdentity('lucas-square', sum(l(i) ** 2
                                               for i in range(1, n + 1)),
                           l(n) * l(n + 1) - 2)]

    for identity in identities:
        if identity.literal != identity.closed:
            logger.warning('Supporting identity %s fails at n = %d: %d != %d',
                           identity.name, n, identity.literal,
                           identity.closed)
    return identities
