"""
Command line interface for computing and verifying sums over Lucas
sequences.

.. Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range, str

import argparse
from collections import namedtuple
from fractions import Fraction
from itertools import islice
import json
import logging
import multiprocessing
import sys
import timeit

import numpy as np

from . import (KINDS, SECOND_KIND, USAGE, BFileError, FileType, check_index,
               doc_split, version)
from .forms import closed_forms
from .named import SEQUENCES, lookup
from .oracle import (FAIL, PASS, SKIPPED, WEIGHTED, make_config,
                     running_sums, summary, sweep as oracle_sweep)
from .seqlib import make_params, term_binet, term_fast, term_iter
from .stride import StrideQuery, erratum_demo
from .weighted import weighted_sum


logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)-15s | %(levelname)-8s | %(message)s'

TEXT = 'text'
JSON = 'json'

#: Term evaluators by method name.
term_methods = {
    'iter': term_iter,
    'fast': term_fast,
    'binet': term_binet
}

#: Modes of the sum command. The reverse weighted sum is further selected
#: with its method.
SUM_MODES = ('consecutive', 'weighted', 'weighted-powerform', 'stride',
             'reverse', 'weighted-stride2', 'weighted-square')

#: Sequences used for the erratum demonstration, with the largest number of
#: terms and stride shown.
ERRATUM_SEQUENCES = ('lucas', 'companion_pell')
ERRATUM_NMAX = 10
ERRATUM_RMAX = 4

TABLE_LENGTH = 10

DEGENERATE_ERROR = 'parameters (p, q) = %s are degenerate (%s)'


class BFileEntry(namedtuple('BFileEntry', ['index', 'value'])):
    """
    One line "index value" of an OEIS b-file.
    """
    __slots__ = ()


def parse_bfile(input_handle):
    """
    Read the entries of an OEIS b-file.

    Empty lines and lines starting with ``#`` are skipped. Indices must be
    strictly increasing.

    :arg input_handle: Open readable b-file handle.
    :type input_handle: file-like object

    :return: The entries in file order.
    :rtype: list(BFileEntry)

    :raise BFileError: If a line cannot be parsed. The message includes the
      line number.
    """
    entries = []

    for number, line in enumerate(input_handle, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue

        fields = line.split()
        if len(fields) != 2:
            raise BFileError('line %d: expected "index value", got %r'
                             % (number, line))
        try:
            entry = BFileEntry(int(fields[0]), int(fields[1]))
        except ValueError:
            raise BFileError('line %d: not an integer pair: %r'
                             % (number, line))

        if entries and entry.index <= entries[-1].index:
            raise BFileError('line %d: index %d does not increase'
                             % (number, entry.index))
        entries.append(entry)

    return entries


def _write_json(output_handle, **fields):
    print(json.dumps(fields, sort_keys=True), file=output_handle)


def _params_fields(params):
    return {'p': params.p, 'q': params.q}


def _nondegenerate_params(p, q):
    params = make_params(p, q)
    if params.is_degenerate:
        raise ValueError(DEGENERATE_ERROR % (params, params.degeneracy))
    return params


def term(output_handle, p, q, kind, n, method='fast', output_format=TEXT):
    """
    Compute a term of a Lucas sequence.

    :arg output_handle: Open writeable file handle.
    :type output_handle: file-like object
    :arg int p, q: Sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Index.
    :arg str method: One of the keys of :data:`term_methods`.
    :arg str output_format: Either ``text`` or ``json``.
    """
    params = make_params(p, q)
    value = term_methods[method](params, kind, n)

    if output_format == JSON:
        _write_json(output_handle, command='term',
                    params=_params_fields(params), kind=kind, n=n,
                    value=str(value), status='ok')
    else:
        print(value, file=output_handle)


def evaluate_sum(output_handle, p, q, kind, n, mode, r=1, method='difference',
                 verbose=False, output_format=TEXT):
    """
    Compute a sum over a Lucas sequence by its closed form.

    :arg output_handle: Open writeable file handle.
    :type output_handle: file-like object
    :arg int p, q: Nondegenerate sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg int n: Number of terms.
    :arg str mode: One of :data:`SUM_MODES`.
    :arg int r: Stride for the stride mode.
    :arg str method: Method for the reverse weighted sum.
    :arg bool verbose: Also print the branch and final division.
    :arg str output_format: Either ``text`` or ``json``.
    """
    params = _nondegenerate_params(p, q)
    if mode == 'reverse' and method == 'consecutive':
        form = 'reverse-consecutive'
    else:
        form = mode

    result = closed_forms[form].evaluate(params, kind, n, r)
    witness = result.division_witness

    if output_format == JSON:
        fields = dict(command='sum', params=_params_fields(params), kind=kind,
                      n=n, mode=mode, value=str(result.value), status='ok')
        if mode == 'stride':
            fields['r'] = r
        if verbose:
            fields['branch'] = result.branch_used
            if witness:
                fields['numerator'] = str(witness.numerator)
                fields['denominator'] = str(witness.denominator)
        _write_json(output_handle, **fields)
        return

    print(result.value, file=output_handle)
    if verbose:
        print('branch:', result.branch_used, file=output_handle)
        if witness:
            print('numerator:', witness.numerator, file=output_handle)
            print('denominator:', witness.denominator, file=output_handle)
            print('remainder: 0', file=output_handle)
        else:
            print('division: none', file=output_handle)


def table(output_handle, name=None, output_format=TEXT):
    """
    Show the first ten terms of the named Lucas sequences.

    :arg output_handle: Open writeable file handle.
    :type output_handle: file-like object
    :arg str name: Only show the sequence with this name.
    :arg str output_format: Either ``text`` or ``json``.
    """
    sequences = [lookup(name)] if name else SEQUENCES

    if output_format == TEXT and not name:
        print('n', ' '.join(str(n) for n in range(TABLE_LENGTH)), 'OEIS',
              sep='\t', file=output_handle)

    for sequence in sequences:
        values = [term_iter(sequence.params, sequence.kind, n)
                  for n in range(TABLE_LENGTH)]
        if output_format == JSON:
            _write_json(output_handle, command='table', name=sequence.name,
                        symbol=sequence.symbol,
                        params=_params_fields(sequence.params),
                        kind=sequence.kind, oeis=sequence.oeis_id,
                        values=[str(value) for value in values], status='ok')
        elif name:
            print(' '.join(str(value) for value in values),
                  file=output_handle)
        else:
            print(sequence.symbol, ' '.join(str(value) for value in values),
                  sequence.oeis_id, sep='\t', file=output_handle)


def _verify_erratum(output_handle, nmax, rmax, output_format):
    status = 0

    for name in ERRATUM_SEQUENCES:
        params = lookup(name).params
        for r in range(1, min(rmax, ERRATUM_RMAX) + 1):
            for n in range(1, min(nmax, ERRATUM_NMAX) + 1):
                query = StrideQuery(params, SECOND_KIND, n, r)
                corrected, uncorrected, oracle = erratum_demo(query)
                offset = Fraction(2 * params.q ** r, query.denominator)
                ok = (corrected == oracle and
                      uncorrected - oracle == offset)
                if not ok:
                    status = 1

                if output_format == JSON:
                    _write_json(output_handle, command='verify',
                                mode='erratum', name=name,
                                params=_params_fields(params),
                                kind=SECOND_KIND, n=n, r=r,
                                value=str(corrected),
                                uncorrected=str(uncorrected),
                                oracle=str(oracle),
                                status=PASS if ok else FAIL)
                else:
                    print('%s n=%d r=%d: corrected %d, uncorrected %s, '
                          'oracle %d' % (name, n, r, corrected, uncorrected,
                                         oracle), file=output_handle)

    return status


def verify(output_handle, pmax=10, qmax=10, nmax=200, rmax=10, processes=1,
           only=None, include_degenerate=False, failures=10,
           output_format=TEXT):
    """
    Verify the closed forms against brute-force summation.

    :arg output_handle: Open writeable file handle.
    :type output_handle: file-like object
    :arg int pmax, qmax: Verify for -pmax <= p <= pmax and -qmax <= q <= qmax.
    :arg int nmax: Verify for 1 up to `nmax` terms.
    :arg int rmax: Verify strides 1 up to `rmax`.
    :arg int processes: Number of worker processes.
    :arg str only: Only verify this mode. With ``erratum``, show the stride
      sums of the second kind with and without the -2q^r summand instead.
    :arg bool include_degenerate: Also verify degenerate parameters.
    :arg int failures: Show at most this many failures.
    :arg str output_format: Either ``text`` or ``json``.

    :return: Exit status, 1 if any cell fails.
    :rtype: int
    """
    if only == 'erratum':
        return _verify_erratum(output_handle, nmax, rmax, output_format)

    config = make_config(pmax=pmax, qmax=qmax, nmax=nmax, rmax=rmax,
                         include_degenerate=include_degenerate,
                         modes=[only] if only else None)
    reports = oracle_sweep(config, closed_forms, processes=processes)
    counts = summary(reports)

    for report in [r for r in reports if r.status == FAIL][:failures]:
        if output_format == JSON:
            fields = dict(command='verify',
                          params=_params_fields(report.params),
                          kind=report.kind, n=report.n, mode=report.mode,
                          value=None if report.value is None
                          else str(report.value),
                          expected=str(report.expected), status=FAIL,
                          message=report.message)
            if report.r is not None:
                fields['r'] = report.r
            _write_json(output_handle, **fields)
        else:
            print('FAIL %s %s %s n=%d%s: %s'
                  % (report.mode, report.params, report.kind, report.n,
                     '' if report.r is None else ' r=%d' % report.r,
                     report.message), file=output_handle)

    status = FAIL if counts[FAIL] else PASS
    if output_format == JSON:
        _write_json(output_handle, command='verify', cells=len(reports),
                    passed=counts[PASS], failed=counts[FAIL],
                    skipped=counts[SKIPPED], status=status)
    elif counts[FAIL]:
        print('%d of %d cells fail (%d skipped)'
              % (counts[FAIL], len(reports), counts[SKIPPED]),
              file=output_handle)
    else:
        print('all %d cells pass (%d skipped)'
              % (counts[PASS], counts[SKIPPED]), file=output_handle)

    return 1 if counts[FAIL] else 0


def _time(function, repeat):
    timings = []
    for _ in range(repeat):
        start = timeit.default_timer()
        value = function()
        timings.append(timeit.default_timer() - start)
    return value, float(np.median(timings))


def bench(output_handle, p, q, kind, n_values, repeat=1,
          output_format=TEXT):
    """
    Compare the weighted sum by literal summation with its closed form.

    :arg output_handle: Open writeable file handle.
    :type output_handle: file-like object
    :arg int p, q: Nondegenerate sequence parameters.
    :arg str kind: :data:`lucsum.FIRST_KIND` or :data:`lucsum.SECOND_KIND`.
    :arg n_values: Numbers of terms.
    :type n_values: list(int)
    :arg int repeat: Number of timings per value, of which the median is
      reported.
    :arg str output_format: Either ``text`` or ``json``.

    :return: Exit status, 1 if any values differ.
    :rtype: int
    """
    params = _nondegenerate_params(p, q)
    if repeat < 1:
        raise ValueError('the number of repetitions must be at least 1')

    status = 0
    if output_format == TEXT:
        print('n', 'naive_s', 'closed_s', 'digits', 'equal', sep='\t',
              file=output_handle)

    for n in n_values:
        check_index(n)
        logger.info('Timing the weighted sum of %d terms', n)

        naive, naive_time = _time(
            lambda: sum(islice(running_sums(params, kind, WEIGHTED), n - 1,
                               n)) if n else 0, repeat)
        closed, closed_time = _time(
            lambda: weighted_sum(params, kind, n).value, repeat)

        equal = naive == closed
        if not equal:
            status = 1
        if output_format == JSON:
            _write_json(output_handle, command='bench',
                        params=_params_fields(params), kind=kind, n=n,
                        value=str(closed), naive_s=naive_time,
                        closed_s=closed_time,
                        status='ok' if equal else 'mismatch')
        else:
            print(n, '%.6f' % naive_time, '%.6f' % closed_time,
                  len(str(abs(closed))), 'yes' if equal else 'no',
                  sep='\t', file=output_handle)

    return status


def oeis_check(output_handle, name, input_handle, max_n=None,
               output_format=TEXT):
    """
    Compare a named sequence with an OEIS b-file.

    Entries are compared at their own index, whatever the first index of the
    b-file is.

    :arg output_handle: Open writeable file handle.
    :type output_handle: file-like object
    :arg str name: Sequence name.
    :arg input_handle: Open readable b-file handle.
    :type input_handle: file-like object
    :arg int max_n: Only compare indices up to this value.
    :arg str output_format: Either ``text`` or ``json``.

    :return: Exit status, 1 on the first mismatch.
    :rtype: int

    :raise BFileError: If the b-file cannot be parsed or has no entries.
    """
    sequence = lookup(name)
    entries = parse_bfile(input_handle)
    if not entries:
        raise BFileError('no entries')
    logger.debug('B-file for %s starts at index %d', name, entries[0].index)

    entries = [entry for entry in entries
               if max_n is None or entry.index <= max_n]

    for entry in entries:
        value = sequence.term(entry.index)
        if entry.value * sequence.oeis_divisor != value:
            if output_format == JSON:
                _write_json(output_handle, command='oeis-check', name=name,
                            n=entry.index, value=str(entry.value),
                            expected=str(value), status='mismatch')
            else:
                print('mismatch at n = %d: b-file has %d, %s gives %d'
                      % (entry.index, entry.value, name, value),
                      file=output_handle)
            return 1

    if output_format == JSON:
        _write_json(output_handle, command='oeis-check', name=name,
                    entries=len(entries), status='ok')
    else:
        print('all %d entries match' % len(entries), file=output_handle)
    return 0


def main(args=None):
    """
    Command line interface.

    :arg args: Arguments passed to :meth:`argparse.ArgumentParser.parse_args`
      (default is to use `sys.argv[1:]`).
    :type args: list(str)
    """
    # Terms and b-file values easily exceed the default limit on digits.
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)

    params_parser = argparse.ArgumentParser(add_help=False)
    params_parser.add_argument(
        '--p', metavar='INT', dest='p', type=int, default=1,
        help='first parameter (default: %(default)s)')
    params_parser.add_argument(
        '--q', metavar='INT', dest='q', type=int, default=-1,
        help='second parameter (default: %(default)s)')
    params_parser.add_argument(
        '--kind', dest='kind', choices=KINDS, default=KINDS[0],
        help='sequence of the first (U) or second (V) kind (default: '
        '%(default)s)')

    index_parser = argparse.ArgumentParser(add_help=False)
    index_parser.add_argument(
        '--n', metavar='INT', dest='n', type=int, required=True,
        help='index or number of terms')

    format_parser = argparse.ArgumentParser(add_help=False)
    format_parser.add_argument(
        '--format', dest='output_format', choices=(TEXT, JSON), default=TEXT,
        help='output format, JSON is one object per line (default: '
        '%(default)s)')

    sweep_parser = argparse.ArgumentParser(add_help=False)
    sweep_parser.add_argument(
        '--pmax', metavar='INT', dest='pmax', type=int, default=10,
        help='verify for |p| up to this value (default: %(default)s)')
    sweep_parser.add_argument(
        '--qmax', metavar='INT', dest='qmax', type=int, default=10,
        help='verify for |q| up to this value (default: %(default)s)')
    sweep_parser.add_argument(
        '--nmax', metavar='INT', dest='nmax', type=int, default=200,
        help='verify for up to this number of terms (default: %(default)s)')
    sweep_parser.add_argument(
        '--rmax', metavar='INT', dest='rmax', type=int, default=10,
        help='verify strides up to this value (default: %(default)s)')
    sweep_parser.add_argument(
        '--processes', metavar='INT', dest='processes', type=int,
        default=multiprocessing.cpu_count(),
        help='number of worker processes (default: %(default)s)')
    sweep_parser.add_argument(
        '--include-degenerate', dest='include_degenerate',
        action='store_true', help='also verify degenerate parameters')

    parser = argparse.ArgumentParser(
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=USAGE[0], epilog=USAGE[1])
    parser.add_argument('-v', action='version', version=version(parser.prog))
    parser.add_argument(
        '--debug', dest='debug', action='store_true',
        help='log diagnostic messages to stderr')
    subparsers = parser.add_subparsers(dest='subcommand')
    subparsers.required = True

    parser_term = subparsers.add_parser(
        'term', parents=[params_parser, index_parser, format_parser],
        description=doc_split(term))
    parser_term.add_argument(
        '--method', dest='method', choices=sorted(term_methods),
        default='fast', help='evaluation method (default: %(default)s)')
    parser_term.set_defaults(func=term, output_handle=sys.stdout)

    parser_sum = subparsers.add_parser(
        'sum', parents=[params_parser, index_parser, format_parser],
        description=doc_split(evaluate_sum))
    parser_sum.add_argument(
        '--mode', dest='mode', choices=SUM_MODES, required=True,
        help='kind of sum')
    parser_sum.add_argument(
        '--r', metavar='INT', dest='r', type=int, default=1,
        help='stride for the stride mode (default: %(default)s)')
    parser_sum.add_argument(
        '--method', dest='method', choices=('difference', 'consecutive'),
        default='difference', help='method for the reverse weighted sum '
        '(default: %(default)s)')
    parser_sum.add_argument(
        '--verbose', dest='verbose', action='store_true',
        help='also show the branch and the final division')
    parser_sum.set_defaults(func=evaluate_sum, output_handle=sys.stdout)

    parser_table = subparsers.add_parser(
        'table', parents=[format_parser], description=doc_split(table))
    parser_table.add_argument(
        '--seq', metavar='NAME', dest='name',
        choices=[sequence.name for sequence in SEQUENCES],
        help='only show this sequence')
    parser_table.set_defaults(func=table, output_handle=sys.stdout)

    parser_verify = subparsers.add_parser(
        'verify', parents=[sweep_parser, format_parser],
        description=doc_split(verify))
    parser_verify.add_argument(
        '--only', metavar='MODE', dest='only',
        choices=sorted(closed_forms) + ['erratum'],
        help='only verify this mode, or show the stride sum erratum '
        '(choices: %(choices)s)')
    parser_verify.add_argument(
        '--failures', metavar='INT', dest='failures', type=int, default=10,
        help='show at most this many failures (default: %(default)s)')
    parser_verify.set_defaults(func=verify, output_handle=sys.stdout)

    parser_bench = subparsers.add_parser(
        'bench', parents=[params_parser, format_parser],
        description=doc_split(bench))
    parser_bench.add_argument(
        '--n', metavar='INT', dest='n_values', type=int, nargs='+',
        required=True, help='numbers of terms')
    parser_bench.add_argument(
        '--repeat', metavar='INT', dest='repeat', type=int, default=1,
        help='number of timings per value (default: %(default)s)')
    parser_bench.set_defaults(func=bench, output_handle=sys.stdout)

    parser_oeis_check = subparsers.add_parser(
        'oeis-check', parents=[format_parser],
        description=doc_split(oeis_check))
    parser_oeis_check.add_argument(
        'name', metavar='NAME', choices=[s.name for s in SEQUENCES],
        help='sequence name')
    parser_oeis_check.add_argument(
        'input_handle', metavar='BFILE', type=FileType('r'),
        help='OEIS b-file')
    parser_oeis_check.add_argument(
        '--max-n', metavar='INT', dest='max_n', type=int,
        help='only compare indices up to this value (default: all)')
    parser_oeis_check.set_defaults(func=oeis_check, output_handle=sys.stdout)

    try:
        arguments = parser.parse_args(args)
    except IOError as error:
        parser.error(error)

    logging.basicConfig(format=LOG_FORMAT,
                        level=logging.DEBUG if arguments.debug
                        else logging.WARNING)

    try:
        status = arguments.func(
            **dict((k, v) for k, v in vars(arguments).items()
                   if k not in ('func', 'subcommand', 'debug')))
    except ValueError as error:
        parser.error(error)

    if status:
        sys.exit(status)


if __name__ == '__main__':
    main()
