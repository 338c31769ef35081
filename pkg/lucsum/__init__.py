"""
lucsum (sums over *Lucas* sequences)


Exact closed forms and a brute-force oracle for consecutive, weighted, stride
and reverse weighted sums of the Lucas sequences U_n(p,q) and V_n(p,q).

Licensed under the MIT license, see the LICENSE file.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import argparse
from io import open
import sys


__version_info__ = ('1', '0', '0', 'dev')
__date__ = '17 Oct 2026'


__version__ = '.'.join(__version_info__)
__author__ = 'The lucsum developers'
__contact__ = 'lucsum@users.noreply.github.com'
__homepage__ = 'https://github.com/lucsum/lucsum'


USAGE = __doc__.split("\n\n\n")

#: Lucas sequence of the first kind, U_n(p,q).
FIRST_KIND = 'U'

#: Lucas sequence of the second kind, V_n(p,q).
SECOND_KIND = 'V'

KINDS = (FIRST_KIND, SECOND_KIND)

NEGATIVE_INDEX_ERROR = 'indices must be non-negative'


class LucsumError(ValueError):
    """
    Base class for all errors raised by this package.
    """


class UnsupportedCase(LucsumError):
    """
    The hypothesis of a closed form does not hold for the given input.
    """


class ExactDivisionViolation(LucsumError):
    """
    A closed-form numerator was not divisible by its denominator. This always
    indicates a bug, never a data condition.
    """


class ZeroDenominator(LucsumError):
    """
    The denominator of a stride sum vanishes.
    """


class LengthMismatch(LucsumError):
    """
    Two sequences that should have the same length do not.
    """


class UnknownSequence(LucsumError):
    """
    No named sequence is registered under the requested name.
    """


class BFileError(LucsumError):
    """
    An OEIS b-file could not be parsed.
    """


def check_kind(kind):
    """
    Raise :exc:`ValueError` if `kind` is not one of :data:`KINDS`.
    """
    if kind not in KINDS:
        raise ValueError('kind must be one of %s, not %r'
                         % (', '.join(KINDS), kind))


def check_index(n):
    """
    Raise :exc:`ValueError` if `n` is negative.
    """
    if n < 0:
        raise ValueError(NEGATIVE_INDEX_ERROR)


# Same as argparse.FileType in Python 3, but using io.open to get the same
# behaviour on Python 2.
class FileType(object):
    def __init__(self, mode='r', bufsize=-1, encoding=None, errors=None):
        self._mode = mode
        self._bufsize = bufsize
        self._encoding = encoding
        self._errors = errors

    def __call__(self, string):
        # the special argument "-" means sys.stdin
        if string == '-':
            if 'r' in self._mode:
                return sys.stdin
            msg = 'argument "-" with mode %r' % self._mode
            raise ValueError(msg)

        try:
            return open(string, self._mode, self._bufsize, self._encoding,
                        self._errors)
        except (IOError, OSError) as e:
            message = "can't open '%s': %s"
            raise argparse.ArgumentTypeError(message % (string, e))

    def __repr__(self):
        args = self._mode, self._bufsize
        kwargs = [('encoding', self._encoding), ('errors', self._errors)]
        args_str = ', '.join([repr(arg) for arg in args if arg != -1] +
                             ['%s=%r' % (kw, arg) for kw, arg in kwargs
                              if arg is not None])
        return '%s(%s)' % (type(self).__name__, args_str)


def doc_split(func):
    return func.__doc__.split("\n\n")[0]


def version(name):
    return '{0} version {1}\n\nAuthor   : {2} <{3}>\nHomepage : {4}'.format(
        name, __version__, __author__, __contact__, __homepage__)
