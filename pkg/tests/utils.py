"""
Utilities for lucsum unit tests.
"""


from __future__ import (absolute_import, division, print_function,
                        unicode_literals)
from future.builtins import range

from io import open
import os
import shutil
import tempfile


DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

# The first ten terms of the named sequences.
TABLE = {
    'fibonacci': [0, 1, 1, 2, 3, 5, 8, 13, 21, 34],
    'lucas': [2, 1, 3, 4, 7, 11, 18, 29, 47, 76],
    'pell': [0, 1, 2, 5, 12, 29, 70, 169, 408, 985],
    'companion_pell': [2, 2, 6, 14, 34, 82, 198, 478, 1154, 2786],
    'balancing': [0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105],
    'double_lucas_balancing': [2, 6, 34, 198, 1154, 6726, 39202, 228486,
                               1331714, 7761798],
    'jacobsthal': [0, 1, 1, 3, 5, 11, 21, 43, 85, 171],
    'jacobsthal_lucas': [2, 1, 5, 7, 17, 31, 65, 127, 257, 511],
    'mersenne': [0, 1, 3, 7, 15, 31, 63, 127, 255, 511],
    'mersenne_lucas': [2, 3, 5, 9, 17, 33, 65, 129, 257, 513]
}

# Parameter pairs with a known classification.
DEGENERATE = [(2, 1), (-2, 1), (1, 1), (-1, 1), (0, 1), (0, -1), (1, 0),
              (-1, 0), (2, 2), (3, 3), (4, 4), (6, 9), (0, 5)]
NONDEGENERATE = [(1, -1), (2, -1), (6, 1), (1, -2), (3, 2), (3, 1),
                 (5, -3), (-4, 7), (10, -10)]


def terms(p, q, first, second, n):
    """
    Simple and naive evaluation of the first `n` terms of the recurrence
    S_i = p S_i-1 - q S_i-2 with the given seeds.

    To be used as a reference.
    """
    values = [first, second]
    while len(values) < n:
        values.append(p * values[-1] - q * values[-2])
    return values[:n]


def u(p, q, n):
    """
    U_0 up to U_n-1 as a list.
    """
    return terms(p, q, 0, 1, n)


def v(p, q, n):
    """
    V_0 up to V_n-1 as a list.
    """
    return terms(p, q, 2, p, n)


def weighted(values, weights):
    """
    Sum of the products of `values` with `weights`.
    """
    return sum(value * weight for value, weight in zip(values, weights))


def parameter_grid(bound, degenerate=False):
    """
    All pairs (p, q) with |p|, |q| <= bound.
    """
    from lucsum.seqlib import make_params

    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            params = make_params(p, q)
            if degenerate or not params.is_degenerate:
                yield params


class TestEnvironment(object):
    """
    Test class providing an isolated test environment for each test.
    """
    def setup_method(self):
        self.temp_dir = tempfile.mkdtemp(prefix='lucsum-tests-')

    def teardown_method(self):
        shutil.rmtree(self.temp_dir)

    def empty(self):
        """
        Create an empty file and return filename.
        """
        os_handle, filename = tempfile.mkstemp(dir=self.temp_dir)
        os.close(os_handle)
        return filename

    def bfile(self, entries, header=None):
        """
        Create a file and write `entries` to it in OEIS b-file format.
        Filename is returned.

        :arg entries: Index and value pairs.
        :arg header: Comment lines to write first.
        """
        filename = self.empty()

        with open(filename, 'w') as f:
            for line in header or []:
                f.write('# %s\n' % line)
            for index, value in entries:
                f.write('%d %d\n' % (index, value))

        return filename

    def data(self, name):
        """
        Filename of a static test fixture.
        """
        return os.path.join(DATA_DIR, name)
