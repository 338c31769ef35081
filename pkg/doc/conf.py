# -*- coding: utf-8 -*-
#
# lucsum documentation build configuration file.
#
# Only settings that differ from the Sphinx defaults are listed here.

import sys
import os

from mock import Mock as MagicMock


# NumPy is mocked on Read the Docs.
class Mock(MagicMock):
    @classmethod
    def __getattr__(cls, name):
        return Mock()


MOCK_MODULES = ['numpy']
sys.modules.update((mod_name, Mock()) for mod_name in MOCK_MODULES)

sys.path.insert(0, os.path.abspath('..'))
import lucsum


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'lucsum'
copyright = u'2026, %s' % lucsum.__author__
version = '.'.join(lucsum.__version__.split('.')[:2])
release = lucsum.__version__

exclude_patterns = ['.build']
pygments_style = 'sphinx'


html_theme = 'default'

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

htmlhelp_basename = 'lucsumdoc'


latex_documents = [
    ('index', 'lucsum.tex', u'lucsum Documentation', lucsum.__author__,
     'manual'),
]

man_pages = [
    ('index', 'lucsum', u'lucsum Documentation', [lucsum.__author__], 1)
]

texinfo_documents = [
    ('index', 'lucsum', u'lucsum Documentation', lucsum.__author__, 'lucsum',
     'Exact sums over Lucas sequences.', 'Mathematics'),
]

intersphinx_mapping = {'python': ('http://docs.python.org/3', None),
                       'numpy': ('http://docs.scipy.org/doc/numpy/', None)}
