# -*- coding: utf-8 -*-
#
# jetforge documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))
import jetforge


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'jetforge'
copyright = u'2020, Author'
author = u'Author'

version = jetforge.__version__
release = jetforge.__version__

language = 'zh_CN'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False

html_theme = 'alabaster'

html_static_path = ['_static']

htmlhelp_basename = 'jetforgedoc'

latex_documents = [
    (master_doc, 'jetforge.tex', u'jetforge Documentation', u'Author', 'manual'),
]

man_pages = [
    (master_doc, 'jetforge', u'jetforge Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'jetforge', u'jetforge Documentation',
     author, 'jetforge', 'Jet schemes and flatness witnesses.', 'Miscellaneous'),
]
