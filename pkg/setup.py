#!/usr/bin/env python

import re
from os.path import abspath, dirname, join
from setuptools import setup, find_packages


CURDIR = dirname(abspath(__file__))

CLASSIFIERS = '''
Development Status :: 4 - Beta
License :: OSI Approved :: Apache Software License
Operating System :: OS Independent
Programming Language :: Python
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
Framework :: Robot Framework
Framework :: Robot Framework :: Library
'''.strip().splitlines()
with open(join(CURDIR, 'src', 'OptimalKernelLibrary', '__init__.py')) as f:
    VERSION = re.search("\n__version__ = '(.*)'", f.read()).group(1)
with open(join(CURDIR, 'README.rst')) as f:
    DESCRIPTION = f.read()
with open(join(CURDIR, 'requirements.txt')) as f:
    REQUIREMENTS = [line for line in f.read().splitlines()
                    if line and not line.startswith('#')]

setup(
    name             = 'robotframework-optimalkernellibrary',
    version          = VERSION,
    description      = 'Optimal signed kernels and kernel density '
                       'estimation for Robot Framework',
    long_description = DESCRIPTION,
    author           = 'OptimalKernelLibrary contributors',
    license          = 'Apache License 2.0',
    keywords         = 'robotframework kernel density estimation '
                       'higher-order kernels',
    platforms        = 'any',
    classifiers      = CLASSIFIERS,
    python_requires  = '>=3.8',
    install_requires = REQUIREMENTS,
    package_dir      = {'': 'src'},
    packages         = find_packages('src'),
    entry_points     = {
        'console_scripts': [
            'optimal-kernel = OptimalKernelLibrary.cli:main'
        ]
    }
)
