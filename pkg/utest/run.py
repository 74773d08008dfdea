#!/usr/bin/env python

"""Runs OptimalKernelLibrary unit tests.

Usage:  run.py [-q|-v] [pattern]

``pattern`` limits the discovered files, e.g. ``test_kernels*.py``.
"""

import os
import sys
from os.path import abspath, dirname, join
from unittest import defaultTestLoader, TextTestRunner


CURDIR = dirname(abspath(__file__))


def run_unit_tests(pattern='test_*.py', verbosity=1):
    sys.path.insert(0, join(CURDIR, os.pardir, 'src'))
    try:
        suite = defaultTestLoader.discover(join(CURDIR, 'test'), pattern)
        result = TextTestRunner(verbosity=verbosity).run(suite)
    finally:
        sys.path.pop(0)
    return min(len(result.failures) + len(result.errors), 255)


if __name__ == '__main__':
    args = sys.argv[1:]
    verbosity = 1
    if args and args[0] in ('-q', '-v'):
        verbosity = 0 if args.pop(0) == '-q' else 2
    sys.exit(run_unit_tests(*args[:1], verbosity=verbosity))
