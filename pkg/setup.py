"""Build script: compiles the optional matching kernel.

The package is pure Python except for one hot spot, the exact
perfect-matching enumerator.  A Cython twin of that kernel is built here
when Cython and a C compiler are present; if either is missing (or
TILECOUNT_NO_EXT=1 is set) the install proceeds without it and the pure
kernel is used at runtime.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("TILECOUNT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/tilecount/_matchfast.pyx"], language_level="3"
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
