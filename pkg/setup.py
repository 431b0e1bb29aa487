"""Build script: compiles the alignment kernel when Cython is available.

Set GECEDIT_PURE=1 to skip the extension; the package then runs on the
pure-Python kernel.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("GECEDIT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gecedit/_align_fast.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
