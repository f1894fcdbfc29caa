"""Build script. The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package installs anyway and falls back to the
pure-Python kernels at import time."""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/homcat/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython / no compiler: pure-Python fallback
    print(f"homcat: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
