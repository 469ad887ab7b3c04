"""Build script: compiles the optional elimination kernel if Cython is present.

The package is fully functional without the extension; _exact falls back to
the pure-Python twin of the same routine.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/liecheck/_speedups.pyx"],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
