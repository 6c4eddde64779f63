import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ISOLAB_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/isolab/_core.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # No Cython: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
