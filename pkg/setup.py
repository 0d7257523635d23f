"""Build script: compiles the Cython kernel extension when Cython is available.

The package is fully functional without the extension (the pure-Python
kernel backend is selected at import time), so a missing compiler or a
missing Cython only costs speed, never correctness.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/cnideals/_kernels.pyx",
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
