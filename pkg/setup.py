"""Builds the optional compiled kernel extension.

The package is fully functional without it (a NumPy fallback is selected at
import time); build with `pip install -e .` or
`python setup.py build_ext --inplace` to get the compiled inner loops.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "rakit._kernels",
                ["src/rakit/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
