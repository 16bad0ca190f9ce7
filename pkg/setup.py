"""Build hook for the optional compiled crossing kernels.

The package works without the extension: convexcycles.kernels falls back to
the pure-Python implementation when the compiled module is absent.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/convexcycles/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
