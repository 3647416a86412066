import os

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:  # fall back to the pure-Python kernels
    cythonize = None

if cythonize is not None and not os.environ.get("PKAEQUIV_PURE"):
    ext_modules = cythonize(
        [Extension("pkaequiv._speedups", ["src/pkaequiv/_speedups.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
