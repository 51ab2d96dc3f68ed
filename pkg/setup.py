"""Build script: compiles the enumeration kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed extension build only costs speed, never correctness.
Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "iasi._kernel",
                ["src/iasi/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
