"""Builds the optional compiled kernels.

The package is fully functional without them; any failure here (no
Cython, no C compiler) falls back to the pure-Python lane selected in
beauville.kernels.  Set BEAUVILLE_PURE=1 to skip the extension build.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("BEAUVILLE_PURE"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext = Extension(
            "beauville._kernels_c",
            ["src/beauville/_kernels_c.pyx"],
            extra_compile_args=["-O3"],
            optional=True,
        )
        ext_modules = cythonize([ext], language_level="3")
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
