import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PIRTRADE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "pirtrade._kernels._speed",
                    ["src/pirtrade/_kernels/_speed.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install the pure-Python package; the kernel shim
        # falls back automatically at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
