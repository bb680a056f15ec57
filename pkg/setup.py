import os

from setuptools import setup

ext_modules = []
if os.environ.get("WHITDIM_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "whitdim._gfkernel",
                    ["src/whitdim/_gfkernel.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        # no Cython: install runs fine on the pure-Python kernels
        ext_modules = []

setup(ext_modules=ext_modules)
