"""Build the optional compiled kernel; the package falls back to pure Python without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CHARCLASS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("charclass._kernel", ["src/charclass/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
