"""Build script: compiles the optional rank-kernel extension when Cython is available.

The package is fully functional without the extension (a pure-Python twin is
selected at import time), so any build failure here should be treated as
"install without the extension", e.g. TABIDEAL_NO_EXT=1 pip install -e .
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("TABIDEAL_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "tabideal._kernels",
                    ["src/tabideal/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
