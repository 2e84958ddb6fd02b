"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a failed Cython build must not fail the
install.  Set BERNDT_LAB_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("BERNDT_LAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "berndt_lab._kernels._core",
                    ["src/berndt_lab/_kernels/_core.pyx"],
                )
            ],
            compiler_directives={"language_level": 3},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
