"""Build hook: compile the constant-term kernel when Cython is available.

Without Cython (or a C compiler) the package installs pure Python and the
kernel module selects its object-dtype fallback at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QKZSTRIP_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("qkzstrip.ctengine._kernel", ["src/qkzstrip/ctengine/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
