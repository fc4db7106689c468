# Builds the optional compiled kernel.  The package works without it (a pure
# Python implementation is selected at import time), so the extension is
# marked optional and any build failure is downgraded to a warning.
from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "hodgelim._kernels_cy",
        ["src/hodgelim/_kernels_cy.pyx"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
