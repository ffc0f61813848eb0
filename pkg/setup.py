from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize("src/ksb/_kernels.pyx", language_level=3)
except ImportError:
    # No Cython: install without the compiled kernels; the pure-Python
    # fallback is selected automatically at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
