"""Builds the optional C extension with the hot simulation kernels.

The package works without it (a pure-Python backend is selected at import
time), so a missing compiler or Cython only costs speed, not functionality:
``pip install -e . --no-build-isolation`` falls back to a pure install.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cascadelab.kernels._ckern",
                ["src/cascadelab/kernels/_ckern.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
