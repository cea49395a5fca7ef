"""Build script: compiles the optional Cython kernel.

The package works without the extension (pure-Python twin in
arcinvert._kernels._pyimpl); the extension only speeds up the flow/cut
kernels that dominate the exhaustive searches.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "arcinvert._kernels._cimpl",
                ["src/arcinvert/_kernels/_cimpl.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython at build time: pure-Python kernels are used at runtime
    pass

setup(ext_modules=ext_modules)
