"""Build script for the optional compiled kernel core.

The package is fully functional without the extension (a numpy/scipy
fallback is selected at import time), so a failed compile is demoted to
a warning instead of aborting the install.
"""

import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "skillmorl._kernels._core",
                ["src/skillmorl/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
