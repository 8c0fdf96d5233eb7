"""Build script: compiles the optional native kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the extension only accelerates the hot per-patch
kernels. If Cython or a C compiler is unavailable the build proceeds as
pure Python.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext = Extension(
        "spoofbench._kernels._native",
        ["src/spoofbench/_kernels/_native.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        # -ffp-contract=off keeps bilinear arithmetic bit-identical to the
        # numpy fallback (no FMA contraction).
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
