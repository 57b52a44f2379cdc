import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup; the package falls back to the
# numpy implementations in picardnum.gfcount.kernels_py when they are absent.
ext_modules = []
if os.environ.get("PICARDNUM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "picardnum.gfcount._speedups",
                    ["src/picardnum/gfcount/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
