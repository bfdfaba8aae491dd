"""Build hook: compile the optional fast kernels, fall back to pure python.

The package works without the extension (memfric._pykern implements the
same contracts); building it just speeds up the mode sums and the memory
convolution inner loop.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/memfric/_ckern.pyx"],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
    include_dirs = [numpy.get_include()]
    for ext in ext_modules:
        ext.include_dirs = include_dirs
        ext.define_macros = [("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")]
except Exception as exc:  # no cython / no compiler: wheel still usable
    print("memfric: skipping compiled kernels (%s)" % exc)
    ext_modules = []

setup(ext_modules=ext_modules)
