from setuptools import Extension, setup

# The fraction-free elimination kernel has an optional compiled core.  When
# Cython (or a C compiler) is unavailable the package installs anyway and
# falls back to the pure-Python kernel at import time.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qgen._elim_core",
                ["src/qgen/_elim_core.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
