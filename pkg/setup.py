from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package falls back to the pure-Python kernel at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("serinv._kernel_cy", ["src/serinv/_kernel_cy.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
