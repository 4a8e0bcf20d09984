from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("tritangent._kernel", ["src/tritangent/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython: the package still works on the pure-Python kernel.
    ext_modules = []

setup(ext_modules=ext_modules)
