from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("bigraphpoly._kernel", ["src/bigraphpoly/_kernel.pyx"])],
        compiler_directives={
            "language_level": "3",
            "overflowcheck": True,
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    # No Cython: install pure Python only; the kernel dispatcher falls back.
    ext_modules = []

setup(ext_modules=ext_modules, zip_safe=False)
