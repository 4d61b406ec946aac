from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package installs anyway and sparsehg.kernels selects the numpy fallback.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sparsehg._kernels",
                ["src/sparsehg/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
