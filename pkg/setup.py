from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "wellcovered._speedups",
                ["src/wellcovered/_speedups.pyx"],
                optional=True,  # the package falls back to the pure lane
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
