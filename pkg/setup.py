"""Build script: compiles the optional scan-kernel extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compile must not abort installation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fairplay._scan_c",
                ["src/fairplay/_scan_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
