"""Build script: compiles the canonical-labeling kernel when Cython is available.

The package works without the extension; anchorkit.canon falls back to the
pure-Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "anchorkit._fastcanon",
                ["src/anchorkit/_fastcanon.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
