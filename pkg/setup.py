"""Build script for the optional compiled character kernel.

The package is fully functional without the extension; plethy.schur falls
back to the pure-Python kernel when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("plethy._mn_speed", ["src/plethy/_mn_speed.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
