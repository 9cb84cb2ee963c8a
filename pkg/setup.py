"""Build script: compiles the optional group-kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so any failure here is downgraded to a warning.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("opendp4._groupkern", ["src/opendp4/_groupkern.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write("opendp4: skipping compiled kernels (%s)\n" % exc)

setup(ext_modules=ext_modules)
