"""Build script: compiles the optional C kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to cythonize or
compile downgrades to a pure build instead of aborting the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("scrimkit._ckernels", ["src/scrimkit/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    import sys

    print(f"scrimkit: building without C kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
