import os

from setuptools import Extension, setup


def extension_modules():
    """Build the compiled kernel core when Cython is available.

    The extension is optional: if it cannot be built, the package falls
    back to the pure-NumPy kernels at import time.
    """
    if os.environ.get("CYLWIGNER_PURE_PYTHON") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "cylwigner._kernels_cy",
        ["src/cylwigner/_kernels_cy.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extension_modules())
