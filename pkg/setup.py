import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BARYLAB_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("barylab.lp._kernel_cy", ["src/barylab/lp/_kernel_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python kernel remains fully functional without the extension.
        ext_modules = []

setup(ext_modules=ext_modules)
