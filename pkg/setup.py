from setuptools import setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        ["src/prop_rewriter/_celim.pyx"],
        compiler_directives={"language_level": "3"},
    ),
)
