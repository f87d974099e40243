from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "prelie_forge._poly_kernel_c",
        ["src/prelie_forge/_poly_kernel_c.pyx"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": 3},
    ),
)
