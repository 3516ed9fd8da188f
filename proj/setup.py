from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = [
    "python/bindings.cpp",
    "src/ring.cpp",
    "src/element.cpp",
    "src/term.cpp",
    "src/endo.cpp",
    "src/endaut.cpp",
    "src/basis_matrix.cpp",
    "src/derived_ops.cpp",
    "src/suites.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "endofree._core",
            sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
