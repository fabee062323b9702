from pybind11.setup_helpers import Pybind11Extension
from setuptools import setup

setup(
    ext_modules=[
        Pybind11Extension("surfcensus._gluecore", ["src/surfcensus/_gluecore.cpp"],
                          cxx_std=17, extra_compile_args=["-O2"]),
        Pybind11Extension("surfcensus._girthcore", ["src/surfcensus/_girthcore.cpp"],
                          cxx_std=17, extra_compile_args=["-O2"]),
    ],
)
