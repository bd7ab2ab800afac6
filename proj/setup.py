import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

root = os.path.dirname(os.path.abspath(__file__))
sources = ["bindings/module.cpp"] + [
    os.path.join("src", f) for f in sorted(os.listdir(os.path.join(root, "src")))
    if f.endswith(".cpp")
]

ext = Pybind11Extension(
    "lllspec._lllspec",
    sources,
    include_dirs=[
        os.path.join(root, "include"),
        os.path.join(root, "vendor"),
        os.environ.get("EIGEN3_INCLUDE", "/usr/include/eigen3"),
    ],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
