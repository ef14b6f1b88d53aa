from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "fpdioph._core",
    [
        "src/ff.cpp",
        "src/graph.cpp",
        "src/forms.cpp",
        "src/fibers.cpp",
        "src/verify.cpp",
        "python/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    packages=["fpdioph"],
    package_dir={"fpdioph": "python/fpdioph"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
