"""CMake-driven build of the _gnse extension (pybind11/cmake_example pattern)."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        out_dir = Path.cwd() / self.get_ext_fullpath(ext.name)
        out_dir = out_dir.parent.resolve() / "gnse"

        import pybind11

        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DGNSE_PY_OUTPUT_DIR={out_dir}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DSKBUILD=ON",
        ]
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_gnse", "-j"],
                       cwd=build_temp, check=True)


setup(
    packages=["gnse"],
    package_dir={"gnse": "python/gnse"},
    ext_modules=[CMakeExtension("gnse._gnse")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
