"""CMake-driven build of the _traceforge extension module.

The extension is configured and built in build/python (Release, with
TRACEFORGE_PYTHON=ON) and the resulting module is copied into the
traceforge/ package directory, which also makes editable installs work.
"""

import glob
import os
import shutil
import subprocess
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = os.path.abspath(os.path.dirname(__file__))
        build_dir = os.path.join(source_dir, "build", "python")
        os.makedirs(build_dir, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                source_dir,
                "-DCMAKE_BUILD_TYPE=Release",
                "-DTRACEFORGE_PYTHON=ON",
                f"-Dpybind11_DIR={self._pybind11_dir()}",
                f"-DPython_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", build_dir, "--target", "_traceforge", "--parallel"],
            check=True,
        )
        modules = glob.glob(os.path.join(build_dir, "_traceforge*.so"))
        if not modules:
            raise RuntimeError("CMake build produced no _traceforge module")
        target = self.get_ext_fullpath(ext.name)
        os.makedirs(os.path.dirname(target), exist_ok=True)
        shutil.copy(modules[0], target)
        # keep a copy next to the sources so `pip install -e .` imports work
        shutil.copy(modules[0], os.path.join(source_dir, "traceforge"))

    @staticmethod
    def _pybind11_dir():
        import pybind11

        return pybind11.get_cmake_dir()


setup(
    ext_modules=[CMakeExtension("traceforge._traceforge")],
    cmdclass={"build_ext": CMakeBuild},
)
