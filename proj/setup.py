import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        src = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(src),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_pitypical", "-j"],
            check=True,
        )
        dest = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        dest.mkdir(parents=True, exist_ok=True)
        built = build_dir / "python" / "pitypical"
        for f in built.glob("_pitypical*.so"):
            self.copy_file(str(f), str(dest / f.name))


setup(
    packages=["pitypical"],
    package_dir={"pitypical": "python/pitypical"},
    ext_modules=[CMakeExtension("pitypical._pitypical")],
    cmdclass={"build_ext": CMakeBuild},
)
