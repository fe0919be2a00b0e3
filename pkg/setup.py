import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

ext_modules = []
if not os.environ.get("WARINGSYM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("waringsym._rankmod", ["src/waringsym/_rankmod.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )


class optional_build_ext(build_ext):
    # the numpy fallback takes over if compilation fails

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self.warn(f"compiled kernel not built ({exc}); using the pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self.warn(f"building {ext.name} failed ({exc}); using the pure-Python fallback")


setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
