from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    # -ffp-contract=off: the pure-Python fallback must be able to reproduce
    # the compiled kernel's float sequences; fused multiply-adds would diverge.
    ext_modules = cythonize(
        [
            Extension(
                "tubelab._kernel",
                ["src/tubelab/_kernel.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        language_level="3",
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
