from setuptools import setup, find_packages

setup(
    name="knotsig",
    version="1.0.0",
    description="Seifert-matrix knot invariants, satellite constructions and signature formula checks",
    packages=find_packages(exclude=("tests", "tests.*", "examples", "examples.*")),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "sympy>=1.12",
        "pandas>=2.0.0",
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "pyyaml>=6.0",
        "loguru>=0.7.0",
        "tqdm>=4.65.0",
    ],
    extras_require={
        "test": ["pytest>=7.4.0", "hypothesis>=6.80.0"],
    },
    data_files=[("data", ["data/catalog.txt"])],
    entry_points={
        "console_scripts": [
            "knotsig=cli.main:run",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
    ],
)
