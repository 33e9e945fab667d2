import os
import re
from pathlib import Path

from setuptools import setup


def get_version() -> str:
    init = Path(__file__).parent / "olie" / "__init__.py"
    version = re.search(r"__version__ = '([^']+)'", init.read_text()).group(1)
    return version + os.environ.get("OLIE_WHEEL_VERSION_SUFFIX", "")


setup(
    name=os.environ.get("OLIE_WHEEL_NAME", "olie"),
    version=get_version(),
    description="Gröbner-Shirshov bases for operated Lie algebras",
    long_description="",
    packages=[
        "olie",
        "olie/algebra",
        "olie/identities",
        "olie/rewriting",
        "olie/runtime",
        "olie/tools",
    ],
    install_requires=["filelock", "sympy>=1.12"],
    entry_points={
        "console_scripts": ["olie-gsb = olie.tools.cli:main"],
    },
    zip_safe=False,
    keywords=["Lie algebra", "Groebner-Shirshov basis", "Rewriting", "Computer Algebra"],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    test_suite="tests",
    extras_require={
        "tests": [
            "autopep8",
            "flake8",
            "hypothesis",
            "isort",
            "pytest",
        ],
    },
)
