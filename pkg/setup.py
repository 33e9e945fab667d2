# Root-level build entry point: the package sources live under python/
# (see python/setup.py for the full metadata used by `cd python && pip install -e .`).
import os
import re
from pathlib import Path

from setuptools import find_packages, setup


def get_version() -> str:
    init = Path(__file__).parent / "python" / "olie" / "__init__.py"
    version = re.search(r"__version__ = '([^']+)'", init.read_text()).group(1)
    return version + os.environ.get("OLIE_WHEEL_VERSION_SUFFIX", "")


setup(
    name=os.environ.get("OLIE_WHEEL_NAME", "olie"),
    version=get_version(),
    description="Gröbner-Shirshov bases for operated Lie algebras",
    package_dir={"": "python"},
    packages=find_packages("python", include=["olie", "olie.*"]),
    install_requires=["filelock", "sympy>=1.12"],
    entry_points={
        "console_scripts": ["olie-gsb = olie.tools.cli:main"],
    },
    zip_safe=False,
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
