import os
from setuptools import setup


SCRIPT_DIR         = os.path.abspath(os.path.dirname(__file__))
METADATA_FILE_PATH = os.path.join(SCRIPT_DIR, "src/permsplit/__init__.py")


# Based on https://github.com/pypa/pip/blob/9aa422da16e11b8e56d3597f34551f983ba9fbfd/setup.py
def get_metadata(name: str) -> str:
    dunderString = f"__{name}__"
    with open(METADATA_FILE_PATH) as file:
        for line in file.read().splitlines():
            if line.startswith(dunderString):
                delim = '"' if '"' in line else "'"
                return line.split(delim)[1]
    raise RuntimeError(f"Unable to find {dunderString} value.")


with open(os.path.join(SCRIPT_DIR, "README.md"), "r", encoding="utf-8") as readme:
    long_description = readme.read()


setup(
    name                          = get_metadata("title"),
    version                       = get_metadata("version"),
    description                   = get_metadata("description"),
    long_description              = long_description,
    long_description_content_type = "text/markdown",
    url                           = get_metadata("url"),
    author                        = get_metadata("author"),
    author_email                  = get_metadata("author_email"),
    maintainer                    = get_metadata("maintainer"),
    maintainer_email              = get_metadata("maintainer_email"),
    license                       = get_metadata("license"),
    packages = ["permsplit"], # Note: subpackages must be listed explicitly
    package_dir={"": "src"},
    install_requires=[
        "more-itertools >= 9.1.0",
        "numpy",
        "scipy",
        "sympy",
        "termcolor",
        "typing_extensions"
    ],
    python_requires=">=3.8, <4",
    entry_points={
        "console_scripts": ["permsplit = permsplit.cli:main"],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Security :: Cryptography",
    ],
    keywords="symmetric group, permutation, baby-step giant-step, meet-in-the-middle, graph isomorphism, discrete logarithm",
    project_urls={
        "Bug Reports": "https://github.com/permsplit/permsplit/issues",
        "Source":      "https://github.com/permsplit/permsplit",
    },
    zip_safe=False
)
