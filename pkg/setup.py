# -*- coding: utf-8 -*-
from __future__ import annotations

from setuptools import find_packages
from setuptools import setup

exec(compile(open("tvdepth/version.py").read(), "tvdepth/version.py", "exec"))


CORE_REQUIREMENTS = [
    "click==8.1.7",
    "psutil==5.9.5",
    "JSON-log-formatter==0.5.1",
    "colorlog==6.7.0",
    "msgspec==0.18.5",
    "diskcache==5.6.3",
    "numpy==1.26.4",
    "scipy==1.12.0",
]


setup(
    name="tvdepth",
    version=__version__,  # type: ignore # noqa: F821
    license="MIT",
    description="Total variation depth, shape variation and outlier detection for functional data.",
    classifiers=[
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        "Development Status :: 4 - Beta",
    ],
    keywords=["functional data", "data depth", "outlier detection", "functional boxplot", "statistics"],
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    install_requires=CORE_REQUIREMENTS,
    include_package_data=True,
    package_data={"tvdepth": ["config.default.ini"]},
    packages=find_packages(exclude=["*.tests", "*.tests.*"]),
    entry_points="""
        [console_scripts]
        tvdepth=tvdepth.cli.tvd:main
    """,
    python_requires=">=3.10",
)
