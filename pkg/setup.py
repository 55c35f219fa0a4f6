#!/usr/bin/env python3
"""
rarr-sim - Raman-assisted Rabi resonance of a vibronic emitter in a lossy two-mode cavity
"""

from setuptools import setup, find_packages

setup(
    name="rarr-sim",
    version="0.1.0",
    description="Raman-assisted Rabi resonance of a vibronic emitter in a lossy two-mode cavity",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    author="rarr-sim developers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=[
        "pydantic>=2.0.0",
        "numpy>=1.22.0",
        "scipy>=1.8.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "hypothesis>=6.0.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.0.0",
        ],
    },
    entry_points={
        "console_scripts": ["rarr-sim=rarr_sim.cli.main:main"],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
