from setuptools import setup, find_packages  # type: ignore

setup(
    name="antcal",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy",
        "pandas>=2.0",
        "scipy",
        "scikit-learn",
        "tqdm",
        "click",
        "tomli; python_version < '3.11'",
    ],
    extras_require={
        "test": ["pytest"],
    },
    include_package_data=True,
    entry_points={
        "console_scripts": ["antcal = antcal.cli:cli"],
    },
)

# pip install -e .
