from setuptools import setup, find_packages

setup(
    name="line_dispersal",
    version="0.1.0",
    description="Exact O(n log n) solver for moving points on a line to pairwise distance delta with minimum total displacement.",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests*", "examples*"]),
    install_requires=[
        "numpy",  # seeded PCG64 instance generation, benchmark medians
        "tqdm",  # progress bars for verify / bench batches
        "setuptools"
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["line-dispersal = line_dispersal.cli.main:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
)
