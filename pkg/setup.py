import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="pwlab",
    version="0.1.1",
    description="Composition operators on Paley-Wiener spaces: exact classification and numerical certificates.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=['pwlab', 'pwlab.core', 'pwlab.operators', 'pwlab.certify'],
    package_data={'pwlab.certify': ['golden_thresholds.txt']},
    install_requires=[
        'stereotype>=1.5',
        'numpy>=1.20',
        'scipy>=1.6',
    ],
    entry_points={
        'console_scripts': ['pwlab=pwlab.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
)
