import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt", "r") as fh:
    install_requires = [line.strip() for line in fh if line.strip() and not line.startswith("pytest")]

setuptools.setup(
    name='golaytools',
    version='1.0.0',
    description='Charm bracelet generation and a compressed search for periodic Golay pairs',
    long_description=long_description,
    long_description_content_type="text/markdown",
    py_modules=['necklaces', 'charm_count', 'sequences', 'golay_search', 'sds', 'golaytools', 'gt_log',
                'gt_email'],
    data_files=[('data', ['data/sds_68.txt'])],
    install_requires=install_requires,
    entry_points={'console_scripts': ['golaytools=golaytools:main']},
    license='MIT',
    packages=setuptools.find_packages(exclude=['tests']),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: POSIX",
    ],
)
