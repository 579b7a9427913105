from setuptools import setup, find_packages

setup(
    name='pyCarayol',
    version='0.1',
    packages=find_packages(exclude=("documentation","sandbox","version","examples")),
    install_requires=[
        'numpy>=1.24.3',
        'scipy>=1.15.1',
        'mpmath>=1.3.0',
        'matplotlib>=3.7.1',
    ],
    entry_points={
        'console_scripts': ['pycarayol=pyCarayol.cli:main'],
    },
)
