from setuptools import setup, find_packages
import os


def read_requirements(fname):
    with open(fname) as file:
        lines = file.readlines()
        requirements = [line.strip() for line in lines if line.strip() and not line.startswith("#")]
    return requirements


requirements = read_requirements('requirements.txt')

setup(
    name='coxpoly',
    version="0.1",
    description='Exact Coxeter polynomials of path algebras and canonical algebras',
    install_requires=requirements,
    python_requires='>=3.8',
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    include_package_data=True,
    package_data={
        '': [os.path.join('src')]
    },
    entry_points={
        'console_scripts': ['coxpoly = coxpoly.cli:main']
    }
)
