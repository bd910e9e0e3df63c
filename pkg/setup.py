from pathlib import Path

from setuptools import setup, find_packages


requirements_txt_path = Path(__file__).parent.absolute() / 'requirements.txt'

with open(requirements_txt_path, 'r') as r:
    requirements = [line.rsplit('\n', 1)[0] for line in r.readlines() if line.strip()]

setup(
    name='PolSys-Core',
    version='1.0',
    description='Polynomial linear system solving with erroneous evaluations over finite fields',
    author='PolSys contributors',
    license='GPLv3',
    platforms=['any'],
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    package_data={'polsys': ['logging_config.yml']},
    install_requires=requirements,
    entry_points={
        'console_scripts': ['polsys=polsys.commands:main'],
    },
    scripts=[],
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
