#!/usr/bin/env python3
"""
notemap setup script
Exact rational polynomial mappings between musical note-sets
"""

from setuptools import setup, find_packages


# Read README for long description
def read_readme():
    with open('README.md', 'r', encoding='utf-8') as f:
        return f.read()


setup(
    name='notemap',
    version='1.0.0',
    description='Exact rational polynomial mappings between musical note-sets',
    long_description=read_readme(),
    long_description_content_type='text/markdown',
    author='notemap developers',
    license='MIT',

    packages=find_packages(include=['notemap', 'notemap.*']),
    include_package_data=True,
    package_data={'notemap': ['data/*.yaml']},

    install_requires=[
        'click>=8.1.0',
        'pyyaml>=6.0',
        'rich>=13.0.0',
        'pydantic>=2.4.0',
        'pydantic-settings>=2.0.0',
        'mido>=1.3.0',
    ],

    extras_require={
        'dev': ['pytest>=7.0.0', 'hypothesis>=6.80.0', 'black>=22.0.0', 'flake8>=5.0.0', 'mypy>=0.991'],
    },

    entry_points={
        'console_scripts': [
            'notemap=notemap.cli:main',
        ],
    },

    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Multimedia :: Sound/Audio :: MIDI',
    ],
    python_requires='>=3.9',
)
