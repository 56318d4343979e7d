import os

from setuptools import find_packages, setup

pwd = os.path.dirname(__file__)
version_file = 'zerorees/version.py'


def readme():
    with open(os.path.join(pwd, 'README.md'), encoding='utf-8') as f:
        content = f.read()
    return content


def get_version():
    with open(os.path.join(pwd, version_file), 'r') as f:
        namespace = {}
        exec(compile(f.read(), version_file, 'exec'), namespace)
    return namespace['__version__']


def read_requirements(path='requirements.txt'):
    lines = []
    with open(os.path.join(pwd, path), 'r') as f:
        for line in f.readlines():
            line = line.strip()
            if line.startswith('#') or line.startswith('-r'):
                continue
            if len(line) > 0:
                lines.append(line)
    return lines


install_packages = read_requirements()

if __name__ == '__main__':
    setup(
        name='zerorees',
        version=get_version(),
        description=  # noqa E251
        'Commuting graphs of completely 0-simple semigroups: closed formulas and a brute-force oracle',  # noqa E501
        long_description=readme(),
        long_description_content_type='text/markdown',
        packages=find_packages(exclude=('unittest', 'unittest.*')),
        install_requires=install_packages,
        extras_require={'test': read_requirements('requirements/test.txt')},
        classifiers=[
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Programming Language :: Python :: 3.11',
            'Intended Audience :: Education',
            'Intended Audience :: Science/Research',
            'Topic :: Scientific/Engineering :: Mathematics',
        ],
        entry_points={'console_scripts': ['zerorees=zerorees.main:run']},
    )
