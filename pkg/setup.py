from setuptools import setup, find_packages
import os

# warn user if setup.py is run from a different directory
dir_of_file = os.path.dirname(os.path.abspath(__file__))
cwd = os.getcwd()
if dir_of_file != cwd:
    print(f"WARNING: setup.py is being run from a different directory than the install script. "
          f"Current directory='{cwd}', dir of file='{dir_of_file}'")

install_requires_packages = [
          'numpy==1.24.3',
          'galois==0.3.5',
          'tabulate==0.9.0',
          'more_itertools==9.1.0',
          'pytest==7.3.1'
]

kwargs = {
    'name': 'gsidon',
    'version': '1.0.0',
    'include_package_data': True,
    'package_data': {'gsidon': ['data/config/*.json', 'data/tables/*.csv']},
    'install_requires': install_requires_packages,
    'packages': find_packages(exclude=['tests', 'tests.*']),
    'entry_points': {'console_scripts': ['gsidon = gsidon.cli:main']},
    'zip_safe': False
}

setup(**kwargs)
