import pathlib
from setuptools import setup, find_packages
import os

HERE = pathlib.Path(__file__).parent

VERSION = '1.0.0'
PACKAGE_NAME = 'ColorCodim'
AUTHOR = 'ColorCodim developers'

LICENSE = 'MIT'
DESCRIPTION = 'Identities and codimension growth of Z2+Z2 color Lie superalgebras.'
with open(os.path.join(HERE, 'README.md'), encoding='utf-8') as f:
    LONG_DESCRIPTION = f.read()
LONG_DESC_TYPE = "text/markdown"

INSTALL_REQUIRES = [
      'numpy>1.17.0',
      'pandas',
      'scipy>1.0.0',
      'h5py',
]

setup(name=PACKAGE_NAME,
      version=VERSION,
      description=DESCRIPTION,
      long_description=LONG_DESCRIPTION,
      long_description_content_type=LONG_DESC_TYPE,
      author=AUTHOR,
      license=LICENSE,
      install_requires=INSTALL_REQUIRES,
      extras_require={'test': ['pytest']},
      classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent"],
      python_requires='>=3.7',
      packages=find_packages(exclude=['tests']),
      package_data={'colorcodim': ['example.json', 'goldens.json']},
      entry_points={'console_scripts': ['colorcodim = colorcodim.main:main']},
      )
