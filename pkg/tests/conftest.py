import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.realpath(__file__))), 'colorcodim'))

import pytest

from algebra_core import sl2_factory, tensor_color_construct
from color_group import canonical_cocycle


@pytest.fixture(scope='session')
def sl2():
    return sl2_factory()


@pytest.fixture(scope='session')
def L(sl2):
    return tensor_color_construct(sl2, canonical_cocycle())
