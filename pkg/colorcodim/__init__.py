#! /usr/bin/env python
# -*- coding: utf-8 -*-
#
# Distributed under terms of the MIT license.

'''
ColorCodim
==========

Polynomial identities and codimension growth of Z2+Z2 color Lie
superalgebras built as L = F[G] (x) B from a Lie algebra B.
'''

import os, sys; sys.path.append(os.path.dirname(os.path.realpath(__file__)))
