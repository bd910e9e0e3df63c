"""
PolSys
======

Solving polynomial linear systems over finite fields by evaluation and
interpolation, with erroneous evaluations.

:license: GPLv3
"""

import logging

__version__ = '1.0'

logging.basicConfig()
