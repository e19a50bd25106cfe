# -*- coding: utf-8 -*-
"""Bicellular maps - exact genus distributions of two-face bicolored maps."""

__version__ = "0.1.0"
