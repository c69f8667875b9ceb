"""Combinatorics and exact linear algebra for simple modules of the degenerate
double affine Hecke algebra of gl_n."""

from .afw import AffinePermutation, AffineWeight, AffineCoweight, Root, ReducedWord
from .params import ParamPair, AffineSymElement
from .classify import Multisegment

__version__ = "0.1.0"
