"""Search and verification toolkit for base sequences BS(n+1, n).

The compiled search lives in ``baseseq.search`` (imported on demand, it pulls
in numba); everything else is plain Python plus numpy.
"""
from . import bsq, codec, constructions, errors, gamma, seqcore
from .bsq import canonicalize, check_bs, covertex, is_bs, sums_profile, vertex
from .codec import CodePair, decode, encode
from .seqcore import BaseQuadruple

__version__ = "0.1.0"

__all__ = [
    "BaseQuadruple",
    "CodePair",
    "bsq",
    "canonicalize",
    "check_bs",
    "codec",
    "constructions",
    "covertex",
    "decode",
    "encode",
    "errors",
    "gamma",
    "is_bs",
    "seqcore",
    "sums_profile",
    "vertex",
]
