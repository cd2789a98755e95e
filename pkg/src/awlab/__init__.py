"""Exact Askey-Wilson operator calculus on polynomials and moment functionals."""

from .families import AWParams, HermiteVariant, PearsonPair, TTRRSpec, aw_ttrr, generate_ops, hermite_ttrr
from .poly import Poly, SymLaurent, from_laurent, to_laurent
from .qops import dq, sq
from .scalar import QContext, Scalar, alpha_n, gamma_n

__version__ = "0.1.0"

__all__ = [
    "AWParams",
    "HermiteVariant",
    "PearsonPair",
    "Poly",
    "QContext",
    "Scalar",
    "SymLaurent",
    "TTRRSpec",
    "alpha_n",
    "aw_ttrr",
    "dq",
    "from_laurent",
    "gamma_n",
    "generate_ops",
    "hermite_ttrr",
    "sq",
    "to_laurent",
]
