"""Exact computations with finite and affine Hecke algebras.

The package builds root data, Weyl groups, extended affine Weyl groups,
Hecke algebras in the Iwahori-Matsumoto and Bernstein-Lusztig
presentations, finite dimensional modules over them, and the Coxeter
complex.  On top of these it checks a family of duality identities
(Solomon, Howlett-Lehrer, Kato and a relative Howlett-Lehrer analogue)
with exact rational arithmetic.
"""

from .errors import *  # noqa: F401,F403
from .coefficients import LaurentPoly, ParamSymbol, specialize
from .root_datum import RootDatum, ParamAssignment, build_root_datum, affine_parameters
from .weyl import WeylGroup, WeylElement, Subgroup, ClassFunction
from .affine_weyl import AffineWeylGroup, AffineWeylElement
from .hecke import HeckeAlgebra, HeckeElement, BLElement, AffineHeckeAlgebra
from .hecke_modules import HeckeModule, VirtualModule
from .report import VerificationReport, CheckRecord

__version__ = "0.1.0"
