"""Characteristic classes of projective hypersurfaces through blow-up algebras.

Exact Gröbner bases over QQ and F_p, Rees / symmetric / quasi-symmetric
presentations, conormal and characteristic cycles in P^n x P^n, and the
resulting Chern-Schwartz-MacPherson, Chern-Mather, Fulton and
Fulton-Johnson classes.
"""

from .blowup import (principal_transform, qsym_affine, rees_ideal, sym_ideal,
                     weak_linearity_check, xcondition_check)
from .chow import (ChowClass, cmather_class, csm_class, euler_characteristic, fulton_class,
                   fulton_johnson_class)
from .cycles import charcycle_ideal, conormal_ideal, cycle_cross_check, make_hypersurface
from .errors import (BudgetExhausted, CharclassError, CrossCheckFailure, PreconditionError,
                     UsageError)
from .groebner import groebner_basis
from .ideal import Ideal, multidegree
from .kernel import IMPLEMENTATION as KERNEL
from .ring import GF, QQ, VarContext

__version__ = "0.1.0"

__all__ = [
    "VarContext", "QQ", "GF", "Ideal", "groebner_basis", "multidegree",
    "rees_ideal", "sym_ideal", "qsym_affine", "principal_transform",
    "xcondition_check", "weak_linearity_check",
    "make_hypersurface", "conormal_ideal", "charcycle_ideal", "cycle_cross_check",
    "ChowClass", "csm_class", "cmather_class", "fulton_class", "fulton_johnson_class",
    "euler_characteristic",
    "CharclassError", "UsageError", "PreconditionError", "BudgetExhausted", "CrossCheckFailure",
    "KERNEL", "__version__",
]
