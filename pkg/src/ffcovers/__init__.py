"""Exact computations with finite fields, Kummer covers of the projective line,
zeta functions of curves and PGL(2, q) actions."""

from .ffield import FieldCtx, FieldElement, Poly, embed, frobenius, make_field, nth_power_root_count
from .covers import KummerCurve, PlaneCurve, check_bounds, genus_tame, parse_curve
from .pgl import INF, PGLElement, act, classify
from .zeta import ZetaNumerator, fit_numerator, predict_count

__version__ = "0.1.0"
