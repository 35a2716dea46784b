"""Exact gl_n(Z) action on the cohomology ring B_{r,n} of the Grassmannian G(r,n).

``B_r = Z[e_1, ..., e_r]`` has the Schur determinants ``Delta_lam(H_r)`` as a
Z-basis.  The elementary matrix ``E_ij`` acts on them through closed-form
generating functions, checked against a brute-force wedge model.
"""

from .exactpoly import LaurentWindow, Poly, WindowError
from .fermion import WedgeElement, delta_elementary, from_schur, to_schur
from .partitions import Partition, enumerate_box
from .schubert_ops import (GlMatrix, act_elementary, act_matrix, action_box_form, action_first_form,
                           action_second_form, gamma, gamma_star)
from .symfunc import ParseError, SchurExpansion, parse_element, project, reduce_mod, schur_poly, straighten

__version__ = "0.1.0"

__all__ = [
    "LaurentWindow", "Poly", "WindowError", "WedgeElement", "delta_elementary", "from_schur",
    "to_schur", "Partition", "enumerate_box", "GlMatrix", "act_elementary", "act_matrix",
    "action_box_form", "action_first_form", "action_second_form", "gamma", "gamma_star",
    "ParseError", "SchurExpansion", "parse_element", "project", "reduce_mod", "schur_poly",
    "straighten",
]
