"""Exact engines, enumerators and checks for the q-Catalan triangle."""

from .kernels import BACKEND
from .poly import CycInt, MultiPoly, UniPoly, cyclotomic_polynomial, eval_at_root
from .triangles import (TriangleTable, carlitz_qcatalan, classical_triangle,
                        cyclotomic_triangle, mirror_triangle, multi_triangle, q_triangle,
                        qp_triangle, randrianarivony)

__version__ = "0.1.0"
