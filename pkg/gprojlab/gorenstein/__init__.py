from .gproj import gproj_indecomposables, is_gproj, left_approximation
from .report import gorenstein_report
from .stable import omega_stable_orbits, projective_factoring_dim, stable_hom_dim, stable_table

__all__ = [
    "gorenstein_report",
    "gproj_indecomposables",
    "is_gproj",
    "left_approximation",
    "omega_stable_orbits",
    "projective_factoring_dim",
    "stable_hom_dim",
    "stable_table",
]
