"""Exact computations in the rook-monoid algebra and its centralizers."""

try:
    from . import _rookalg as _impl  # installed layout: module inside the package
except ImportError:  # in-tree layout: module next to the package on sys.path
    import _rookalg as _impl

__all__ = [
    "AlgebraElement",
    "PartialBijection",
    "bridge_ok",
    "c_element",
    "central_eigenvalue",
    "centralizer_basis",
    "centralizer_dim",
    "classification_ok",
    "compose",
    "delta_element",
    "embed_phi",
    "embed_psi",
    "enumerate_gamma",
    "gamma_size",
    "hecke_normal_form",
    "hecke_truncated_dimension",
    "jm_element",
    "orbit_invariant",
    "power_sum_eval",
    "project_theta",
    "rep_dimension",
    "retraction",
    "run_suite",
    "shifted_generator",
    "theta",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name
