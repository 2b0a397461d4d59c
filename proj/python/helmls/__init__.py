"""FOSLS and classical hp-FEM for the Helmholtz impedance problem."""

from ._helmls import (
    InvalidArgument,
    Mesh,
    SolverError,
    assemble,
    basis_values,
    disk_mesh,
    dofs_per_wavelength,
    empirical_order,
    h12_00_gram,
    interval_mesh,
    list_problems,
    project_reference,
    run_study,
    solve,
    space_size,
    square_mesh,
)

__all__ = [
    "InvalidArgument",
    "Mesh",
    "SolverError",
    "assemble",
    "basis_values",
    "disk_mesh",
    "dofs_per_wavelength",
    "empirical_order",
    "h12_00_gram",
    "interval_mesh",
    "list_problems",
    "project_reference",
    "run_study",
    "solve",
    "space_size",
    "square_mesh",
]
