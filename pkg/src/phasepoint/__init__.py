"""Discrete Wigner functions in odd prime dimension.

MUBs and phase point operators, Clifford and extended Clifford actions as
exact matrices over Z_N, orbit counting on affine planes, and the census of
phase point operator spectra.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BadDeterminant,
    IncompletePlane,
    Infeasible,
    NotAState,
    NotConjugable,
    NotHermitian,
    NotPrime,
    PhasePointError,
    ToleranceCollision,
    ZeroArgument,
    ZeroInverse,
)
from .finite_field import FieldElem, check_odd_prime, inv_mod, residue_sets  # noqa: E402
from .hw_clifford import (  # noqa: E402
    Line,
    clifford_unitary,
    displacement,
    mub_projector,
    mub_vector,
    phase_point_operator,
    wigner_distribution,
)
from .mat_group import (  # noqa: E402
    ConjClassLabel,
    GroupElem,
    class_labels,
    classify,
    enumerate_group,
    standardize,
)
from .orbit_engine import burnside_count, fixed_point_table, orbit_decomposition  # noqa: E402
from .phasespace_coords import esl_action_matrix, plane_label, sl_action_matrix  # noqa: E402
from .spectra_census import spectra_census  # noqa: E402
