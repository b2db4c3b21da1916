"""Fixed points, Burnside orbit counts and explicit orbits on affine planes."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import Infeasible
from .finite_field import check_odd_prime, matmul_mod, nullity_mod, nullspace_mod
from .mat_group import (
    ConjClassLabel,
    GroupElem,
    J,
    class_labels,
    class_representative,
    class_size,
    conjugacy_classes,
    element_order,
    g1,
    g2,
    group_order,
    iter_group,
)
from .phasespace_coords import esl_action_matrix, plane_action_matrix, symplectic_form

__all__ = [
    "FixedPointRow",
    "OrbitCatalog",
    "CheckResult",
    "fixed_count_linear",
    "fixed_points_phase_space",
    "fixed_rvectors",
    "fixed_planes",
    "fixed_point_table",
    "burnside_count",
    "plane_index",
    "plane_digits",
    "orbit_decomposition",
    "structural_checks",
    "BURNSIDE_MAX_N",
    "EXPLICIT_MAX_N",
]

BURNSIDE_MAX_N = 13
EXPLICIT_MAX_N = 7
SPACES = ("planes", "rvectors", "points")


def fixed_count_linear(M, N: int) -> int:
    """Number of vectors fixed by the linear map M over Z_N."""
    M = np.asarray(M, dtype=np.int64)
    return N ** nullity_mod(M - np.eye(M.shape[0], dtype=np.int64), N)


def fixed_points_phase_space(F: GroupElem) -> int:
    N = F.N
    return sum(1 for q in range(N) for p in range(N) if F.apply(q, p) == (q, p))


def fixed_rvectors(g: GroupElem) -> int:
    return fixed_count_linear(esl_action_matrix(g), g.N)


def fixed_planes(g: GroupElem) -> int:
    return fixed_count_linear(plane_action_matrix(g), g.N)


_FIXERS = {
    "planes": fixed_planes,
    "rvectors": fixed_rvectors,
    "points": fixed_points_phase_space,
}


@dataclass(frozen=True)
class FixedPointRow:
    label: ConjClassLabel
    size: int
    order: int
    fixed_points: int
    fixed_rvectors: int
    fixed_planes: int

    @property
    def name(self) -> str:
        return self.label.name

    def as_dict(self) -> dict:
        return {
            "class": self.name,
            "det": self.label.delta,
            "trace": self.label.t,
            "kind": self.label.kind,
            "size": self.size,
            "order": self.order,
            "fixed_points": self.fixed_points,
            "fixed_rvectors": self.fixed_rvectors,
            "fixed_planes": self.fixed_planes,
        }


def fixed_point_table(N: int, group: str = "sl", det: int | None = None) -> list[FixedPointRow]:
    """One row per conjugacy class, counts taken at the class representative."""
    rows = []
    for lab in class_labels(N, group):
        if det is not None and lab.delta != det:
            continue
        rep = class_representative(lab, N)
        rows.append(
            FixedPointRow(
                label=lab,
                size=class_size(lab, N),
                order=element_order(rep),
                fixed_points=fixed_points_phase_space(rep),
                fixed_rvectors=fixed_rvectors(rep),
                fixed_planes=fixed_planes(rep),
            )
        )
    return rows


def burnside_count(N: int, group: str = "sl", space: str = "planes", method: str = "elements") -> int:
    """Number of orbits by averaging fixed-point counts over the group.

    ``method="elements"`` sums over every group element; ``"classes"`` sums
    class size times the count at the class representative.
    """
    N = check_odd_prime(N)
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}")
    if N > BURNSIDE_MAX_N:
        raise Infeasible(f"Burnside summation limited to N <= {BURNSIDE_MAX_N}")
    fix = _FIXERS[space]
    if method == "elements":
        total = sum(fix(g) for g in iter_group(N, group))
    elif method == "classes":
        total = sum(
            class_size(lab, N) * fix(class_representative(lab, N))
            for lab in class_labels(N, group)
        )
    else:
        raise ValueError("method must be 'elements' or 'classes'")
    order = group_order(N, group)
    if total % order:
        raise ArithmeticError(f"fixed-point sum {total} not divisible by |G| = {order}")
    return total // order


# -- explicit orbits ---------------------------------------------------------


def plane_index(digits, N: int) -> np.ndarray:
    """Base-N integer of plane labels, alpha_2 most significant."""
    digits = np.asarray(digits, dtype=np.int64)
    weights = N ** np.arange(digits.shape[-1] - 1, -1, -1, dtype=np.int64)
    return digits @ weights


def plane_digits(index, N: int) -> np.ndarray:
    index = np.asarray(index, dtype=np.int64)
    weights = N ** np.arange(N - 2, -1, -1, dtype=np.int64)
    return (index[..., None] // weights) % N


def generators(N: int, group: str) -> list[GroupElem]:
    gens = [g1(N), g2(N)]
    if group == "esl":
        gens.append(J(N))
    return gens


@dataclass
class OrbitCatalog:
    N: int
    group: str
    representatives: np.ndarray
    sizes: np.ndarray
    labels: np.ndarray = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return int(self.sizes.sum())

    def size_multiset(self) -> dict[int, int]:
        vals, counts = np.unique(self.sizes, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def payload(self) -> dict:
        return {
            "count": self.count,
            "total": self.total,
            "orbits": [
                {
                    "size": int(s),
                    "representative": int(r),
                    "label": plane_digits(r, self.N).tolist(),
                }
                for s, r in zip(self.sizes, self.representatives)
            ],
        }


@lru_cache(maxsize=8)
def _orbit_decomposition(N: int, group: str) -> OrbitCatalog:
    n_planes = N ** (N - 1)
    idx = np.arange(n_planes, dtype=np.int64)
    digits = plane_digits(idx, N)
    rows, cols = [], []
    for g in generators(N, group):
        P = plane_action_matrix(g)
        image = plane_index(matmul_mod(digits, P.T, N), N)
        rows.append(idx)
        cols.append(image)
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n_planes, n_planes))
    n_orbits, comp = connected_components(graph, directed=True, connection="weak")
    sizes = np.bincount(comp, minlength=n_orbits)
    reps = np.full(n_orbits, n_planes, dtype=np.int64)
    np.minimum.at(reps, comp, idx)
    order = np.lexsort((reps, sizes))
    relabel = np.empty(n_orbits, dtype=np.int64)
    relabel[order] = np.arange(n_orbits)
    return OrbitCatalog(N, group, reps[order], sizes[order], relabel[comp])


def orbit_decomposition(N: int, group: str = "sl") -> OrbitCatalog:
    """Orbits of the group on all N^(N-1) affine planes, sorted by (size, representative).

    ``labels[i]`` is the orbit number of the plane with base-N index ``i``.
    """
    N = check_odd_prime(N)
    if N > EXPLICIT_MAX_N:
        raise Infeasible(f"explicit orbit decomposition limited to N <= {EXPLICIT_MAX_N}")
    return _orbit_decomposition(N, group)


# -- structural claims -------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False

    def line(self) -> str:
        tag = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _singlet_check(N: int) -> list[CheckResult]:
    cat = orbit_decomposition(N, "sl")
    mult = cat.size_multiset()
    out = [
        CheckResult(f"N={N} unique singlet", mult.get(1, 0) == 1, f"{mult.get(1, 0)} orbits of size 1"),
        CheckResult(
            f"N={N} unique (N^2-1)-plet",
            mult.get(N * N - 1, 0) == 1,
            f"{mult.get(N * N - 1, 0)} orbits of size {N * N - 1}",
        ),
    ]
    # members of the (N^2-1)-plet are fixed by some element of order N
    k = int(np.nonzero(cat.sizes == N * N - 1)[0][0]) if mult.get(N * N - 1) else None
    if k is not None:
        members = np.nonzero(cat.labels == k)[0]
        members_digits = plane_digits(members, N)
        sylow_fixed = np.zeros(members.size, dtype=bool)
        for g in iter_group(N, "sl"):
            if element_order(g) != N:
                continue
            P = plane_action_matrix(g)
            sylow_fixed |= (matmul_mod(members_digits, P.T, N) == members_digits).all(axis=1)
        out.append(
            CheckResult(
                f"N={N} (N^2-1)-plet fixed by Sylow subgroups",
                bool(sylow_fixed.all()),
                f"{int(sylow_fixed.sum())}/{members.size} planes",
            )
        )
    return out


def _odd_order_checks(N: int) -> list[CheckResult]:
    out = []
    for lab in class_labels(N, "sl"):
        rep = class_representative(lab, N)
        m = element_order(rep)
        fp = fixed_planes(rep)
        if m % 2 == 1 and m > 1:
            k = (N + 1) // m
            out.append(
                CheckResult(
                    f"N={N} {lab.name} odd order {m} fixes N^{k} planes",
                    fp == N**k,
                    f"fixed planes = {fp}",
                )
            )
        elif m % 2 == 0:
            pts = fixed_points_phase_space(rep)
            out.append(
                CheckResult(
                    f"N={N} {lab.name} even order {m} fixes one phase-space point",
                    pts == 1,
                    f"fixed points = {pts}",
                )
            )
    return out


def _lagrangian_checks(N: int) -> list[CheckResult]:
    out = []
    Om = symplectic_form(N).plane
    for lab in class_labels(N, "esl"):
        if lab.delta != -1:
            continue
        rep = class_representative(lab, N)
        if element_order(rep) != 2:
            continue
        P = plane_action_matrix(rep)
        K = nullspace_mod(P - np.eye(N - 1, dtype=np.int64), N)
        isotropic = not matmul_mod(K, matmul_mod(Om, K.T, N), N).any()
        dim = K.shape[0]
        out.append(
            CheckResult(
                f"N={N} {lab.name} order-2 det -1 fixes a Lagrangian subspace",
                dim == (N - 1) // 2 and isotropic,
                f"fixed planes = N^{dim}, isotropic = {isotropic}",
            )
        )
    return out


def _squaring_checks(N: int) -> list[CheckResult]:
    out = []
    for lab in class_labels(N, "esl"):
        if lab.delta != -1:
            continue
        g = class_representative(lab, N)
        h = g @ g
        e_h = nullity_mod(esl_action_matrix(h) - np.eye(N + 1, dtype=np.int64), N)
        e_g = nullity_mod(esl_action_matrix(g) - np.eye(N + 1, dtype=np.int64), N)
        if e_h % 2:
            out.append(CheckResult(f"N={N} {lab.name} squaring rule", True, f"vacuous: square fixes N^{e_h}"))
            continue
        out.append(
            CheckResult(
                f"N={N} {lab.name} squaring rule",
                e_g == e_h // 2,
                f"square fixes N^{e_h}, element fixes N^{e_g}",
            )
        )
    return out


def structural_checks(N: int, group: str = "sl") -> list[CheckResult]:
    """Verify the general fixed-point claims; returns one result per claim instance."""
    N = check_odd_prime(N)
    out: list[CheckResult] = []
    if group == "sl":
        if N <= EXPLICIT_MAX_N:
            out += _singlet_check(N)
        out += _odd_order_checks(N)
    else:
        out += _lagrangian_checks(N)
        out += _squaring_checks(N)
    return out


def class_invariance_check(N: int, group: str = "sl") -> list[CheckResult]:
    """Every element of a class has the representative's fixed counts."""
    out = []
    for lab, elems in conjugacy_classes(N, group).items():
        rep = class_representative(lab, N)
        want = (fixed_points_phase_space(rep), fixed_rvectors(rep), fixed_planes(rep))
        bad = sum(
            1 for g in elems
            if (fixed_points_phase_space(g), fixed_rvectors(g), fixed_planes(g)) != want
        )
        out.append(CheckResult(f"N={N} {lab.name} fixed counts class-invariant", bad == 0, f"{bad} mismatches"))
    return out
