"""Displacement operators, Clifford unitaries, MUBs and phase point operators.

All matrices are dense ``complex128`` arrays in the standard basis |0>..|N-1>.
MUBs are indexed m = 0..N, with m = N standing for infinity.
Phases are computed from exact integer exponents: tau = -exp(i pi / N) equals
omega^((N+1)/2) for odd N, so every tau power reduces modulo N.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadDeterminant, IncompletePlane, NotAState
from .finite_field import check_odd_prime, inv_mod
from .mat_group import GroupElem, g1, g2

__all__ = [
    "omega_powers",
    "tau_exponent",
    "displacement",
    "weyl_product_phase",
    "clifford_unitary",
    "mub_vector",
    "mub_projector",
    "mub_projector_table",
    "phase_point_operator",
    "affine_plane_operators",
    "Line",
    "line_projector",
    "wigner_distribution",
]


@lru_cache(maxsize=None)
def omega_powers(N: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(N) / N)


def tau_exponent(k: int, N: int) -> int:
    """Exponent e with tau**k == omega**e."""
    return k * ((N + 1) // 2) % N


def _tau(k: int, N: int) -> complex:
    return omega_powers(N)[tau_exponent(k, N)]


@lru_cache(maxsize=None)
def _displacement(q: int, p: int, N: int) -> np.ndarray:
    w = omega_powers(N)
    D = np.zeros((N, N), dtype=complex)
    k = np.arange(N)
    D[(k + q) % N, k] = _tau(q * p, N) * w[(k * p) % N]
    D.setflags(write=False)
    return D


def displacement(q: int, p: int, N: int) -> np.ndarray:
    """D(q, p) = tau^{qp} X^q Z^p."""
    N = check_odd_prime(N)
    return _displacement(q % N, p % N, N).copy()


def weyl_product_phase(q: int, p: int, q2: int, p2: int, N: int) -> complex:
    """Phase in D(q,p) D(q2,p2) = phase * D(q+q2, p+p2)."""
    return _tau(q2 * p - q * p2, N)


def clifford_unitary(F: GroupElem) -> np.ndarray:
    """U(F) with U D(q,p) U^dagger = D(F (q,p)), for det F = 1."""
    N = F.N
    if F.det != 1:
        raise BadDeterminant("Clifford unitary requires det F = 1")
    a, b, c, d = F.a, F.b, F.c, F.d
    j = np.arange(N)[:, None]
    k = np.arange(N)[None, :]
    w = omega_powers(N)
    half = (N + 1) // 2
    if b:
        e = inv_mod(b, N) * (a * k * k - 2 * j * k + d * j * j) * half % N
        return w[e] / np.sqrt(N)
    U = np.zeros((N, N), dtype=complex)
    jj = np.arange(N)
    U[(a * jj) % N, jj] = w[(a * c * jj * jj * half) % N]
    return U


def mub_vector(m: int, r: int, N: int) -> np.ndarray:
    """|m, r> = V^m |r> for m < N and W |r> for m = N (infinity)."""
    e = np.zeros(N, dtype=complex)
    e[r % N] = 1.0
    if m == N:
        return clifford_unitary(g2(N)) @ e
    return clifford_unitary(g1(N) ** m) @ e


@lru_cache(maxsize=None)
def mub_projector_table(N: int) -> np.ndarray:
    """Array P[m, r] of all MUB projectors, shape (N+1, N, N, N)."""
    N = check_odd_prime(N)
    w = omega_powers(N)
    P = np.zeros((N + 1, N, N, N), dtype=complex)
    js = range(N)
    for r in range(N):
        for m in range(N):
            P[m, r] = sum(w[(-r * j) % N] * _displacement(m * j % N, j, N) for j in js) / N
        P[N, r] = sum(w[(-r * j) % N] * _displacement(j, 0, N) for j in js) / N
    P.setflags(write=False)
    return P


def mub_projector(m: int, r: int, N: int) -> np.ndarray:
    return mub_projector_table(N)[m, r % N].copy()


def phase_point_operator(rvec, N: int | None = None) -> np.ndarray:
    """A = sum_m P[m, r_m] - I for the r-vector (r_0, ..., r_N)."""
    rvec = np.asarray(rvec, dtype=np.int64)
    if N is None:
        N = len(rvec) - 1
    P = mub_projector_table(N)
    return P[np.arange(N + 1), rvec % N].sum(axis=0) - np.eye(N)


def affine_plane_operators(rvec, N: int | None = None) -> dict[tuple[int, int], np.ndarray]:
    """All N^2 displaced copies D(q,p) A D(q,p)^dagger of A(rvec)."""
    A0 = phase_point_operator(rvec, N)
    N = A0.shape[0]
    plane = {}
    for q in range(N):
        for p in range(N):
            D = _displacement(q, p, N)
            plane[(q, p)] = D @ A0 @ D.conj().T
    return plane


@dataclass(frozen=True)
class Line:
    """A line of the phase-space striation with MUB index ``slope``.

    For ``slope`` m < N the line is {(q, p) : q - m p = offset}; it is the
    translate of the ray {(m s, s)} whose MUB is M_m. For ``slope == N``
    (infinity) it is the horizontal line {(q, p) : p = offset}.
    """

    slope: int
    offset: int
    N: int

    def points(self) -> list[tuple[int, int]]:
        N, m, c = self.N, self.slope, self.offset % self.N
        if m == N:
            return [(s, c) for s in range(N)]
        return [((m * s + c) % N, s) for s in range(N)]

    def mub_label(self, rvec) -> tuple[int, int]:
        """(m, r) of the projector a quantum net with ``rvec`` puts on this line."""
        N, m = self.N, self.slope
        if m == N:
            return m, (int(rvec[N]) - self.offset) % N
        return m, (int(rvec[m]) + self.offset) % N


def line_projector(line: Line, plane: dict) -> np.ndarray:
    """P_line = (1/N) sum of the phase point operators on the line."""
    pts = line.points()
    missing = [pt for pt in pts if pt not in plane]
    if missing:
        raise IncompletePlane(f"plane lacks points {missing}")
    return sum(plane[pt] for pt in pts) / line.N


def wigner_distribution(rho, plane: dict, atol: float = 1e-9) -> dict[tuple[int, int], float]:
    """W(q, p) = Tr[rho A(q, p)] over a complete affine plane."""
    rho = np.asarray(rho, dtype=complex)
    if abs(np.trace(rho) - 1) > atol or np.max(np.abs(rho - rho.conj().T)) > atol:
        raise NotAState("rho must be Hermitian with unit trace")
    N = rho.shape[0]
    if len(plane) != N * N:
        raise IncompletePlane("plane must hold all N^2 points")
    return {pt: float(np.real(np.trace(rho @ A))) for pt, A in plane.items()}
