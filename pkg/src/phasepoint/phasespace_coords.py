"""Exact Z_N coordinates for phase point operators and affine planes.

A phase point operator is labelled by its r-vector (r_0, ..., r_N): slot m
holds the index of the projector chosen from MUB m (slot N is infinity).
Symplectic group elements act on r-vectors by monomial matrices; in the
e-basis coordinates alpha = S^{-1} r the displacement group only moves
alpha_0 and alpha_1, so an affine plane is labelled by (alpha_2, ..., alpha_N).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadDeterminant
from .finite_field import check_odd_prime, inv_matrix_mod, inv_mod, matmul_mod
from .mat_group import GroupElem, J

__all__ = [
    "e_basis",
    "S_matrix",
    "S_inverse",
    "r_to_alpha",
    "alpha_to_r",
    "plane_label",
    "plane_representative",
    "translation_action",
    "translate_rvector",
    "mobius",
    "sl_action_matrix",
    "conjugation_action_matrix",
    "esl_action_matrix",
    "alpha_action_matrix",
    "plane_action_matrix",
    "SymplecticForm",
    "symplectic_form",
    "canonical_symplectic_basis",
    "canonical_basis_matrix",
]


@lru_cache(maxsize=None)
def _e_basis(N: int) -> np.ndarray:
    N = check_odd_prime(N)
    E = np.zeros((N + 1, N + 1), dtype=np.int64)
    j = np.arange(N)
    E[0, :N] = 1
    E[1, :N] = j
    E[1, N] = 1
    for k in range(2, N):
        E[k, :N] = [pow(int(x), k, N) for x in j]
    E[N, N] = 1
    E.setflags(write=False)
    return E


def e_basis(N: int) -> np.ndarray:
    """Rows e_0, ..., e_N of the e-basis."""
    return _e_basis(N).copy()


def S_matrix(N: int) -> np.ndarray:
    """S with e_k as columns, so that r = S alpha."""
    return _e_basis(N).T.copy()


@lru_cache(maxsize=None)
def _S_inv(N: int) -> np.ndarray:
    Si = inv_matrix_mod(_e_basis(N).T, N)
    Si.setflags(write=False)
    return Si


def S_inverse(N: int) -> np.ndarray:
    return _S_inv(N).copy()


def r_to_alpha(r, N: int) -> np.ndarray:
    return matmul_mod(_S_inv(N), np.asarray(r).T, N).T


def alpha_to_r(alpha, N: int) -> np.ndarray:
    return matmul_mod(_e_basis(N).T, np.asarray(alpha).T, N).T


def plane_label(r, N: int) -> np.ndarray:
    """(alpha_2, ..., alpha_N) of the affine plane containing ``r``."""
    return r_to_alpha(r, N)[..., 2:]


def plane_representative(label, N: int) -> np.ndarray:
    """The r-vector with alpha_0 = alpha_1 = 0 in the plane ``label``."""
    label = np.asarray(label, dtype=np.int64)
    alpha = np.concatenate([np.zeros(label.shape[:-1] + (2,), dtype=np.int64), label], axis=-1)
    return alpha_to_r(alpha, N)


def translation_action(q0: int, p0: int, N: int) -> np.ndarray:
    """Shift vector added to r by conjugation with D(q0, p0)."""
    E = _e_basis(N)
    return (q0 * E[0] - p0 * E[1]) % N


def translate_rvector(r, q0: int, p0: int, N: int) -> np.ndarray:
    return (np.asarray(r, dtype=np.int64) + translation_action(q0, p0, N)) % N


def mobius(F: GroupElem, m: int) -> int:
    """Image of the MUB index m (m = N for infinity) under F."""
    N = F.N
    a, b, c, d = F.a, F.b, F.c, F.d
    if m == N:
        return a * inv_mod(c, N) % N if c else N
    den = (c * m + d) % N
    if den == 0:
        return N
    return (a * m + b) * inv_mod(den, N) % N


def sl_action_matrix(F: GroupElem) -> np.ndarray:
    """Monomial matrix M(F) with A(M r) = U(F) A(r) U(F)^dagger."""
    N = F.N
    if F.det != 1:
        raise BadDeterminant("sl_action_matrix requires det F = 1")
    a, c, d = F.a, F.c, F.d
    M = np.zeros((N + 1, N + 1), dtype=np.int64)
    for m in range(N + 1):
        if m < N:
            den = (c * m + d) % N
            coef = inv_mod(den, N) if den else -c % N
        else:
            coef = inv_mod(c, N) if c else d
        M[mobius(F, m), m] = coef
    return M


@lru_cache(maxsize=None)
def _conj(N: int) -> np.ndarray:
    N = check_odd_prime(N)
    C = np.zeros((N + 1, N + 1), dtype=np.int64)
    for m in range(N):
        C[m, (-m) % N] = 1
    C[N, N] = N - 1
    C.setflags(write=False)
    return C


def conjugation_action_matrix(N: int) -> np.ndarray:
    """Action of entrywise complex conjugation on r-vectors."""
    return _conj(N).copy()


def esl_action_matrix(g: GroupElem) -> np.ndarray:
    """Action on r-vectors of any det +-1 element.

    det -1 elements factor as g = (g J) J with J = diag(1, -1), and J acts as
    complex conjugation.
    """
    if g.det == 1:
        return sl_action_matrix(g)
    return matmul_mod(sl_action_matrix(g @ J(g.N)), _conj(g.N), g.N)


def alpha_action_matrix(g: GroupElem) -> np.ndarray:
    """S^{-1} M(g) S: the action in alpha coordinates."""
    N = g.N
    return matmul_mod(_S_inv(N), matmul_mod(esl_action_matrix(g), _e_basis(N).T, N), N)


def plane_action_matrix(g: GroupElem) -> np.ndarray:
    """(N-1)x(N-1) action on plane labels (alpha_2, ..., alpha_N)."""
    return alpha_action_matrix(g)[2:, 2:].copy()


@dataclass(frozen=True)
class SymplecticForm:
    N: int
    r_basis: np.ndarray
    e_basis: np.ndarray

    @property
    def plane(self) -> np.ndarray:
        """Restriction to plane coordinates alpha_2..alpha_N."""
        return self.e_basis[2:, 2:]


@lru_cache(maxsize=None)
def symplectic_form(N: int) -> SymplecticForm:
    N = check_odd_prime(N)
    Om = np.zeros((N + 1, N + 1), dtype=np.int64)
    for i in range(N):
        for j in range(N):
            if i != j:
                Om[i, j] = inv_mod(j - i, N)
        Om[i, N] = 1
        Om[N, i] = N - 1
    S = _e_basis(N).T
    Oe = matmul_mod(S.T, matmul_mod(Om, S, N), N)
    for arr in (Om, Oe):
        arr.setflags(write=False)
    return SymplecticForm(N, Om, Oe)


def canonical_symplectic_basis(N: int) -> list[tuple[int, int]]:
    """Basis of the plane space putting the form in block canonical shape.

    Returns ``(coefficient, k)`` pairs meaning ``coefficient * e_k``; the
    first (N-1)/2 entries pair, in order, with the last (N-1)/2.
    """
    Oe = symplectic_form(N).e_basis
    first = list(range(2, N, 2))
    basis = [(1, k) for k in first]
    partners = []
    for k in first:
        if k == N - 1:
            j = N
        else:
            j = N - k
        partners.append((inv_mod(int(Oe[k, j]), N), j))
    return basis + partners


def canonical_basis_matrix(N: int) -> np.ndarray:
    """Columns: the canonical basis vectors in plane (alpha_2..alpha_N) coordinates."""
    B = np.zeros((N - 1, N - 1), dtype=np.int64)
    for col, (coef, k) in enumerate(canonical_symplectic_basis(N)):
        B[k - 2, col] = coef
    return B
