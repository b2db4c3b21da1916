"""Arithmetic in Z_N for odd prime N.

Scalars are plain ``int`` internally; :class:`FieldElem` wraps one together
with its modulus for the public API. Small dense linear algebra over Z_N
(rank, nullity, inverse, determinant) lives here as well, since every exact
computation downstream is a matrix over the field.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NoWitness, NotPrime, ZeroArgument, ZeroInverse

__all__ = [
    "FieldElem",
    "ResidueSets",
    "is_prime",
    "check_odd_prime",
    "field_inv",
    "inv_mod",
    "residue_sets",
    "sqrt_mod",
    "sqrt_minus_one",
    "residue_intersection_count",
    "residue_intersection_formula",
    "lemma2_witness",
    "mat_mod",
    "matmul_mod",
    "rank_mod",
    "nullity_mod",
    "nullspace_mod",
    "inv_matrix_mod",
    "det_mod",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_odd_prime(n: int) -> int:
    n = int(n)
    if n == 2 or not is_prime(n):
        raise NotPrime(f"N must be an odd prime, got {n}")
    return n


@dataclass(frozen=True)
class FieldElem:
    """An element of Z_N."""

    value: int
    modulus: int

    def __post_init__(self):
        check_odd_prime(self.modulus)
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        return int(other)

    def _new(self, v: int) -> FieldElem:
        return FieldElem(v % self.modulus, self.modulus)

    def __add__(self, other):
        return self._new(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self._new(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self._new(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __truediv__(self, other):
        return self * field_inv(self._new(self._coerce(other)))

    def __pow__(self, k: int):
        if k < 0:
            return field_inv(self) ** (-k)
        return self._new(pow(self.value, k, self.modulus))

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def inv_mod(x: int, n: int) -> int:
    """Inverse of ``x`` modulo prime ``n`` by the extended Euclidean algorithm."""
    a, m = int(x) % n, n
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {n}")
    x0, x1 = 1, 0
    while m:
        q = a // m
        a, m = m, a - q * m
        x0, x1 = x1, x0 - q * x1
    return x0 % n


def field_inv(x: FieldElem) -> FieldElem:
    return FieldElem(inv_mod(x.value, x.modulus), x.modulus)


@dataclass(frozen=True)
class ResidueSets:
    N: int
    Q: frozenset
    Qbar: frozenset
    theta: int
    nu: int

    def is_residue(self, x: int) -> bool:
        return x % self.N in self.Q

    def is_nonresidue(self, x: int) -> bool:
        return x % self.N in self.Qbar


def _mult_order(x: int, n: int) -> int:
    k, y = 1, x % n
    while y != 1:
        y = y * x % n
        k += 1
    return k


@lru_cache(maxsize=None)
def residue_sets(N: int) -> ResidueSets:
    N = check_odd_prime(N)
    Q = frozenset(y * y % N for y in range(1, N))
    Qbar = frozenset(range(1, N)) - Q
    theta = next(g for g in range(2, N) if _mult_order(g, N) == N - 1)
    return ResidueSets(N, Q, Qbar, theta, min(Qbar))


@lru_cache(maxsize=None)
def _sqrt_table(N: int) -> dict:
    table = {}
    for y in range(N - 1, -1, -1):
        table[y * y % N] = y
    return table


def sqrt_mod(x: int, N: int) -> int:
    """Smallest square root of ``x`` in Z_N; raises ValueError for non-residues."""
    try:
        return _sqrt_table(N)[x % N]
    except KeyError:
        raise ValueError(f"{x % N} is not a square mod {N}") from None


def sqrt_minus_one(N: int) -> int | None:
    """The smaller root of i^2 = -1, or None when N = 3 (mod 4)."""
    if N % 4 != 1:
        return None
    return sqrt_mod(N - 1, N)


def residue_intersection_count(x: int | FieldElem, sets: ResidueSets) -> int:
    """|Qbar ∩ (Qbar - x)| by direct set intersection."""
    x = int(x) % sets.N
    if x == 0:
        raise ZeroArgument("x must be nonzero")
    shifted = {(y - x) % sets.N for y in sets.Qbar}
    return len(sets.Qbar & shifted)


def residue_intersection_formula(x: int | FieldElem, sets: ResidueSets) -> int:
    """Closed form for :func:`residue_intersection_count`."""
    x = int(x) % sets.N
    if x == 0:
        raise ZeroArgument("x must be nonzero")
    N = sets.N
    if N % 4 == 3:
        return (N - 3) // 4
    return (N - 1) // 4 if x in sets.Q else (N - 5) // 4


def lemma2_witness(mu: int | FieldElem, nu: int | FieldElem, N: int | None = None) -> int:
    """Find q in Q ∪ {0} with mu*q + nu in Q ∪ {0}, scanning upward from 0."""
    if N is None:
        N = mu.modulus if isinstance(mu, FieldElem) else nu.modulus
    mu, nu = int(mu) % N, int(nu) % N
    if mu == 0:
        raise ZeroArgument("mu must be nonzero")
    rs = residue_sets(N)
    squares = rs.Q | {0}
    for q in sorted(squares):
        if (mu * q + nu) % N in squares:
            return q
    raise NoWitness(f"no witness for mu={mu}, nu={nu} mod {N}")


# -- dense linear algebra over Z_N ------------------------------------------


def mat_mod(a, N: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % N


def matmul_mod(a, b, N: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % N


def _rref(a, N: int):
    R = mat_mod(a, N).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = R[r] * inv_mod(int(R[r, c]), N) % N
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % N
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod(a, N: int) -> int:
    return len(_rref(a, N)[1])


def nullity_mod(a, N: int) -> int:
    a = np.asarray(a)
    return a.shape[1] - rank_mod(a, N)


def nullspace_mod(a, N: int) -> np.ndarray:
    """Basis of the right kernel, one vector per row."""
    R, pivots = _rref(a, N)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(pivots):
            basis[k, p] = -R[i, f] % N
    return basis


def inv_matrix_mod(a, N: int) -> np.ndarray:
    a = mat_mod(a, N)
    n = a.shape[0]
    R, pivots = _rref(np.hstack([a, np.eye(n, dtype=np.int64)]), N)
    if pivots[:n] != list(range(n)):
        raise ZeroInverse("matrix is singular mod N")
    return R[:, n:]


def det_mod(a, N: int) -> int:
    R = mat_mod(a, N).copy()
    n = R.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(R[c:, c])[0]
        if nz.size == 0:
            return 0
        p = c + nz[0]
        if p != c:
            R[[c, p]] = R[[p, c]]
            det = -det
        piv = int(R[c, c])
        det = det * piv % N
        f = R[c + 1:, c] * inv_mod(piv, N) % N
        R[c + 1:] = (R[c + 1:] - np.outer(f, R[c])) % N
    return det % N
