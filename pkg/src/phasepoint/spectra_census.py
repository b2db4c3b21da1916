"""Spectra of phase point operators, one representative per affine plane.

All N^2 operators of an affine plane are unitarily equivalent, so the census
builds only the operator with alpha_0 = alpha_1 = 0 for each plane label.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import Infeasible, NotHermitian, ToleranceCollision
from .finite_field import check_odd_prime
from .hw_clifford import mub_projector_table
from .orbit_engine import CheckResult, orbit_decomposition, plane_digits
from .phasespace_coords import plane_representative

__all__ = [
    "DEFAULT_TOL",
    "export_float",
    "Spectrum",
    "SpectraCensus",
    "hermitian_eigenvalues",
    "plane_operators",
    "plane_spectra",
    "spectra_census",
    "orbit_spectrum_consistency",
]

DEFAULT_TOL = 1e-6
CENSUS_MAX_N = 7
ZERO_SNAP = 1e-12  # eigensolver noise is ~1e-15; exact zeros are common


def export_float(v: float) -> float:
    """12 significant digits, with round-off around zero mapped to 0.0."""
    v = float(v)
    if abs(v) < ZERO_SNAP:
        return 0.0
    return float(f"{v:.12g}") + 0.0


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with the tolerance used to compare them."""

    values: tuple[float, ...]
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))

    def matches(self, other) -> bool:
        other = other.values if isinstance(other, Spectrum) else tuple(sorted(other))
        if len(other) != len(self.values):
            return False
        return max(abs(a - b) for a, b in zip(self.values, other)) < self.tol

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def hermitian_eigenvalues(A, tol: float = DEFAULT_TOL, atol: float = 1e-10) -> Spectrum:
    A = np.asarray(A, dtype=complex)
    if np.max(np.abs(A - A.conj().T)) >= atol:
        raise NotHermitian("matrix is not Hermitian")
    return Spectrum(tuple(np.linalg.eigvalsh(A)), tol)


def plane_operators(labels, N: int) -> np.ndarray:
    """Representative phase point operators for a batch of plane labels."""
    r = plane_representative(np.atleast_2d(labels), N)
    P = mub_projector_table(N)
    return P[np.arange(N + 1), r].sum(axis=1) - np.eye(N)


def plane_spectra(N: int, chunk: int = 4096) -> np.ndarray:
    """Sorted eigenvalues of every plane, rows indexed by base-N plane index."""
    n_planes = N ** (N - 1)
    out = np.empty((n_planes, N))
    for start in range(0, n_planes, chunk):
        idx = np.arange(start, min(start + chunk, n_planes))
        out[idx] = np.linalg.eigvalsh(plane_operators(plane_digits(idx, N), N))
    return out


@dataclass
class SpectraCensus:
    N: int
    tol: float
    spectra: list[Spectrum]
    counts: list[int]
    examples: list[int]
    labels: np.ndarray = field(repr=False)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __len__(self):
        return len(self.spectra)

    def rows(self):
        return zip(self.spectra, self.counts, self.examples)

    def payload(self) -> dict:
        return {
            "tol": self.tol,
            "count": len(self),
            "total": self.total,
            "spectra": [
                {
                    "eigenvalues": [export_float(v) for v in s.values],
                    "occurrences": c,
                    "example_plane": plane_digits(e, self.N).tolist(),
                }
                for s, c, e in self.rows()
            ],
        }


def _cluster(vals: np.ndarray, tol: float):
    """Group rows of ``vals`` closer than ``tol`` (max norm)."""
    keys = np.round(vals / tol).astype(np.int64)
    _, inv, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    inv = inv.reshape(-1)
    n_keys = counts.size
    sums = np.zeros((n_keys, vals.shape[1]))
    np.add.at(sums, inv, vals)
    cents = sums / counts[:, None]
    # rounding can split one cluster across a grid boundary; merge neighbours
    dist = np.abs(cents[:, None, :] - cents[None, :, :]).max(axis=2)
    i, j = np.nonzero(dist < tol)
    n_clusters, comp = connected_components(
        coo_matrix((np.ones(i.size), (i, j)), shape=(n_keys, n_keys)), directed=False
    )
    labels = comp[inv]
    sizes = np.bincount(labels, minlength=n_clusters)
    csum = np.zeros((n_clusters, vals.shape[1]))
    np.add.at(csum, labels, vals)
    centroids = csum / sizes[:, None]
    spread = np.abs(vals - centroids[labels]).max()
    if spread >= tol:
        raise ToleranceCollision(f"cluster spread {spread:.3g} exceeds tolerance {tol:g}", spread)
    if n_clusters > 1:
        d = np.abs(centroids[:, None, :] - centroids[None, :, :]).max(axis=2)
        d[np.diag_indices(n_clusters)] = np.inf
        if d.min() < 2 * tol:
            raise ToleranceCollision(f"distinct spectra {d.min():.3g} apart, below 2*tol", float(d.min()))
    return labels, centroids, sizes


def spectra_census(N: int, tol: float = DEFAULT_TOL) -> SpectraCensus:
    """Distinct spectra over all affine planes with their plane counts.

    Rows are sorted lexicographically by eigenvalues (first eigenvalue first).
    """
    N = check_odd_prime(N)
    if N > CENSUS_MAX_N:
        raise Infeasible(f"spectra census limited to N <= {CENSUS_MAX_N}")
    vals = plane_spectra(N)
    labels, centroids, sizes = _cluster(vals, tol)
    # lexsort keys on values rounded to the tolerance grid, first column primary
    grid = np.round(centroids / tol).astype(np.int64)
    order = np.lexsort(grid.T[::-1])
    relabel = np.empty_like(order)
    relabel[order] = np.arange(order.size)
    labels = relabel[labels]
    n = order.size
    examples = np.full(n, vals.shape[0], dtype=np.int64)
    np.minimum.at(examples, labels, np.arange(vals.shape[0]))
    return SpectraCensus(
        N=N,
        tol=tol,
        spectra=[Spectrum(tuple(centroids[k]), tol) for k in order],
        counts=[int(sizes[k]) for k in order],
        examples=[int(e) for e in examples],
        labels=labels,
    )


def orbit_spectrum_consistency(N: int, census: SpectraCensus | None = None) -> list[CheckResult]:
    """Compare the spectral partition of planes with the ESL orbit partition."""
    census = census or spectra_census(N)
    cat = orbit_decomposition(N, "esl")
    pairs = np.unique(np.stack([cat.labels, census.labels], axis=1), axis=0)
    spectra_per_orbit = np.bincount(pairs[:, 0], minlength=cat.count)
    orbits_per_spectrum = np.bincount(pairs[:, 1], minlength=len(census))
    inhomogeneous = int((spectra_per_orbit != 1).sum())
    degenerate = int((orbits_per_spectrum > 1).sum())
    sums_ok = all(
        census.counts[s] == int(cat.sizes[pairs[pairs[:, 1] == s, 0]].sum())
        for s in range(len(census))
    )
    return [
        CheckResult(f"N={N} every ESL orbit spectrally homogeneous", inhomogeneous == 0,
                    f"{inhomogeneous} orbits with >1 spectrum"),
        CheckResult(f"N={N} spectrum classes equal ESL orbits", len(census) == cat.count,
                    f"{len(census)} spectra vs {cat.count} orbits"),
        CheckResult(f"N={N} spectral counts are sums of orbit sizes", sums_ok, ""),
        CheckResult(f"N={N} no accidental spectral degeneracy", degenerate == 0,
                    f"{degenerate} spectra shared by several orbits"),
    ]
