import numpy as np
import pytest

from oracles import jacobi_eigenvalues, phase_point_by_eigen
from phasepoint.errors import Infeasible, NotHermitian, ToleranceCollision
from phasepoint.hw_clifford import phase_point_operator
from phasepoint.orbit_engine import plane_digits
from phasepoint.phasespace_coords import plane_representative
from phasepoint.spectra_census import (
    Spectrum,
    export_float,
    hermitian_eigenvalues,
    orbit_spectrum_consistency,
    plane_operators,
    plane_spectra,
    spectra_census,
)
from tables import GOLDEN, TABLE5


def test_identity_and_singlet():
    assert hermitian_eigenvalues(np.eye(3)).values == (1.0, 1.0, 1.0)
    s = hermitian_eigenvalues(phase_point_operator([0, 0, 0, 0]))
    assert s.matches((-1, 1, 1))


def test_not_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))


def test_spectrum_comparison():
    a = Spectrum((0.3, 0.1, 0.6))
    assert a.values == (0.1, 0.3, 0.6)
    assert a.matches((0.1 + 1e-8, 0.3, 0.6))
    assert not a.matches((0.1 + 1e-5, 0.3, 0.6))
    assert not a.matches((0.1, 0.3))


@pytest.mark.parametrize("N", [3, 5])
def test_jacobi_oracle_agrees(N):
    rng = np.random.default_rng(5)
    for idx in rng.integers(N ** (N - 1), size=15):
        rv = plane_representative(plane_digits(idx, N), N)
        A = phase_point_by_eigen(rv, N)
        assert np.abs(jacobi_eigenvalues(A) - hermitian_eigenvalues(phase_point_operator(rv)).values).max() < 1e-9


def test_batched_operators_match_single():
    labels = plane_digits(np.arange(25), 3 + 2)
    ops = plane_operators(labels, 5)
    for lab, A in zip(labels, ops):
        assert np.abs(A - phase_point_operator(plane_representative(lab, 5))).max() < 1e-14
    vals = plane_spectra(3)
    assert vals.shape == (9, 3)


def test_census_n3():
    c = spectra_census(3)
    assert len(c) == 2 and c.counts == [1, 8]
    assert c.spectra[0].matches((-1, 1, 1))
    lo, mid, hi = c.spectra[1].values
    assert abs(hi - GOLDEN) < 1e-5 and abs(lo - (1 - GOLDEN)) < 1e-5 and abs(mid) < 1e-9


def test_census_n5_matches_table():
    c = spectra_census(5)
    assert len(c) == 9 and c.total == 625
    for (vals, count), s, n in zip(TABLE5, c.spectra, c.counts):
        assert max(abs(a - b) for a, b in zip(vals, s.values)) < 1e-4
        assert n == count


def test_census_invariants_n5():
    c = spectra_census(5)
    for s in c.spectra:
        assert abs(sum(s.values) - 1) < 1e-8
        assert abs(sum(v * v for v in s.values) - 5) < 1e-7
    assert all(2 * 5 * 24 % n == 0 for n in c.counts)
    assert 120 % 80 != 0 and 240 % 80 == 0
    # the example plane of each row really has that spectrum
    for s, e in zip(c.spectra, c.examples):
        A = phase_point_operator(plane_representative(plane_digits(e, 5), 5))
        assert s.matches(np.linalg.eigvalsh(A))


def test_tolerance_collision():
    with pytest.raises(ToleranceCollision) as info:
        spectra_census(5, tol=0.1)
    assert info.value.distance is not None


def test_census_limits():
    with pytest.raises(Infeasible):
        spectra_census(11)


@pytest.mark.parametrize("N", [3, 5])
def test_consistency(N):
    res = orbit_spectrum_consistency(N)
    assert len(res) == 4 and all(r.passed for r in res)


def test_payload_serialisation():
    p = spectra_census(3).payload()
    assert p["count"] == 2 and p["total"] == 9
    assert p["spectra"][1]["eigenvalues"][1] == 0.0
    assert export_float(-1e-17) == 0.0 and str(export_float(-0.0)) == "0.0"
    assert export_float(1.6180339887498949) == 1.61803398875
