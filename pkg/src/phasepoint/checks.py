"""Property suites run by ``phasepoint verify``.

Each suite takes (N, rng) and returns a list of :class:`CheckResult`.
Randomised checks draw from the supplied generator only, so a fixed seed
reproduces the run exactly.
"""
from __future__ import annotations

from collections import Counter
from itertools import product

import numpy as np

from .finite_field import (
    det_mod,
    field_inv,
    FieldElem,
    lemma2_witness,
    matmul_mod,
    rank_mod,
    residue_intersection_count,
    residue_intersection_formula,
    residue_sets,
)
from .hw_clifford import (
    Line,
    affine_plane_operators,
    clifford_unitary,
    displacement,
    line_projector,
    mub_projector,
    mub_projector_table,
    mub_vector,
    phase_point_operator,
    weyl_product_phase,
    wigner_distribution,
)
from .mat_group import (
    J,
    class_labels,
    class_representative,
    class_size,
    classify,
    conjugacy_classes,
    element_order,
    enumerate_group,
    g1,
    g2,
    group_order,
    standardize,
)
from .orbit_engine import (
    EXPLICIT_MAX_N,
    CheckResult,
    burnside_count,
    class_invariance_check,
    generators,
    orbit_decomposition,
    plane_digits,
    structural_checks,
)
from .phasespace_coords import (
    alpha_action_matrix,
    alpha_to_r,
    canonical_basis_matrix,
    conjugation_action_matrix,
    e_basis,
    esl_action_matrix,
    plane_representative,
    plane_action_matrix,
    r_to_alpha,
    sl_action_matrix,
    symplectic_form,
)
from .spectra_census import orbit_spectrum_consistency, spectra_census

SUITES = ("field", "group", "hilbert", "coords", "orbits", "spectra")

# cyclic orders valid for every N, keyed by (kind, trace as a function of N)
TABLE1_ORDERS = {
    ("C", 0): 4,
    ("C", 1): 6,
    ("C", -1): 3,
    ("C", 2): "N",
    ("Cbar", 2): "N",
    ("D", 2): 1,
    ("C", -2): "2N",
    ("Cbar", -2): "2N",
    ("D", -2): 2,
}


def _ok(name, cond, detail=""):
    return CheckResult(name, bool(cond), detail)


def _maxabs(a):
    return float(np.max(np.abs(a)))


def field_suite(N: int, rng=None) -> list[CheckResult]:
    rs = residue_sets(N)
    Q, Qb = rs.Q, rs.Qbar
    prod = lambda A, B: {a * b % N for a in A for b in B}  # noqa: E731
    out = [
        _ok(f"N={N} |Q| = |Qbar| = (N-1)/2", len(Q) == len(Qb) == (N - 1) // 2),
        _ok(f"N={N} -1 in Q iff N = 1 mod 4", ((N - 1) in Q) == (N % 4 == 1)),
        _ok(f"N={N} QQ = Q, QbarQbar = Q, QQbar = Qbar",
            prod(Q, Q) == Q and prod(Qb, Qb) == Q and prod(Q, Qb) == Qb),
        _ok(f"N={N} theta is a primitive element",
            len({pow(rs.theta, s, N) for s in range(N - 1)}) == N - 1
            and all((pow(rs.theta, s, N) in Q) == (s % 2 == 0) for s in range(N - 1))),
    ]
    bad = [x for x in range(1, N)
           if residue_intersection_count(x, rs) != residue_intersection_formula(x, rs)]
    out.append(_ok(f"N={N} residue intersection closed form", not bad, f"mismatch at {bad}" if bad else ""))
    sq = Q | {0}
    bad = 0
    for mu in range(1, N):
        for nu in range(N):
            q = lemma2_witness(mu, nu, N)
            bad += not (q in sq and (mu * q + nu) % N in sq)
    out.append(_ok(f"N={N} witness exists for every (mu, nu)", bad == 0))
    out.append(_ok(f"N={N} inverse is an involution",
                   all(field_inv(field_inv(FieldElem(x, N))) == x for x in range(1, N))))
    return out


def group_suite(N: int, rng=None) -> list[CheckResult]:
    rng = rng or np.random.default_rng(0)
    out = []
    for group in ("sl", "esl"):
        labels = class_labels(N, group)
        if group == "sl":
            want = N + 4
        else:
            want = 2 * N + 8 if N % 4 == 1 else 2 * N + 2
        out.append(_ok(f"N={N} {group} class count", len(labels) == want, f"{len(labels)} (want {want})"))
        classes = conjugacy_classes(N, group)
        total = sum(len(v) for v in classes.values())
        out.append(_ok(f"N={N} {group} class sizes sum to |G|", total == group_order(N, group)))
        out.append(_ok(f"N={N} {group} no empty class", all(classes.values())))
        if group == "sl":
            bad = [lab.name for lab in labels if class_size(lab, N) != len(classes[lab])]
            out.append(_ok(f"N={N} sl class sizes match closed form", not bad, ", ".join(bad)))
        G = enumerate_group(N, group == "sl")
        bad = 0
        for _ in range(500):
            F = G[rng.integers(len(G))]
            S = G[rng.integers(len(G))]
            bad += classify(S @ F @ S.inverse(), group) != classify(F, group)
        out.append(_ok(f"N={N} {group} classify is conjugation invariant (500 samples)", bad == 0))
    G = enumerate_group(N, False)
    sample = G if N <= 7 else [G[i] for i in rng.integers(len(G), size=500)]
    bad = 0
    for F in sample:
        S, rep = standardize(F)
        ok = S.det == F.det and S @ rep @ S.inverse() == F and classify(rep, "esl") == classify(F, "esl")
        if F.det == 1:
            ok = ok and classify(rep, "sl") == classify(F, "sl")
        bad += not ok
    out.append(_ok(f"N={N} standardize round-trips ({len(sample)} elements)", bad == 0))
    # Table-1 orders
    bad = []
    for (kind, t), order in TABLE1_ORDERS.items():
        from .mat_group import ConjClassLabel
        lab = ConjClassLabel(kind, 1, t % N, "sl")
        want = {"N": N, "2N": 2 * N}.get(order, order)
        got = element_order(class_representative(lab, N))
        if got != want:
            bad.append(f"{lab.name}: {got} != {want}")
    out.append(_ok(f"N={N} special-class cyclic orders", not bad, "; ".join(bad)))
    return out


def hilbert_suite(N: int, rng=None) -> list[CheckResult]:
    rng = rng or np.random.default_rng(0)
    I = np.eye(N)
    pts = list(product(range(N), repeat=2))
    Ds = {x: displacement(*x, N) for x in pts}
    e8 = max(_maxabs(Ds[(q, p)].conj().T - Ds[((-q) % N, (-p) % N)]) for q, p in pts)
    e9 = max(
        _maxabs(Ds[(q, p)] @ Ds[(q2, p2)]
                - weyl_product_phase(q, p, q2, p2, N) * Ds[((q + q2) % N, (p + p2) % N)])
        for (q, p), (q2, p2) in product(pts, pts)
    )
    e10 = max(abs(np.trace(Ds[x]) - (N if x == (0, 0) else 0)) for x in pts)
    e11 = max(
        abs(np.trace(Ds[x].conj().T @ Ds[y]) - (N if x == y else 0))
        for x, y in product(pts, pts)
    )
    out = [
        _ok(f"N={N} D(q,p)^dagger = D(-q,-p)", e8 < 1e-12, f"{e8:.2e}"),
        _ok(f"N={N} Weyl product rule", e9 < 1e-12, f"{e9:.2e}"),
        _ok(f"N={N} Tr D(q,p) = N delta", e10 < 1e-12, f"{e10:.2e}"),
        _ok(f"N={N} Tr D^dagger D' = N delta", e11 < 1e-12, f"{e11:.2e}"),
    ]
    G = enumerate_group(N)
    err = 0.0
    for i in rng.integers(len(G), size=50):
        F = G[i]
        U = clifford_unitary(F)
        err = max(err, _maxabs(U.conj().T @ U - I))
        for x in pts:
            err = max(err, _maxabs(U @ Ds[x] @ U.conj().T - Ds[F.apply(*x)]))
    out.append(_ok(f"N={N} Clifford covariance (50 random F)", err < 1e-10, f"{err:.2e}"))
    vecs = {(m, r): mub_vector(m, r, N) for m in range(N + 1) for r in range(N)}
    err = 0.0
    for (m, r), (m2, r2) in product(vecs, vecs):
        ov = abs(np.vdot(vecs[(m, r)], vecs[(m2, r2)])) ** 2
        want = 1 / N if m != m2 else float(r == r2)
        err = max(err, abs(ov - want))
    out.append(_ok(f"N={N} MUB overlaps 1/N", err < 1e-10, f"{err:.2e}"))
    err = max(
        _maxabs(np.outer(v, v.conj()) - mub_projector(m, r, N)) for (m, r), v in vecs.items()
    )
    out.append(_ok(f"N={N} projector formula matches vectors", err < 1e-12, f"{err:.2e}"))
    X, Z = Ds[(1, 0)], Ds[(0, 1)]
    err = 0.0
    for m in range(N + 1):
        for r in range(N):
            P = mub_projector(m, r, N)
            up_x = (m, r) if m == N else (m, (r + 1) % N)
            up_z = (m, (r - 1) % N) if m == N else (m, (r - m) % N)
            err = max(err, _maxabs(X @ P @ X.conj().T - mub_projector(*up_x, N)))
            err = max(err, _maxabs(Z @ P @ Z.conj().T - mub_projector(*up_z, N)))
    out.append(_ok(f"N={N} displacement ladder on MUB projectors", err < 1e-12, f"{err:.2e}"))
    err_h = err_t = err_sq = 0.0
    for _ in range(20):
        A = phase_point_operator(rng.integers(0, N, N + 1))
        err_h = max(err_h, _maxabs(A - A.conj().T))
        err_t = max(err_t, abs(np.trace(A) - 1))
        err_sq = max(err_sq, abs(np.trace(A @ A) - N))
    out.append(_ok(f"N={N} phase point operators Hermitian, Tr 1, Tr A^2 = N",
                   err_h < 1e-12 and err_t < 1e-10 and err_sq < 1e-9,
                   f"{err_h:.1e}/{err_t:.1e}/{err_sq:.1e}"))
    rvec = rng.integers(0, N, N + 1)
    plane = affine_plane_operators(rvec)
    err = max(abs(np.trace(plane[x] @ plane[y]) - (N if x == y else 0)) for x, y in product(pts, pts))
    out.append(_ok(f"N={N} Tr A(x) A(y) = N delta within a plane", err < 1e-9, f"{err:.2e}"))
    err = 0.0
    for m in range(N + 1):
        for c in range(N):
            ln = Line(m, c, N)
            err = max(err, _maxabs(line_projector(ln, plane) - mub_projector(*ln.mub_label(rvec), N)))
    out.append(_ok(f"N={N} line averages of A give the net's projectors", err < 1e-9, f"{err:.2e}"))
    v = rng.normal(size=N) + 1j * rng.normal(size=N)
    rho = np.outer(v, v.conj())
    rho /= np.trace(rho)
    W = wigner_distribution(rho, plane)
    err = 0.0
    for m in range(N + 1):
        for c in range(N):
            ln = Line(m, c, N)
            marg = sum(W[x] for x in ln.points()) / N
            err = max(err, abs(marg - np.real(np.trace(rho @ mub_projector(*ln.mub_label(rvec), N)))))
    out.append(_ok(f"N={N} Wigner marginals", err < 1e-9, f"{err:.2e}"))
    return out


def coords_suite(N: int, rng=None) -> list[CheckResult]:
    rng = rng or np.random.default_rng(0)
    E = e_basis(N)
    out = [_ok(f"N={N} e-basis is a basis", rank_mod(E, N) == N + 1)]
    r = rng.integers(0, N, (100, N + 1))
    out.append(_ok(f"N={N} r <-> alpha round trip", (alpha_to_r(r_to_alpha(r, N), N) == r).all()))
    G = enumerate_group(N, False)
    bad = 0
    for _ in range(200):
        a, b = G[rng.integers(len(G))], G[rng.integers(len(G))]
        bad += not (esl_action_matrix(a @ b) == matmul_mod(esl_action_matrix(a), esl_action_matrix(b), N)).all()
    out.append(_ok(f"N={N} r-vector action is a homomorphism (200 pairs)", bad == 0))
    err = 0.0
    for _ in range(50 if N <= 5 else 10):
        g = G[rng.integers(len(G))]
        if g.det == 1:
            U, conj = clifford_unitary(g), False
        else:
            U, conj = clifford_unitary(g @ J(N)), True
        M = esl_action_matrix(g)
        for _ in range(20):
            rv = rng.integers(0, N, N + 1)
            A = phase_point_operator(rv)
            A = A.conj() if conj else A
            err = max(err, _maxabs(U @ A @ U.conj().T - phase_point_operator(M @ rv % N)))
    out.append(_ok(f"N={N} monomial action equals unitary conjugation", err < 1e-9, f"{err:.2e}"))
    C = conjugation_action_matrix(N)
    err = 0.0
    for _ in range(20):
        rv = rng.integers(0, N, N + 1)
        err = max(err, _maxabs(phase_point_operator(rv).conj() - phase_point_operator(C @ rv % N)))
    out.append(_ok(f"N={N} conjugation action equals complex conjugation", err < 1e-9, f"{err:.2e}"))
    alt = np.diag([(-1) ** k % N for k in range(N + 1)])
    Ca = alpha_action_matrix(J(N))
    out.append(_ok(f"N={N} conjugation alternates alpha signs", (Ca == alt).all()))
    want_det = N - 1 if N % 4 == 1 else 1
    out.append(_ok(f"N={N} det of conjugation on r-vectors", det_mod(C, N) == want_det))
    want_det = 1 if N % 4 == 1 else N - 1
    out.append(_ok(f"N={N} det of conjugation on planes", det_mod(plane_action_matrix(J(N)), N) == want_det))
    blocks = all(not alpha_action_matrix(g)[2:, :2].any() for g in (g1(N), g2(N)))
    out.append(_ok(f"N={N} span(e0, e1) invariant", blocks))
    Om = symplectic_form(N)
    out.append(_ok(f"N={N} form antisymmetric", ((Om.r_basis + Om.r_basis.T) % N == 0).all()))
    inv = all(
        (matmul_mod(M.T, matmul_mod(Om.r_basis, M, N), N) == Om.r_basis).all()
        for M in (sl_action_matrix(g1(N)), sl_action_matrix(g2(N)))
    )
    out.append(_ok(f"N={N} U(g1), U(g2) preserve the form", inv))
    bad = 0
    for _ in range(100):
        g = G[rng.integers(len(G))]
        P = plane_action_matrix(g)
        bad += not (matmul_mod(P.T, matmul_mod(Om.plane, P, N), N) == Om.plane * g.sdet % N).all()
        if g.det == 1:
            bad += det_mod(P, N) != 1
    out.append(_ok(f"N={N} det +1 canonical, det -1 anti-canonical on planes", bad == 0))
    B = canonical_basis_matrix(N)
    h = (N - 1) // 2
    canon = np.block([[np.zeros((h, h)), np.eye(h)], [-np.eye(h), np.zeros((h, h))]]).astype(np.int64) % N
    out.append(_ok(f"N={N} canonical symplectic basis", (matmul_mod(B.T, matmul_mod(Om.plane, B, N), N) == canon).all()))
    return out


def orbits_suite(N: int, rng=None) -> list[CheckResult]:
    out = []
    for group in ("sl", "esl"):
        by_el = burnside_count(N, group)
        by_cl = burnside_count(N, group, method="classes")
        out.append(_ok(f"N={N} {group} Burnside by elements = by classes", by_el == by_cl, f"{by_el} vs {by_cl}"))
        if N <= EXPLICIT_MAX_N:
            cat = orbit_decomposition(N, group)
            out.append(_ok(f"N={N} {group} explicit orbits = Burnside", cat.count == by_el, f"{cat.count}"))
            out.append(_ok(f"N={N} {group} orbit sizes total N^(N-1)", cat.total == N ** (N - 1)))
            order = group_order(N, group)
            out.append(_ok(f"N={N} {group} orbit sizes divide |G|", all(order % int(s) == 0 for s in cat.sizes)))
            out += class_invariance_check(N, group)
        out += structural_checks(N, group)
    return out


def spectra_suite(N: int, rng=None) -> list[CheckResult]:
    census = spectra_census(N)
    sums = max(abs(sum(s.values) - 1) for s in census.spectra)
    squares = max(abs(sum(v * v for v in s.values) - N) for s in census.spectra)
    order2 = 2 * group_order(N, "sl")
    out = [
        _ok(f"N={N} spectra sum to 1", sums < 1e-8, f"{sums:.1e}"),
        _ok(f"N={N} squared spectra sum to N", squares < 1e-7, f"{squares:.1e}"),
        _ok(f"N={N} census covers all planes", census.total == N ** (N - 1)),
        _ok(f"N={N} each spectral count divides 2|SL|", all(order2 % c == 0 for c in census.counts)),
    ]
    out += orbit_spectrum_consistency(N, census)
    rng = rng or np.random.default_rng(0)
    n_planes = N ** (N - 1)
    # every operator of a plane shares the representative's spectrum
    worst = 0.0
    for idx in rng.integers(n_planes, size=10):
        rvec = plane_representative(plane_digits(idx, N), N)
        ref = np.linalg.eigvalsh(phase_point_operator(rvec))
        for A in affine_plane_operators(rvec).values():
            worst = max(worst, _maxabs(np.linalg.eigvalsh(A) - ref))
    out.append(_ok(f"N={N} spectrum constant on 10 random planes", worst < census.tol, f"{worst:.1e}"))
    worst = 0.0
    gens = generators(N, "esl")
    for idx in rng.integers(n_planes, size=50):
        rvec = plane_representative(plane_digits(idx, N), N)
        ref = np.linalg.eigvalsh(phase_point_operator(rvec))
        for g in gens:
            img = esl_action_matrix(g) @ rvec % N
            worst = max(worst, _maxabs(np.linalg.eigvalsh(phase_point_operator(img)) - ref))
    out.append(_ok(f"N={N} spectrum invariant under g1, g2, J (50 planes)", worst < census.tol, f"{worst:.1e}"))
    worst = 0.0
    for idx in rng.integers(n_planes, size=50):
        A = phase_point_operator(plane_representative(plane_digits(idx, N), N))
        lam, V = np.linalg.eigh(A)
        worst = max(worst, float(np.linalg.norm(A @ V - V * lam, axis=0).max()))
    out.append(_ok(f"N={N} eigenpair residuals below 1e-8", worst < 1e-8, f"{worst:.1e}"))
    return out


SUITE_FUNCS = {
    "field": field_suite,
    "group": group_suite,
    "hilbert": hilbert_suite,
    "coords": coords_suite,
    "orbits": orbits_suite,
    "spectra": spectra_suite,
}

# largest N each suite accepts
SUITE_MAX_N = {"field": 19, "group": 11, "hilbert": 11, "coords": 11, "orbits": 11, "spectra": 7}


def run_suite(name: str, N: int, seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if N > SUITE_MAX_N[s]:
            out.append(CheckResult(f"suite {s}", True, f"only runs for N <= {SUITE_MAX_N[s]}", skipped=True))
            continue
        out += SUITE_FUNCS[s](N, rng)
    return out


def summarize(results) -> Counter:
    return Counter("pass" if r.passed else "fail" for r in results)
