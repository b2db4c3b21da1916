"""SL(2, Z_N) and ESL(2, Z_N): enumeration, conjugacy classes, orders.

Classification is done by the closed criteria (determinant, trace, and the
residue character of an off-diagonal entry), never by search. Conjugation
to a class representative is constructive; see :func:`standardize`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import BadDeterminant, NotConjugable
from .finite_field import (
    check_odd_prime,
    inv_mod,
    lemma2_witness,
    residue_sets,
    sqrt_minus_one,
    sqrt_mod,
)

__all__ = [
    "GroupElem",
    "ConjClassLabel",
    "enumerate_group",
    "group_order",
    "classify",
    "class_labels",
    "class_representative",
    "class_size",
    "conjugacy_classes",
    "standardize",
    "element_order",
    "count_cyclic_subgroups",
    "g1",
    "g2",
    "J",
]

SL = "sl"
ESL = "esl"


@dataclass(frozen=True)
class GroupElem:
    """The 2x2 matrix ((a, b), (c, d)) over Z_N with determinant +1 or -1.

    ``a, b, c, d`` are the entries usually written alpha, beta, gamma, delta.
    """

    a: int
    b: int
    c: int
    d: int
    N: int

    def __post_init__(self):
        n = self.N
        for f in "abcd":
            object.__setattr__(self, f, int(getattr(self, f)) % n)
        if self.det not in (1, n - 1):
            raise BadDeterminant(f"det = {self.det} mod {n} is not +-1")

    @classmethod
    def identity(cls, N: int) -> GroupElem:
        return cls(1, 0, 0, 1, N)

    @classmethod
    def from_array(cls, m, N: int) -> GroupElem:
        m = np.asarray(m)
        return cls(int(m[0, 0]), int(m[0, 1]), int(m[1, 0]), int(m[1, 1]), N)

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.N

    @property
    def sdet(self) -> int:
        """Determinant as the signed integer +1 or -1."""
        return 1 if self.det == 1 else -1

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.N

    def __matmul__(self, other: GroupElem) -> GroupElem:
        n = self.N
        return GroupElem(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            n,
        )

    def inverse(self) -> GroupElem:
        di = inv_mod(self.det, self.N)
        return GroupElem(self.d * di, -self.b * di, -self.c * di, self.a * di, self.N)

    def __pow__(self, k: int) -> GroupElem:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = GroupElem.identity(self.N)
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def apply(self, q: int, p: int) -> tuple[int, int]:
        n = self.N
        return (self.a * q + self.b * p) % n, (self.c * q + self.d * p) % n

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.int64)

    def __repr__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]] mod {self.N}"


def g1(N: int) -> GroupElem:
    return GroupElem(1, 1, 0, 1, N)


def g2(N: int) -> GroupElem:
    return GroupElem(0, 1, -1, 0, N)


def J(N: int) -> GroupElem:
    """diag(1, -1): the phase-space image of complex conjugation."""
    return GroupElem(1, 0, 0, -1, N)


def _check_group(group: str) -> str:
    if group not in (SL, ESL):
        raise ValueError(f"group must be 'sl' or 'esl', got {group!r}")
    return group


def group_order(N: int, group: str = SL) -> int:
    n = N * (N * N - 1)
    return n if _check_group(group) == SL else 2 * n


@lru_cache(maxsize=None)
def _enumerate(N: int, det_one_only: bool) -> tuple[GroupElem, ...]:
    N = check_odd_prime(N)
    dets = (1,) if det_one_only else (1, N - 1)
    out = []
    for a in range(N):
        for b in range(N):
            for c in range(N):
                for d in range(N):
                    if (a * d - b * c) % N in dets:
                        out.append(GroupElem(a, b, c, d, N))
    return tuple(out)


def enumerate_group(N: int, det_one_only: bool = True) -> list[GroupElem]:
    return list(_enumerate(N, det_one_only))


def iter_group(N: int, group: str = SL) -> Iterator[GroupElem]:
    return iter(_enumerate(N, _check_group(group) == SL))


@dataclass(frozen=True, order=True)
class ConjClassLabel:
    """Conjugacy class label.

    ``kind`` is ``"C"`` (standard), ``"Cbar"`` or ``"D"``; ``delta`` is the
    determinant as +1/-1; ``t`` is the trace in [0, N).
    """

    kind: str
    delta: int
    t: int
    group: str = SL

    def sort_key(self, N: int):
        return (self.delta % N, self.t, ("C", "Cbar", "D").index(self.kind))

    @property
    def name(self) -> str:
        if self.kind == "C" and self.group == ESL:
            return f"C_{{{self.delta},{self.t}}}"
        return f"{self.kind}_{self.t}"


def classify(F: GroupElem, group: str = SL) -> ConjClassLabel:
    group = _check_group(group)
    N = F.N
    delta = F.sdet
    if group == SL and delta != 1:
        raise BadDeterminant("det -1 element is not in SL(2)")
    t = F.trace
    if (t * t - 4 * delta) % N != 0:
        return ConjClassLabel("C", delta, t, group)
    if F.b == 0 and F.c == 0:
        return ConjClassLabel("D", delta, t, group)
    rs = residue_sets(N)
    if group == ESL and N % 4 == 3:
        return ConjClassLabel("C", delta, t, group)
    # -1 is a square when N = 1 (mod 4), so the sign of beta only matters in SL
    x = -F.b if F.b else F.c
    if rs.is_residue(x):
        return ConjClassLabel("C", delta, t, group)
    return ConjClassLabel("Cbar", delta, t, group)


def class_labels(N: int, group: str = SL) -> list[ConjClassLabel]:
    """All class labels, in (det, trace, kind) order."""
    group = _check_group(group)
    N = check_odd_prime(N)
    deltas = (1,) if group == SL else (1, -1)
    labels = [ConjClassLabel("C", dl, t, group) for dl in deltas for t in range(N)]
    extra_t = [(1, 2), (1, N - 2)]
    if group == ESL and N % 4 == 1:
        i = sqrt_minus_one(N)
        extra_t += [(-1, 2 * i % N), (-1, -2 * i % N)]
    for dl, t in extra_t:
        labels.append(ConjClassLabel("D", dl, t, group))
        if group == SL or N % 4 == 1:
            labels.append(ConjClassLabel("Cbar", dl, t, group))
    return sorted(labels, key=lambda lab: lab.sort_key(N))


def class_representative(label: ConjClassLabel, N: int) -> GroupElem:
    t, dl = label.t, label.delta
    if label.kind == "C":
        return GroupElem(0, -dl, 1, t, N)
    if label.kind == "D":
        h = t * inv_mod(2, N)
        return GroupElem(h, 0, 0, h, N)
    nu = residue_sets(N).nu
    return GroupElem(0, -t * t * inv_mod(4 * nu, N), nu, t, N)


@lru_cache(maxsize=None)
def _classes(N: int, group: str) -> dict:
    out: dict = {lab: [] for lab in class_labels(N, group)}
    for F in iter_group(N, group):
        out[classify(F, group)].append(F)
    return out


def conjugacy_classes(N: int, group: str = SL) -> dict[ConjClassLabel, list[GroupElem]]:
    """Map each class label to its elements, by exhaustive enumeration."""
    return {k: list(v) for k, v in _classes(N, _check_group(group)).items()}


def class_size(label: ConjClassLabel, N: int) -> int:
    if label.group == ESL:
        return len(_classes(N, ESL)[label])
    if label.kind == "D":
        return 1
    if label.kind == "Cbar":
        return (N * N - 1) // 2
    disc = (label.t * label.t - 4) % N
    if disc == 0:
        return (N * N - 1) // 2
    if residue_sets(N).is_residue(disc):
        return N * (N + 1)
    return N * (N - 1)


def _canonical_k(x: int, N: int) -> tuple[int, int]:
    """Return (k, u) with k = x*u^2 in {1, nu}."""
    rs = residue_sets(N)
    target = 1 if rs.is_residue(x) else rs.nu
    u = sqrt_mod(target * inv_mod(x, N), N)
    return target, u


def standardize(F: GroupElem, u: int | None = None) -> tuple[GroupElem, GroupElem]:
    """Constructively conjugate ``F`` to a standard form.

    Returns ``(S, rep)`` with ``F == S @ rep @ S.inverse()`` and
    ``det S == det F``. For trace^2 = 4*det the free scale ``u`` defaults to
    the value making ``rep`` the canonical class representative.
    """
    N = F.N
    a, b, c, d = F.a, F.b, F.c, F.d
    dl = F.det
    t = F.trace
    disc = (t * t - 4 * dl) % N
    if disc:
        k = 1
        if c == 0:
            x = (dl + b) * inv_mod(d - a, N) % N
            y = 1
        else:
            q = lemma2_witness(disc, 4 * c * dl, N)
            s = sqrt_mod(q, N)
            r = sqrt_mod(disc * q + 4 * c * dl, N)
            x = (r - s * (d - a)) * inv_mod(2 * c, N) % N
            y = s
    elif b == 0 and c == 0:
        S = GroupElem(1, 0, 0, dl, N)
        return S, F
    elif b:
        if u is None:
            k, u = _canonical_k(-b, N)
        k = -b * u * u % N
        x = 1
        y = (u * t * b + (d - a)) * inv_mod(2 * b, N) % N
    else:
        if u is None:
            k, u = _canonical_k(c, N)
        k = c * u * u % N
        x = u * a % N
        y = 0
    ki = inv_mod(k, N)
    try:
        S = GroupElem(x, (a * x + b * y) * ki, y, (c * x + d * y) * ki, N)
    except BadDeterminant as exc:
        raise NotConjugable(f"no conjugator found for {F}") from exc
    rep = GroupElem(0, -dl * ki, k, t, N)
    if S.det != dl or S @ rep @ S.inverse() != F:
        raise NotConjugable(f"conjugation check failed for {F}")
    return S, rep


def element_order(F: GroupElem) -> int:
    ident = GroupElem.identity(F.N)
    G, k = F, 1
    while G != ident:
        G = G @ F
        k += 1
    return k


def cyclic_subgroup(F: GroupElem) -> frozenset:
    ident = GroupElem.identity(F.N)
    elems = {ident}
    G = F
    while G != ident:
        elems.add(G)
        G = G @ F
    return frozenset(elems)


def count_cyclic_subgroups(N: int, order: int, det_one_only: bool = True) -> int:
    seen = set()
    for F in _enumerate(N, det_one_only):
        if element_order(F) == order:
            seen.add(cyclic_subgroup(F))
    return len(seen)


def class_orders(N: int, group: str = SL) -> dict[ConjClassLabel, int]:
    return {lab: element_order(class_representative(lab, N)) for lab in class_labels(N, group)}


def class_size_census(N: int, group: str = SL) -> Counter:
    return Counter({lab: len(v) for lab, v in _classes(N, _check_group(group)).items()})
