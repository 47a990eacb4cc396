"""Residue-set combinatorics in Z/vZ: difference functions, (almost)
difference sets, decimation, multipliers and Fourier inversion."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Iterable, Union

import numpy as np

from . import kernels
from ._nt import units
from .errors import AlphabetMismatch, NotUnit, TooLarge
from .seq import PeriodicSequence, Provenance

BRUTE_LIMIT = 1 << 14


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z/vZ, stored as strictly increasing residues."""

    modulus: int
    members: tuple[int, ...] = ()

    def __init__(self, modulus: int, members: Iterable[int] = ()):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "modulus", int(modulus))
        object.__setattr__(self, "members",
                           tuple(sorted({int(x) % modulus for x in members})))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return int(x) % self.modulus in self.members

    def indicator(self) -> np.ndarray:
        ind = np.zeros(self.modulus, dtype=np.int64)
        ind[list(self.members)] = 1
        return ind

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.modulus, set(range(self.modulus)) - set(self.members))

    def translate(self, g: int) -> "ResidueSet":
        return ResidueSet(self.modulus, (x + g for x in self.members))

    def scale(self, t: int) -> "ResidueSet":
        return ResidueSet(self.modulus, (x * t for x in self.members))

    def __repr__(self):
        return f"ResidueSet(v={self.modulus}, {set(self.members) or '{}'})"


def characteristic_set(s: PeriodicSequence) -> ResidueSet:
    if s.alphabet != 2:
        raise AlphabetMismatch("characteristic sets need a binary sequence")
    return ResidueSet(s.period, np.flatnonzero(s.terms).tolist())


def characteristic_sequence(A: ResidueSet) -> PeriodicSequence:
    return PeriodicSequence(A.indicator(), 2, Provenance("characteristic", (("v", A.modulus),)))


def difference_function(A: ResidueSet) -> np.ndarray:
    """``counts[x] = #{(y1, y2) in A^2 : y1 - y2 = x}``; ``counts[0] == |A|``."""
    a = np.array(A.members, dtype=np.int64)
    return np.bincount(((a[:, None] - a[None, :]) % A.modulus).ravel(),
                       minlength=A.modulus)


@dataclass(frozen=True)
class DifferenceSetParams:
    v: int
    k: int
    lam: int


@dataclass(frozen=True)
class AdsParams:
    v: int
    k: int
    lam: int
    r: int
    special: ResidueSet


@dataclass(frozen=True)
class Neither:
    v: int
    k: int


Classification = Union[DifferenceSetParams, AdsParams, Neither]


def classify(A: ResidueSet) -> Classification:
    """Difference set, almost difference set, or neither.

    A set whose nonzero differences are all equal is reported as a
    difference set, never as a degenerate almost difference set.
    """
    from .corr import correlation

    v, k = A.modulus, len(A)
    counts = difference_function(A)[1:]
    values = sorted(set(counts.tolist()))
    if len(values) <= 1:
        lam = values[0] if values else 0
        result: Classification = DifferenceSetParams(v, k, lam)
        expected = np.full(v, v - 4 * (k - lam))
    elif len(values) == 2 and values[1] == values[0] + 1:
        lam = values[0]
        R = ResidueSet(v, (np.flatnonzero(counts == lam) + 1).tolist())
        result = AdsParams(v, k, lam, len(R), R)
        expected = np.full(v, v - 4 * (k - lam - 1))
        expected[list(R.members)] = v - 4 * (k - lam)
    else:
        return Neither(v, k)
    expected[0] = v
    seq = characteristic_sequence(A)
    got = correlation(seq, seq).integer_values()
    if not np.array_equal(got, expected):
        raise AssertionError(f"autocorrelation of {A} disagrees with its design parameters")
    return result


def _require_unit(t, v):
    if gcd(int(t), v) != 1:
        raise NotUnit(f"{t} is not a unit modulo {v}")


def decimate_set(A: ResidueSet, t: int) -> ResidueSet:
    """A^(t) = {t*a mod v}; matches the sequence decimation by t^-1."""
    _require_unit(t, A.modulus)
    return A.scale(t)


def translate_witness(A: ResidueSet, B: ResidueSet) -> int | None:
    """Least g with B == g + A, or None."""
    if A.modulus != B.modulus or len(A) != len(B):
        return None
    g = kernels.least_translate(A.indicator(), B.indicator())
    return None if g < 0 else g


def is_multiplier(A: ResidueSet, t: int) -> bool:
    return translate_witness(A, decimate_set(A, t)) is not None


def is_strong_multiplier(A: ResidueSet, t: int) -> bool:
    return decimate_set(A, t) == A


@dataclass(frozen=True)
class Evidence:
    t: int
    verdict: str  # "multiplier" | "not_multiplier"
    witness: int | None = None
    method: str | None = None

    def to_dict(self) -> dict:
        out = {"t": self.t, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.method is not None:
            out["method"] = self.method
        return out


@dataclass(frozen=True)
class MultiplierReport:
    v: int
    group: tuple[int, ...]
    strong: tuple[int, ...]
    evidence: tuple[Evidence, ...] = dc_field(default=())

    def to_dict(self) -> dict:
        return {"v": self.v, "group": list(self.group), "strong": list(self.strong),
                "evidence": [e.to_dict() for e in self.evidence]}


def _check_size(A):
    if A.modulus > BRUTE_LIMIT:
        raise TooLarge(f"v={A.modulus} exceeds the brute-force limit {BRUTE_LIMIT}")


def strong_multiplier_group_brute(A: ResidueSet) -> tuple[int, ...]:
    _check_size(A)
    return tuple(t for t in units(A.modulus) if A.scale(t) == A)


def multiplier_group_brute(A: ResidueSet) -> MultiplierReport:
    """Exhaustive search over every unit t and every translate g."""
    _check_size(A)
    v = A.modulus
    src = A.indicator()
    group, evidence = [], []
    for t in units(v):
        g = kernels.least_translate(src, A.scale(t).indicator())
        if g >= 0:
            group.append(t)
            evidence.append(Evidence(t, "multiplier", witness=g))
        else:
            evidence.append(Evidence(t, "not_multiplier", method="brute"))
    return MultiplierReport(v, tuple(group), strong_multiplier_group_brute(A), tuple(evidence))


def inversion_check(A: ResidueSet) -> bool:
    """Recover the indicator of A from its character values, exactly.

    For every h the sum over characters chi_j(A) chi_j(-h) is built as an
    element of Z[zeta_v] and reduced modulo the v-th cyclotomic polynomial;
    it must equal v times the coefficient of h.
    """
    from .cyclo import reduce_coeffs

    v = A.modulus
    if v > 256:
        raise TooLarge("inversion check is limited to v <= 256")
    a = np.array(A.members, dtype=np.int64)
    j = np.arange(v)
    rows = np.zeros((v, v), dtype=np.int64)
    for h in range(v):
        expo = (j[:, None] * (a[None, :] - h)) % v
        rows[h] = np.bincount(expo.ravel(), minlength=v)
    canon = reduce_coeffs(rows, v)
    if canon.shape[1] > 1 and canon[:, 1:].any():
        return False
    return bool(np.array_equal(canon[:, 0], v * A.indicator()))
