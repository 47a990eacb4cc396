"""Periodic sequences over Z/MZ: m-sequences, Sidelnikov/SLCE sequences,
transforms, balance, shift equivalence and the L/M families."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import ceil

import numpy as np

from . import kernels
from .errors import (AlphabetMismatch, EvenCharacteristic, NotDivisor,
                     PeriodMismatch, ZeroMultiplier)
from .gf import FieldElement, FiniteField


@dataclass(frozen=True)
class Provenance:
    """Derivation tree of a sequence (finite and acyclic by construction)."""

    kind: str
    params: tuple = ()
    parents: tuple["Provenance", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple((k, _freeze(v)) for k, v in self.params))
        object.__setattr__(self, "parents", tuple(self.parents))

    def get(self, key, default=None):
        return dict(self.params).get(key, default)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "params": {k: _thaw(v) for k, v in self.params}}
        if self.parents:
            out["parents"] = [p.to_dict() for p in self.parents]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Provenance":
        params = d.get("params", {})
        return cls(d["kind"], tuple((k, _freeze(v)) for k, v in params.items()),
                   tuple(cls.from_dict(x) for x in d.get("parents", ())))

    def label(self) -> str:
        args = ",".join(f"{k}={_thaw(v)}" for k, v in self.params)
        inner = ";".join(p.label() for p in self.parents)
        return f"{self.kind}({args})" + (f"<-[{inner}]" if inner else "")


def _freeze(v):
    return tuple(v) if isinstance(v, list) else v


def _thaw(v):
    return list(v) if isinstance(v, tuple) else v


def _derived(kind, parents, **params):
    return Provenance(kind, tuple(params.items()), tuple(parents))


@dataclass(frozen=True, eq=False)
class PeriodicSequence:
    """One period of a sequence over Z/MZ.

    Equality compares terms and alphabet only; provenance and field are
    metadata.
    """

    terms: np.ndarray
    alphabet: int
    provenance: Provenance = dc_field(default=Provenance("literal"))
    field: FiniteField | None = None

    def __post_init__(self):
        t = np.array(self.terms, dtype=np.int64).ravel()
        if t.size < 1:
            raise ValueError("period must be at least 1")
        if self.alphabet < 2:
            raise ValueError("alphabet must be at least 2")
        if t.min() < 0 or t.max() >= self.alphabet:
            raise ValueError(f"terms must lie in [0, {self.alphabet - 1}]")
        t.setflags(write=False)
        object.__setattr__(self, "terms", t)

    @property
    def period(self) -> int:
        return int(self.terms.shape[0])

    def __len__(self):
        return self.period

    def __getitem__(self, i):
        return int(self.terms[i % self.period])

    def __eq__(self, other):
        return (isinstance(other, PeriodicSequence) and self.alphabet == other.alphabet
                and np.array_equal(self.terms, other.terms))

    def __hash__(self):
        return hash((self.alphabet, self.terms.tobytes()))

    def __repr__(self):
        body = "".join(map(str, self.terms[:40])) if self.alphabet <= 10 else list(self.terms[:12])
        more = "..." if self.period > 40 else ""
        return f"PeriodicSequence(M={self.alphabet}, v={self.period}, {body}{more})"

    def counts(self) -> np.ndarray:
        return np.bincount(self.terms, minlength=self.alphabet)


def _like(s, terms, prov):
    return PeriodicSequence(terms, s.alphabet, prov, s.field)


# generators ---------------------------------------------------------------

def gen_mseq(field: FiniteField, A: FieldElement | int = 1) -> PeriodicSequence:
    """m_n = Tr(A * alpha**(-n)), period q - 1 over Z/pZ."""
    A = field.element(A)
    if A.is_zero:
        raise ZeroMultiplier("the m-sequence multiplier A must be nonzero")
    n = field.q - 1
    logA = int(field.log_table[A.value])
    terms = field.trace_table[(logA - np.arange(n)) % n]
    prov = Provenance("mseq", (("p", field.p), ("d", field.d), ("A", A.coeffs),
                               ("alpha", field.alpha_coeffs)))
    return PeriodicSequence(terms, field.p, prov, field)


def sidelnikov_by_partition(field: FiniteField, M: int) -> np.ndarray:
    """Terms built literally from the partition D_0, ..., D_{M-1}."""
    n = field.q - 1
    exponent = np.arange(n)  # alpha**(M*i + k) has k = exponent mod M
    label = np.full(field.q, -1, dtype=np.int64)
    label[field.sub_enc(field.exp_table, 1)] = exponent % M
    minus_one = int(field.neg_enc(1))
    out = label[field.exp_table]
    out[field.exp_table == minus_one] = 0
    if (out < 0).any():
        raise AssertionError("D_k partition does not cover F_q* minus {-1}")
    return out


def gen_sidelnikov(field: FiniteField, M: int) -> PeriodicSequence:
    """M-ary Sidelnikov sequence: s_i = log(alpha**i + 1) mod M."""
    if field.p == 2:
        raise EvenCharacteristic("Sidelnikov sequences need odd characteristic")
    n = field.q - 1
    if M < 2 or n % M:
        raise NotDivisor(f"M={M} must be a divisor of q-1={n} with M >= 2")
    shifted = field.add_enc(field.exp_table, 1)
    terms = field.log_table[shifted] % M  # log table maps 0 -> 0
    if not np.array_equal(terms, sidelnikov_by_partition(field, M)):
        raise AssertionError("log congruence disagrees with the D_k partition")
    prov = Provenance("sidelnikov", (("p", field.p), ("d", field.d), ("M", M),
                                     ("alpha", field.alpha_coeffs)))
    return PeriodicSequence(terms, M, prov, field)


def gen_slce(field: FiniteField) -> PeriodicSequence:
    return gen_sidelnikov(field, 2)


# transforms ---------------------------------------------------------------

def decimate(s: PeriodicSequence, t: int) -> PeriodicSequence:
    """Term i of the result is s[t*i mod v]; t is normalised into [0, v)."""
    v = s.period
    t = int(t) % v
    terms = s.terms[(t * np.arange(v)) % v]
    return _like(s, terms, _derived("decimate", [s.provenance], t=t))


def shift(s: PeriodicSequence, ell: int) -> PeriodicSequence:
    """Term i of the result is s[i + ell]."""
    ell = int(ell) % s.period
    return _like(s, np.roll(s.terms, -ell), _derived("shift", [s.provenance], ell=ell))


def const_mul(c: int, s: PeriodicSequence) -> PeriodicSequence:
    c = int(c) % s.alphabet
    return _like(s, (c * s.terms) % s.alphabet, _derived("const_mul", [s.provenance], c=c))


def _check_compatible(a, b):
    if a.period != b.period:
        raise PeriodMismatch(f"periods differ: {a.period} vs {b.period}")
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {a.alphabet} vs {b.alphabet}")


def termwise_sum(a: PeriodicSequence, b: PeriodicSequence) -> PeriodicSequence:
    _check_compatible(a, b)
    return PeriodicSequence((a.terms + b.terms) % a.alphabet, a.alphabet,
                            _derived("sum", [a.provenance, b.provenance]),
                            a.field if a.field == b.field else None)


def is_balanced(s: PeriodicSequence) -> bool:
    lo, hi = s.period // s.alphabet, -(-s.period // s.alphabet)
    c = s.counts()
    return bool(((c == lo) | (c == hi)).all())


def shift_equivalent(a: PeriodicSequence, b: PeriodicSequence) -> int | None:
    """Least ell with a[i] == b[i + ell] for all i, else None."""
    _check_compatible(a, b)
    g = kernels.least_translate(a.terms, b.terms)
    return None if g < 0 else g


# families -----------------------------------------------------------------

def u_member(s: PeriodicSequence, c1: int, c2: int, r: int) -> PeriodicSequence:
    """u_{c1,c2;r}(i) = c1 s_i + c2 s_{i+r}."""
    v = s.period
    i = np.arange(v)
    terms = (c1 * s.terms + c2 * s.terms[(i + r) % v]) % s.alphabet
    return _like(s, terms, _derived("family_L", [s.provenance], c1=c1, c2=c2, r=r))


def v_member(s: PeriodicSequence, c1: int, c2: int, r: int) -> PeriodicSequence:
    """v_{c1,c2;r}(i) = c1 s_i + c2 s_{r-i}."""
    v = s.period
    i = np.arange(v)
    terms = (c1 * s.terms + c2 * s.terms[(r - i) % v]) % s.alphabet
    return _like(s, terms, _derived("family_K", [s.provenance], c1=c1, c2=c2, r=r))


def family_T(q: int) -> int:
    return ceil((q - 1) / 2)


def family_L_size(q: int, M: int) -> int:
    T = family_T(q)
    return (M - 1) ** 2 * (T - 1) + M * (M - 1) // 2


def family_M_size(q: int, M: int) -> int:
    T = family_T(q)
    return 2 * (M - 1) ** 2 * (T - 1) + 2 * (M - 1) + 3 * (M - 1) * (M - 2) // 2


def build_family_L(field: FiniteField, M: int) -> list[PeriodicSequence]:
    """u_{c1,0;0}, then u_{c1,c2;i} for 1 <= i < T, then u_{c1,c2;T} with c1 < c2."""
    s = gen_sidelnikov(field, M)
    T = family_T(field.q)
    out = [u_member(s, c1, 0, 0) for c1 in range(1, M)]
    out += [u_member(s, c1, c2, i) for i in range(1, T)
            for c1 in range(1, M) for c2 in range(1, M)]
    out += [u_member(s, c1, c2, T) for c1 in range(1, M) for c2 in range(c1 + 1, M)]
    return out


def build_family_K(field: FiniteField, M: int) -> list[PeriodicSequence]:
    """v_{0,c1;0}, then v_{c1,c2;i} for 1 <= i < T, then v_{c1,c2;T} with c1 != c2."""
    s = gen_sidelnikov(field, M)
    T = family_T(field.q)
    out = [v_member(s, 0, c1, 0) for c1 in range(1, M)]
    out += [v_member(s, c1, c2, i) for i in range(1, T)
            for c1 in range(1, M) for c2 in range(1, M)]
    out += [v_member(s, c1, c2, T) for c1 in range(1, M) for c2 in range(1, M) if c1 != c2]
    return out


def build_family_M(field: FiniteField, M: int) -> list[PeriodicSequence]:
    return build_family_K(field, M) + build_family_L(field, M)


def build_family_F1(field: FiniteField) -> list[PeriodicSequence]:
    """Decimations s[t] of the SLCE sequence by every unit t mod q - 1."""
    from ._nt import units
    s = gen_slce(field)
    return [decimate(s, t) for t in units(s.period)]
