"""Exact arithmetic in Z[zeta_n], multiplicative characters on GF(q),
Jacobi sums K(chi) and Stickelberger exponents."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable

import numpy as np

from ._nt import divisors, mult_order, phi, units
from .errors import (HypothesisViolated, NonIntegerNorm, NotDivisor, NotUnit,
                     TrivialCharacter, WrongOrder)
from .gf import FiniteField

_SAFE = 1 << 62


# cyclotomic polynomials ---------------------------------------------------

def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num[:len(den) - 1]):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            num = _poly_exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def reduce_coeffs(c: np.ndarray, n: int) -> np.ndarray:
    """Reduce coefficient rows (last axis, length >= phi(n)) modulo Phi_n."""
    c = np.array(c, copy=True)
    f = np.array(cyclotomic_poly(n), dtype=np.int64)
    m = f.shape[0] - 1
    if c.dtype != object:
        c = c.astype(np.int64)
    for i in range(c.shape[-1] - 1, m - 1, -1):
        lead = c[..., i]
        if c.ndim == 1:
            if lead:
                c[i - m:i] -= lead * f[:m]
        else:
            c[..., i - m:i] -= lead[..., None] * f[:m]
    return c[..., :m]


def _fold(c: np.ndarray, n: int) -> np.ndarray:
    """Fold a linear convolution back modulo x**n - 1."""
    out = c[:n].copy()
    out[:c.shape[0] - n] += c[n:]
    return out


def _mul_coeffs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ma = int(np.abs(a).max()) if a.size else 0
    mb = int(np.abs(b).max()) if b.size else 0
    if a.dtype == object or b.dtype == object or ma * mb * min(a.size, b.size) >= _SAFE:
        return np.convolve(a.astype(object), b.astype(object))
    return np.convolve(a, b)


# CycInt -------------------------------------------------------------------

class CycInt:
    """sum(c[i] * zeta_n**i) with a redundant length-n coefficient vector.

    Equality goes through the canonical form modulo Phi_n, which is exact.
    Values are immutable and unhashable (the redundant vector is not
    canonical).
    """

    __slots__ = ("n", "c")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, n: int, coeffs: Iterable[int] | np.ndarray):
        n = int(n)
        if n < 1:
            raise ValueError("order must be positive")
        c = np.asarray(coeffs)
        if c.dtype != object:
            c = c.astype(np.int64)
        if c.shape != (n,):
            raise ValueError(f"expected {n} coefficients, got shape {c.shape}")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", c)

    def __setattr__(self, *_):
        raise AttributeError("CycInt is immutable")

    # constructors
    @classmethod
    def from_int(cls, n: int, x: int) -> "CycInt":
        c = np.zeros(n, dtype=object if abs(x) >= _SAFE else np.int64)
        c[0] = x
        return cls(n, c)

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "CycInt":
        c = np.zeros(n, dtype=np.int64)
        c[e % n] = 1
        return cls(n, c)

    @classmethod
    def from_exponent_counts(cls, n: int, counts) -> "CycInt":
        return cls(n, np.asarray(counts))

    # lifting and coercion
    def lift(self, m: int) -> "CycInt":
        if m % self.n:
            raise ValueError(f"cannot lift order {self.n} into order {m}")
        c = np.zeros(m, dtype=self.c.dtype)
        c[np.arange(self.n) * (m // self.n)] = self.c
        return CycInt(m, c)

    def _coerce(self, other):
        if isinstance(other, CycInt):
            m = lcm(self.n, other.n)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, np.integer)):
            return self, CycInt.from_int(self.n, int(other))
        return None

    # ring operations
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.c.dtype == object or b.c.dtype == object or \
                max(_absmax(a.c), _absmax(b.c)) >= _SAFE // 2:
            return CycInt(a.n, a.c.astype(object) + b.c.astype(object))
        return CycInt(a.n, a.c + b.c)

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, -self.c)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycInt(a.n, _fold(_mul_coeffs(a.c, b.c), a.n))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not cyclotomic integers in general")
        result = CycInt.from_int(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison
    def canonical(self) -> tuple[int, ...]:
        """Coordinates in the power basis 1, zeta, ..., zeta**(phi(n)-1)."""
        return tuple(int(x) for x in reduce_coeffs(self.c, self.n))

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return not any(reduce_coeffs(a.c.astype(object) - b.c.astype(object)
                                     if a.c.dtype == object or b.c.dtype == object
                                     else a.c - b.c, a.n))

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def is_integer(self) -> bool:
        return not any(self.canonical()[1:])

    def to_int(self) -> int:
        canon = self.canonical()
        if any(canon[1:]):
            raise ValueError(f"{self!r} is not a rational integer")
        return canon[0]

    # Galois action
    def galois(self, j: int) -> "CycInt":
        """sigma_j: zeta -> zeta**j."""
        if gcd(int(j), self.n) != 1:
            raise NotUnit(f"{j} is not a unit modulo {self.n}")
        idx = (np.arange(self.n) * int(j)) % self.n
        c = np.zeros(self.n, dtype=self.c.dtype)
        c[idx] = self.c  # a unit permutes the exponents
        return CycInt(self.n, c)

    def conj(self) -> "CycInt":
        return self.galois(self.n - 1)

    def embed(self, j: int = 1) -> complex:
        w = np.exp(2j * np.pi * ((np.arange(self.n) * j) % self.n) / self.n)
        return complex(np.dot(self.c.astype(float), w))

    # norms
    def norm(self, m: int | None = None):
        """Absolute norm (an int), or the relative norm down to Q(zeta_m)."""
        if m is not None:
            return self.relative_norm(m)
        prod = _reduced_product(self, units(self.n))
        if any(prod[1:]):
            raise NonIntegerNorm(f"norm of {self!r} reduced to {prod}")
        return int(prod[0])

    def relative_norm(self, m: int) -> "CycInt":
        if self.n % m:
            raise NotDivisor(f"{m} does not divide {self.n}")
        js = [j for j in units(self.n) if (j - 1) % m == 0]
        prod = _reduced_product(self, js)
        c = np.zeros(self.n, dtype=object)
        c[:len(prod)] = prod
        return CycInt(self.n, c)

    def exact_div(self, other: "CycInt") -> "CycInt | None":
        """The quotient self/other if it lies in Z[zeta], else None."""
        a, b = self._coerce(other)
        js = [j for j in units(a.n) if j != 1]
        cof = _reduced_product(b, js)
        nb = _reduced_mul(reduce_coeffs(b.c.astype(object), b.n), cof, b.n)
        if any(nb[1:]):
            raise NonIntegerNorm("norm of the divisor is not rational")
        N = int(nb[0])
        if N == 0:
            raise ZeroDivisionError("division by zero in Z[zeta]")
        num = _reduced_mul(reduce_coeffs(a.c.astype(object), a.n), cof, a.n)
        if any(int(x) % N for x in num):
            return None
        c = np.zeros(a.n, dtype=object)
        c[:len(num)] = [int(x) // N for x in num]
        return CycInt(a.n, c)

    def divides(self, other: "CycInt") -> bool:
        return other.exact_div(self) is not None

    # serialisation
    def to_dict(self) -> dict:
        return {"order": self.n, "coeffs": list(self.canonical())}

    @classmethod
    def from_dict(cls, d: dict) -> "CycInt":
        n = int(d["order"])
        c = np.zeros(n, dtype=object)
        coeffs = d["coeffs"]
        c[:len(coeffs)] = [int(x) for x in coeffs]
        return cls(n, c)

    def __repr__(self):
        terms = []
        for i, x in enumerate(self.canonical()):
            if x:
                terms.append(str(x) if i == 0 else f"{x}*z{self.n}^{i}")
        return f"CycInt({' + '.join(terms) or '0'})"


def _absmax(c):
    return int(np.abs(c).max()) if c.size else 0


def _reduced_mul(a, b, n):
    return reduce_coeffs(np.convolve(np.asarray(a, dtype=object),
                                     np.asarray(b, dtype=object)), n)


def _reduced_product(x: CycInt, js) -> np.ndarray:
    """prod over j in js of sigma_j(x), in the reduced basis with Python ints."""
    acc = np.zeros(max(1, phi(x.n)), dtype=object)
    acc[0] = 1
    for j in js:
        acc = _reduced_mul(acc, reduce_coeffs(x.galois(j).c.astype(object), x.n), x.n)
    return acc


def cyc_add(a, b):
    return a + b


def cyc_mul(a, b):
    return a * b


def cyc_neg(a):
    return -a


def galois(a: CycInt, j: int) -> CycInt:
    return a.galois(j)


def norm(a: CycInt, m: int | None = None):
    return a.norm(m)


def embed(a: CycInt, j: int = 1) -> complex:
    return a.embed(j)


# characters ---------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """chi(alpha**j) = zeta_k**(u*j), with chi(0) = zero_value."""

    field: FiniteField
    k: int
    u: int = 1
    zero_value: int = 0

    def __post_init__(self):
        n = self.field.q - 1
        if self.k < 1 or n % self.k:
            raise NotDivisor(f"order {self.k} does not divide q-1={n}")
        if gcd(self.u, self.k) != 1:
            raise NotUnit(f"u={self.u} is not a unit modulo {self.k}")
        if self.zero_value not in (0, 1):
            raise ValueError("zero_value must be 0 or 1")
        object.__setattr__(self, "u", self.u % self.k if self.k > 1 else 0)

    @property
    def is_trivial(self) -> bool:
        return self.k == 1

    def exponents(self, enc) -> np.ndarray:
        """Exponent e with chi(x) = zeta_k**e for each encoding; -1 at zero."""
        enc = np.asarray(enc, dtype=np.int64)
        e = (self.field.log_table[enc] * self.u) % self.k
        return np.where(enc == 0, -1, e)

    def __call__(self, x) -> CycInt:
        return char_eval(self, x)

    def __pow__(self, t: int) -> "Character":
        t = int(t) % self.k if self.k > 1 else 0
        g = gcd(t, self.k)
        k2 = self.k // g
        return Character(self.field, k2, (self.u * (t // g)) % k2 if k2 > 1 else 1,
                         self.zero_value)

    def descriptor(self) -> dict:
        return {"p": self.field.p, "d": self.field.d, "k": self.k, "u": self.u,
                "zero_value": self.zero_value}


def make_character(field: FiniteField, k: int, u: int = 1, zero_value: int = 0) -> Character:
    return Character(field, k, u, zero_value)


def teichmuller(field: FiniteField, zero_value: int = 0) -> Character:
    """The order q-1 character sending alpha to zeta_{q-1}."""
    return Character(field, field.q - 1, 1, zero_value)


def char_eval(chi: Character, x) -> CycInt:
    x = chi.field.element(x)
    if x.is_zero:
        return CycInt.from_int(chi.k, chi.zero_value)
    return CycInt.zeta(chi.k, int(chi.exponents(x.value)))


def all_characters(field: FiniteField, zero_value: int = 0) -> list[Character]:
    """Every nontrivial character, one per power of the Teichmuller one."""
    n = field.q - 1
    return [teichmuller(field, zero_value) ** t for t in range(1, n)]


def jacobi_K(chi: Character) -> CycInt:
    """K(chi) = chi(4) * sum over x of chi(x) chi(1 - x)."""
    if chi.is_trivial:
        raise TrivialCharacter("K(chi) needs a nontrivial character")
    if chi.zero_value != 0:
        raise HypothesisViolated("K(chi) is defined with chi(0) = 0")
    F = chi.field
    x = np.arange(2, F.q)  # encodings 0 and 1 are the field's 0 and 1
    one_minus = F.sub_enc(1, x)
    e = (chi.exponents(x) + chi.exponents(one_minus)) % chi.k
    shift = int(chi.exponents(F.scalar(4).value))
    counts = np.bincount((e + shift) % chi.k, minlength=chi.k)
    return CycInt(chi.k, counts)


def congruence_check(chi: Character) -> bool:
    """Is K(chi) + q divisible by 2(1 - zeta_k) in Z[zeta_k]?"""
    K = jacobi_K(chi)
    divisor = 2 * (1 - CycInt.zeta(chi.k))
    return (K + chi.field.q).exact_div(divisor) is not None


def slce_character_identity(field: FiniteField, chi: Character) -> bool:
    """Check 2 chi(S^c) == chi(-1) (K(chi) + 1) exactly."""
    from . import seq

    if chi.is_trivial:
        raise TrivialCharacter("the identity needs a nontrivial character")
    if chi.zero_value != 0:
        raise HypothesisViolated("the identity is stated for chi(0) = 0")
    s = seq.gen_slce(field)
    comp = np.flatnonzero(s.terms == 0)
    e = chi.exponents(field.exp_table[comp])
    lhs = CycInt(chi.k, 2 * np.bincount(e, minlength=chi.k))
    rhs = char_eval(chi, field.neg_enc(1)) * (jacobi_K(chi) + 1)
    return lhs == rhs


# Stickelberger ------------------------------------------------------------

def coset_reps(p: int, k: int) -> list[int]:
    """Smallest member of each coset of <p> in (Z/kZ)*."""
    seen, reps = set(), []
    for j in units(k):
        if j in seen:
            continue
        reps.append(j)
        x = j
        while x not in seen:
            seen.add(x)
            x = (x * p) % k
    return reps


def _floor_term(x: int, k: int) -> int:
    return (2 * x) // k - 2 * (x // k)


def _remainder_term(x: int, k: int) -> int:
    return 1 if 2 * (x % k) > k else 0


def stickelberger_exponent(j: int, p: int, d: int, k: int, rule: str = "floor") -> int:
    term = _floor_term if rule == "floor" else _remainder_term
    jp = j % k or k  # least positive representative
    return d - sum(term(jp * pow(p, i, k), k) for i in range(d))


def stickelberger_exponents(p: int, d: int, k: int, check: bool = True) -> dict[int, int]:
    """e_j for each canonical coset representative j of <p> mod k."""
    if k % p == 0:
        raise NotDivisor(f"p={p} divides k={k}")
    if k > 1 and mult_order(p, k) != d:
        raise WrongOrder(f"order of {p} mod {k} is {mult_order(p, k)}, not {d}")
    out = {j: stickelberger_exponent(j, p, d, k) for j in coset_reps(p, k)}
    if check and k > 2:
        alt = {j: stickelberger_exponent(j, p, d, k, "remainder") for j in out}
        if alt != out:
            raise AssertionError(f"floor and remainder rules disagree for p={p}, k={k}")
    return out


def stickelberger_norm_exponent(p: int, d: int, k: int) -> int:
    """Exponent of p in N(K(chi)) for chi of order k on GF(p**d).

    When the order d0 of p mod k is a proper divisor of d the character
    factors through the norm to GF(p**d0), and K(chi) is +-K(chi0)**(d/d0).
    """
    d0 = mult_order(p, k)
    if d % d0:
        raise WrongOrder(f"k={k} does not divide p**{d} - 1")
    return d * sum(stickelberger_exponents(p, d0, k).values())


def representation_counts(field: FiniteField) -> np.ndarray:
    """How often each encoding arises as x(1 - x) with x nonzero."""
    x = np.arange(1, field.q)
    vals = field.mul_enc(x, field.sub_enc(1, x))
    return np.bincount(vals, minlength=field.q)
