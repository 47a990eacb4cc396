"""Exact arithmetic in GF(p^d) with a fixed primitive element and log tables.

Elements are stored by their *encoding*: the integer ``sum(c_i * p**i)``
of the coefficient vector in the polynomial basis.  The same ordering is
used everywhere a "smallest" polynomial or element is chosen, so a field is
a pure function of ``(p, d, seed)``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from ._nt import is_prime, prime_factors, units
from .errors import (DegreeTooLarge, DivisionByZero, FieldMismatch,
                     HypothesisViolated, NoIrreducibleFound, NotPrime)

MAX_ORDER = 1 << 20
CACHE_ENV = "SLCE_LAB_CACHE"


# --------------------------------------------------------------------------
# polynomials over a coefficient ring given by an ``ops`` object
# (lists of coefficients, constant term first, no trailing zeros)


class _PrimeOps:
    def __init__(self, p):
        self.p = p
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_sub(ops, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(ops.sub(x, y) for x, y in zip(a, b))


def poly_mul(ops, a, b):
    if not a or not b:
        return []
    out = [ops.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = ops.add(out[i + j], ops.mul(x, y))
    return _trim(out)


def poly_divmod(ops, a, b):
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = _trim(a)
    lead_inv = ops.inv(b[-1])
    q = [ops.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = ops.mul(a[-1], lead_inv)
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = ops.sub(a[shift + i], ops.mul(c, y))
        a = _trim(a)
    return _trim(q), a


def poly_monic(ops, a):
    a = _trim(a)
    if not a:
        return a
    c = ops.inv(a[-1])
    return [ops.mul(c, x) for x in a]


def poly_gcd(ops, a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(ops, a, b)[1]
    return poly_monic(ops, a)


def poly_deriv(ops, a):
    return _trim(ops.mul(ops.from_int(i), c) for i, c in enumerate(a) if i)


def poly_powmod(ops, base, e, mod):
    result = [ops.one]
    base = poly_divmod(ops, base, mod)[1]
    while e:
        if e & 1:
            result = poly_divmod(ops, poly_mul(ops, result, base), mod)[1]
        base = poly_divmod(ops, poly_mul(ops, base, base), mod)[1]
        e >>= 1
    return result


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    ops = _PrimeOps(p)
    f = _trim(c % p for c in f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if poly_sub(ops, poly_powmod(ops, x, p ** d, f), x):
        return False
    for r in prime_factors(d):
        h = poly_sub(ops, poly_powmod(ops, x, p ** (d // r), f), x)
        if len(poly_gcd(ops, h, f)) != 1:
            return False
    return True


def _first_irreducible(p, d):
    if d == 1:
        return (0, 1)
    for low in range(p ** d):
        coeffs = [(low // p ** i) % p for i in range(d)] + [1]
        if coeffs[0] and is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise NoIrreducibleFound(f"no irreducible of degree {d} over GF({p})")


def _digits(e, p, d):
    return [(e // p ** i) % p for i in range(d)]


def _mul_matrix(beta, modulus, p, d):
    """Matrix of x -> beta * x acting on coefficient column vectors."""
    ops = _PrimeOps(p)
    b = _trim(_digits(beta, p, d))
    mat = np.zeros((d, d), dtype=np.int64)
    for c in range(d):
        xc = [0] * c + [1]
        col = poly_divmod(ops, poly_mul(ops, b, xc), list(modulus))[1]
        for r, v in enumerate(col):
            mat[r, c] = v
    return mat


def _poly_pow_enc(beta, e, modulus, p, d):
    ops = _PrimeOps(p)
    if d == 1:
        return pow(beta, e, p)
    r = poly_powmod(ops, _trim(_digits(beta, p, d)), e, list(modulus))
    return sum(c * p ** i for i, c in enumerate(r))


def _has_full_order(beta, q, modulus, p, d):
    n = q - 1
    if _poly_pow_enc(beta, n, modulus, p, d) != 1:
        return False
    return all(_poly_pow_enc(beta, n // r, modulus, p, d) != 1 for r in prime_factors(n)) if n > 1 else True


# --------------------------------------------------------------------------
# fields and elements


class DiscreteLog(NamedTuple):
    exponent: int
    is_zero: bool


class FiniteField:
    """GF(p^d) with modulus, primitive element ``alpha`` and log tables.

    Immutable after construction; build instances with :func:`make_field`.
    """

    def __init__(self, p: int, d: int, modulus: Sequence[int], alpha: int,
                 exp_table: np.ndarray | None = None):
        self.p, self.d, self.q = p, d, p ** d
        self.modulus = tuple(int(c) for c in modulus)
        self.alpha = int(alpha)
        if exp_table is None:
            exp_table = kernels.exp_table(
                _mul_matrix(self.alpha, self.modulus, p, d), p, d, self.q - 1)
        exp_table = np.asarray(exp_table, dtype=np.int64)
        log_table = np.zeros(self.q, dtype=np.int64)
        log_table[exp_table] = np.arange(self.q - 1, dtype=np.int64)
        if len(set(exp_table.tolist())) != self.q - 1 or 0 in exp_table:
            raise HypothesisViolated(f"alpha={alpha} is not primitive in GF({self.q})")
        exp_table.setflags(write=False)
        log_table.setflags(write=False)
        self.exp_table = exp_table
        self.log_table = log_table
        self._weights = [p ** i for i in range(d)]
        self._trace = None

    # identity ----------------------------------------------------------
    def _key(self):
        return (self.p, self.d, self.modulus, self.alpha)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FiniteField(p={self.p}, d={self.d}, modulus={list(self.modulus)}, alpha={self.alpha_coeffs})"

    @property
    def alpha_coeffs(self) -> list[int]:
        return _digits(self.alpha, self.p, self.d)

    def descriptor(self) -> dict:
        return {"p": self.p, "d": self.d, "modulus": list(self.modulus),
                "alpha": self.alpha_coeffs}

    # element construction ----------------------------------------------
    def element(self, value) -> "FieldElement":
        """Element from an encoding (int) or a coefficient vector."""
        if isinstance(value, FieldElement):
            _check_same(self, value.field)
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.q:
                raise ValueError(f"encoding {v} out of range for GF({self.q})")
            return FieldElement(self, v)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.d:
            raise ValueError("too many coefficients")
        return FieldElement(self, sum(c * w for c, w in zip(coeffs, self._weights)))

    def scalar(self, n: int) -> "FieldElement":
        """The image of the integer n in the prime subfield."""
        return FieldElement(self, n % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.alpha)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, e) for e in range(self.q)]

    def power_of_alpha(self, i: int) -> "FieldElement":
        return FieldElement(self, int(self.exp_table[i % (self.q - 1)]))

    def primitive_elements(self) -> list[int]:
        """Encodings of every primitive element, ascending."""
        return sorted(int(self.exp_table[k]) for k in units(self.q - 1))

    def with_alpha(self, beta) -> "FiniteField":
        """Same modulus, different primitive element."""
        beta = self.element(beta).value
        k = int(self.log_table[beta])
        from math import gcd
        if beta == 0 or gcd(k, self.q - 1) != 1:
            raise HypothesisViolated(f"element {beta} is not primitive")
        table = self.exp_table[(k * np.arange(self.q - 1)) % (self.q - 1)]
        return FiniteField(self.p, self.d, self.modulus, beta, table.copy())

    # vectorised encoding arithmetic -------------------------------------
    def add_enc(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        out = 0
        for w in self._weights:
            out = out + (((a // w) % self.p + (b // w) % self.p) % self.p) * w
        return out

    def neg_enc(self, a):
        if self.d == 1:
            return (-a) % self.p
        out = 0
        for w in self._weights:
            out = out + ((-((a // w) % self.p)) % self.p) * w
        return out

    def sub_enc(self, a, b):
        return self.add_enc(a, self.neg_enc(b))

    def mul_enc(self, a, b):
        n = self.q - 1
        if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
            if a == 0 or b == 0:
                return 0
            return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % n])
        a, b = np.asarray(a), np.asarray(b)
        prod = self.exp_table[(self.log_table[a] + self.log_table[b]) % n]
        return np.where((a == 0) | (b == 0), 0, prod)

    def inv_enc(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    @property
    def trace_table(self) -> np.ndarray:
        """``trace_table[k] = Tr(alpha**k)`` as an integer in [0, p)."""
        if self._trace is None:
            n = self.q - 1
            k = np.arange(n, dtype=np.int64)
            acc = np.zeros(n, dtype=np.int64)
            for i in range(self.d):
                acc = self.add_enc(acc, self.exp_table[(k * self.p ** i) % n])
            acc.setflags(write=False)
            self._trace = acc
        return self._trace


class _FieldOps:
    """Adapter exposing a FiniteField's encoding arithmetic to poly helpers."""

    def __init__(self, field):
        self.field = field
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return self.field.add_enc(a, b)

    def sub(self, a, b):
        return self.field.sub_enc(a, b)

    def mul(self, a, b):
        return self.field.mul_enc(a, b)

    def inv(self, a):
        return self.field.inv_enc(a)

    def from_int(self, n):
        return n % self.field.p


def field_ops(field: FiniteField) -> _FieldOps:
    return _FieldOps(field)


def _check_same(f1, f2):
    if f1 is not f2 and f1 != f2:
        raise FieldMismatch(f"elements of {f1!r} and {f2!r} cannot be combined")


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    @property
    def coeffs(self) -> list[int]:
        return _digits(self.value, self.field.p, self.field.d)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            _check_same(self.field, other.field)
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.add_enc(self.value, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.sub_enc(self.value, o)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.sub_enc(o, self.value)))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg_enc(self.value)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul_enc(self.value, o))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_enc(self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FieldElement(self.field, self.field.inv_enc(o))

    def __pow__(self, e: int):
        base = self if e >= 0 else self.inv()
        e = abs(e)
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"GF({self.field.q})<{self.coeffs if self.field.d > 1 else self.value}>"


# functional API ------------------------------------------------------------

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def power(a: FieldElement, e: int) -> FieldElement:
    return a ** e


def dlog(x: FieldElement) -> DiscreteLog:
    """Discrete log base alpha; zero maps to 0 with ``is_zero`` set."""
    if x.value == 0:
        return DiscreteLog(0, True)
    return DiscreteLog(int(x.field.log_table[x.value]), False)


# construction -------------------------------------------------------------

def _cache_path(p, d, seed):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"gf_{p}_{d}_{seed}.npz"


def _build(p, d, seed):
    modulus = _first_irreducible(p, d)
    q = p ** d
    alpha0 = next(b for b in range(1, q) if _has_full_order(b, q, modulus, p, d))
    field = FiniteField(p, d, modulus, alpha0)
    if seed:
        prims = field.primitive_elements()
        field = field.with_alpha(prims[seed % len(prims)])
    return field


@lru_cache(maxsize=64)
def make_field(p: int, d: int = 1, seed: int | None = None) -> FiniteField:
    """Deterministic GF(p^d).

    The modulus is the first monic irreducible in encoding order; ``alpha``
    is the smallest primitive element, or with ``seed`` the element at
    index ``seed mod phi(q-1)`` among the primitive elements sorted by
    encoding.
    """
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be positive")
    if p ** d > MAX_ORDER:
        raise DegreeTooLarge(f"{p}^{d} exceeds the field-size cap {MAX_ORDER}")
    seed = int(seed or 0)
    path = _cache_path(p, d, seed)
    if path is not None and path.exists():
        with np.load(path) as z:
            return FiniteField(p, d, z["modulus"].tolist(), int(z["alpha"]), z["exp"])
    field = _build(p, d, seed)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savez(path, modulus=np.array(field.modulus), alpha=field.alpha,
                 exp=field.exp_table)
    return field


def field_of_order(q: int, seed: int | None = None) -> FiniteField:
    from ._nt import prime_power
    p, d = prime_power(q)
    return make_field(p, d, seed)


# polynomials over GF(q) -------------------------------------------------------

def _pth_root_poly(field, f):
    # Frobenius inverse on coefficients, then x**p -> x
    e = field.q // field.p
    return _trim((FieldElement(field, f[i]) ** e).value for i in range(0, len(f), field.p))


def squarefree_factorization(field: FiniteField, f: Sequence[int]) -> list[tuple[list[int], int]]:
    """Pairs (g, m) with f = prod g**m, each g squarefree and monic."""
    ops = field_ops(field)
    f = poly_monic(ops, _trim(f))
    if len(f) <= 1:
        return []
    out = []
    df = poly_deriv(ops, f)
    if df:
        c = poly_gcd(ops, f, df)
        w = poly_divmod(ops, f, c)[0]
        i = 1
        while len(w) > 1:
            y = poly_gcd(ops, w, c)
            fac = poly_divmod(ops, w, y)[0]
            if len(fac) > 1:
                out.append((fac, i))
            i += 1
            w = y
            c = poly_divmod(ops, c, y)[0]
        if len(c) > 1:
            out += [(g, m * field.p) for g, m in
                    squarefree_factorization(field, _pth_root_poly(field, c))]
    else:
        out += [(g, m * field.p) for g, m in
                squarefree_factorization(field, _pth_root_poly(field, f))]
    return out


def poly_eval(field: FiniteField, f: Sequence[int], x):
    """Evaluate f (encodings, constant first) at encodings x (vectorised)."""
    acc = np.zeros_like(np.asarray(x, dtype=np.int64))
    for c in reversed(list(f)):
        acc = field.add_enc(field.mul_enc(acc, x), c)
    return acc
