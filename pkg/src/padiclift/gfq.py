"""Exact arithmetic in F_p and its extensions F_q, q = p^n.

Elements live in the polynomial basis: an FqElem is a length-n coefficient
vector over F_p reduced modulo a fixed monic irreducible polynomial.  The
canonical field returned by fq_make uses the lexicographically smallest
irreducible modulus (coefficients compared constant term first) and the
smallest generator when coefficient vectors are read as base-p integers, so
repeated runs always build the identical field.

Fields are capped at q <= 2^20: discrete logs are table lookups and several
verification sweeps are exhaustive, so everything must fit in memory.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Q_CAP = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense little-endian coefficient lists)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmulmod(a, b, modulus, p):
    n = len(modulus) - 1
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] = (c[i + j] + ai * bj) % p
    for k in range(len(c) - 1, n - 1, -1):
        f = c[k]
        if f:
            for i in range(n + 1):
                c[k - n + i] = (c[k - n + i] - f * modulus[i]) % p
    c = c[:n]
    return c + [0] * (n - len(c))


def _ppowmod(a, e, modulus, p):
    n = len(modulus) - 1
    r = [1] + [0] * (n - 1)
    base = a[:n] + [0] * max(0, n - len(a))
    while e:
        if e & 1:
            r = _pmulmod(r, base, modulus, p)
        base = _pmulmod(base, base, modulus, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        r = a[:]
        while len(r) >= len(b):
            f = r[-1] * inv % p
            off = len(r) - len(b)
            for i in range(len(b)):
                r[off + i] = (r[off + i] - f * b[i]) % p
            _ptrim(r)
            if not r:
                break
        a, b = b, r
    return a


def _is_irreducible(modulus, p):
    """Rabin test for a monic polynomial over F_p.

    X^(p^n) must reduce to X mod the candidate, and for every prime l | n
    the candidate must share no root with X^(p^(n/l)) - X.
    """
    n = len(modulus) - 1
    if n == 1:
        return True
    x = [0, 1] + [0] * (n - 2)
    if _ppowmod(x, p**n, modulus, p) != x:
        return False
    for l in prime_factors(n):
        xp = _ppowmod(x, p ** (n // l), modulus, p)
        diff = [(u - v) % p for u, v in zip(xp, x)]
        if len(_pgcd(modulus, diff, p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------

class FqField:
    """The finite field F_{p^n} in polynomial basis.

    Immutable after construction; elements hold a reference back to it.
    The modulus is validated to be monic irreducible and the generator to
    have multiplicative order exactly q - 1.
    """

    __slots__ = ("p", "n", "q", "modulus", "generator", "_dlog", "__weakref__")

    def __init__(self, p: int, n: int, modulus, generator=None):
        if not is_prime(p):
            raise ValueError("not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**n
        if q > Q_CAP:
            raise ValueError("field too large")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not _is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.n = n
        self.q = q
        self.modulus = modulus
        self._dlog = None
        if generator is None:
            generator = self._find_generator()
        else:
            generator = self.element(generator)
            if not self._is_generator(generator):
                raise ValueError("generator does not have order q-1")
        self.generator = generator

    def _is_generator(self, g: "FqElem") -> bool:
        if g.is_zero():
            return False
        if g ** (self.q - 1) != self.one():
            return False
        return all(g ** ((self.q - 1) // l) != self.one()
                   for l in prime_factors(self.q - 1))

    def _find_generator(self) -> "FqElem":
        for k in range(1, self.q):
            g = self.from_int(k)
            if self._is_generator(g):
                return g
        raise AssertionError("no generator found")  # impossible: F_q^* is cyclic

    # -- element constructors ------------------------------------------------
    def element(self, coeffs) -> "FqElem":
        if isinstance(coeffs, FqElem):
            if coeffs.field is not self:
                raise ValueError("field mismatch")
            return coeffs
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return FqElem(self, coeffs)

    def from_int(self, k: int) -> "FqElem":
        """Element whose coefficient vector is k written in base p."""
        k %= self.q
        coeffs = []
        for _ in range(self.n):
            coeffs.append(k % self.p)
            k //= self.p
        return FqElem(self, tuple(coeffs))

    def zero(self) -> "FqElem":
        return FqElem(self, (0,) * self.n)

    def one(self) -> "FqElem":
        return FqElem(self, (1,) + (0,) * (self.n - 1))

    def elements(self):
        """All q elements, in base-p integer order."""
        for k in range(self.q):
            yield self.from_int(k)

    # -- discrete log ----------------------------------------------------
    def dlog(self, x: "FqElem") -> int:
        """Exponent e with generator^e = x; table built on first use."""
        if x.is_zero():
            raise ValueError("log of zero")
        if self._dlog is None:
            table = {}
            acc = self.one()
            for e in range(self.q - 1):
                table[acc.coeffs] = e
                acc = acc * self.generator
            self._dlog = table
        return self._dlog[x.coeffs]

    # -------------------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FqField):
            return NotImplemented
        return (self.p, self.n, self.modulus, self.generator.coeffs) == \
               (other.p, other.n, other.modulus, other.generator.coeffs)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus, self.generator.coeffs))

    def __repr__(self):
        return f"FqField(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


class FqElem:
    """An element of an FqField: immutable coefficient vector over F_p."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return self.field.element((other,) + (0,) * (self.field.n - 1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        return FqElem(f, tuple(_pmulmod(list(self.coeffs), list(o.coeffs), list(f.modulus), f.p)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        f = self.field
        if e < 0:
            return self.inverse() ** (-e)
        return FqElem(f, tuple(_ppowmod(list(self.coeffs), e, list(f.modulus), f.p)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self) -> "FqElem":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return self ** (self.field.q - 2)

    def frobenius(self) -> "FqElem":
        """x -> x^p, the generating automorphism over F_p."""
        return self ** self.field.p

    def discrete_log(self) -> int:
        return self.field.dlog(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unit(self) -> bool:
        return not self.is_zero()

    def to_int(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.coeffs))

    def __repr__(self):
        return f"FqElem({list(self.coeffs)} over F_{self.field.p}^{self.field.n})"


@lru_cache(maxsize=None)
def fq_make(p: int, n: int) -> FqField:
    """The canonical F_{p^n}: smallest irreducible modulus, smallest generator.

    Degree-1 fields use the modulus t itself, so F_p elements are plain
    residues.  Moduli are scanned in lexicographic order of
    (c_0, ..., c_{n-1}) for t^n + c_{n-1} t^{n-1} + ... + c_0.
    """
    if not is_prime(p):
        raise ValueError("not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > Q_CAP:
        raise ValueError("field too large")
    if n == 1:
        return FqField(p, 1, (0, 1))
    for tail in itertools.product(range(p), repeat=n):
        candidate = tail + (1,)
        if _is_irreducible(list(candidate), p):
            return FqField(p, n, candidate)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


def frobenius(x: FqElem) -> FqElem:
    return x.frobenius()


def discrete_log(x: FqElem) -> int:
    return x.discrete_log()
