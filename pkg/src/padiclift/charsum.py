"""Multiplicative characters, Jacobi and Gauss sums, and Fermat point counts.

Multiplicative characters are Teichmuller-valued: chi_a(x) = tau(x)^a lands
in Z_q, so Jacobi sums are computed as character convolutions at 1 in Z_q
with no auxiliary cyclotomic tower.  Gauss sums need p-th roots of unity,
which Z_p lacks; they live in the ramified ring Z_p[pi]/(pi^(p-1) + p),
where the splitting series exp(pi X) exp(-pi X^p) evaluated at Teichmuller
lifts yields a nontrivial additive character psi.  The two factor series
diverge separately at these points: only the coefficients of the product
series are integral, so evaluation must go through them.

Exponent convention: gauss_sum(a) = sum_x tau(x)^a psi(x), fixed so that
jacobi_sum(a, b) is literally the multiplicative coboundary
gauss_sum(a) gauss_sum(b) / gauss_sum(a+b); the Gross-Koblitz comparison
then evaluates the sum at the negated exponent.

Fermat counting is a dual-route check: a brute-force double loop over F_q^2
against q + sum of Jacobi sums, with the sum identified as a rational
integer through a symmetric-range lift whose precision precondition rules
out silent wraparound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import PrecisionError, TruncationError
from .gamma import gamma_p
from .gfq import FqElem, FqField, fq_make, is_prime
from .witt_zq import ZqElem, teichmuller_int, zq_ring
from .zp_ring import PAdicInt

SERIES_CAP_FACTOR = 64  # additive-character series may use at most 64*p terms


def field_for_order(q: int) -> FqField:
    """The canonical field with q = p^n elements."""
    if q < 2:
        raise ValueError("q must be a prime power")
    p = 2
    while q % p:
        p += 1
        if p * p > q:
            p = q
            break
    n = 0
    qq = q
    while qq % p == 0:
        qq //= p
        n += 1
    if qq != 1:
        raise ValueError("q must be a prime power")
    return fq_make(p, n)


# ---------------------------------------------------------------------------
# multiplicative characters and Jacobi sums

class MultChar:
    """chi_a = tau^a on F_q^*: exponent a mod (q-1) against a fixed generator.

    Evaluation at 0 is 0, for the trivial character too.
    """

    __slots__ = ("field", "exponent")

    def __init__(self, field: FqField, exponent: int):
        self.field = field
        self.exponent = exponent % (field.q - 1)

    def order(self) -> int:
        q1 = self.field.q - 1
        return q1 // math.gcd(q1, self.exponent)

    def eval(self, x: FqElem, precision: int) -> ZqElem:
        if x.field != self.field:
            raise ValueError("field mismatch")
        ring = zq_ring(self.field, precision)
        if x.is_zero():
            return ring.zero()
        return ring.teichmuller(x**self.exponent)

    def __eq__(self, other):
        if not isinstance(other, MultChar):
            return NotImplemented
        return self.field == other.field and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.field, self.exponent))

    def __repr__(self):
        return f"MultChar(exponent={self.exponent} over F_{self.field.q})"


def char_eval(chi: MultChar, x: FqElem, precision: int) -> ZqElem:
    return chi.eval(x, precision)


def char_convolution(chi: MultChar, chi2: MultChar, z: FqElem,
                     precision: int) -> ZqElem:
    """(chi * chi2)(z) = sum over x + y = z of chi(x) chi2(y), in Z_q."""
    if chi.field != chi2.field:
        raise ValueError("field mismatch")
    field = chi.field
    ring = zq_ring(field, precision)
    acc = ring.zero()
    for x in field.elements():
        y = z - x
        if x.is_zero() or y.is_zero():
            continue  # characters vanish at 0
        acc = acc + chi.eval(x, precision) * chi2.eval(y, precision)
    return acc


def jacobi_sum(a: int, b: int, field: FqField, precision: int) -> ZqElem:
    """(chi_a * chi_b)(1); the classical Jacobi sum when a, b, a+b != 0."""
    one = field.one()
    return char_convolution(MultChar(field, a), MultChar(field, b), one, precision)


# ---------------------------------------------------------------------------
# the ramified ring Z_p[pi]/(pi^(p-1) + p)

@lru_cache(maxsize=None)
def pi_ring(p: int, precision: int) -> "PiRing":
    return PiRing(p, precision)


class PiRing:
    """Z_p[pi]/(pi^(p-1) + p) truncated at coefficient modulus p^N.

    Elements are length-(p-1) vectors over Z/p^N; multiplication folds
    degrees >= p-1 down through pi^(p-1) = -p, so pi-adic valuation is
    measured in units of 1/(p-1) of the p-adic one.
    """

    def __init__(self, p: int, precision: int):
        if p == 2:
            raise ValueError("p=2 unsupported")
        if not is_prime(p):
            raise ValueError("not prime")
        if precision < 1:
            raise PrecisionError("precision must be >= 1")
        self.p = p
        self.precision = precision
        self.modulus = p**precision
        self.degree = p - 1

    def element(self, coeffs) -> "PiRingElem":
        coeffs = tuple(int(c) % self.modulus for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients")
        return PiRingElem(self, coeffs)

    def from_int(self, k: int) -> "PiRingElem":
        return self.element([k] + [0] * (self.degree - 1))

    def from_padic(self, x: PAdicInt) -> "PiRingElem":
        if x.p != self.p:
            raise ValueError("prime mismatch")
        if x.precision < self.precision:
            raise PrecisionError("scalar carries too little precision")
        return self.from_int(x.value)

    def zero(self) -> "PiRingElem":
        return self.from_int(0)

    def one(self) -> "PiRingElem":
        return self.from_int(1)

    def pi(self) -> "PiRingElem":
        return self.element([0, 1] + [0] * (self.degree - 2))

    def with_precision(self, precision: int) -> "PiRing":
        return pi_ring(self.p, precision)

    def __eq__(self, other):
        if not isinstance(other, PiRing):
            return NotImplemented
        return (self.p, self.precision) == (other.p, other.precision)

    def __hash__(self):
        return hash((self.p, self.precision))

    def __repr__(self):
        return f"PiRing(p={self.p}, N={self.precision})"


class PiRingElem:
    """sum coeffs[i] * pi^i with coefficients in Z/p^N."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PiRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, PiRingElem):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, PAdicInt):
            return self.ring.from_padic(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        mod = self.ring.modulus
        return PiRingElem(self.ring, tuple((a + b) % mod for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        mod = self.ring.modulus
        return PiRingElem(self.ring, tuple((a - b) % mod for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        mod = self.ring.modulus
        return PiRingElem(self.ring, tuple(-a % mod for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        mod = ring.modulus
        d = ring.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(o.coeffs):
                    prod[i + j] = (prod[i + j] + ai * bj) % mod
        # fold pi^(p-1) = -p; degrees stay below 2(p-1), one pass is enough
        for k in range(2 * d - 2, d - 1, -1):
            f = prod[k]
            if f:
                prod[k - d] = (prod[k - d] - ring.p * f) % mod
        return PiRingElem(ring, tuple(prod[:d]))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.unit_inverse() ** (-e)
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_unit(self) -> bool:
        return self.coeffs[0] % self.ring.p != 0

    def pi_valuation(self) -> int | None:
        """v_pi in units of 1/(p-1) of the p-adic valuation: v_pi(p) = p-1.

        The basis terms c_i pi^i have pairwise distinct valuations mod p-1,
        so the minimum over coordinates is exact.  None for the zero
        vector; values at or beyond (p-1)*N are not distinguishable from it.
        """
        best = None
        for i, c in enumerate(self.coeffs):
            if c:
                v = 0
                while c % self.ring.p == 0:
                    c //= self.ring.p
                    v += 1
                cand = i + self.ring.degree * v
                if best is None or cand < best:
                    best = cand
        return best

    def unit_inverse(self) -> "PiRingElem":
        if not self.is_unit():
            raise ValueError("not a unit")
        z = self.ring.from_int(pow(self.coeffs[0], -1, self.ring.modulus))
        one = self.ring.one()
        for _ in range(2 * self.ring.precision + 8):
            err = self * z
            if err == one:
                return z
            z = z * (2 - err)
        raise RuntimeError("inverse iteration did not stabilize")

    def div_exact_by_p(self) -> "PiRingElem":
        """Coefficient-wise exact division by p; drops one digit of precision."""
        if self.ring.precision == 1:
            raise PrecisionError("precision exhausted")
        if any(c % self.ring.p for c in self.coeffs):
            raise ValueError("not divisible")
        lower = self.ring.with_precision(self.ring.precision - 1)
        return lower.element([c // self.ring.p for c in self.coeffs])

    def truncate(self, precision: int) -> "PiRingElem":
        if not 1 <= precision <= self.ring.precision:
            raise PrecisionError("cannot truncate to that precision")
        lower = self.ring.with_precision(precision)
        return lower.element(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, PAdicInt)):
            other = self._coerce(other)
        if not isinstance(other, PiRingElem):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"PiRingElem({list(self.coeffs)} in {self.ring!r})"


# ---------------------------------------------------------------------------
# the splitting series and additive characters

@lru_cache(maxsize=None)
def _fact_parts(k: int, p: int, mod: int) -> tuple[int, int]:
    """k! = p^v * u with u a unit: returns (v, u mod p^N)."""
    if k == 0:
        return 0, 1
    v, u = _fact_parts(k - 1, p, mod)
    t = k
    while t % p == 0:
        t //= p
        v += 1
    return v, u * t % mod


@lru_cache(maxsize=None)
def _theta_coefficient(m: int, p: int, precision: int) -> "PiRingElem":
    """Degree-m coefficient of exp(pi X) exp(-pi X^p), exactly.

    The term at (i, j), i + pj = m, is (-1)^j pi^(i+j) / (i! j!).  Writing
    pi^(i+j) = pi^rem (-p)^big, the p-power big always dominates the
    factorial valuation (a digit-sum identity), so every term reduces to an
    exact ring element; failure of that inequality would mean a
    non-integral coefficient and is a hard error.
    """
    ring = pi_ring(p, precision)
    mod = ring.modulus
    d = p - 1
    acc = [0] * d
    j = 0
    while p * j <= m:
        i = m - p * j
        big, rem = divmod(i + j, d)
        vi, ui = _fact_parts(i, p, mod)
        vj, uj = _fact_parts(j, p, mod)
        v = vi + vj
        if big < v:
            raise RuntimeError("series coefficient is not integral")
        u = ui * uj % mod
        s = pow(p, big - v, mod) * pow(u, -1, mod) % mod
        if (j + big) % 2:
            s = -s % mod
        acc[rem] = (acc[rem] + s) % mod
        j += 1
    return ring.element(acc)


def dwork_theta(terms: int, p: int, precision: int) -> list[PiRingElem]:
    """Coefficients 0..terms of the splitting series, in the pi-ring."""
    if p == 2:
        raise ValueError("p=2 unsupported")
    return [_theta_coefficient(m, p, precision) for m in range(terms + 1)]


_PSI_CACHE: dict[tuple[int, int], tuple[tuple[PiRingElem, ...], int]] = {}


def _psi_table(p: int, precision: int, terms_hint: int = 0):
    """Stabilized psi(c) = theta(tau(c)) for all c in F_p.

    Partial sums are extended until two consecutive checkpoints agree AND
    psi(1) is a nontrivial p-th root of unity; the cap makes nontermination
    impossible and turns a wrong pi-convention into a loud failure.
    """
    key = (p, precision)
    cached = _PSI_CACHE.get(key)
    if cached is not None:
        return cached
    ring = pi_ring(p, precision)
    mod = ring.modulus
    cap = SERIES_CAP_FACTOR * p
    taus = [teichmuller_int(c, p, precision) for c in range(p)]
    sums = [ring.zero()] * p
    tau_pow = [1] * p
    one = ring.one()
    k = 0
    target = max(terms_hint, p)
    prev = None
    while True:
        while k <= target:
            coef = _theta_coefficient(k, p, precision)
            for c in range(p):
                sums[c] = sums[c] + coef * tau_pow[c]
                tau_pow[c] = tau_pow[c] * taus[c] % mod
            k += 1
        snapshot = tuple(sums)
        if snapshot == prev and sums[1] != one and sums[1] ** p == one:
            result = (snapshot, k - 1)
            _PSI_CACHE[key] = result
            return result
        if target >= cap:
            raise TruncationError("series truncation insufficient")
        prev = snapshot
        target = min(cap, target + p)


def additive_character(c: int, p: int, precision: int, terms: int = 0) -> PiRingElem:
    """psi(c): the splitting series evaluated at the Teichmuller lift of c.

    terms is a starting hint; the series is extended until the value is
    stable and the root-of-unity gates hold.
    """
    table, _ = _psi_table(p, precision, terms)
    return table[c % p]


def series_terms_used(p: int, precision: int, terms: int = 0) -> int:
    """How many series terms the stabilized psi table for (p, N) consumed."""
    _, used = _psi_table(p, precision, terms)
    return used


def fermat_precision(q: int, m: int) -> int:
    """Smallest N with p^N above the wraparound bound 4 m^2 q."""
    p = field_for_order(q).p
    bound = 4 * m * m * q
    precision = 1
    while p**precision <= bound:
        precision += 1
    return precision


# ---------------------------------------------------------------------------
# Gauss sums

def gauss_sum(a: int, p: int, precision: int, terms: int = 0) -> PiRingElem:
    """g(a) = sum over x in F_p^* of tau(x)^a psi(x), in the pi-ring.

    Prime-field case only.  With this exponent convention the Jacobi sum is
    exactly the multiplicative coboundary of g (see gauss_coboundary).
    """
    if p == 2:
        raise ValueError("p=2 unsupported")
    if not is_prime(p):
        raise ValueError("not prime")
    table, _ = _psi_table(p, precision, terms)
    mod = p**precision
    a %= p - 1
    acc = pi_ring(p, precision).zero()
    for x in range(1, p):
        scalar = pow(teichmuller_int(x, p, precision), a, mod)
        acc = acc + table[x] * scalar
    return acc


def gauss_coboundary(a: int, b: int, p: int, precision: int,
                     terms: int = 0) -> PiRingElem:
    """g(a) g(b) / g(a+b), returned at the requested precision.

    g(a+b) has positive pi-valuation, so there is no ring inverse; the
    exact quotient is taken through the norm relation
    g(c) g(-c) = chi_c(-1) p, spending one internal digit on the division
    by p.  The result must equal jacobi_sum(a, b) embedded in the pi-ring.
    """
    d = p - 1
    a %= d
    b %= d
    if a == 0 or b == 0 or (a + b) % d == 0:
        raise ValueError("exponents and their sum must be nonzero mod p-1")
    work = precision + 1
    ga = gauss_sum(a, p, work, terms)
    gb = gauss_sum(b, p, work, terms)
    gneg = gauss_sum(-(a + b) % d, p, work, terms)
    prod = ga * gb * gneg
    if (a + b) % 2:
        prod = -prod  # chi_{a+b}(-1) = (-1)^(a+b)
    return prod.div_exact_by_p()


@dataclass(frozen=True)
class GrossKoblitzReport:
    exponent: int
    lhs: PiRingElem
    rhs: PiRingElem
    passed: bool


def gross_koblitz_check(a: int, p: int, precision: int,
                        terms: int = 0) -> GrossKoblitzReport:
    """Check sum_x tau(x)^(-a) psi(x) = -pi^a Gamma_p(a / (p-1)).

    a/(p-1) is the p-adic integer a * (p-1)^(-1); both sides are computed
    independently (series vs product formula) and compared exactly.
    """
    d = p - 1
    if not 0 < a < d:
        raise ValueError("exponent must satisfy 0 < a < p-1")
    lhs = gauss_sum(-a % d, p, precision, terms)
    ring = pi_ring(p, precision)
    arg = PAdicInt.from_integer(a * pow(d, -1, ring.modulus), p, precision)
    rhs = -(ring.pi() ** a * ring.from_padic(gamma_p(arg)))
    return GrossKoblitzReport(a, lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# Fermat curve point counts

def count_fermat_brute(q: int, m: int) -> int:
    """Affine solutions of x^m + y^m = 1 in F_q^2, by double loop."""
    field = field_for_order(q)
    if (q - 1) % m:
        raise ValueError("m must divide q-1")
    powers = [x**m for x in field.elements()]
    one = field.one()
    count = 0
    for xm in powers:
        for ym in powers:
            if xm + ym == one:
                count += 1
    return count


def count_fermat_jacobi(q: int, m: int, precision: int = 0) -> int:
    """The same count through q + sum of Jacobi sums of order-m characters.

    The double sum is a rational integer; it is recovered from its residue
    by the symmetric-range lift, which needs p^N > 4 m^2 q so the
    archimedean bound (m-1)^2 sqrt(q) can never wrap.  Individual Jacobi
    sums need not be rational when n > 1, so the lift happens after the
    whole sum is assembled.
    """
    field = field_for_order(q)
    if (q - 1) % m:
        raise ValueError("m must divide q-1")
    p = field.p
    if precision == 0:
        precision = fermat_precision(q, m)
    if p**precision <= 4 * m * m * q:
        raise PrecisionError("cannot identify integer")
    step = (q - 1) // m
    ring = zq_ring(field, precision)
    total = ring.zero()
    for a in range(1, m):
        for b in range(1, m):
            total = total + jacobi_sum(a * step, b * step, field, precision)
    if any(c.value for c in total.coeffs[1:]):
        raise RuntimeError("Jacobi-sum total is not rational")
    v = total.coeffs[0].value
    if v > p**precision // 2:
        v -= p**precision
    return q + v
