"""Truncated unramified extensions Z_q = W(F_q) mod p^N.

A ZqRing is (Z/p^N)[t] modulo the trivially lifted field modulus, so ring
arithmetic is plain polynomial arithmetic over PAdicInt coefficients.  The
Witt-vector structure is recovered on top of it: teichmuller computes the
unique root-of-unity lift by q-power iteration, teich_digits peels an
element into its Teichmuller digit expansion x = sum tau(x_i) p^i, and
frobenius_lift transports Frobenius digit-wise through that expansion,
which makes it a ring endomorphism reducing to x -> x^p mod p.

Canonical text form (CLI interchange): "p=3;n=2;N=4;coeffs=[1,0,2,1|0,0,1,2]"
with one little-endian digit vector per polynomial coefficient.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import PrecisionError
from .gfq import FqElem, FqField, fq_make
from .zp_ring import PAdicInt, int_exact


@lru_cache(maxsize=None)
def zq_ring(field: FqField, precision: int) -> "ZqRing":
    """Cached ring constructor; reuse gives one Teichmuller table per ring."""
    return ZqRing(field, precision)


class ZqRing:
    """(Z/p^N)[t] / (lifted modulus), polynomial basis over PAdicInt."""

    def __init__(self, field: FqField, precision: int):
        if precision < 1:
            raise PrecisionError("precision must be >= 1")
        self.field = field
        self.precision = precision
        self.p = field.p
        self.n = field.n
        self.lifted_modulus = tuple(
            PAdicInt.from_integer(c, field.p, precision) for c in field.modulus
        )
        self._teich: dict[tuple, ZqElem] = {}
        # reductions of t^k, n <= k <= 2n-2, used by polynomial multiplication
        self._tpow: list[tuple[PAdicInt, ...]] = []
        mod = field.p**precision
        if field.n > 1:
            # t^n = -(lower modulus coefficients)
            coeffs = [(-c) % mod for c in field.modulus[:-1]]
            self._tpow.append(tuple(PAdicInt.from_integer(c, field.p, precision) for c in coeffs))
            for _ in range(field.n - 2):
                coeffs = self._shift_reduce(coeffs, mod)
                self._tpow.append(tuple(PAdicInt.from_integer(c, field.p, precision) for c in coeffs))

    def _shift_reduce(self, coeffs, mod):
        top = coeffs[-1]
        shifted = [0] + coeffs[:-1]
        if top:
            for i, c in enumerate(self.field.modulus[:-1]):
                shifted[i] = (shifted[i] - top * c) % mod
        return shifted

    # -- constructors ------------------------------------------------------
    def element(self, coeffs) -> "ZqElem":
        out = []
        for c in coeffs:
            if isinstance(c, PAdicInt):
                if c.p != self.p:
                    raise ValueError("prime mismatch")
                if c.precision != self.precision:
                    raise PrecisionError("coefficient precision does not match ring")
                out.append(c)
            else:
                out.append(PAdicInt.from_integer(int(c), self.p, self.precision))
        if len(out) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(out)}")
        return ZqElem(self, tuple(out))

    def from_int(self, k: int) -> "ZqElem":
        return self.element([k] + [0] * (self.n - 1))

    def zero(self) -> "ZqElem":
        return self.from_int(0)

    def one(self) -> "ZqElem":
        return self.from_int(1)

    def naive_lift(self, v: FqElem) -> "ZqElem":
        """Coefficient-wise lift of a field element, digits re-read mod p^N."""
        if v.field != self.field:
            raise ValueError("field mismatch")
        return self.element(list(v.coeffs))

    def with_precision(self, precision: int) -> "ZqRing":
        return zq_ring(self.field, precision)

    # -- Teichmuller --------------------------------------------------------
    def teichmuller(self, v: FqElem) -> "ZqElem":
        """The unique lift t of v with t^q = t, by q-power iteration.

        Each iteration gains at least one digit of agreement with the fixed
        point, so N iterations suffice; the cap guards against bugs only.
        """
        if v.field != self.field:
            raise ValueError("field mismatch")
        cached = self._teich.get(v.coeffs)
        if cached is not None:
            return cached
        q = self.field.q
        x = self.naive_lift(v)
        for _ in range(self.precision + 2):
            nxt = x**q
            if nxt == x:
                break
            x = nxt
        else:
            raise RuntimeError("Teichmuller iteration did not stabilize")
        self._teich[v.coeffs] = x
        return x

    def __eq__(self, other):
        if not isinstance(other, ZqRing):
            return NotImplemented
        return self.field == other.field and self.precision == other.precision

    def __hash__(self):
        return hash((self.field, self.precision))

    def __repr__(self):
        return f"ZqRing(q={self.field.q}, N={self.precision})"


class ZqElem:
    """Element of a ZqRing: length-n vector of PAdicInt at ring precision."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: ZqRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ZqElem):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, PAdicInt)):
            k = other.value if isinstance(other, PAdicInt) else other
            return self.ring.from_int(k)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ZqElem(self.ring, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ZqElem(self.ring, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ZqElem(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        n = ring.n
        if n == 1:
            return ZqElem(ring, (self.coeffs[0] * o.coeffs[0],))
        mod = ring.p**ring.precision
        a = [c.value for c in self.coeffs]
        b = [c.value for c in o.coeffs]
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % mod
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            f = prod[k]
            if f:
                red = ring._tpow[k - n]
                for i in range(n):
                    out[i] = (out[i] + f * red[i].value) % mod
        return ring.element(out)

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

    # -- structure ----------------------------------------------------------
    def reduce_mod_p(self) -> FqElem:
        return self.ring.field.element([c.digits[0] for c in self.coeffs])

    def is_unit(self) -> bool:
        return not self.reduce_mod_p().is_zero()

    def unit_inverse(self) -> "ZqElem":
        """Newton/Hensel lift of the residue-field inverse."""
        if not self.is_unit():
            raise ValueError("not a unit")
        z = self.ring.naive_lift(self.reduce_mod_p().inverse())
        one = self.ring.one()
        for _ in range(self.ring.precision + 2):
            err = self * z
            if err == one:
                return z
            z = z * (2 - err)
        raise RuntimeError("inverse iteration did not stabilize")

    def div_exact_by_p(self) -> "ZqElem":
        """Coefficient-wise exact division by p; drops one digit of precision."""
        if self.ring.precision == 1:
            raise PrecisionError("precision exhausted")
        lower = self.ring.with_precision(self.ring.precision - 1)
        return lower.element([c.div_exact_by_p() for c in self.coeffs])

    def truncate(self, precision: int) -> "ZqElem":
        ring = self.ring.with_precision(precision)
        return ring.element([c.truncate(precision) for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, ZqElem):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        vals = [c.value for c in self.coeffs]
        return f"ZqElem({vals} in {self.ring!r})"

    def to_text(self) -> str:
        blocks = "|".join(",".join(str(d) for d in c.digits) for c in self.coeffs)
        return f"p={self.ring.p};n={self.ring.n};N={self.ring.precision};coeffs=[{blocks}]"


def parse_zq(text: str) -> ZqElem:
    """Parse "p=3;n=2;N=4;coeffs=[...|...]" against the canonical field."""
    parts = text.strip().split(";")
    if len(parts) != 4:
        raise ValueError("expected four ';'-separated fields")
    fields = {}
    for part in parts:
        key, eq, val = part.partition("=")
        if not eq:
            raise ValueError(f"malformed field {part!r}")
        fields[key] = val
    if set(fields) != {"p", "n", "N", "coeffs"}:
        raise ValueError("expected fields p, n, N, coeffs")
    p = int_exact(fields["p"])
    n = int_exact(fields["n"])
    prec = int_exact(fields["N"])
    raw = fields["coeffs"]
    if not (raw.startswith("[") and raw.endswith("]")):
        raise ValueError("coeffs must be bracketed")
    ring = zq_ring(fq_make(p, n), prec)
    coeffs = []
    for block in raw[1:-1].split("|"):
        digits = [int_exact(d) for d in block.split(",")]
        if len(digits) != prec:
            raise ValueError("digit count does not match N")
        coeffs.append(PAdicInt(p, digits))
    return ring.element(coeffs)


# ---------------------------------------------------------------------------
# module-level operation surface

def teichmuller(v: FqElem, precision: int) -> ZqElem:
    return zq_ring(v.field, precision).teichmuller(v)


def teichmuller_int(c: int, p: int, precision: int) -> int:
    """tau of a prime-field residue as a plain integer mod p^N."""
    mod = p**precision
    x = c % mod
    for _ in range(precision + 2):
        nxt = pow(x, p, mod)
        if nxt == x:
            return x
        x = nxt
    raise RuntimeError("Teichmuller iteration did not stabilize")


def reduce_mod_p(x: ZqElem) -> FqElem:
    return x.reduce_mod_p()


def teich_digits(x: ZqElem) -> list[FqElem]:
    """Greedy Teichmuller digit expansion, length N.

    Digit i is the reduction of the current remainder; subtracting its
    Teichmuller lift makes the remainder divisible by p exactly, and the
    division pays one digit of precision, which is why digit i only needs
    the ring at precision N - i.
    """
    ring = x.ring
    digits = []
    cur = x
    for i in range(ring.precision):
        v = cur.reduce_mod_p()
        digits.append(v)
        if i < ring.precision - 1:
            tau = cur.ring.teichmuller(v)
            cur = (cur - tau).div_exact_by_p()
    return digits


def from_teich_digits(digits, ring: ZqRing) -> ZqElem:
    """Reassemble sum tau(digits[i]) * p^i at ring precision."""
    if len(digits) > ring.precision:
        raise PrecisionError("more digits than the ring precision")
    acc = ring.zero()
    scale = 1
    for v in digits:
        acc = acc + ring.teichmuller(v) * scale
        scale *= ring.p
    return acc


def frobenius_lift(x: ZqElem) -> ZqElem:
    """The canonical Frobenius: p-th power transported through the digits.

    phi(sum tau(x_i) p^i) = sum tau(x_i^p) p^i.  It is a ring endomorphism,
    reduces to x -> x^p mod p, and iterating it n times is the identity.
    """
    ring = x.ring
    if ring.n == 1:
        return x  # Galois group of the trivial extension
    digits = teich_digits(x)
    return from_teich_digits([v.frobenius() for v in digits], ring)
