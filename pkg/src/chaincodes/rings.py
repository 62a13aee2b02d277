"""Finite chain rings: Z_{p^t}, Galois rings, truncated polynomial rings,
and extensions of all of these by basic irreducible polynomials.

A chain ring here is one of three concrete classes sharing one interface:

* `IntegerModRing(p, t)` -- Z_{p^t}; elements are ints in [0, p^t).
* `ExtensionRing(base, modulus)` -- base[Z]/(modulus) for a monic basic
  irreducible modulus; elements are tuples of base elements.  Galois rings
  GR(p^t, l) are `ExtensionRing(IntegerModRing(p, t), g)` and towers of
  extensions realize the rings R(mu_1, ..., mu_k) used by the class
  decomposition.
* `TruncatedRing(field, t)` -- F_q[u]/(u^t); elements are tuples of field
  elements per power of u.

Finite fields are simply chain rings with nilpotency index t = 1, so every
algorithm written against this interface works over fields as well.

All values are immutable; every operation is a pure function, so rings and
elements can be shared freely between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .polys import Poly, is_irreducible


class RingElem:
    """An element of a chain ring; raw payload plus owning ring."""

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise DomainError(f"mixing elements of {self.ring} and {other.ring}")
        if isinstance(other, int):
            return RingElem(self.ring, self.ring._from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring._add(self.data, other.data))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, self.ring._neg(self.data))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring._add(self.data, self.ring._neg(other.data)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.ring, self.ring._mul(self.data, other.data))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.ring.unit_inverse(self) ** (-e)
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElem(self.ring, self.ring._from_int(other))
        return (
            isinstance(other, RingElem)
            and self.ring == other.ring
            and self.data == other.data
        )

    def __hash__(self):
        return hash(self.data)

    def is_zero(self):
        return self.data == self.ring._zero

    def valuation(self):
        """Largest k with self in <a^k>; the zero element gets t."""
        return self.ring._val(self.data)

    def residue(self):
        """Image in the residue field."""
        rf = self.ring.residue_field
        return RingElem(rf, self.ring._residue(self.data))

    def coords(self):
        """Flat integer coordinates (ascending basis order)."""
        return self.ring._coords(self.data)

    def int_repr(self):
        cs = self.coords()
        if len(cs) == 1:
            return str(cs[0])
        return "[" + ",".join(str(c) for c in cs) + "]"

    def json_repr(self):
        cs = self.coords()
        return cs[0] if len(cs) == 1 else list(cs)

    def __repr__(self):
        return f"RingElem({self.int_repr()}, {self.ring!r})"


class ChainRing:
    """Shared interface of the three concrete chain ring classes.

    Subclasses set: p (residue characteristic), t (nilpotency index),
    l (residue degree over F_p), q = p^l, size = q^t, ncoords, key, and the
    raw payload operations _add/_neg/_mul/_val/... used by `RingElem`.
    """

    @property
    def is_field(self):
        return self.t == 1

    @property
    def zero(self):
        return RingElem(self, self._zero)

    @property
    def one(self):
        return RingElem(self, self._one)

    @property
    def a(self):
        """A fixed generator of the maximal ideal (zero when t = 1)."""
        return RingElem(self, self._a)

    def elem(self, data):
        return RingElem(self, data)

    def from_int(self, v):
        return RingElem(self, self._from_int(int(v)))

    def from_coords(self, coords):
        coords = list(coords)
        if len(coords) != self.ncoords:
            raise DomainError(f"expected {self.ncoords} coordinates, got {len(coords)}")
        return RingElem(self, self._from_coords(coords))

    def from_rank(self, r):
        return RingElem(self, self._from_rank(r))

    def elements(self):
        """All elements in a fixed order (rank ascending)."""
        for r in range(self.size):
            yield RingElem(self, self._from_rank(r))

    def residue(self, x):
        return x.residue()

    def lift(self, fe):
        """A fixed section of the residue map (coordinatewise lift)."""
        if fe.ring != self.residue_field:
            raise DomainError("lift expects a residue field element")
        return RingElem(self, self._lift(fe.data))

    def valuation(self, x):
        return self._val(x.data)

    def divide_by_a(self, x):
        """The canonical y with a*y = x; requires valuation(x) >= 1."""
        if self._val(x.data) < 1:
            raise DomainError("element is a unit, not divisible by the radical generator")
        return RingElem(self, self._div_a(x.data))

    def unit_inverse(self, x):
        """Multiplicative inverse of a unit."""
        if self._val(x.data) != 0:
            raise DomainError("not a unit")
        if self.t == 1:
            return x ** (self.size - 2) if self.size > 2 else x
        v = self.lift(self.residue_field.unit_inverse(x.residue()))
        two = self.from_int(2)
        for _ in range(self.t.bit_length() + 1):
            err = x * v
            if err == self.one:
                return v
            v = v * (two - err)
        raise DomainError("unit inversion did not converge")  # pragma: no cover

    # -- Teichmuller machinery ------------------------------------------------

    def teichmuller(self, x):
        """The Teichmuller representative sharing x's residue (y with y^q = y)."""
        y = x
        for _ in range(self.t - 1):
            y = y**self.q
        return y

    def teichmuller_set(self):
        """All q solutions of y^q = y, one per residue class, in residue order."""
        return [self.teichmuller(self.lift(c)) for c in self.residue_field.elements()]

    def adic_digits(self, x):
        """Teichmuller digits g_i with x = sum a^i g_i, unique."""
        digits = []
        cur = x
        for i in range(self.t):
            g = self.teichmuller(cur)
            digits.append(g)
            if i < self.t - 1:
                cur = self.divide_by_a(cur - g)
        return digits

    def __eq__(self, other):
        return isinstance(other, ChainRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


class IntegerModRing(ChainRing):
    """Z_{p^t}: the prime-power integer ring (a field when t = 1)."""

    def __init__(self, p, t):
        if p < 2 or not _is_prime(p):
            raise DomainError(f"p = {p} is not prime")
        if t < 1:
            raise DomainError(f"nilpotency index t = {t} must be >= 1")
        self.p = p
        self.t = t
        self.l = 1
        self.q = p
        self.size = p**t
        self.ncoords = 1
        self.key = ("zmod", p, t)
        self._zero = 0
        self._one = 1 % self.size
        self._a = p % self.size if t > 1 else 0

    def _add(self, a, b):
        return (a + b) % self.size

    def _neg(self, a):
        return (-a) % self.size

    def _mul(self, a, b):
        return (a * b) % self.size

    def _from_int(self, v):
        return v % self.size

    def _val(self, a):
        if a == 0:
            return self.t
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def _residue(self, a):
        return a % self.p

    def _lift(self, a):
        return a

    def _div_a(self, a):
        return a // self.p

    def _coords(self, a):
        return [a]

    def _from_coords(self, coords):
        return coords[0] % self.size

    def _from_rank(self, r):
        return r

    @property
    def residue_field(self):
        if self.t == 1:
            return self
        return IntegerModRing(self.p, 1)

    def unit_inverse(self, x):
        try:
            return RingElem(self, pow(x.data, -1, self.size))
        except ValueError:
            raise DomainError("not a unit") from None

    def __repr__(self):
        if self.t == 1:
            return f"GF({self.p})"
        return f"Z{self.size}"


class ExtensionRing(ChainRing):
    """base[Z]/(modulus) for a monic basic irreducible modulus.

    Shares the radical generator and nilpotency index of the base; the
    residue field gains degree deg(modulus).  Elements are tuples of base
    payloads, i.e. coordinates in the monomial basis 1, Z, ..., Z^{m-1}.
    """

    def __init__(self, base, modulus, check=True):
        if not modulus.is_monic() or modulus.degree < 1:
            raise DomainError("extension modulus must be monic of degree >= 1")
        if modulus.ring != base:
            raise DomainError("extension modulus must have coefficients in the base ring")
        if check:
            mres = modulus.residue() if base.t > 1 else modulus
            if not is_irreducible(mres):
                raise DomainError("extension modulus is not basic irreducible")
        m = modulus.degree
        self.base = base
        self.modulus = modulus
        self.deg = m
        self.p = base.p
        self.t = base.t
        self.l = base.l * m
        self.q = base.q**m
        self.size = base.size**m
        self.ncoords = base.ncoords * m
        self.key = ("ext", base.key, tuple(c.data for c in modulus.coeffs))
        self._zero = (base._zero,) * m
        self._one = (base._one,) + (base._zero,) * (m - 1)
        self._a = (base._a,) + (base._zero,) * (m - 1)
        self._fold = self._fold_table()

    def _fold_table(self):
        # Z^{m+k} reduced mod the modulus, k = 0..m-2, as base payload tuples
        m = self.deg
        table = []
        cur = Poly.x(self.base) ** m % self.modulus if m > 1 else None
        if m == 1:
            return table
        for _ in range(m - 1):
            table.append(tuple(cur.coeff(i).data for i in range(m)))
            cur = (cur * Poly.x(self.base)) % self.modulus
        return table

    def _add(self, a, b):
        badd = self.base._add
        return tuple(badd(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        bneg = self.base._neg
        return tuple(bneg(x) for x in a)

    def _mul(self, a, b):
        base = self.base
        m = self.deg
        conv = [base._zero] * (2 * m - 1)
        for i, x in enumerate(a):
            if x == base._zero:
                continue
            for j, y in enumerate(b):
                if y == base._zero:
                    continue
                conv[i + j] = base._add(conv[i + j], base._mul(x, y))
        out = conv[:m]
        for k in range(m - 1):
            c = conv[m + k]
            if c == base._zero:
                continue
            fold = self._fold[k]
            out = [base._add(o, base._mul(c, f)) for o, f in zip(out, fold)]
        return tuple(out)

    def _from_int(self, v):
        return (self.base._from_int(v),) + (self.base._zero,) * (self.deg - 1)

    def _val(self, a):
        return min(self.base._val(x) for x in a)

    def _residue(self, a):
        return tuple(self.base._residue(x) for x in a)

    def _lift(self, a):
        return tuple(self.base._lift(x) for x in a)

    def _div_a(self, a):
        return tuple(self.base._div_a(x) for x in a)

    def _coords(self, a):
        out = []
        for x in a:
            out.extend(self.base._coords(x))
        return out

    def _from_coords(self, coords):
        k = self.base.ncoords
        return tuple(
            self.base._from_coords(coords[i * k : (i + 1) * k]) for i in range(self.deg)
        )

    def _from_rank(self, r):
        out = []
        for _ in range(self.deg):
            out.append(self.base._from_rank(r % self.base.size))
            r //= self.base.size
        return tuple(out)

    @property
    def residue_field(self):
        if self.t == 1:
            return self
        return ExtensionRing(
            self.base.residue_field, self.modulus.residue(), check=False
        )

    @property
    def gen(self):
        """The adjoined root Z of the modulus."""
        return RingElem(
            self, (self.base._zero, self.base._one) + (self.base._zero,) * (self.deg - 2)
        ) if self.deg > 1 else RingElem(self, (self.base._neg(self.modulus.coeff(0).data),))

    def embed(self, x):
        """The base ring inside the extension."""
        if x.ring != self.base:
            raise DomainError("embed expects a base ring element")
        return RingElem(self, (x.data,) + (self.base._zero,) * (self.deg - 1))

    def retract(self, x):
        """Inverse of embed; fails when x is not in the base ring."""
        if any(c != self.base._zero for c in x.data[1:]):
            raise DomainError("element does not lie in the base ring")
        return RingElem(self.base, x.data[0])

    def __repr__(self):
        if isinstance(self.base, IntegerModRing) and self.t == 1:
            return f"GF({self.size})"
        if isinstance(self.base, IntegerModRing):
            return f"GR({self.base.size},{self.deg})"
        return f"Ext({self.base!r},deg={self.deg})"


class TruncatedRing(ChainRing):
    """F_q[u]/(u^t): chain ring of characteristic p with radical generator u."""

    def __init__(self, field, t):
        if field.t != 1:
            raise DomainError("truncated ring coefficients must form a field")
        if t < 1:
            raise DomainError(f"nilpotency index t = {t} must be >= 1")
        self.field = field
        self.p = field.p
        self.t = t
        self.l = field.l
        self.q = field.size
        self.size = field.size**t
        self.ncoords = field.ncoords * t
        self.key = ("trunc", field.key, t)
        self._zero = (field._zero,) * t
        self._one = (field._one,) + (field._zero,) * (t - 1)
        self._a = (
            (field._zero, field._one) + (field._zero,) * (t - 2)
            if t > 1
            else (field._zero,)
        )

    def _add(self, a, b):
        fadd = self.field._add
        return tuple(fadd(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        fneg = self.field._neg
        return tuple(fneg(x) for x in a)

    def _mul(self, a, b):
        field = self.field
        out = [field._zero] * self.t
        for i, x in enumerate(a):
            if x == field._zero:
                continue
            for j, y in enumerate(b):
                if i + j >= self.t:
                    break
                out[i + j] = field._add(out[i + j], field._mul(x, y))
        return tuple(out)

    def _from_int(self, v):
        return (self.field._from_int(v),) + (self.field._zero,) * (self.t - 1)

    def _val(self, a):
        for i, x in enumerate(a):
            if x != self.field._zero:
                return i
        return self.t

    def _residue(self, a):
        return a[0]

    def _lift(self, a):
        return (a,) + (self.field._zero,) * (self.t - 1)

    def _div_a(self, a):
        return a[1:] + (self.field._zero,)

    def _coords(self, a):
        out = []
        for x in a:
            out.extend(self.field._coords(x))
        return out

    def _from_coords(self, coords):
        k = self.field.ncoords
        return tuple(
            self.field._from_coords(coords[i * k : (i + 1) * k]) for i in range(self.t)
        )

    def _from_rank(self, r):
        out = []
        for _ in range(self.t):
            out.append(self.field._from_rank(r % self.field.size))
            r //= self.field.size
        return tuple(out)

    @property
    def residue_field(self):
        return self.field

    def __repr__(self):
        return f"GF({self.q})[u]/u^{self.t}"


# -- construction from descriptors --------------------------------------------


@dataclass(frozen=True)
class ChainRingDesc:
    """JSON-serializable descriptor of the two supported ring families."""

    kind: str  # "galois" | "truncated"
    p: int
    t: int
    l: int
    modulus: tuple | None = None  # ascending coefficients, None = built-in default

    def to_json(self):
        out = {"kind": self.kind, "p": self.p, "t": self.t, "l": self.l}
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# Minimal-rank monic irreducible polynomials over F_p (ascending coefficient
# tuples including the leading 1); the reproducible defaults for Galois ring
# and field extensions.  Filled for small degrees, searched on demand beyond.
_IRREDUCIBLE_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 1, 0, 0, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
}


@lru_cache(maxsize=None)
def default_modulus(p, degree):
    """The minimal-rank monic irreducible of the given degree over F_p."""
    if degree == 1:
        return (0, 1)
    hit = _IRREDUCIBLE_TABLE.get((p, degree))
    if hit is not None:
        return hit
    field = IntegerModRing(p, 1)
    for rank in range(p**degree):
        coeffs = []
        r = rank
        for _ in range(degree):
            coeffs.append(r % p)
            r //= p
        f = Poly.from_ints(field, coeffs + [1])
        if is_irreducible(f):
            return tuple(coeffs + [1])
    raise DomainError(f"no irreducible of degree {degree} over GF({p})")  # pragma: no cover


def ring_construct(desc):
    """Build a chain ring from a `ChainRingDesc` (or an equivalent dict)."""
    if isinstance(desc, dict):
        desc = ChainRingDesc(
            kind=desc["kind"],
            p=int(desc["p"]),
            t=int(desc["t"]),
            l=int(desc.get("l", 1)),
            modulus=tuple(desc["modulus"]) if desc.get("modulus") else None,
        )
    if desc.kind not in ("galois", "truncated"):
        raise DomainError(f"unknown ring kind {desc.kind!r}")
    if not _is_prime(desc.p):
        raise DomainError(f"p = {desc.p} is not prime")
    if desc.t < 1 or desc.l < 1:
        raise DomainError("t and l must both be >= 1")
    modulus = desc.modulus
    if desc.l > 1 and modulus is None:
        modulus = default_modulus(desc.p, desc.l)
    if modulus is not None and len(modulus) != desc.l + 1:
        raise DomainError(f"modulus must have degree l = {desc.l}")

    if desc.kind == "galois":
        core = IntegerModRing(desc.p, desc.t)
        if desc.l == 1:
            ring = core
        else:
            ring = ExtensionRing(core, Poly.from_ints(core, modulus))
    else:
        if desc.l == 1:
            field = IntegerModRing(desc.p, 1)
        else:
            fp = IntegerModRing(desc.p, 1)
            field = ExtensionRing(fp, Poly.from_ints(fp, modulus))
        ring = TruncatedRing(field, desc.t)
    ring.descriptor = desc
    return ring


def ring_from_json(text_or_obj):
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    return ring_construct(obj)


def ring_to_json(ring):
    desc = getattr(ring, "descriptor", None)
    if desc is None:
        raise DomainError("ring was not built from a descriptor")
    return desc.to_json()


def FiniteField(p, l=1, modulus=None):
    """Convenience constructor for F_{p^l} as a chain ring with t = 1."""
    return ring_construct(ChainRingDesc("galois", p, 1, l, modulus))


def extend_ring(ring, modulus):
    """S = ring[Z]/(modulus) for monic `modulus` with irreducible residue."""
    return ExtensionRing(ring, modulus)


def teichmuller_set(ring):
    return ring.teichmuller_set()


def frobenius_lift(ring, x, q=None):
    """The automorphism acting on Teichmuller digits by q-th powers."""
    if q is None:
        if not isinstance(ring, ExtensionRing):
            raise DomainError("frobenius_lift needs an extension ring or explicit q")
        q = ring.base.q
    digits = ring.adic_digits(x)
    acc = ring.zero
    apow = ring.one
    for g in digits:
        acc = acc + apow * g**q
        apow = apow * ring.a
    return acc


def ring_trace(ext, x):
    """Trace of x from an extension ring down to its base ring."""
    if not isinstance(ext, ExtensionRing):
        raise DomainError("ring_trace expects an extension built by extend_ring")
    q = ext.base.q
    total = x
    y = x
    for _ in range(ext.deg - 1):
        y = frobenius_lift(ext, y, q)
        total = total + y
    return ext.retract(total)
