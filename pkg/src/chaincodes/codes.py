"""Semisimple codes: ideals of R[X_1,...,X_r]/<t_1,...,t_r>.

A code is represented semantically by its exponent map: for every
cyclotomic class C an integer j_C in [0, t], meaning the component carries
the ideal <a^{j_C}>.  The map is a complete invariant; generator lists are
normalized onto it on entry, and the canonical generator family
G_0, ..., G_t (sums of primitive idempotents grouped by exponent) plus the
single generator G = sum a^i G_{i+1} are reconstructed from it on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .decompose import decompose
from .errors import DomainError


@dataclass(frozen=True)
class CanonicalGenerators:
    """The family G_0,...,G_t (G_{i+1} collects exponent-i classes) and the
    single generator G = sum_{i<t} a^i G_{i+1}."""

    gs: tuple  # MPoly, indices 0..t
    G: object  # MPoly


class SemisimpleCode:
    """An ideal of a semisimple ambient, held as its exponent map."""

    __slots__ = ("dec", "exps")

    def __init__(self, dec, exps):
        exps = tuple(int(j) for j in exps)
        t = dec.ambient.ring.t
        if len(exps) != dec.class_count:
            raise DomainError("exponent map must cover every class")
        for j in exps:
            if not 0 <= j <= t:
                raise DomainError(f"exponent {j} outside [0, {t}]")
        self.dec = dec
        self.exps = exps

    @property
    def ambient(self):
        return self.dec.ambient

    def __eq__(self, other):
        return (
            isinstance(other, SemisimpleCode)
            and self.ambient == other.ambient
            and self.exps == other.exps
        )

    def __hash__(self):
        return hash((self.ambient.degs, self.exps))

    def __repr__(self):
        pairs = ", ".join(
            f"{cd.cls.rep}:{j}" for cd, j in zip(self.dec.data, self.exps)
        )
        return f"SemisimpleCode({pairs})"

    # -- structure ------------------------------------------------------------

    def cardinality(self):
        """|K| = q^(sum over classes of (t - j_C)|C|)."""
        ring = self.ambient.ring
        digits = sum(
            (ring.t - j) * cd.cls.size for cd, j in zip(self.dec.data, self.exps)
        )
        return ring.q**digits

    def is_zero(self):
        t = self.ambient.ring.t
        return all(j == t for j in self.exps)

    def contains(self, f):
        """Membership: the projection on every component has valuation >= j_C."""
        for cd, j in zip(self.dec.data, self.exps):
            if j == 0:
                continue
            if (cd.e * f).valuation() < j:
                return False
        return True

    def generators(self):
        """The canonical generator family; each G_i is itself an idempotent."""
        A = self.ambient
        t = A.ring.t
        gs = [A.zero() for _ in range(t + 1)]
        for cd, j in zip(self.dec.data, self.exps):
            slot = 0 if j == t else j + 1
            gs[slot] = gs[slot] + cd.e
        G = A.zero()
        apow = A.ring.one
        for i in range(t):
            G = G + gs[i + 1] * apow
            apow = apow * A.ring.a
        return CanonicalGenerators(gs=tuple(gs), G=G)

    def definition_generators(self):
        """The a^{j_C} h_C generators of the component-sum form."""
        A = self.ambient
        t = A.ring.t
        out = []
        for cd, j in zip(self.dec.data, self.exps):
            if j == t:
                continue
            out.append(cd.h * (A.ring.a**j))
        return out

    def is_hensel_lift(self):
        """True iff every exponent is 0 or t and some component is full."""
        t = self.ambient.ring.t
        return all(j in (0, t) for j in self.exps) and any(j == 0 for j in self.exps)

    def socle(self):
        """{c in K : a c = 0}: nonzero components drop to exponent t - 1."""
        t = self.ambient.ring.t
        return SemisimpleCode(
            self.dec, tuple(t - 1 if j < t else t for j in self.exps)
        )

    def residue_image(self):
        """The image code in the residue quotient (a t = 1 code), or None."""
        if all(j > 0 for j in self.exps):
            return None
        rdec = decompose(self.ambient.residue_ambient)
        _check_aligned(self.dec, rdec)
        return SemisimpleCode(rdec, tuple(0 if j == 0 else 1 for j in self.exps))

    def socle_field_code(self):
        """The residue code L carrying the distance of K (a t = 1 code)."""
        if self.is_zero():
            raise DomainError("the zero code has no residue distance carrier")
        t = self.ambient.ring.t
        rdec = decompose(self.ambient.residue_ambient)
        _check_aligned(self.dec, rdec)
        return SemisimpleCode(rdec, tuple(0 if j < t else 1 for j in self.exps))

    def intersect(self, other):
        _same_ambient(self, other)
        return SemisimpleCode(
            self.dec, tuple(max(a, b) for a, b in zip(self.exps, other.exps))
        )

    def add(self, other):
        _same_ambient(self, other)
        return SemisimpleCode(
            self.dec, tuple(min(a, b) for a, b in zip(self.exps, other.exps))
        )

    def to_json(self, with_generator=True):
        def enc(label):
            return label if isinstance(label, int) else list(label.coords())

        out = {
            "exponents": [
                [[enc(x) for x in cd.cls.rep], j]
                for cd, j in zip(self.dec.data, self.exps)
            ],
            "cardinality": str(self.cardinality()),
        }
        if with_generator:
            out["generator"] = self.generators().G.to_text()
        return out


def _same_ambient(a, b):
    if a.ambient != b.ambient:
        raise DomainError("codes live in different ambients")


def _check_aligned(dec, rdec):
    # classes of the residue ambient coincide with the ring-level classes
    if [cd.cls.rep for cd in dec.data] != [cd.cls.rep for cd in rdec.data]:
        raise DomainError("residue ambient classes are misaligned")  # pragma: no cover


def code_from_exponents(ambient, exps, seed=0):
    """Build a code from an exponent map (sequence in canonical class order,
    or a dict keyed by class representative tuples)."""
    dec = decompose(ambient, seed=seed)
    if isinstance(exps, dict):
        def enc_key(rep):
            return tuple(
                x if isinstance(x, int) else tuple(x.coords()) for x in rep
            )

        table = {}
        for key, j in exps.items():
            if not isinstance(key, tuple):
                key = (key,)
            table[tuple(key)] = j
        ordered = []
        for cd in dec.data:
            key = enc_key(cd.cls.rep)
            if key not in table:
                raise DomainError(f"missing exponent for class {key}")
            ordered.append(table[key])
        if len(table) != len(dec.data):
            raise DomainError("exponent map names an unknown class")
        exps = ordered
    return SemisimpleCode(dec, exps)


def code_from_generators(ambient, gens, seed=0):
    """Normalize an arbitrary generator list to its exponent map."""
    dec = decompose(ambient, seed=seed)
    t = ambient.ring.t
    exps = []
    for cd in dec.data:
        j = t
        for g in gens:
            j = min(j, (cd.e * g).valuation())
            if j == 0:
                break
        exps.append(j)
    code = SemisimpleCode(dec, exps)
    for g in gens:
        if not code.contains(g):  # pragma: no cover
            raise DomainError("generator normalization lost a generator")
    return code


def enumerate_codes(ambient, seed=0):
    """All (t+1)^N semisimple codes, mixed-radix over the class order."""
    dec = decompose(ambient, seed=seed)
    t = ambient.ring.t
    for exps in itertools.product(range(t + 1), repeat=dec.class_count):
        yield SemisimpleCode(dec, exps)


def cardinality(code):
    return code.cardinality()


def contains(code, f):
    return code.contains(f)


def canonical_generators(code):
    return code.generators()


def is_hensel_lift(code):
    return code.is_hensel_lift()
