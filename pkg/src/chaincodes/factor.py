"""Factorization over the residue field and cyclotomic classes of roots.

`factor_squarefree` is a distinct-degree / equal-degree factorization with
seeded pseudo-randomness, so the returned (sorted) factor list is
deterministic and independent of the seed as a set.  `splitting_data` builds
the common splitting field of the residue moduli and labels their roots:
as exponents of a primitive root for abelian ambients, as field elements
otherwise.  `cyclotomic_classes` partitions the root tuples into orbits of
the simultaneous q-power map.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import lcm

from .errors import DomainError
from .polys import Poly, is_irreducible, pow_mod, poly_gcd
from .rings import ExtensionRing, IntegerModRing, default_modulus


def is_squarefree(f):
    """gcd(f, f') = 1 over the coefficient field."""
    if f.is_zero():
        raise DomainError("square-freeness of the zero polynomial is undefined")
    if f.degree == 0:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


def factor_squarefree(f, seed=0):
    """Irreducible factors of a monic square-free polynomial over F_q.

    Distinct-degree splitting first, then seeded equal-degree splitting
    (Cantor-Zassenhaus for odd q, trace splitting in characteristic 2).
    The output is sorted by (degree, coefficient rank) and multiplies back
    to the input exactly.
    """
    field = f.ring
    if field.t != 1:
        raise DomainError("factorization works over the residue field")
    if not f.is_monic():
        raise DomainError("factor_squarefree expects a monic polynomial")
    if not is_squarefree(f):
        raise DomainError("factor_squarefree expects a square-free polynomial")
    rng = random.Random(seed)
    q = field.size
    x = Poly.x(field, var=f.var)

    # distinct-degree stage
    stages = []  # (product of all irreducible factors of degree d, d)
    rem = f
    h = x
    d = 0
    while rem.degree > 2 * (d + 1) - 1:
        d += 1
        h = pow_mod(h, q, rem)
        g = poly_gcd(h - x, rem)
        if g.degree > 0:
            stages.append((g, d))
            rem = rem // g
            h = h % rem
    if rem.degree > 0:
        stages.append((rem, rem.degree))

    factors = []
    for g, d in stages:
        factors.extend(_equal_degree(g, d, rng))
    factors.sort(key=lambda p: p.rank_key())

    check = Poly.one(field, var=f.var)
    for p in factors:
        check = check * p
    if check != f:
        raise DomainError("internal factorization check failed")  # pragma: no cover
    return factors


def _random_poly(field, degree, rng):
    coeffs = [field.from_rank(rng.randrange(field.size)) for _ in range(degree)]
    return Poly(field, coeffs)


def _equal_degree(g, d, rng):
    """Split a product of distinct irreducible factors, all of degree d."""
    if g.degree == d:
        return [g.monic()]
    field = g.ring
    q = field.size
    while True:
        r = _random_poly(field, 2 * d, rng)
        if r.degree < 1:
            continue
        if field.p == 2:
            # trace map over F_2 splits in characteristic 2
            s = r
            acc = r
            bits = d * field.l
            for _ in range(bits - 1):
                s = (s * s) % g
                acc = acc + s
            cand = poly_gcd(acc, g)
        else:
            s = pow_mod(r, (q**d - 1) // 2, g)
            cand = poly_gcd(s - Poly.one(field, var=g.var), g)
        if 0 < cand.degree < g.degree:
            left = cand.monic()
            right = (g // cand).monic()
            return _equal_degree(left, d, rng) + _equal_degree(right, d, rng)


@dataclass
class SplittingData:
    """Roots of the residue moduli in their common splitting field.

    ``exponent_form`` is set for abelian ambients; then root labels are
    integers a with root xi_i^a for the stored primitive e_i-th roots xi_i.
    Otherwise labels are the field elements themselves.
    """

    M: int
    field: object  # F_{q^M} as a t = 1 chain ring
    roots: tuple  # per variable, tuple of labels
    exponent_form: bool
    primitive_roots: tuple | None  # xi_i per variable (exponent form only)
    factor_lists: tuple  # per variable, sorted irreducible factors of t-bar_i

    def embed(self, c):
        """F_q into the splitting field."""
        if self.field == c.ring:
            return c
        return self.field.embed(c)

    def root_elem(self, i, label):
        """The field element behind a root label of variable i."""
        if not self.exponent_form:
            return label
        return self.primitive_roots[i] ** label

    def label_key(self, label):
        if self.exponent_form:
            return label
        return tuple(label.coords())


def _splitting_field(base_field, M):
    if M == 1:
        return base_field
    # deterministic minimal-rank irreducible of degree M over F_q
    if isinstance(base_field, IntegerModRing):
        return ExtensionRing(
            base_field, Poly.from_ints(base_field, default_modulus(base_field.p, M))
        )
    for rank in range(base_field.size**M):
        coeffs = []
        r = rank
        for _ in range(M):
            coeffs.append(base_field.from_rank(r % base_field.size))
            r //= base_field.size
        cand = Poly(base_field, coeffs + [base_field.one])
        if is_irreducible(cand):
            return ExtensionRing(base_field, cand)
    raise DomainError(f"no irreducible of degree {M} over {base_field}")  # pragma: no cover


def _multiplicative_generator(field):
    """Deterministic generator of the cyclic group field^*."""
    order = field.size - 1
    primes = []
    n = order
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    for r in range(1, field.size):
        g = field.from_rank(r)
        if g.is_zero():
            continue
        if all(g ** (order // ell) != field.one for ell in primes):
            return g
    raise DomainError("no multiplicative generator found")  # pragma: no cover


def splitting_data(ambient, seed=0):
    """Common splitting field and labelled roots of the residue moduli."""
    if not ambient.semisimple:
        raise DomainError("splitting data requires a semisimple ambient")
    field = ambient.ring.residue_field
    residues = [m.residue() if ambient.ring.t > 1 else m for m in ambient.moduli]
    factor_lists = tuple(factor_squarefree(m, seed=seed) for m in residues)
    M = 1
    for fl in factor_lists:
        for p in fl:
            M = lcm(M, p.degree)
    big = _splitting_field(field, M)

    exps = ambient.exponents
    if exps is not None:
        g = _multiplicative_generator(big)
        order = big.size - 1
        prim = []
        for e in exps:
            if order % e != 0:
                raise DomainError(  # pragma: no cover
                    f"splitting field has no elements of order {e}"
                )
            prim.append(g ** (order // e))
        roots = tuple(tuple(range(e)) for e in exps)
        data = SplittingData(M, big, roots, True, tuple(prim), factor_lists)
    else:
        embed = (lambda c: c) if big == field else big.embed
        roots = []
        for m in residues:
            rs = [c for c in big.elements() if m.evaluate(c, embed).is_zero()]
            if len(rs) != m.degree:
                raise DomainError("modulus does not split over the splitting field")  # pragma: no cover
            rs.sort(key=lambda c: tuple(c.coords()))
            roots.append(tuple(rs))
        data = SplittingData(M, big, tuple(roots), False, None, factor_lists)
    return data


@dataclass(frozen=True)
class CyclotomicClass:
    """A Frobenius orbit on root tuples, with its canonical representative."""

    members: tuple  # sorted label tuples
    rep: tuple  # lexicographically smallest member

    @property
    def size(self):
        return len(self.members)

    def to_json(self, splitting=None):
        def enc(label):
            return label if isinstance(label, int) else list(label.coords())

        return {
            "repr": [enc(x) for x in self.rep],
            "size": self.size,
            "members": [[enc(x) for x in mu] for mu in self.members],
        }


def cyclotomic_classes(ambient, splitting=None, seed=0):
    """Partition of H_1 x ... x H_r under mu -> (mu_1^q, ..., mu_r^q)."""
    if splitting is None:
        splitting = splitting_data(ambient, seed=seed)
    q = ambient.ring.q
    exps = ambient.exponents

    if splitting.exponent_form:
        def step(mu):
            return tuple((a * q) % e for a, e in zip(mu, exps))

        def key(label):
            return label
    else:
        def step(mu):
            return tuple(x**q for x in mu)

        def key(label):
            return tuple(label.coords())

    all_tuples = list(itertools.product(*splitting.roots))
    seen = set()
    classes = []
    for mu in all_tuples:
        kmu = tuple(key(x) for x in mu)
        if kmu in seen:
            continue
        orbit = []
        cur = mu
        while True:
            korbit = tuple(key(x) for x in cur)
            if korbit in seen:
                break
            seen.add(korbit)
            orbit.append(cur)
            cur = step(cur)
        orbit.sort(key=lambda m: tuple(key(x) for x in m))
        classes.append(CyclotomicClass(members=tuple(orbit), rep=orbit[0]))
    classes.sort(key=lambda c: tuple(key(x) for x in c.rep))

    total = sum(c.size for c in classes)
    if total != len(all_tuples):
        raise DomainError("classes do not partition the root tuples")  # pragma: no cover
    return classes


def orbit_length(label, e_or_field, q):
    """Length of the q-power orbit of a single root (the degree d_i)."""
    if isinstance(label, int):
        e = e_or_field
        d = 1
        cur = (label * q) % e
        while cur != label:
            cur = (cur * q) % e
            d += 1
        return d
    d = 1
    cur = label**q
    while cur != label:
        cur = cur**q
        d += 1
    return d
