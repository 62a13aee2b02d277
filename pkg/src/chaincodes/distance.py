"""Minimum Hamming distance of semisimple codes.

The distance of a code over a chain ring equals the distance of its socle,
which is carried by the residue-field code L generated by the residues of
the canonical generators; so every exact distance computation enumerates
the q^k words of a field code over an echelonized F_q-basis.  The
multivariable lower bound splits the defining classes by their first-
variable minimal polynomial and recursively multiplies a univariate exact
distance with an exact distance in one variable less over an extension
field.
"""

from __future__ import annotations

from collections import namedtuple

from .codes import code_from_generators
from .decompose import _flatten_tower, decompose
from .errors import BudgetExceeded, DomainError
from .polys import Ambient, Poly
from .rings import ExtensionRing

DEFAULT_BUDGET = 2**24

DistanceCheck = namedtuple("DistanceCheck", "distance residue_distance equal")


def socle(code):
    """{c in K : a c = 0}, as a semisimple code over the same ring."""
    return code.socle()


def min_distance(code, budget=DEFAULT_BUDGET):
    """Exact minimum distance, via the residue carrier code."""
    if code.is_zero():
        raise DomainError("the zero code has no minimum distance")
    if code.ambient.ring.t == 1:
        field_code = code
    else:
        field_code = code.socle_field_code()
    basis = _field_basis(field_code)
    return _min_weight(field_code.ambient, basis, budget)


def _field_basis(code):
    """Echelonized F_q-basis of a t = 1 code; checks dim = sum |C|."""
    A = code.ambient
    field = A.ring
    if field.t != 1:
        raise DomainError("basis extraction expects a field code")
    zero = field._zero
    basis = []
    pivots = []
    for cd, j in zip(code.dec.data, code.exps):
        if j != 0:
            continue
        for rank in range(A.n):
            mp = A.monomial(A.exps(rank)) * cd.e
            row = [c.data for c in mp.coeff_vector()]
            for pc, brow in zip(pivots, basis):
                c = row[pc]
                if c != zero:
                    neg = field._neg(c)
                    row = [
                        field._add(a, field._mul(neg, b)) for a, b in zip(row, brow)
                    ]
            pc = next((i for i, c in enumerate(row) if c != zero), None)
            if pc is None:
                continue
            inv = field.unit_inverse(field.elem(row[pc])).data
            row = [field._mul(c, inv) for c in row]
            basis.append(row)
            pivots.append(pc)
    expected = sum(cd.cls.size for cd, j in zip(code.dec.data, code.exps) if j == 0)
    if len(basis) != expected:  # pragma: no cover
        raise DomainError("field code dimension does not match the class sizes")
    return basis


def _min_weight(ambient, basis, budget):
    field = ambient.ring
    k = len(basis)
    if field.size**k > budget:
        raise BudgetExceeded(
            f"enumerating {field.size}^{k} codewords exceeds the budget {budget}"
        )
    n = ambient.n
    zero = field._zero
    scalars = [field._from_rank(r) for r in range(field.size)]
    mults = [
        [[field._mul(c, b) for b in row] for c in scalars] for row in basis
    ]
    best = n + 1

    def rec(i, acc):
        nonlocal best
        if i == k:
            w = sum(1 for c in acc if c != zero)
            if 0 < w < best:
                best = w
            return
        for m in mults[i]:
            if best == 1:
                return
            rec(i + 1, [field._add(a, b) for a, b in zip(acc, m)])

    rec(0, [zero] * n)
    return best


def hensel_lift_distance_check(code, budget=DEFAULT_BUDGET):
    """(d(K), d(K-bar), equal), with Nones when the residue image is zero."""
    d = min_distance(code, budget)
    image = code.residue_image()
    if image is None:
        return DistanceCheck(d, None, None)
    dbar = min_distance(image, budget)
    return DistanceCheck(d, dbar, d == dbar)


def distance_bound(code, budget=DEFAULT_BUDGET):
    """The product lower bound min_i d_i * delta_i on the exact distance.

    Classes of the defining set are grouped by their first-variable minimal
    polynomial; d_i is the exact distance of a univariate code over F_q and
    delta_i the exact distance of a code in one variable less over the
    extension field F_q[X_1]/(p_i).  For r = 1 the (empty) delta factor is
    taken as 1, making the bound the exact univariate distance.
    """
    A = code.ambient
    if A.exponents is None:
        raise DomainError("the product bound requires an abelian ambient")
    if code.is_zero():
        raise DomainError("the zero code has no distance bound")
    t = A.ring.t
    Abar = A.residue_ambient
    rdec = decompose(Abar)
    field = Abar.ring

    defining = [i for i, j in enumerate(code.exps) if j < t]
    groups = []  # (p_poly, [class indices])
    for idx in defining:
        p1 = rdec.data[idx].p_polys[0]
        for gp, members in groups:
            if gp == p1:
                members.append(idx)
                break
        else:
            groups.append((p1, [idx]))

    univariate = Ambient(field, [Abar.moduli[0]])
    best = None
    for gi in range(len(groups)):
        tail = Poly.one(field)
        for gp, _ in groups[gi:]:
            tail = tail * gp
        gen_u, rem = divmod(Abar.moduli[0], tail)
        if not rem.is_zero():  # pragma: no cover
            raise DomainError("defining polynomials do not divide the modulus")
        du_code = code_from_generators(univariate, [univariate.from_polynomial(gen_u)])
        d_i = min_distance(du_code, budget)
        delta_i = 1 if A.r == 1 else _delta_distance(
            Abar, rdec, groups[gi], budget
        )
        value = d_i * delta_i
        if best is None or value < best:
            best = value
    return best


def _delta_distance(Abar, rdec, group, budget):
    """Distance of the code generated by sum_j F_ij over F_q[X_1]/(p_i)."""
    field = Abar.ring
    p1, members = group
    ext = ExtensionRing(field, p1) if p1.degree > 1 else field
    theta = ext.gen if p1.degree > 1 else -p1.coeff(0)
    embed = (lambda c: ext.embed(c)) if p1.degree > 1 else (lambda c: c)
    moduli = [
        Poly(ext, [embed(c) for c in m.coeffs], var=v)
        for v, m in enumerate(Abar.moduli[1:])
    ]
    V = Ambient(ext, moduli)

    gen = V.zero()
    for idx in members:
        cd = rdec.data[idx]
        term = V.one()
        for k in range(1, Abar.r):
            quot, rem = divmod(Abar.moduli[k], cd.p_polys[k])
            if not rem.is_zero():  # pragma: no cover
                raise DomainError("class polynomial does not divide its modulus")
            term = term * V.from_polynomial(
                Poly(ext, [embed(c) for c in quot.coeffs], var=k - 1)
            )
            term = term * _substitute_first_var(
                cd.pi_polys[k], field, ext, theta, embed, V, k - 1
            )
        gen = gen + term
    if gen.is_zero():  # pragma: no cover
        raise DomainError("group generator collapsed to zero")
    dcode = code_from_generators(V, [gen])
    return min_distance(dcode, budget)


def _substitute_first_var(f, base_field, ext, theta, embed, V, var):
    """A tower-coefficient polynomial with X_1 evaluated at theta, re-rooted
    into the (r-1)-variable ambient V at variable index ``var``."""
    terms = {}
    for jj, c in enumerate(f.coeffs):
        for exps, cc in _flatten_tower(c, base_field).items():
            e1 = exps[0] if exps else 0
            key = [0] * V.r
            for pos, e in enumerate(exps[1:]):
                key[pos] = e
            key[var] = jj
            key = tuple(key)
            contrib = (theta**e1) * embed(cc)
            terms[key] = terms.get(key, ext.zero) + contrib
    return V.from_terms(terms)
