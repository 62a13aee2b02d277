"""Per-class structural data and the chain-ring CRT decomposition.

For each cyclotomic class the decomposition records:

* field level: the minimal polynomials p_i of the root coordinates over
  F_q, and for each later coordinate the relative minimal polynomial w_i
  over the field generated by the earlier ones, with its complement
  pi_i = p_i / w_i;
* ring level: the Hensel lifts q_i (of p_i, inside the factorization of
  the modulus t_i) and z_i, sigma_i (of w_i, pi_i, over the extension ring
  generated by the earlier lifted roots);
* the separator polynomial h_C = prod_i (t_i / q_i) * prod_i sigma_i whose
  residue vanishes off the class, the primitive idempotent e_C, and the
  cofactor g_C with g_C * h_C = e_C.

The component ring R[X_1,...,X_r]/<q_1, z_2, ..., z_r> is realized as the
iterated extension tower, so its chain-ring arithmetic comes for free.

Idempotents are computed from the residue CRT (e-bar = h-bar^(q^|C| - 1)),
lifted, and made exactly orthogonal by multiplying each lift with the
complements of all the others; the corrected family consists of orthogonal
idempotents summing to one, which is asserted after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .factor import cyclotomic_classes, factor_squarefree, splitting_data
from .hensel import lift_factorization, lift_idempotent
from .polys import Poly
from .rings import ExtensionRing, RingElem


def _const_embed(ring, base, x):
    """Embed an element of ``base`` into a tower of extensions over it."""
    if x.ring == ring:
        return x
    if ring == base:
        return x
    return ring.embed(_const_embed(ring.base, base, x))


def _tower_eval(x, base, images, embed_base):
    """Evaluate a tower element by sending the j-th adjoined root to images[j]."""
    ring = x.ring
    if ring == base:
        return embed_base(x)
    depth = _tower_depth(ring, base)
    mu = images[depth - 1]
    acc = mu.ring.zero
    for j in range(ring.deg - 1, -1, -1):
        cj = RingElem(ring.base, x.data[j])
        acc = acc * mu + _tower_eval(cj, base, images, embed_base)
    return acc


def _tower_depth(ring, base):
    depth = 0
    cur = ring
    while cur != base:
        depth += 1
        cur = cur.base
    return depth


def _flatten_tower(x, base):
    """Tower element -> {exponent tuple: base element}, first root innermost."""
    ring = x.ring
    if ring == base:
        return {(): x} if not x.is_zero() else {}
    out = {}
    for j in range(ring.deg):
        sub = _flatten_tower(RingElem(ring.base, x.data[j]), base)
        for exps, c in sub.items():
            out[exps + (j,)] = c
    return out


@dataclass
class ClassData:
    """Everything attached to one cyclotomic class."""

    cls: object
    p_polys: list  # Poly over F_q, one per variable
    q_polys: list  # their Hensel lifts over R
    w_polys: list  # index v >= 1: Poly over the tower residue field below v
    pi_polys: list  # p_v / w_v over the same field
    z_polys: list  # Hensel lift of w_v over the tower ring below v
    sigma_polys: list  # Hensel lift of pi_v
    tower: list  # R(mu_1), R(mu_1,mu_2), ..., R(mu_1..mu_r)
    h: object  # MPoly
    e: object = None  # primitive idempotent, filled by Decomposition
    g: object = None  # cofactor with g*h == e

    @property
    def degrees(self):
        return [p.degree for p in self.p_polys]

    @property
    def component_ring(self):
        """R[X]/I_C as a chain ring (the full extension tower)."""
        return self.tower[-1]

    @property
    def component_size(self):
        ring = self.component_ring
        return ring.size

    def ideal_generators(self, ambient):
        """Generators of I_C = <q_1, z_2, ..., z_r> as ambient elements."""
        gens = [ambient.from_polynomial(self.q_polys[0])]
        base = ambient.ring
        for v in range(1, len(self.p_polys)):
            gens.append(_poly_over_tower_to_mpoly(self.z_polys[v], base, ambient, v))
        return gens

    def to_json(self, ambient):
        base = ambient.ring
        names = ambient.var_names()

        def ptext(f):
            from .polys import poly_to_text

            return poly_to_text(f, names)

        out = {
            "class": self.cls.to_json(),
            "p": [ptext(f) for f in self.p_polys],
            "q": [ptext(f) for f in self.q_polys],
            "h": self.h.to_text(),
            "e": self.e.to_text(),
            "g": self.g.to_text(),
            "component_size": self.component_size,
        }
        r = len(self.p_polys)
        if r > 1:
            ra = ambient.residue_ambient
            out["w"] = [
                _poly_over_tower_to_mpoly(self.w_polys[v], ra.ring, ra, v).to_text()
                for v in range(1, r)
            ]
            out["pi"] = [
                _poly_over_tower_to_mpoly(self.pi_polys[v], ra.ring, ra, v).to_text()
                for v in range(1, r)
            ]
            out["z"] = [
                _poly_over_tower_to_mpoly(self.z_polys[v], base, ambient, v).to_text()
                for v in range(1, r)
            ]
            out["sigma"] = [
                _poly_over_tower_to_mpoly(self.sigma_polys[v], base, ambient, v).to_text()
                for v in range(1, r)
            ]
        return out


def _poly_over_tower_to_mpoly(f, base, ambient, var):
    """A polynomial in X_{var+1} with tower coefficients, as an ambient element."""
    terms = {}
    r = ambient.r
    for j, c in enumerate(f.coeffs):
        for exps, cc in _flatten_tower(c, base).items():
            full = list(exps) + [0] * (r - len(exps))
            full[var] = j
            terms[tuple(full)] = cc
    return ambient.from_terms(terms)


class Decomposition:
    """Classes, class data and idempotents of one semisimple ambient."""

    def __init__(self, ambient, seed=0):
        if not ambient.semisimple:
            raise DomainError("cannot decompose a non-semisimple ambient")
        self.ambient = ambient
        self.splitting = splitting_data(ambient, seed=seed)
        self.classes = cyclotomic_classes(ambient, self.splitting, seed=seed)
        self.lifted_factorizations = self._lift_moduli(seed)
        self.data = [self._build_class(cls) for cls in self.classes]
        self._attach_idempotents()

    # -- construction ---------------------------------------------------------

    def _lift_moduli(self, seed):
        out = []
        for v, modulus in enumerate(self.ambient.moduli):
            residue_factors = self.splitting.factor_lists[v]
            out.append(lift_factorization(modulus, residue_factors))
        return out

    def _build_class(self, cls, rep=None):
        A = self.ambient
        R = A.ring
        Fq = R.residue_field
        sd = self.splitting
        r = A.r
        mu = rep if rep is not None else cls.rep
        mu_elems = [sd.root_elem(v, mu[v]) for v in range(r)]

        p_polys, q_polys = [], []
        for v in range(r):
            lf = self.lifted_factorizations[v]
            for fac, lifted in zip(lf.residue_factors, lf.factors):
                if fac.evaluate(mu_elems[v], sd.embed).is_zero():
                    p_polys.append(fac)
                    q_polys.append(lifted)
                    break
            else:  # pragma: no cover
                raise DomainError("no residue factor vanishes at the class root")

        w_polys = [None]
        pi_polys = [None]
        z_polys = [None]
        sigma_polys = [None]
        tower = [ExtensionRing(R, q_polys[0])]
        for v in range(1, r):
            ring_below = tower[-1]
            field_below = ring_below.residue_field
            p_emb = p_polys[v].map_coeffs(
                lambda c: _const_embed(field_below, Fq, c), field_below
            )
            if p_emb.degree == 1:
                w = p_emb
            else:
                w = None
                for cand in factor_squarefree(p_emb, seed=0):
                    val = cand.evaluate(
                        mu_elems[v],
                        embed=lambda c: _tower_eval(c, Fq, mu_elems[:v], sd.embed),
                    )
                    if val.is_zero():
                        w = cand
                        break
                if w is None:  # pragma: no cover
                    raise DomainError("no factor of p vanishes at the class root")
            pi, rem = divmod(p_emb, w)
            if not rem.is_zero():  # pragma: no cover
                raise DomainError("w does not divide p")
            q_emb = q_polys[v].map_coeffs(
                lambda c: _const_embed(ring_below, R, c), ring_below
            )
            if pi.degree == 0:
                z, sigma = q_emb, Poly.one(ring_below, var=v)
            else:
                lifted = lift_factorization(q_emb, [w, pi])
                z, sigma = lifted.factors
            w_polys.append(w)
            pi_polys.append(pi)
            z_polys.append(z)
            sigma_polys.append(sigma)
            tower.append(ExtensionRing(ring_below, z))

        if tower[-1].q != Fq.size ** cls.size:  # pragma: no cover
            raise DomainError("component residue degree does not match the class size")

        h = A.one()
        for v in range(r):
            quot, rem = divmod(A.moduli[v], q_polys[v])
            if not rem.is_zero():  # pragma: no cover
                raise DomainError("lifted factor does not divide the modulus")
            h = h * A.from_polynomial(quot)
        for v in range(1, r):
            h = h * _poly_over_tower_to_mpoly(sigma_polys[v], R, A, v)

        return ClassData(
            cls=cls,
            p_polys=p_polys,
            q_polys=q_polys,
            w_polys=w_polys,
            pi_polys=pi_polys,
            z_polys=z_polys,
            sigma_polys=sigma_polys,
            tower=tower,
            h=h,
        )

    def _attach_idempotents(self):
        A = self.ambient
        q = A.ring.q
        one = A.one()

        raw = []
        for cd in self.data:
            hbar = cd.h.residue()
            ebar = hbar ** (q**cd.cls.size - 1)
            if A.ring.t == 1:
                raw.append(ebar)
            else:
                raw.append(lift_idempotent(ebar.lift_to(A)))

        for idx, cd in enumerate(self.data):
            e = raw[idx]
            for jdx, other in enumerate(raw):
                if jdx != idx:
                    e = e * (one - other)
            cd.e = e

        total = A.zero()
        for cd in self.data:
            if cd.e * cd.e != cd.e:  # pragma: no cover
                raise DomainError("idempotent correction failed")
            total = total + cd.e
        if total != one:  # pragma: no cover
            raise DomainError("idempotents do not sum to one")
        for i, ci in enumerate(self.data):
            for cj in self.data[i + 1 :]:
                if not (ci.e * cj.e).is_zero():  # pragma: no cover
                    raise DomainError("idempotents are not orthogonal")

        for cd in self.data:
            cd.g = self._solve_cofactor(cd)

    def _solve_cofactor(self, cd):
        """g with g * h == e, by Newton iteration on the component."""
        A = self.ambient
        q = A.ring.q
        qc = q**cd.cls.size
        hbar = cd.h.residue()
        ebar = cd.e.residue()
        vbar = ebar * hbar ** (qc - 2) if qc > 2 else ebar
        v = vbar.lift_to(A) * cd.e if A.ring.t > 1 else vbar
        two_e = cd.e + cd.e
        for _ in range(A.ring.t.bit_length() + 1):
            prod = cd.h * v
            if prod == cd.e:
                return v
            v = v * (two_e - prod)
        raise DomainError("cofactor iteration did not converge")  # pragma: no cover

    # -- queries --------------------------------------------------------------

    @property
    def class_count(self):
        return len(self.classes)

    def idempotent_from_h(self, idx):
        """Route-independent idempotent: a plain power of h_C."""
        cd = self.data[idx]
        t = self.ambient.ring.t
        qc = self.ambient.ring.q ** cd.cls.size
        exponent = t * (qc**t - qc ** (t - 1))
        return cd.h**exponent

    def class_data_from_rep(self, idx, rep):
        """Recompute a class's data from an arbitrary representative."""
        return self._build_class(self.classes[idx], rep=rep)


def decompose(ambient, seed=0):
    """The cached decomposition of an ambient."""
    cached = getattr(ambient, "_decomposition", None)
    if cached is None:
        cached = Decomposition(ambient, seed=seed)
        ambient._decomposition = cached
    return cached


def class_polynomials(cls_index, decomposition):
    """Field-level (p, w, pi) family of one class."""
    cd = decomposition.data[cls_index]
    return cd.p_polys, cd.w_polys, cd.pi_polys


def compute_h(cls_index, decomposition):
    return decomposition.data[cls_index].h


def compute_idempotents(ambient, seed=0):
    """class -> (e_C, g_C) in canonical class order."""
    dec = decompose(ambient, seed=seed)
    return [(cd.e, cd.g) for cd in dec.data]


def component_ring(cls_index, decomposition):
    return decomposition.data[cls_index].component_ring
