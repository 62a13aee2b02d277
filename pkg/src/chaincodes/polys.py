"""Exact polynomial arithmetic over chain rings and finite fields.

Univariate polynomials (`Poly`) are coefficient tuples in ascending degree
with a nonzero leading coefficient; the zero polynomial has an empty tuple.
Multivariate residue classes (`MPoly`) live in a fixed quotient
R[X_1,...,X_r]/<t_1(X_1),...,t_r(X_r)> (an `Ambient`) and are kept in normal
form: a dense coefficient vector indexed by the mixed-radix rank of the
exponent tuple, X_1 varying fastest.

Everything here is generic over the coefficient ring: it only relies on
elements supporting +, -, *, ==, ``is_zero`` and a ``ring`` attribute with
``zero``/``one``/``from_int``/``unit_inverse``.
"""

from __future__ import annotations

from .errors import DomainError


class Poly:
    """Univariate polynomial with exact coefficients, ascending degree."""

    __slots__ = ("ring", "coeffs", "var")

    def __init__(self, ring, coeffs, var=0):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def from_ints(cls, ring, ints, var=0):
        return cls(ring, [ring.from_int(c) for c in ints], var=var)

    @classmethod
    def constant(cls, ring, c, var=0):
        return cls(ring, [c], var=var)

    @classmethod
    def one(cls, ring, var=0):
        return cls(ring, [ring.one], var=var)

    @classmethod
    def zero(cls, ring, var=0):
        return cls(ring, [], var=var)

    @classmethod
    def x(cls, ring, var=0):
        return cls(ring, [ring.zero, ring.one], var=var)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    @property
    def leading(self):
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly(self.ring, [self.ring.from_int(other)], var=self.var)
        # a bare ring element
        return Poly(self.ring, [other], var=self.var)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            self.ring,
            [self.coeff(i) + other.coeff(i) for i in range(n)],
            var=self.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs], var=self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ring, var=self.var)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative polynomial power")
        result = Poly.one(self.ring, var=self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Exact division with remainder; the divisor needs a unit leading
        coefficient (monic divisors in particular always work)."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.leading
        if lead.valuation() != 0:
            raise DomainError("divisor leading coefficient is not a unit")
        inv = lead.ring.unit_inverse(lead)
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.ring, var=self.var), self
        quo = [self.ring.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv
            quo[k] = c
            if c.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return (
            Poly(self.ring, quo, var=self.var),
            Poly(self.ring, rem[: other.degree], var=self.var),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = self._coerce(other)
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def evaluate(self, x, embed=None):
        """Horner evaluation at ``x``; ``embed`` maps coefficients into
        x's ring when that ring is an extension."""
        if embed is None:
            embed = lambda c: c
        acc = x.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + embed(c)
        return acc

    def derivative(self):
        return Poly(
            self.ring,
            [self.coeffs[i] * self.ring.from_int(i) for i in range(1, len(self.coeffs))],
            var=self.var,
        )

    def monic(self):
        """Unit-normalize so the leading coefficient is one."""
        if self.is_zero() or self.is_monic():
            return self
        inv = self.ring.unit_inverse(self.leading)
        return Poly(self.ring, [c * inv for c in self.coeffs], var=self.var)

    def map_coeffs(self, fn, ring=None):
        return Poly(ring if ring is not None else self.ring, [fn(c) for c in self.coeffs], var=self.var)

    def residue(self):
        """Coefficientwise reduction to the residue field."""
        return self.map_coeffs(lambda c: c.residue(), self.ring.residue_field)

    def shift(self, k):
        if self.is_zero():
            return self
        return Poly(self.ring, [self.ring.zero] * k + list(self.coeffs), var=self.var)

    def rank_key(self):
        """Deterministic sort key: (degree, coefficient rank), the rank
        comparing coefficients from the leading one down."""
        return (self.degree, tuple(tuple(c.coords()) for c in reversed(self.coeffs)))

    def __repr__(self):
        return f"Poly({poly_to_text(self)!r})"


def poly_gcd(f, g):
    """Monic gcd over a field."""
    while not g.is_zero():
        f, g = g, f % g
    if f.is_zero():
        return f
    return f.monic()


def poly_ext_gcd(f, g):
    """Extended Euclid over a field: returns (d, s, t) with s*f + t*g = d, d monic."""
    ring = f.ring
    r0, r1 = f, g
    s0, s1 = Poly.one(ring, var=f.var), Poly.zero(ring, var=f.var)
    t0, t1 = Poly.zero(ring, var=f.var), Poly.one(ring, var=f.var)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = ring.unit_inverse(r0.leading)
    unit = Poly.constant(ring, inv, var=f.var)
    return r0 * unit, s0 * unit, t0 * unit


def pow_mod(f, e, mod):
    """f**e modulo ``mod``."""
    result = Poly.one(f.ring, var=f.var)
    base = f % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _prime_factors(n):
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


def is_irreducible(f):
    """Irreducibility over the coefficient field (Rabin's test)."""
    field = f.ring
    if field.t != 1:
        raise DomainError("irreducibility test requires field coefficients")
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    f = f.monic()
    q = field.size
    x = Poly.x(field, var=f.var)
    h = pow_mod(x, q**d, f)
    if h != x % f:
        return False
    for ell in _prime_factors(d):
        h = pow_mod(x, q ** (d // ell), f)
        if poly_gcd(h - x, f).degree != 0:
            return False
    return True


def poly_to_text(f, var_names=None):
    """Render a polynomial in the 'c*x^k' text format (univariate)."""
    if f.is_zero():
        return "0"
    name = "x" if var_names is None else var_names[f.var]
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if c.is_zero():
            continue
        cs = c.int_repr()
        if i == 0:
            terms.append(cs)
        else:
            xs = name if i == 1 else f"{name}^{i}"
            terms.append(xs if cs == "1" else f"{cs}*{xs}")
    return "+".join(terms)


def parse_poly_text(text, ring, nvars=1):
    """Parse the term format 'c*x1^a1*...*xr^ar' joined by '+' or '-'.

    Univariate input may use a bare variable letter; coefficients are
    integers reduced into the ring. Returns a dict exponent tuple -> element.
    """
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise DomainError("empty polynomial string")
    # split into signed terms
    terms = []
    cur = ""
    sign = 1
    for ch in s:
        if ch in "+-" and cur:
            terms.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and not cur:
            if ch == "-":
                sign = -sign
        else:
            cur += ch
    if cur:
        terms.append((sign, cur))
    out = {}
    for sign, term in terms:
        coeff = 1
        exps = [0] * nvars
        for factor in term.split("*"):
            if not factor:
                raise DomainError(f"malformed term in {text!r}")
            if factor[0].isdigit():
                coeff *= int(factor)
                continue
            namepart = factor
            power = 1
            if "^" in factor:
                namepart, ppart = factor.split("^", 1)
                power = int(ppart)
            idx = _var_index(namepart, nvars)
            exps[idx] += power
        key = tuple(exps)
        add = ring.from_int(sign * coeff)
        out[key] = out.get(key, ring.zero) + add
    return {e: c for e, c in out.items() if not c.is_zero()}


def _var_index(name, nvars):
    name = name.lower()
    if len(name) > 1 and name[0].isalpha() and name[1:].isdigit():
        idx = int(name[1:]) - 1
    elif len(name) == 1 and name.isalpha():
        # bare letters: x is the first variable, y/z/w the next ones
        idx = {"x": 0, "y": 1, "z": 2, "w": 3}.get(name, 0)
        if nvars == 1:
            idx = 0
    else:
        raise DomainError(f"bad variable name {name!r}")
    if not 0 <= idx < nvars:
        raise DomainError(f"variable {name!r} out of range for {nvars} variables")
    return idx


def parse_univariate(text, ring, var=0):
    terms = parse_poly_text(text, ring, nvars=1)
    if not terms:
        return Poly.zero(ring, var=var)
    deg = max(e[0] for e in terms)
    coeffs = [ring.zero] * (deg + 1)
    for (e,), c in terms.items():
        coeffs[e] = c
    return Poly(ring, coeffs, var=var)


class Ambient:
    """The quotient algebra R[X_1,...,X_r]/<t_1(X_1),...,t_r(X_r)>.

    Construction checks each residue modulus is square-free (the semisimple
    requirement) unless ``unchecked`` is passed; the term order (X_1 fastest)
    is frozen here and shared by every coefficient vector downstream.
    """

    def __init__(self, ring, moduli, unchecked=False):
        moduli = tuple(moduli)
        if not moduli:
            raise DomainError("ambient needs at least one modulus")
        for i, m in enumerate(moduli):
            if not m.is_monic() or m.degree < 1:
                raise DomainError(f"modulus {i + 1} must be monic of degree >= 1")
        self.ring = ring
        self.moduli = tuple(
            Poly(ring, m.coeffs, var=i) for i, m in enumerate(moduli)
        )
        self.degs = tuple(m.degree for m in moduli)
        self.r = len(moduli)
        strides = [1]
        for d in self.degs[:-1]:
            strides.append(strides[-1] * d)
        self.strides = tuple(strides)
        self.n = strides[-1] * self.degs[-1]
        self.unchecked = bool(unchecked)
        self.semisimple = self._check_semisimple()
        if not self.semisimple and not unchecked:
            raise DomainError(
                "residue moduli are not square-free; pass unchecked=True to force"
            )
        self._redux = [self._reduction_table(m) for m in self.moduli]
        self._monomul_cache = {}
        self._residue_ambient = None
        self._tau_perm = None

    def _check_semisimple(self):
        for m in self.moduli:
            mr = m.residue() if self.ring.t > 1 else m
            if poly_gcd(mr, mr.derivative()).degree != 0:
                return False
        return True

    @property
    def abelian(self):
        return self.exponents is not None

    @property
    def exponents(self):
        """(e_1,...,e_r) when every modulus is X_i^e_i - 1, else None."""
        out = []
        minus_one = -self.ring.one
        for m in self.moduli:
            e = m.degree
            ok = m.coeff(0) == minus_one and all(
                m.coeff(i).is_zero() for i in range(1, e)
            )
            if not ok:
                return None
            out.append(e)
        return tuple(out)

    def _reduction_table(self, m):
        # X^d mod m for d in [0, 2*(deg-1)], stored sparse
        d = m.degree
        table = [[(k, self.ring.one)] for k in range(d)]
        cur = Poly.x(self.ring, var=m.var) ** (d - 1) if d > 1 else Poly.one(self.ring)
        cur = cur % m
        for _ in range(d - 1):
            cur = (cur * Poly.x(self.ring, var=m.var)) % m
            table.append([(j, c) for j, c in enumerate(cur.coeffs) if not c.is_zero()])
        return table

    def rank(self, exps):
        return sum(e * s for e, s in zip(exps, self.strides))

    def exps(self, rank):
        out = []
        for d in self.degs:
            out.append(rank % d)
            rank //= d
        return tuple(out)

    def key(self):
        return (
            self.ring,
            tuple(tuple(c.coords() for c in m.coeffs) for m in self.moduli),
        )

    def __eq__(self, other):
        return isinstance(other, Ambient) and self.key() == other.key()

    def __hash__(self):
        return hash(("ambient", self.ring, self.degs))

    def __repr__(self):
        mods = ", ".join(poly_to_text(m, self.var_names()) for m in self.moduli)
        return f"Ambient({self.ring!r}; {mods})"

    def var_names(self):
        if self.r == 1:
            return ("x",)
        return tuple(f"x{i + 1}" for i in range(self.r))

    @property
    def residue_ambient(self):
        """Same moduli over the residue field (identity when t = 1)."""
        if self.ring.t == 1:
            return self
        if self._residue_ambient is None:
            self._residue_ambient = Ambient(
                self.ring.residue_field,
                [m.residue() for m in self.moduli],
                unchecked=self.unchecked,
            )
        return self._residue_ambient

    # -- element construction ------------------------------------------------

    def zero(self):
        return MPoly(self, (self.ring.zero,) * self.n)

    def one(self):
        return self.constant(self.ring.one)

    def constant(self, c):
        v = [self.ring.zero] * self.n
        v[0] = c
        return MPoly(self, v)

    def monomial(self, exps, c=None):
        v = [self.ring.zero] * self.n
        v[self.rank(tuple(exps))] = self.ring.one if c is None else c
        return MPoly(self, v)

    def from_vector(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != self.n:
            raise DomainError(f"vector length {len(coeffs)} != ambient length {self.n}")
        return MPoly(self, coeffs)

    def from_terms(self, terms):
        """Normal form of a raw exponent dict {exps: coeff}."""
        vec = [self.ring.zero] * self.n
        for exps, c in terms.items():
            if c.is_zero():
                continue
            for rank, cc in self._reduce_monomial(exps, c):
                vec[rank] = vec[rank] + cc
        return MPoly(self, vec)

    def _reduce_monomial(self, exps, c):
        # reduce one raw monomial to normal form, variable by variable
        parts = [(0, c)]
        for k, e in enumerate(exps):
            m = self.moduli[k]
            d = self.degs[k]
            if e < d:
                expansion = [(e, self.ring.one)]
            else:
                xe = pow_mod(Poly.x(self.ring, var=k), e, m)
                expansion = [(j, cc) for j, cc in enumerate(xe.coeffs) if not cc.is_zero()]
            stride = self.strides[k]
            parts = [
                (rank + j * stride, cc * ce)
                for rank, cc in parts
                for j, ce in expansion
            ]
        return parts

    def from_polynomial(self, f):
        """Embed a univariate Poly (in variable f.var) into the quotient."""
        return self.from_terms(
            {
                tuple(i if k == f.var else 0 for k in range(self.r)): c
                for i, c in enumerate(f.coeffs)
            }
        )

    def parse(self, text):
        return self.from_terms(parse_poly_text(text, self.ring, nvars=self.r))

    def from_json(self, obj):
        """Inverse of MPoly.to_json."""
        if obj.get("vars", self.r) != self.r:
            raise DomainError("polynomial JSON has the wrong number of variables")
        terms = {}
        for exps, c in obj["coeffs"]:
            elem = (
                self.ring.from_coords(c) if isinstance(c, list) else self.ring.from_int(c)
            )
            terms[tuple(exps)] = elem
        return self.from_terms(terms)

    def monomial_product(self, ra, rb):
        """Normal form of the product of two basis monomials, sparse."""
        key = (ra, rb) if ra <= rb else (rb, ra)
        hit = self._monomul_cache.get(key)
        if hit is not None:
            return hit
        ea = self.exps(ra)
        eb = self.exps(rb)
        parts = [(0, self.ring.one)]
        for k in range(self.r):
            expansion = self._redux[k][ea[k] + eb[k]]
            stride = self.strides[k]
            parts = [
                (rank + j * stride, cc * ce)
                for rank, cc in parts
                for j, ce in expansion
            ]
        parts = tuple(parts)
        self._monomul_cache[key] = parts
        return parts

    def tau_permutation(self):
        """Rank permutation of the inversion X_i -> X_i^{e_i - 1} (abelian)."""
        if self._tau_perm is None:
            es = self.exponents
            if es is None:
                raise DomainError("the inversion automorphism needs an abelian ambient")
            perm = []
            for rank in range(self.n):
                exps = self.exps(rank)
                perm.append(self.rank(tuple((-a) % e for a, e in zip(exps, es))))
            self._tau_perm = tuple(perm)
        return self._tau_perm


class MPoly:
    """A residue class in an `Ambient`, always in normal form."""

    __slots__ = ("ambient", "coeffs")

    def __init__(self, ambient, coeffs):
        self.ambient = ambient
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return self.ambient.constant(self.ambient.ring.from_int(other))
        return self.ambient.constant(other)  # bare ring element

    def __add__(self, other):
        other = self._coerce(other)
        return MPoly(self.ambient, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ambient, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, int):
                c = self.ambient.ring.from_int(other)
            else:
                c = other
            return MPoly(self.ambient, [a * c for a in self.coeffs])
        amb = self.ambient
        acc = [amb.ring.zero] * amb.n
        for ra, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            for rb, cb in enumerate(other.coeffs):
                if cb.is_zero():
                    continue
                c = ca * cb
                for rank, cc in amb.monomial_product(ra, rb):
                    acc[rank] = acc[rank] + c * cc
        return MPoly(amb, acc)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative power in quotient algebra")
        result = self.ambient.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self._coerce(other)
        return self.ambient == other.ambient and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def weight(self):
        """Hamming weight of the coefficient vector."""
        return sum(1 for c in self.coeffs if not c.is_zero())

    def valuation(self):
        """Minimum coefficient valuation (t for the zero class)."""
        return min((c.valuation() for c in self.coeffs), default=self.ambient.ring.t)

    def coeff_vector(self):
        return self.coeffs

    def residue(self):
        """Image in the residue quotient algebra."""
        ra = self.ambient.residue_ambient
        if ra is self.ambient:
            return self
        return MPoly(ra, [c.residue() for c in self.coeffs])

    def lift_to(self, ambient):
        """Coefficientwise lift into an ambient over the full chain ring."""
        return MPoly(ambient, [ambient.ring.lift(c) for c in self.coeffs])

    def tau(self):
        """The weight-preserving inversion automorphism X_i -> X_i^{-1}."""
        perm = self.ambient.tau_permutation()
        out = [self.ambient.ring.zero] * self.ambient.n
        for rank, c in enumerate(self.coeffs):
            out[perm[rank]] = c
        return MPoly(self.ambient, out)

    def evaluate(self, point, embed=None):
        """Evaluate at a tuple of elements of a (possibly larger) field."""
        if embed is None:
            embed = lambda c: c
        target = point[0].ring
        acc = target.zero
        amb = self.ambient
        for rank, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            term = embed(c)
            for x, e in zip(point, amb.exps(rank)):
                if e:
                    term = term * x**e
            acc = acc + term
        return acc

    def to_text(self):
        amb = self.ambient
        names = amb.var_names()
        terms = []
        for rank in range(amb.n - 1, -1, -1):
            c = self.coeffs[rank]
            if c.is_zero():
                continue
            exps = amb.exps(rank)
            factors = []
            cs = c.int_repr()
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                terms.append(cs)
            elif cs == "1":
                terms.append("*".join(factors))
            else:
                terms.append("*".join([cs] + factors))
        return "+".join(terms) if terms else "0"

    def to_json(self):
        return {
            "vars": self.ambient.r,
            "coeffs": [
                [list(self.ambient.exps(rank)), c.json_repr()]
                for rank, c in enumerate(self.coeffs)
                if not c.is_zero()
            ],
        }

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"
