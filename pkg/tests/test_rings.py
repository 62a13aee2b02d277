"""Chain ring construction, arithmetic and the Teichmuller machinery."""

import itertools

import pytest

from chaincodes import (
    DomainError,
    ExtensionRing,
    Poly,
    extend_ring,
    ring_construct,
    ring_from_json,
    ring_to_json,
    ring_trace,
)


def test_z4_basics(z4):
    assert z4.size == 4
    assert z4.q == 2
    assert z4.residue_field.size == 2
    assert z4.a == z4.from_int(2)


def test_gr42_construction(gr42):
    assert gr42.size == 16
    assert gr42.q == 4
    # default modulus Y^2+Y+1 is irreducible over F_2
    assert [c.data for c in gr42.modulus.coeffs] == [1, 1, 1]


def test_truncated_ring(f3u2):
    assert f3u2.size == 9
    assert f3u2.q == 3
    assert (f3u2.a * f3u2.a).is_zero()


def test_construct_errors():
    with pytest.raises(DomainError):
        ring_construct({"kind": "galois", "p": 4, "t": 2, "l": 1})
    with pytest.raises(DomainError):
        ring_construct({"kind": "galois", "p": 2, "t": 0, "l": 1})
    with pytest.raises(DomainError):
        # Y^2+1 = (Y+1)^2 over F_2 is reducible
        ring_construct({"kind": "galois", "p": 2, "t": 2, "l": 2, "modulus": [1, 0, 1]})
    with pytest.raises(DomainError):
        ring_construct({"kind": "nonsense", "p": 2, "t": 2, "l": 1})


def test_residue(z4, f3u2):
    assert z4.from_int(3).residue() == z4.residue_field.from_int(1)
    assert z4.from_int(2).residue().is_zero()
    x = f3u2.from_coords([2, 1])  # 2 + u
    assert x.residue() == f3u2.residue_field.from_int(2)


def test_valuation(z4):
    assert z4.from_int(2).valuation() == 1
    assert z4.from_int(3).valuation() == 0
    assert z4.zero.valuation() == 2


def test_valuation_multiplicative(z4, gr42, f3u2):
    for ring in (z4, gr42, f3u2):
        for a, b in itertools.product(ring.elements(), repeat=2):
            assert (a * b).valuation() == min(
                a.valuation() + b.valuation(), ring.t
            )


def test_units_invert_exhaustively(z4, gr42, f3u2):
    for ring in (z4, gr42, f3u2):
        units = 0
        for x in ring.elements():
            if x.valuation() == 0:
                units += 1
                assert ring.unit_inverse(x) * x == ring.one
            else:
                with pytest.raises(DomainError):
                    ring.unit_inverse(x)
        assert units == ring.size - ring.size // ring.q


def test_ideals_form_chain(z4, gr42):
    # every additively closed, R-scaled subset generated by one element is <a^k>
    for ring in (z4, gr42):
        apowers = []
        cur = ring.one
        for k in range(ring.t + 1):
            apowers.append({(x * cur).data for x in ring.elements()})
            cur = cur * ring.a
        for x in ring.elements():
            principal = {(y * x).data for y in ring.elements()}
            assert principal == apowers[x.valuation()]


def test_extend_ring(z4, gr42):
    ext = extend_ring(z4, Poly.from_ints(z4, [1, 1, 1]))
    assert ext.size == 16 and ext.q == 4 and ext.t == 2
    assert ext.embed(z4.from_int(3)) == ext.from_int(3)
    # degree-1 extension is isomorphic to the base
    triv = extend_ring(z4, Poly.from_ints(z4, [-1, 1]))
    assert triv.size == 4 and triv.q == 2
    with pytest.raises(DomainError):
        extend_ring(z4, Poly.from_ints(z4, [1, 0, 1]))
    # extension of GR(4,2) by a residue-irreducible cubic: GR(4,6)-sized
    fq = gr42.residue_field
    cubic = None
    for rank in range(fq.size**3):
        coeffs, r = [], rank
        for _ in range(3):
            coeffs.append(fq.from_rank(r % fq.size))
            r //= fq.size
        cand = Poly(fq, coeffs + [fq.one])
        from chaincodes.polys import is_irreducible

        if is_irreducible(cand):
            cubic = cand.map_coeffs(gr42.lift, gr42)
            break
    big = extend_ring(gr42, cubic)
    assert big.q == 4**3 and big.size == 4**6 and big.t == 2


def test_teichmuller_sets(z4, gr42, f3u2):
    assert sorted(x.data for x in z4.teichmuller_set()) == [0, 1]
    got = {tuple(x.coords()) for x in gr42.teichmuller_set()}
    assert got == {(0, 0), (1, 0), (0, 1), (3, 3)}  # {0, 1, w, 3w+3}
    assert {tuple(x.coords()) for x in f3u2.teichmuller_set()} == {
        (0, 0),
        (1, 0),
        (2, 0),
    }


def test_teichmuller_properties(gr42):
    ts = gr42.teichmuller_set()
    residues = {tuple(x.residue().coords()) for x in ts}
    assert len(residues) == gr42.q  # bijective onto the residue field
    for x in ts:
        assert x**gr42.q == x
        for y in ts:
            assert x * y in ts  # closed under multiplication


def test_adic_digits(gr42):
    for x in gr42.elements():
        digits = gr42.adic_digits(x)
        acc = gr42.zero
        apow = gr42.one
        for g in digits:
            assert g ** gr42.q == g
            acc = acc + apow * g
            apow = apow * gr42.a
        assert acc == x


def test_ring_trace(z4, gr42):
    w = gr42.from_coords([0, 1])
    assert ring_trace(gr42, w) == z4.from_int(3)  # w + w^2 = 3
    assert ring_trace(gr42, gr42.one) == z4.from_int(2)
    assert ring_trace(gr42, gr42.zero) == z4.zero
    # trace is Z4-linear
    for x in gr42.elements():
        for c in z4.elements():
            assert ring_trace(gr42, gr42.embed(c) * x) == c * ring_trace(gr42, x)


def test_default_moduli_are_minimal_irreducibles():
    from chaincodes.polys import is_irreducible
    from chaincodes.rings import _IRREDUCIBLE_TABLE, IntegerModRing, default_modulus

    for (p, deg), entry in sorted(_IRREDUCIBLE_TABLE.items()):
        field = IntegerModRing(p, 1)
        assert is_irreducible(Poly.from_ints(field, entry))
        # minimal by coefficient rank: nothing smaller is irreducible
        rank = sum(c * p**i for i, c in enumerate(entry[:-1]))
        for smaller in range(rank):
            coeffs, r = [], smaller
            for _ in range(deg):
                coeffs.append(r % p)
                r //= p
            assert not is_irreducible(Poly.from_ints(field, coeffs + [1]))
    # the search fallback agrees with the table and covers missing degrees
    assert default_modulus(2, 3) == (1, 1, 0, 1)
    assert default_modulus(11, 2)[-1] == 1


def test_json_round_trip(z4, gr42, f3u2):
    for ring in (z4, gr42, f3u2):
        desc = ring_to_json(ring)
        again = ring_from_json(desc)
        assert again == ring


def test_element_serialization(gr42):
    for x in gr42.elements():
        assert gr42.from_coords(x.coords()) == x
        assert all(0 <= c < 4 for c in x.coords())


def test_extension_of_truncated(f3u2):
    # generic extension works over the truncated family too
    ext = ExtensionRing(f3u2, Poly.from_ints(f3u2, [1, 0, 1]))
    assert ext.q == 9 and ext.t == 2 and ext.size == 81
    for x in ext.elements():
        if x.valuation() == 0:
            assert ext.unit_inverse(x) * x == ext.one
