"""Residue-field factorization, splitting fields and cyclotomic classes."""

from math import lcm

import pytest

from chaincodes import (
    Ambient,
    DomainError,
    FiniteField,
    Poly,
    cyclotomic_classes,
    factor_squarefree,
    is_squarefree,
    splitting_data,
)
from chaincodes.factor import orbit_length


def test_is_squarefree():
    f2 = FiniteField(2)
    assert is_squarefree(Poly.from_ints(f2, [1, 0, 0, 0, 0, 0, 0, 1]))  # x^7+1
    assert not is_squarefree(Poly.from_ints(f2, [1, 0, 1]))  # (x+1)^2
    assert is_squarefree(Poly.from_ints(f2, [0, 1]))  # x


def test_factor_x7_plus_1():
    f2 = FiniteField(2)
    f = Poly.from_ints(f2, [1, 0, 0, 0, 0, 0, 0, 1])
    facs = factor_squarefree(f, seed=0)
    assert [[c.data for c in g.coeffs] for g in facs] == [
        [1, 1],
        [1, 1, 0, 1],
        [1, 0, 1, 1],
    ]
    prod = Poly.one(f2)
    for g in facs:
        prod = prod * g
    assert prod == f


def test_factor_seed_independent_as_set():
    f2 = FiniteField(2)
    f = Poly.from_ints(f2, [1, 0, 0, 0, 0, 0, 0, 1])
    base = {tuple(c.data for c in g.coeffs) for g in factor_squarefree(f, seed=0)}
    for seed in (1, 2, 3):
        got = {tuple(c.data for c in g.coeffs) for g in factor_squarefree(f, seed=seed)}
        assert got == base


def test_factor_irreducible_returns_itself():
    f3 = FiniteField(3)
    f = Poly.from_ints(f3, [1, 0, 1])  # x^2+1, no roots in F_3
    assert factor_squarefree(f) == [f]


def test_factor_over_f4():
    f4 = FiniteField(2, 2)
    f = Poly.from_ints(f4, [1, 1, 1])
    facs = factor_squarefree(f, seed=0)
    assert len(facs) == 2 and all(g.degree == 1 for g in facs)
    # the roots are omega and omega^2 = omega + 1
    roots = {tuple((-g.coeff(0)).coords()) for g in facs}
    assert roots == {(0, 1), (1, 1)}


def test_factor_rejects_bad_input():
    f2 = FiniteField(2)
    with pytest.raises(DomainError):
        factor_squarefree(Poly.from_ints(f2, [1, 0, 1]))


def test_splitting_data(amb_x7, amb_x3y3, amb_z9):
    sd = splitting_data(amb_x7)
    assert sd.M == 3 and len(sd.roots[0]) == 7
    sd2 = splitting_data(amb_x3y3)
    assert sd2.M == 2 and all(len(h) == 3 for h in sd2.roots)
    sd3 = splitting_data(amb_z9)
    assert sd3.M == 1 and all(len(h) == 2 for h in sd3.roots)
    # exponent labels correspond to actual roots of the modulus
    xi = sd.primitive_roots[0]
    assert xi**7 == sd.field.one
    seen = {tuple((xi**a).coords()) for a in sd.roots[0]}
    assert len(seen) == 7


def test_classes_x7(amb_x7):
    classes = cyclotomic_classes(amb_x7)
    assert [set(m[0] for m in c.members) for c in classes] == [
        {0},
        {1, 2, 4},
        {3, 5, 6},
    ]
    assert [c.size for c in classes] == [1, 3, 3]


def test_classes_x3y3(amb_x3y3):
    classes = cyclotomic_classes(amb_x3y3)
    assert [c.rep for c in classes] == [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)]
    assert [c.size for c in classes] == [1, 2, 2, 2, 2]
    members = [set(c.members) for c in classes]
    assert {(1, 2), (2, 1)} in members


def test_classes_z9(amb_z9):
    classes = cyclotomic_classes(amb_z9)
    assert len(classes) == 4
    assert all(c.size == 1 for c in classes)


def test_class_partition_and_lcm(amb_x7, amb_x3y3, amb_z9):
    for amb in (amb_x7, amb_x3y3, amb_z9):
        classes = cyclotomic_classes(amb)
        q = amb.ring.q
        exps = amb.exponents
        assert sum(c.size for c in classes) == amb.n
        seen = set()
        for c in classes:
            for m in c.members:
                assert m not in seen
                seen.add(m)
            ds = [orbit_length(lab, e, q) for lab, e in zip(c.rep, exps)]
            assert c.size == lcm(*ds)


def test_classes_nonabelian_labels(z4):
    # a non-abelian semisimple modulus: x^3 + 2x^2 + x + 3 (a basic irreducible)
    amb = Ambient(z4, [Poly.from_ints(z4, [3, 1, 2, 1])])
    sd = splitting_data(amb)
    assert not sd.exponent_form
    classes = cyclotomic_classes(amb, sd)
    assert len(classes) == 1 and classes[0].size == 3
