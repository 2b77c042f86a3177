import cmath
from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from kostka_shoji.combinatorics import MultiPartition, enumerate_multipartitions, partitions
from kostka_shoji.config import Budgets
from kostka_shoji.errors import BudgetExceeded, InvalidInput
from kostka_shoji.exact import CyclotomicScalar
from kostka_shoji.wreath import (brute_force_group, centralizer_order, character_table,
                                 class_label, compose, identity_class, invert_class,
                                 orthogonality_report, symmetric_character)


def mp(*comps):
    return MultiPartition(comps)


E = ()


def to_complex(x):
    z = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


# -- classes ----------------------------------------------------------------------------

def test_centralizer_examples():
    assert centralizer_order(identity_class(3, 2)) == 2**3 * 6
    assert centralizer_order(mp(E, (1,))) == 2
    assert centralizer_order(mp((2,), E)) == 4


def test_invert_class_examples():
    assert invert_class(identity_class(2, 3)) == identity_class(2, 3)
    assert invert_class(mp(E, (1,), E)) == mp(E, E, (1,))
    for cls in enumerate_multipartitions(3, 2):
        assert invert_class(cls) == cls


@pytest.mark.parametrize("m, ell", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)])
def test_class_equation(m, ell):
    order = ell**m * factorial(m)
    assert sum(order // centralizer_order(c, ell) for c in enumerate_multipartitions(m, ell)) \
        == order


@pytest.mark.parametrize("m, ell, n_elements, n_classes", [(1, 2, 2, 2), (2, 2, 8, 5),
                                                          (2, 3, 18, 9), (3, 2, 48, 10),
                                                          (3, 3, 162, 22)])
def test_brute_force_group(m, ell, n_elements, n_classes):
    group = brute_force_group(m, ell)
    assert len(group.elements) == n_elements
    assert len(group.classes) == n_classes
    assert set(group.labels) == set(enumerate_multipartitions(m, ell))
    for lab, size in group.class_sizes().items():
        assert size * centralizer_order(lab, ell) == n_elements


def test_brute_force_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_group(6, 4, Budgets(max_brute_force_order=1000))


# -- symmetric group characters ---------------------------------------------------------

def test_symmetric_character_examples():
    assert symmetric_character((1, 1), (2,)) == 1
    assert symmetric_character((2,), (2,)) == -1
    assert symmetric_character((2, 1), (1, 1, 1)) == 2
    with pytest.raises(InvalidInput):
        symmetric_character((2,), (1,))


@pytest.mark.parametrize("r", range(1, 7))
def test_symmetric_characters_are_orthonormal(r):
    parts = partitions(r)
    z = {rho: centralizer_order(MultiPartition((rho,)), 1) for rho in parts}
    for a in parts:
        assert all(symmetric_character((1,) * r, rho) == 1 for rho in parts)
        for b in parts:
            inner = sum(symmetric_character(a, rho) * symmetric_character(b, rho)
                        * Fraction(1, z[rho])
                        for rho in parts)
            assert inner == (1 if a == b else 0)


# -- character tables -------------------------------------------------------------------

def test_table_examples():
    t = character_table(3, 2)
    triv = t.irreps.index(mp((1, 1, 1), E))
    assert all(v == 1 for v in t.values[triv])
    assert character_table(2, 2).value(mp((1,), (1,)), identity_class(2, 2)) == 2
    cyclic = character_table(1, 3)
    zeta = CyclotomicScalar.zeta_power(1, 3)
    for k, lam in enumerate(cyclic.irreps):
        k_comp = next(i for i, c in enumerate(lam) if c)
        for cls in cyclic.classes:
            color = next(i for i, c in enumerate(cls) if c)
            expected = CyclotomicScalar.zeta_power(k_comp * color, 3)
            assert cyclic.value(lam, cls) == expected
    assert cyclic.value(mp(E, (1,), E), mp(E, (1,), E)) == zeta


@pytest.mark.parametrize("m, ell", [(m, ell) for m in range(1, 5) for ell in range(1, 5)])
def test_orthogonality_and_degrees(m, ell):
    t = character_table(m, ell)
    assert orthogonality_report(t) == []
    degrees = t.degrees()
    assert all(d > 0 and int(d) == d for d in degrees)
    assert sum(d * d for d in degrees) == ell**m * factorial(m)


@pytest.mark.parametrize("m", range(1, 6))
def test_level_one_is_symmetric_group(m):
    t = character_table(m, 1)
    for lam in t.irreps:
        for cls in t.classes:
            assert t.value(lam, cls) == symmetric_character(lam[0], cls[0])


def _monomial_matrix(g, ell):
    m = len(g.perm)
    mat = np.zeros((m, m), dtype=complex)
    for j in range(m):
        mat[g.perm[j], j] = cmath.exp(2j * cmath.pi * g.colors[j] / ell)
    return mat


@pytest.mark.parametrize("m, ell", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_exterior_powers_of_reflection_rep_are_rows(m, ell):
    """Each exterior power of the defining monomial representation is irreducible, so its
    trace function, computed from explicit matrices, must be a row of the table."""
    group = brute_force_group(m, ell)
    t = character_table(m, ell)
    reps = {lab: group.elements[orb[0]] for lab, orb in zip(group.labels, group.classes)}
    matched = []
    for k in range(m + 1):
        traces = {}
        for lab, g in reps.items():
            coeffs = np.poly(-_monomial_matrix(g, ell))   # det(t + g), leading term first
            traces[lab] = coeffs[k]
        rows = [lam for lam in t.irreps
                if all(abs(to_complex(t.value(lam, c)) - traces[c]) < 1e-9 for c in t.classes)]
        assert len(rows) == 1
        matched.append(rows[0])
    assert matched[0] == mp((1,) * m, *([E] * (ell - 1)))
    assert len(set(matched)) == m + 1


def test_brute_force_class_labels_are_conjugation_invariant():
    ell = 3
    group = brute_force_group(2, ell)
    for g in group.elements[:6]:
        for h in group.elements:
            inv = next(x for x in group.elements
                       if compose(h, x, ell).perm == (0, 1) and
                       compose(h, x, ell).colors == (0, 0))
            assert class_label(compose(compose(h, g, ell), inv, ell), ell) == \
                class_label(g, ell)
