import pytest

from kostka_shoji.classical import charge, kostka_foulkes, semistandard_tableaux
from kostka_shoji.combinatorics import dominates, partitions
from kostka_shoji.exact import GradedPolynomial


def poly(**terms):
    return GradedPolynomial({int(k[1:]): v for k, v in terms.items()})


# textbook values of K_{lam, mu}(q)
KNOWN = [
    ((2, 1), (1, 1, 1), poly(q1=1, q2=1)),
    ((3,), (1, 1, 1), poly(q3=1)),
    ((3,), (2, 1), poly(q1=1)),
    ((4,), (2, 2), poly(q2=1)),
    ((3, 1), (2, 1, 1), poly(q1=1, q2=1)),
    ((2, 2), (1, 1, 1, 1), poly(q2=1, q4=1)),
    ((3, 1), (1, 1, 1, 1), poly(q3=1, q4=1, q5=1)),
    ((2, 2), (2, 1, 1), poly(q1=1)),
    ((2, 1, 1), (1, 1, 1, 1), poly(q1=1, q2=1, q3=1)),
]


@pytest.mark.parametrize("lam, mu, expected", KNOWN)
def test_known_values(lam, mu, expected):
    assert kostka_foulkes(lam, mu) == expected


def test_charge_examples():
    assert charge([1, 2]) == 1
    assert charge([2, 1]) == 0
    assert charge([3, 2, 1]) == 0
    assert charge([1, 2, 3]) == 3


@pytest.mark.parametrize("m", range(1, 7))
def test_specializations(m):
    parts = partitions(m)
    for lam in parts:
        for mu in parts:
            k = kostka_foulkes(lam, mu)
            # q = 1 gives the Kostka number
            assert k(1) == len(semistandard_tableaux(lam, mu))
            if lam == mu:
                assert k == GradedPolynomial.one()
            elif k:
                assert dominates(lam, mu)
        # K_{(m), lam} = q^{n(lam)}
        n_lam = sum(i * p for i, p in enumerate(lam))
        assert kostka_foulkes((m,), lam) == GradedPolynomial.monomial(n_lam)
