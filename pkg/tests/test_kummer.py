import pytest

from kgenus import exactnum as xn
from kgenus import kummer as km
from oracles import fp_rank, second_primitive_root


def kinds(rad):
    return [g.kind for g in rad.generators]


def test_radical_case_table():
    assert kinds(km.radical(2, 3)) == [km.MINUS_ONE, km.TWO]
    assert kinds(km.radical(2, 3, plus_variant=True)) == [km.TWO]
    assert kinds(km.radical(2, 4)) == [km.TWO]
    assert kinds(km.radical(2, 4, plus_variant=True)) == [km.TWO]
    assert kinds(km.radical(3, 3)) == [km.PRIME_P]
    assert kinds(km.radical(5, 3)) == [km.CYCLOTOMIC_XI]
    assert km.radical(5, 3).generators[0].j == -2
    assert km.radical(5, 3).conditional_on_vandiver
    assert kinds(km.radical(3, 2)) == [km.ZETA_P]
    assert kinds(km.radical(5, 4)) == [km.ZETA_P]
    assert kinds(km.radical(5, 5)) == [km.PRIME_P]
    assert km.radical(5, 6).dim == 0
    assert km.radical(5, 6).conditional_on_vandiver
    assert km.radical(7, 7).generators[0].kind == km.PRIME_P  # 7 = 1 mod 6


def test_radical_dimensions_match_examples():
    assert km.radical(2, 3).dim == 2
    assert km.radical(3, 3).dim == 1
    assert km.radical(5, 3).dim == 1


def test_generator_validation():
    with pytest.raises(ValueError):
        km.RadicalGenerator("nonsense")
    with pytest.raises(ValueError):
        km.RadicalGenerator(km.CYCLOTOMIC_XI, j=1)  # odd index
    with pytest.raises(ValueError):
        km.RadicalGenerator(km.TWO, j=2)


def test_frobenius_vector_examples():
    rad = km.radical(2, 3)
    assert km.frobenius_vector(rad, 5).components == (0, 1)
    assert km.frobenius_vector(rad, 7).components == (1, 0)
    assert km.frobenius_vector(km.radical(3, 2), 19).components == (0,)  # 19 = 1 mod 9


def test_frobenius_vector_rejects():
    rad3 = km.radical(3, 2)
    with pytest.raises(ValueError):
        km.frobenius_vector(rad3, 5)  # 5 != 1 mod 3
    with pytest.raises(ValueError):
        km.frobenius_vector(rad3, 3)  # ell = p
    with pytest.raises(ValueError):
        km.frobenius_vector(km.radical(2, 3), 2)
    with pytest.raises(ValueError):
        km.frobenius_vector(rad3, 91)  # not prime


def test_primitivity_rank_examples():
    rad = km.radical(2, 3)
    report = km.primitivity_rank(rad, {3, 5})
    assert (report.t, report.independent) == (2, True)
    report = km.primitivity_rank(rad, {7, 23})
    assert (report.t, report.independent) == (1, False)
    assert report.maximal_subset == frozenset({7})
    report = km.primitivity_rank(rad, set())
    assert (report.t, report.independent, report.maximal_subset) == \
        (0, True, frozenset())


def test_primitivity_rank_matches_external_rank():
    for p, i in ((2, 3), (2, 4), (3, 3), (5, 3)):
        rad = km.radical(p, i)
        primes = [ell for ell in range(3, 120)
                  if xn.is_prime(ell) and ell != p and (p == 2 or ell % p == 1)]
        rows = [km.frobenius_vector(rad, ell).components for ell in primes]
        assert km.primitivity_rank(rad, primes).t == fp_rank(rows, p)


def test_scaling_by_primitive_root_choice():
    # replacing the canonical primitive root multiplies each row by a
    # nonzero scalar of F_p, so zero patterns and ranks are unchanged
    for p, i in ((3, 3), (5, 3), (7, 3), (2, 3)):
        rad = km.radical(p, i)
        for ell in range(5, 501):  # 3 has a single primitive root
            if not xn.is_prime(ell) or ell == p or (p != 2 and ell % p != 1):
                continue
            base = km.frobenius_vector(rad, ell).components
            other = km.frobenius_vector(rad, ell,
                                        root=second_primitive_root(ell)).components
            scalars = {
                c_other * pow(c_base, -1, p) % p
                for c_base, c_other in zip(base, other) if c_base
            }
            assert all((a == 0) == (b == 0) for a, b in zip(base, other))
            assert len(scalars) <= 1


def test_p2_fast_path_agrees_with_characters():
    rad = km.radical(2, 3)
    ell = 3
    while ell <= 10**4:
        if xn.is_prime(ell):
            minus_one, two = km.frobenius_vector(rad, ell).components
            assert minus_one == xn.power_residue_character(-1, ell, 2)
            assert two == xn.power_residue_character(2, ell, 2)
        ell += 2
    # mod-8 rule for the even-twist radical
    rad_even = km.radical(2, 4)
    for ell in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        expect = 1 if ell % 8 in (3, 5) else 0
        assert km.frobenius_vector(rad_even, ell).components == (expect,)


def test_zeta_path_agrees_with_character_path():
    for p in (3, 5, 7):
        rad = km.radical(p, p - 1)  # zeta_p radical
        ell = 2 * p + 1
        while ell <= 10**4:
            if xn.is_prime(ell) and ell % p == 1:
                component, = km.frobenius_vector(rad, ell).components
                root = xn.primitive_root(ell)
                zeta_image = pow(root, (ell - 1) // p, ell)
                assert component == xn.power_residue_character(zeta_image, ell, p)
                assert (component == 0) == (ell % p**2 == 1)
            ell += 2
