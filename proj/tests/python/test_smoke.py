from fractions import Fraction

import pytest

import recurseq


def test_terms_and_basis():
    assert recurseq.term(1, -1, 0, 1, 10) == 55
    assert recurseq.term(3, 2, 0, 1, 5) == 31
    assert recurseq.basis_ut(1, -1, 10) == (55, 34)
    assert recurseq.basis_ut(1, -1, -1) == (1, -1)
    assert recurseq.lucas_v(1, -1, 4) == 7
    assert recurseq.decimated_params(1, -1, 2) == (3, 1)


def test_big_values_cross_the_boundary():
    f = recurseq.term(1, -1, 0, 1, 1000)
    a, b = 0, 1
    for _ in range(1000):
        a, b = b, a + b
    assert f == a
    assert recurseq.term(10**30, 1, 0, 1, 2) == 10**30


def test_ratios_and_accelerations():
    assert recurseq.ratio_x(3, 2, 5) == Fraction(31, 15)
    assert recurseq.double_ratio(1, -1, Fraction(3, 2)) == Fraction(21, 13)
    assert recurseq.shift_ratio(1, -1, 1, 2) == Fraction(3, 2)
    assert recurseq.fibonacci_index_accel(1, -1, 2, 1) == Fraction(5, 3)
    rows = recurseq.accelerate_general(1, -1, 2, 3, 2, -1, 3)
    assert rows[-1][0] == 8
    assert rows[-1][3] == Fraction(21, 13)
    assert recurseq.arithmetic_index_accel(1, -1, 2, 2, 3)[-1][3] == Fraction(8, 5)
    assert recurseq.verify_nested_fibonacci_identity(10)


def test_root_finding():
    assert recurseq.newton_step(1, 1, 1, 2) == Fraction(5, 3)
    assert recurseq.halley_step(1, -1, Fraction(3, 2)) == Fraction(55, 34)
    assert recurseq.householder_step(1, -1, 1, 3) == Fraction(5, 3)
    assert recurseq.secant_index_sequence(6) == [2, 3, 4, 6, 9, 14]
    assert recurseq.approximate_root(1, 1, 1, "newton", 10) == "1.6180339887"
    assert recurseq.approximate_root(2, 2, 1, "halley", 8) == "1.36602540"


def test_continued_fractions():
    assert recurseq.convergents("1/2, 1/3", 2) == [Fraction(1, 2), Fraction(7, 2)]
    assert recurseq.quad_cf_convergent(2, 2, 1, 3) == Fraction(11, 8)
    subseq = recurseq.method_subsequence(1, 1, 1, "newton", 4)
    assert [i for i, _ in subseq] == [0, 1, 3, 7]
    assert subseq[-1][1] == Fraction(34, 21)


def test_errors_map_to_exceptions():
    with pytest.raises(recurseq.DegenerateRatio):
        recurseq.ratio_x(0, 1, 3)
    with pytest.raises(recurseq.NonRealRoots):
        recurseq.approximate_root(1, 1, -1, "newton", 5)
    with pytest.raises(recurseq.ResourceLimit):
        recurseq.term(1, -1, 0, 1, 1000, max_index=100)
    with pytest.raises(recurseq.RecurseqError):
        recurseq.basis_ut(1, 0, -1)
