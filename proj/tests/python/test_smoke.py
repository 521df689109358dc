"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import mrq


@pytest.fixture
def f2():
    return mrq.standard_alphabet(2)


def test_parse_and_reduce(f2):
    w = mrq.parse_word("x1 x2 x2^-1 x1", f2)
    assert str(w) == "x1^2"
    assert len(w) == 2
    assert str(mrq.parse_word("x1 x1^-1", f2)) == "1"
    assert mrq.parse_word(str(w), f2) == w


def test_word_algebra(f2):
    u = mrq.parse_word("x1 x2", f2)
    v = mrq.parse_word("x2^-1 x1^-1", f2)
    assert len(u * v) == 0
    assert ~u == v
    assert mrq.translation_length(mrq.parse_word("x1 x2 x1^-1", f2)) == 1
    assert mrq.exponent_vector(mrq.parse_word("[x1,x2]^100", f2)) == [0, 0]


def test_powers(f2):
    u = mrq.parse_word("x1 x2 x1^-1", f2)
    assert mrq.power_length(u, 5) == 7
    assert str(mrq.expand_power(u, 5)) == "x1 x2^5 x1^-1"
    root = mrq.is_proper_power(mrq.parse_word("x1 x2 x1 x2", f2))
    assert root is not None and str(root[0]) == "x1 x2" and root[1] == 2
    assert mrq.is_proper_power(mrq.parse_word("x1 x2", f2)) is None


def test_subgroups(f2):
    gens = [mrq.parse_word("x1^2", f2), mrq.parse_word("x2", f2)]
    assert mrq.subgroup_rank(gens, f2) == 2
    assert not mrq.subgroup_contains(gens, mrq.parse_word("x1", f2), f2)
    assert mrq.is_cyclic_subgroup([mrq.parse_word("x1^2", f2),
                                   mrq.parse_word("x1^3", f2)], f2)
    assert mrq.is_primitive_rank2(mrq.parse_word("x2 x1 x2^-1", f2))


def test_conjugacy(f2):
    u = mrq.parse_word("x1 x2", f2)
    v = mrq.parse_word("x2 x1", f2)
    s = mrq.are_conjugate(u, v)
    assert s is not None
    assert mrq.conjugate(u, s) == v
    assert mrq.are_conjugate(mrq.parse_word("x1", f2), mrq.parse_word("x2", f2)) is None


def test_ivanov(f2):
    w = mrq.ivanov_word()
    assert len(w) == 14392
    assert mrq.exponent_vector(w) == [0, 0]
    assert mrq.is_proper_power(w) is None
    assert len(mrq.eval_ivanov(mrq.parse_word("x1", f2), mrq.parse_word("x1", f2))) == 0
    assert mrq.cyclicity_criterion_check(mrq.parse_word("x1", f2),
                                         mrq.parse_word("x2", f2))


def test_smith_normal_form():
    d, u, v = mrq.smith_normal_form([[2, 0], [0, 3]])
    assert d[0][0] == 1 and d[1][1] == 6


def test_homology():
    report = mrq.homology_report()
    assert report["g_w_betti"] == 4
    assert all(b == 3 for _, b in report["quotient_betti"])
    assert report["distinct"]

    x = mrq.Alphabet(["x"])
    betti, torsion = mrq.homology(x, [mrq.parse_word("x^2", x)])
    assert betti == 0 and torsion == [2]


def test_hom_family():
    assert mrq.verify_relators(7, -3, 2)
    assert mrq.z_image_length(0) == 6
    lengths = mrq.gen_lengths(5, 0, 0, "g")
    assert lengths[2] == 1  # b1
    assert lengths[8] == 0  # gamma


def test_shorten_and_envelope():
    (xg, vg) = mrq.envelope_minimax("g")
    assert Fraction(*xg) == 0 and Fraction(*vg) == 2
    (xu, vu) = mrq.envelope_minimax("u")
    assert Fraction(*xu) == Fraction(1, 2) and Fraction(*vu) == 3

    r = mrq.shorten(8, "g")
    assert r["q_star"] == 0 and abs(r["l_star"]) <= 3
    assert abs(Fraction(*r["normalized"]) - 2) < Fraction(1, 100)


def test_twist(f2):
    a = mrq.parse_word("x1", f2)
    b = mrq.parse_word("x2", f2)
    z = mrq.parse_word("x1 x2", f2)
    assert mrq.twist_growth_check(a, b, z, 10)
    # the documented counterexample to the literal inequality
    bad_z = mrq.parse_word("x2^-3 x1^-1", f2)
    assert not mrq.twist_growth_check(a, b, bad_z, 4)
    with pytest.raises(Exception):
        mrq.twist_growth_check(a, b, mrq.parse_word("x1", f2), 4)


def test_sampler():
    images = mrq.sample_smallcancel(2, 64, 1)
    assert len(images) == 2 and all(len(w) == 64 for w in images)
    chi, xi, c = mrq.cancellation_stats(images)
    assert chi == 64 and xi == 64 and c <= 8
