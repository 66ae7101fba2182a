"""Smoke tests for the python bindings."""

import rookalg


def test_enumeration_counts():
    assert [rookalg.gamma_size(n) for n in range(7)] == [1, 2, 7, 34, 209, 1546, 13327]
    assert len(rookalg.enumerate_gamma(3)) == 34


def test_partial_bijection_arithmetic():
    a = rookalg.PartialBijection("[2; 1->2]")
    b = rookalg.PartialBijection("[2; 2->1]")
    assert str(a * b) == "[2; 2->2]"
    assert a.star() == b
    s = rookalg.PartialBijection.transposition(1, 2)
    e1 = rookalg.PartialBijection.eps(1, 2)
    assert str(rookalg.compose(s, e1)) == "[2; 2->1]"


def test_algebra_elements():
    x = rookalg.AlgebraElement("2*id(2) - eps(1,2)")
    y = rookalg.AlgebraElement("s(1,2)", 2)
    assert (x * y).n == 2
    t = rookalg.theta(rookalg.AlgebraElement("2*id(2) - eps(1,2) - eps(2,2)"))
    assert str(t) == "-[1;] + [1; 1->1]"


def test_centralizers_and_deltas():
    assert rookalg.centralizer_dim(3, 0) == 7
    assert rookalg.centralizer_dim(3, 1) == 11
    d = rookalg.delta_element(2, [1])
    assert d == rookalg.AlgebraElement("2*id(2) - eps(1,2) - eps(2,2)")
    u = rookalg.jm_element(2, 1)
    assert rookalg.retraction(u) == rookalg.AlgebraElement("s(1,2)")


def test_representations():
    assert rookalg.rep_dimension(2, [1]) == 2
    assert rookalg.central_eigenvalue(4, [2], 2) == "2"
    assert rookalg.classification_ok(3)


def test_shifted_symmetric():
    assert rookalg.power_sum_eval(2, [2]) == "0"
    assert rookalg.power_sum_eval(2, [1, 1]) == "-4"
    assert rookalg.bridge_ok(1, 2)


def test_hecke():
    assert rookalg.hecke_normal_form("s1 u1 s1", 2, "plain") == \
        "[2; 1->1, 2->2]*u2 + [2; 1->2, 2->1]"
    assert rookalg.hecke_truncated_dimension(1, 3, "tilde") == 5


def test_suite_runner():
    report = rookalg.run_suite("presentation", 4, 2, 1)
    assert report["all_pass"]
    assert any(c["name"] == "dimension-law" for c in report["checks"])
