from fractions import Fraction

import pytest

import lamop


def test_worked_example():
    terms = lamop.compose("a:1[b:3[c:2,d:1]]", "b", "e:2[h:1]")
    assert [t for t, _ in terms] == [
        "a:1[e:2[c:2,d:1,h:1]]",
        "a:1[e:2[c:2,h:1[d:1]]]",
        "a:1[e:2[d:1,h:1[c:2]]]",
        "a:1[e:2[h:1[c:2,d:1]]]",
    ]
    assert [dict(c) for _, c in terms] == [{0: 1}, {1: 1}, {2: 1}, {3: 1}]
    assert terms[3][1](Fraction(1, 2)) == Fraction(1, 8)


def test_weight_mismatch_is_zero():
    assert lamop.compose("a:1[b:3]", "b", "e:2") == []


def test_tree_measures():
    assert lamop.weight("a:1[b:3[c:2,d:1]]") == 7
    assert lamop.height("a:1[b:3[c:2,d:1]]", "d") == 2
    assert lamop.canonical("a:1[c:2,b:1]") == "a:1[b:1,c:2]"
    assert len(lamop.enumerate_trees(3, [1, 1, 1])) == 9


def test_products():
    assert lamop.arrow("r:1", "s:2") == [("r:1[s:2]", {0: 1})]
    assert lamop.butcher("a:1[b:1]", "c:2") == "a:1[b:1,c:2]"
    assert lamop.nap("a:1[b:3[c:2,d:1]]", "b", "e:2[h:1]") == "a:1[e:2[c:2,d:1,h:1]]"
    assert lamop.circ_sum("u:3", "e:2[h:1]") == [("e:2[h:1]", {0: 1})]


def test_psi_phi_roundtrip():
    p = lamop.psi("x:1[y:1,z:1]")
    assert p == [("((x_1 z_1) y_1)", {0: 1}), ("(x_1 (z_1 y_1))", {1: -1})]
    total = {}
    for expr, c in p:
        for tree, d in lamop.phi(expr):
            for i, a in c.items():
                for j, b in d.items():
                    key = (tree, i + j)
                    total[key] = total.get(key, 0) + a * b
    assert {k: v for k, v in total.items() if v} == {("x:1[y:1,z:1]", 0): 1}


def test_relation_has_four_terms():
    assert len(lamop.relation(1, 2, 3)) == 4


def test_check_and_fault():
    ok = lamop.check("assoc", n_max=2, w_max=2)
    assert all(r["passed"] for r in ok)
    bad = lamop.check("assoc", n_max=2, w_max=2, fault="height-off-by-one")
    assert not all(r["passed"] for r in bad)


def test_errors():
    with pytest.raises(lamop.ParseError):
        lamop.canonical("a:1[b:1")
    with pytest.raises(ValueError):
        lamop.check("nope")
    assert str(lamop.Poly({0: Fraction(1), 2: Fraction(-3, 2)})) == "1 + -3/2*L^2"
