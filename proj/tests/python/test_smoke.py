import os
from fractions import Fraction

import pytest

import minorcolor as mc

FIXTURES = os.environ.get("MINORCOLOR_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_graph_basics():
    g = mc.Graph(3, [(0, 1), (2, 1)])
    assert g.order == 3 and g.size == 2
    assert g.edges == [(0, 1), (1, 2)]
    assert g.adjacent(2, 1)
    assert mc.named.cycle(5).size == 5


def test_oracles():
    assert mc.clique_number(mc.named.complete(5)) == 5
    assert mc.independence_number(mc.named.cycle(5)) == 2
    r = mc.chromatic_number(mc.grotzsch_graph())
    assert r["status"] == "yes" and r["upper"] == 4
    assert mc.k_colorable(mc.named.cycle(5), 2) is None
    assert mc.k_colorable(mc.named.cycle(5), 3) is not None
    f = mc.fractional_chromatic(mc.named.cycle(5))
    assert Fraction(f["value"]) == Fraction(5, 2)


def test_tree_product():
    p = mc.tree_product(mc.named.complete(4), mc.named.empty(4))
    assert p.order == 340 == mc.tree_product_size(4, 4)
    assert mc.clique_number(p) == 4
    with pytest.raises(mc.BudgetExceeded):
        mc.tree_product(mc.named.complete(4), mc.named.empty(4), size_limit=100)


def test_gadget_and_gap():
    assert mc.gadget_expand(mc.named.complete(3)).order == 33
    assert mc.is_triangle_free(mc.gadget_expand(mc.named.complete(4)))
    gap = mc.reduction_gap_check(mc.named.complete(3), 1)
    assert gap["product_vertices"] == 120 and gap["dichotomy"] == "yes"
    with pytest.raises(mc.PreconditionError):
        mc.reduction_gap_check(mc.named.complete(5), 1)


def test_surfaces():
    assert mc.euler_genus(fixture("k5-torus.json")) == 2
    assert mc.euler_genus(fixture("k6-projective.json")) == 1
    audit = mc.lemma_remove(fixture("torus-vortex.json"))
    assert audit["residual_planar"] and audit["within_bound"]
    assert audit["bound"] == 63


def test_random_hm_replay():
    g, parts = mc.build_hm(3, 5, 0.5, seed=4)
    assert mc.is_triangle_free(g)
    assert all(parts[u] != parts[v] for u, v in g.edges)
    assert mc.build_hm(3, 5, 0.5, seed=4)[0] == g


def test_verify_suite():
    report = mc.verify("td", trials=10)
    assert report["pass"] is True
    assert report["failures"] == 0
