import pytest

import mod4ex


def test_graph_round_trip():
    g = mod4ex.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert g.to_graph6() == "Bw"
    assert mod4ex.Graph.from_graph6("Bw") == g
    assert mod4ex.Graph.from_edge_list(g.to_edge_list()) == g


def test_detection():
    c4 = mod4ex.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert len(mod4ex.has_cycle_mod(c4)) == 4
    assert mod4ex.has_cycle_mod(mod4ex.build_L8()) is None
    assert mod4ex.residue_histogram(mod4ex.Graph.from_graph6("C~")) == [3, 0, 0, 4]
    assert len(mod4ex.enumerate_cycles(mod4ex.build_theta(2, 2, 2))) == 3


def test_constructions():
    for n in range(2, 40):
        g = mod4ex.build_Gn(n)
        assert g.order() == n
        assert g.size() == mod4ex.formula_bound(n)
        assert mod4ex.has_cycle_mod(g) is None
    assert mod4ex.canonical_form(mod4ex.build_Gn(13)) == mod4ex.canonical_form(mod4ex.build_L13())


def test_search():
    r = mod4ex.ex_exact(8)
    assert r["max_edges"] == 11
    assert mod4ex.canonical_form(mod4ex.build_L8()) in r["extremal_graphs"]
    assert mod4ex.refute_above_bound(8, 12)["exists"] is False


def test_lemma_and_replay():
    assert len(mod4ex.lemma_names()) == 14
    report = mod4ex.verify_lemma("TwoCycle3", trials=100, seed=2)
    assert report["passed"] is True
    trace = mod4ex.replay({"lemma": "Theta_N_H", "graph6": "Dhc"})
    assert trace["conclusion_holds"] is False


def test_errors():
    with pytest.raises(ValueError):
        mod4ex.Graph.from_graph6("B")
    with pytest.raises(ValueError):
        mod4ex.build_theta(1, 1, 2)
    with pytest.raises(ValueError):
        mod4ex.verify_lemma("Nope")
    with pytest.raises(mod4ex.CapExceeded):
        mod4ex.has_cycle_mod(mod4ex.Graph.from_graph6("G~~~~{"), 1, 97, cap=5)
