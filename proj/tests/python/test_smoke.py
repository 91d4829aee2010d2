from fractions import Fraction

import pytest

import avgconn


def theta333():
    g = avgconn.MultiGraph(8)
    for path in ((0, 2, 3, 1), (0, 4, 5, 1), (0, 6, 7, 1)):
        for a, b in zip(path, path[1:]):
            g.add_edge(a, b)
    return g


def test_module_constants():
    assert avgconn.__version__ == "0.1.0"
    assert avgconn.MINIMUM_CONSTRUCTIVE_ORDER == 32


def test_average_connectivity_is_exact():
    k23 = avgconn.complete_bipartite(2, 3)
    assert avgconn.average_connectivity(k23) == Fraction(21, 10)
    assert avgconn.total_connectivity(k23) == 21
    assert avgconn.local_connectivity(k23, 0, 1) == 3
    rep = avgconn.report(avgconn.cycle(5))
    assert rep["total"] == 20
    assert rep["average"] == Fraction(2)
    assert rep["global"] == 2
    assert rep["ideal"]


def test_bound_rows():
    row = avgconn.bound(32)
    assert row["exact"] == Fraction(69, 31)
    assert row["optimal_s"] == [8]
    assert row["witness"] == "S_32"
    assert row["attained"]
    edge = avgconn.bound(32, "edge")
    assert edge["exact"] == Fraction(69, 31)
    assert edge["witness"] == "G_32"
    small = avgconn.bound(6)
    assert small["exact"] == Fraction(32, 15)
    assert small["witness"] is None


def test_constructions():
    assert avgconn.construct_optimal(30) is None
    s32 = avgconn.construct_optimal(32)
    assert s32 is not None
    assert avgconn.is_minimally_2_connected(s32)
    assert avgconn.average_connectivity(s32) == Fraction(69, 31)
    g32 = avgconn.construct_optimal(32, "edge")
    assert avgconn.is_minimally_2_edge_connected(g32)
    assert avgconn.average_connectivity(g32, "edge") == Fraction(69, 31)


def test_serialization_round_trips():
    k23 = avgconn.complete_bipartite(2, 3)
    assert avgconn.from_graph6(avgconn.to_graph6(k23)) == k23
    assert avgconn.canonical_key(k23) == "DFw"
    bundle = avgconn.cycle_bundle(3, 2)
    text = avgconn.to_edge_list(bundle)
    assert text == "3 3\n0 1 2\n0 2 2\n1 2 2\n"
    assert avgconn.from_edge_list(text) == bundle


def test_improve_trace():
    out, steps = avgconn.improve_until_fixed(theta333())
    assert len(steps) == 3
    first = steps[0]
    assert first["name"] == "t_fan"
    assert first["site"] == "chain 0-2-3-1"
    assert first["total_before"] == 57
    assert first["total_after"] == 58
    assert first["input_minimal"] and first["output_minimal"]
    assert first["before"].order() == 8
    assert avgconn.canonical_key(out) == avgconn.canonical_key(
        avgconn.complete_bipartite(2, 6)
    )


def test_find_optimal_certificate():
    cert = avgconn.find_optimal(5)
    assert cert["candidates"] == 2
    assert cert["best"] == Fraction(21, 10)
    assert cert["witnesses"] == ["DFw"]
    assert cert["gap"] == Fraction(0)
    assert cert["bipartite_by_degree_class"]


def test_preconditions_surface_as_value_error():
    with pytest.raises(ValueError):
        avgconn.improve_until_fixed(avgconn.cycle(4))
    with pytest.raises(ValueError):
        avgconn.cycle_power(7, 3)
    with pytest.raises(ValueError):
        avgconn.local_connectivity(avgconn.cycle(4), 0, 9)
