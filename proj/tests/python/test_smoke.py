import pytest

import barnette as bt


def test_catalog_octahedron():
    rec = bt.catalog("octahedron")
    assert rec["n"] == 6
    info = bt.graph_info(rec["rotations"])
    assert info["edges"] == 12
    assert info["face_count"] == 8
    assert info["four_connected"]
    assert all(d == 4 for d in info["degrees"])


def test_three_color_proper():
    rec = bt.catalog("oct+1")
    rot = rec["rotations"]
    col = bt.three_color(rot)
    for v, nbrs in enumerate(rot):
        for u in nbrs:
            assert col[u] != col[v]


def test_hypothesis_reports():
    assert len(bt.catalog("oct+1")["hypothesis"]["satisfying"]) == 6
    failing = bt.catalog("oct+2")["hypothesis"]
    assert failing["satisfying"] == []
    assert len(failing["failures"]) == 3


def test_partition_through():
    rot = bt.catalog("octahedron")["rotations"]
    p = bt.partition(rot, "through", 0, 2, 1)
    s, t = set(p["S"]), set(p["T"])
    assert {0, 1, 2} <= s or {0, 1, 2} <= t
    assert s.isdisjoint(t)
    assert len(s | t) == 6


def test_partition_edge_avoid_and_ham():
    rot = bt.catalog("oct+1")["rotations"]
    p = bt.partition(rot, "edge-avoid", 0, 2, 4)
    assert (0 in p["S"] and 2 in p["S"] and 4 in p["T"]) or (
        0 in p["T"] and 2 in p["T"] and 4 in p["S"]
    )
    cycle = bt.partition_to_ham(rot, p["S"], p["T"])
    assert len(cycle) == 14
    assert sorted(cycle) == list(range(14))


def test_cube_has_six_hamilton_cycles():
    rot = bt.catalog("octahedron")["rotations"]
    assert len(bt.brute_ham_cycles(rot)) == 6


def test_verify_sweep_ladder11():
    rot = bt.catalog("ladder11")["rotations"]
    r = bt.verify_sweep(rot, oracle=True)
    assert r["ok"]
    assert r["property_failures"] == 0
    assert r["seed_audit_failures"] == 0
    assert r["paths_checked"] == 222


def test_planar_code_roundtrip():
    rot = bt.catalog("tetrakis")["rotations"]
    data = bt.to_planar_code(rot)
    back = bt.from_planar_code(data)
    assert len(back) == 1
    assert back[0]["rotations"] == rot


def test_rot1_roundtrip():
    rot = bt.catalog("oct+nested")["rotations"]
    assert bt.from_rot1(bt.to_rot1(rot)) == rot


def test_expand_preserves_evenness():
    rot = bt.catalog("octahedron")["rotations"]
    bigger = bt.expand_octahedral(rot, 0)
    info = bt.graph_info(bigger)
    assert info["n"] == 9
    assert all(d % 2 == 0 for d in info["degrees"])


def test_errors_are_typed():
    with pytest.raises(bt.BarnetteError):
        bt.catalog("nosuch")
    with pytest.raises(bt.BarnetteError):
        bt.graph_info([[1], [0]])  # not a triangulation


def test_separating_triangles():
    rot = bt.catalog("oct+1")["rotations"]
    seps = bt.separating_triangles(rot)
    assert len(seps) == 1
    assert sorted(seps[0]["cycle"]) == [0, 2, 4]
