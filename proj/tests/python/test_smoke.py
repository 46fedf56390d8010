import pytest

import ngonstab


def test_class_count():
    assert [ngonstab.class_count(n) for n in (1, 4, 6)] == [1, 3, 4]


def test_cusps_and_reduce():
    reps = [c["representative"] for c in ngonstab.cusps(6)]
    assert len(reps) == 4
    red = ngonstab.reduce(4, "3/7")
    assert red["class"]["representative"] in [c["representative"] for c in ngonstab.cusps(4)]
    (a, b), (c, d) = red["witness"]
    assert a * d - b * c == 1 and c % 4 == 0
    assert (a * 3 + b * 7, c * 3 + d * 7) in {(0, 1), (0, -1)}


def test_classify():
    d = ngonstab.classify(6, slope="1/2")
    assert d["s"] == 2 and d["rigid_count"] == 6 and len(d["rigid_points"]) == 6
    e1 = ngonstab.classify(2, slope="0")
    assert e1["positive_component"] == "E_1" and e1["rigid_count"] == 2
    shifted = ngonstab.classify(6, phase={"two_shift": 1, "dir": [-1, 2]})
    assert shifted["s"] == 2
    with pytest.raises(ValueError):
        ngonstab.classify(6)


def test_lift_and_check():
    k = ngonstab.lift(3, [[1, 0], [3, 1]])
    assert ngonstab.check_compat(k)["verdict"] == "Compatible-by-criterion"
    k["amplitude_M"] = None
    assert ngonstab.check_compat(k)["verdict"] == "MissingAmplitude"
    with pytest.raises(ngonstab.DomainError):
        ngonstab.lift(3, [[1, 0], [2, 1]])


def test_sheaves():
    sheaf = {
        "n": 3,
        "summands": [
            {"type": "chain", "multideg": [0, 0]},
            {"type": "band", "multideg": [1, 0, 0]},
            {"type": "torsion", "position": {"node": 1}},
        ],
    }
    assert ngonstab.semistable(sheaf) == ["Stable", "Stable", "Stable"]
    slices = ngonstab.hn(sheaf)["slices"]
    assert [s["slope"] for s in slices] == ["inf", "1/2", "1/3"]
    assert ngonstab.charge(sheaf)["charge"] == [-3, 5]
    assert ngonstab.hn_polygon([(-1, 3), (-1, 0), (-1, 2)]) == [(0, 0), (-1, 0), (-2, 2), (-3, 5)]


def test_rigid_orbit():
    chains = ngonstab.rigid(6, 1, 2)
    assert sorted(c["start"] for c in chains) == list(range(6))
    assert all(c["multideg"] == chains[0]["multideg"] for c in chains)


def test_errors():
    with pytest.raises(ngonstab.ParseError):
        ngonstab.hn("{not json")
    with pytest.raises(ngonstab.ParseError):
        ngonstab.reduce(4, "1/x")
    with pytest.raises(ngonstab.DomainError):
        ngonstab.hn({"n": 2, "summands": [{"type": "band", "multideg": [3, 0]}]})
