"""Smoke tests for the fstype python bindings."""

import json

import fstype


def test_character_rank1():
    assert fstype.character(1, [1, 0], 12) == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9]
    assert fstype.character(1, [0, 1], 6) == [1, 0, 1, 1, 1, 1, 2]


def test_basis_rank2():
    buckets = fstype.basis(2, [1, 0, 0], 2)
    assert buckets[0] == ["1"]
    assert len(buckets[1]) == 3
    assert len(buckets[2]) == 4
    assert "x[2,2](-1) x[1,1](-1)" in buckets[2]


def test_refined_character_totals():
    refined = fstype.refined_character(2, [1, 0, 0], 2)
    per_degree = {}
    for degree, weight, count in refined:
        assert len(weight) == 2
        per_degree[degree] = per_degree.get(degree, 0) + count
    assert per_degree == {0: 1, 1: 3, 2: 4}


def test_relations_rank2():
    pairs = fstype.relations(2, [1, 0, 0], 2)
    assert len(pairs) == 5
    assert all(tag == "dcFamily(2)" for tag, _ in pairs)
    assert ("dcFamily(2)", "2*x[1,2](-1)^2 + 1*x[2,2](-1) x[1,1](-1)") in pairs


def test_verify_and_report():
    assert fstype.verify(2, [0, 0, 1], 4)
    report = json.loads(fstype.verify_report_json(1, [1, 0], 6))
    assert report["match"] is True
    counts = [sum(len(b["standard"]) for b in d["blocks"]) for d in report["degrees"]]
    assert counts == [1, 1, 1, 1, 2, 2, 3]


def test_invalid_arguments():
    try:
        fstype.character(2, [1, 0], 3)
    except ValueError:
        pass
    else:
        raise AssertionError("mismatched weights length must raise")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name} ok")
