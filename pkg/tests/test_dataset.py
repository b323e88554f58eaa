from __future__ import annotations

import pytest

from dubois.dataset import Dataset, InvalidDataset, load_path, loads_csv, loads_json, make_dataset


def test_csv_round_trip(tmp_path):
    d = make_dataset("ads", [("alpha", 43000), ("beta", 78), ("gamma", 120.5)])
    text = d.to_csv()
    again = loads_csv(text, id="ads")
    assert again == d


def test_csv_requires_header():
    with pytest.raises(InvalidDataset, match="header"):
        loads_csv("a,1\nb,2\n")


def test_csv_rejects_non_numeric():
    with pytest.raises(InvalidDataset, match="not a number"):
        loads_csv("label,value\na,xyz\n")


def test_json_round_trip():
    d = make_dataset("x", [("a", 1), ("b", 2)])
    import json

    assert loads_json(json.dumps(d.to_json_dict())) == d


def test_json_rejects_garbage():
    with pytest.raises(InvalidDataset):
        loads_json("{not json")
    with pytest.raises(InvalidDataset):
        loads_json('{"categories": [{"label": "a"}]}')
    with pytest.raises(InvalidDataset):
        loads_json('{"categories": [{"label": "a", "value": "nope"}, {"label": "b", "value": 1}]}')


def test_invariants():
    with pytest.raises(InvalidDataset, match="at least 2"):
        make_dataset("d", [("a", 1)])
    with pytest.raises(InvalidDataset, match="duplicate"):
        make_dataset("d", [("a", 1), ("a", 2)])
    with pytest.raises(InvalidDataset, match=">= 0"):
        make_dataset("d", [("a", -1), ("b", 2)])
    with pytest.raises(InvalidDataset, match="no positive"):
        make_dataset("d", [("a", 0), ("b", 0)])


def test_load_path_csv_uses_stem(tmp_path):
    p = tmp_path / "congress.csv"
    p.write_text("label,value\n1970s,122\n2010s,1\n", encoding="utf-8")
    d = load_path(str(p))
    assert d.id == "congress"
    assert d.values == [122.0, 1.0]


def test_load_path_json_keeps_embedded_id(tmp_path):
    p = tmp_path / "whatever.json"
    p.write_text('{"id": "real-id", "categories": [{"label": "a", "value": 1}, {"label": "b", "value": 2}]}')
    assert load_path(str(p)).id == "real-id"


def test_zero_values_allowed_if_one_positive():
    d = make_dataset("d", [("a", 0), ("b", 5)])
    assert d.values == [0.0, 5.0]
