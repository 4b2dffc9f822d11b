import cubicwalls as cw


def test_evaluate_volume_at_corner():
    assert cw.evaluate("-b^2 + 20bc - 2b + 224c^2 - 52c + 3", "1", "1") == "192"


def test_seed_volume():
    assert cw.volume("E2A1-two-nodes", "0") == "-b^2 + 20bc - 2b + 224c^2 - 52c + 3"


def test_check_not_ample():
    rep = cw.check("E2A1-two-nodes", "1", "1", "1/2")
    assert not rep["stable"]
    assert ("ample", "ruling h2 on component 4", "2c - 1 > 0") in rep["failing"]


def test_smooth_chambers():
    assert len(cw.chambers("smooth")) == 3


def test_lines():
    minus_one, minus_two = cw.exceptional_curves(6)
    assert len(minus_one) == 27
    assert minus_two == []
    _, two = cw.exceptional_curves(6, [(1, 2, 3), (3, 4, 5)])
    assert sorted(two) == ["h - e1 - e2 - e3", "h - e3 - e4 - e5"]


def test_keys():
    keys = cw.catalog_keys()
    assert "smooth" in keys and "E2A1-two-nodes" in keys
