"""Smoke test for the `lch` extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
Run with:  python python/smoke_test.py  (or pytest python/smoke_test.py)
"""

import lch


def test_builtins():
    assert lch.builtins() == ["unknot", "trefoil", "fig8_tb-3", "k6_1_tb-5", "m9_46_tb-1"]
    tbs = {name: lch.Front.builtin(name).tb() for name in lch.builtins()}
    assert tbs == {"unknot": -1, "trefoil": 1, "fig8_tb-3": -3, "k6_1_tb-5": -5, "m9_46_tb-1": -1}


def test_parse_and_dga():
    f = lch.Front.parse("L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1")
    d = lch.Dga(f, q=3)
    assert d.check()
    assert [deg for _, deg in d.generators()] == [0, 0, 0, 1, 1]
    assert len(d.augmentations()) == 10
    assert d.to_dict()["diff"]["t"] == []


def test_lch_and_rulings():
    six = lch.Dga(lch.Front.builtin("k6_1_tb-5"))
    assert six.lch_spectrum() == [{-1: 2, 1: 3}]
    unknot = lch.Front.builtin("unknot")
    assert unknot.ruling_polynomial() == {-1: 1}
    assert unknot.homotopy_cardinality(3) == "1/2"


def test_obstruct():
    m946 = lch.Front.builtin("m9_46_tb-1")
    unknot = lch.Front.builtin("unknot")
    assert lch.obstruct(m946, unknot, 0)["verdict"] == "OBSTRUCTED"
    assert lch.obstruct(unknot, m946, 0)["verdict"] == "NO_OBSTRUCTION_FOUND"


def test_errors():
    try:
        lch.Front.parse("L 1 / X 5 / R 1")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
