import pytest

import amdkit


def test_scroll_and_projection():
    s = amdkit.scroll("S(4)")
    assert s.nvars == 5
    assert len(s.generators) == 6
    q = amdkit.project(s, "e2")
    assert q.nvars == 4
    assert amdkit.dimension_degree(q) == {"dim": 1, "codim": 2, "degree": 4}
    assert amdkit.project(s, [0, 0, 1, 0, 0]).same_as(q)


def test_ideal_text_round_trip():
    text = "ring a b c d\na*c - b^2\na*d - b*c\nb*d - c^2\n"
    i = amdkit.Ideal(text)
    assert i.variables == ["a", "b", "c", "d"]
    assert i.prime == amdkit.DEFAULT_PRIME
    assert i.contains("a*c - b^2")
    assert amdkit.Ideal(i.to_text()).same_as(i)
    assert i.to_json()["generators"] == i.generators


def test_betti_and_depth_of_twisted_cubic():
    c = amdkit.scroll("S(3)")
    assert amdkit.betti(c) == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert amdkit.depth(c) == 2
    assert amdkit.depth(c, method="resolution") == 2
    assert amdkit.hilbert_numerator(c) == [1, 0, -3, 2]


def test_analyze_rational_quartic():
    q = amdkit.project(amdkit.scroll("S(4)"), "e2")
    rep = amdkit.analyze(q, scroll_projection=True)
    assert rep["degree"] == 4
    assert rep["t"] == 1
    assert all(c["pass"] for c in rep["checks"])
    fast = amdkit.analyze(q, gin=True)
    assert fast["t"] == 1


def test_fixture_verification():
    assert "ex6.1A" in amdkit.fixtures()
    res = amdkit.verify("ex6.3A")
    assert res["pass"] is True
    assert res["fixture"] == "ex6.3A"


def test_hyperplane_section():
    i = amdkit.Ideal("ring x0 x1 x2 x3 x4\nx0*x1 - x2*x3\nx0^2 + x1^2 + x2^2 + x3^2 + x4^2\n")
    section, before, after = amdkit.hyperplane_section(i, seed=3)
    assert (before, after) == (3, 2)
    assert section.nvars == 4


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        amdkit.Ideal("ring a b\na^2 + b\n")
    with pytest.raises(amdkit.AmdError):
        amdkit.project(amdkit.scroll("S(4)"), "e0")
    with pytest.raises(ValueError):
        amdkit.scroll("S(3,2)")
