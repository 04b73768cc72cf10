import pathlib

import pytest

import charloci

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "examples"


def test_ell_values():
    assert [charloci.ell(n) for n in (1, 3, 4)] == [1, 1, 3]


def test_transform_and_fiber():
    f = charloci.load_objects(DATA / "unipotent_g1.json")
    c = f.complex()
    assert c.derived_fiber(["1", "1"]) == {-1: 1, 0: 2, 1: 1}
    assert {k: v for k, v in c.derived_fiber(["2", "3"]).items() if v} == {}
    assert f.oracle_fiber(["1", "1"]) == {-1: 1, 0: 2, 1: 1}


def test_euler_and_json_round_trip():
    c = charloci.load_objects(DATA / "skyscraper_g1.json").complex()
    assert c.euler_characteristic() == 3
    assert charloci.Complex.from_json(c.to_json()) == c
    assert c.dual().dual() == c


def test_jump_locus_and_oracle():
    f = charloci.load_objects(DATA / "constant_g1.json")
    c = f.complex()
    locus = charloci.jump_locus(c, 0, 1, f.torus)
    assert locus["certified"]
    assert locus["components"][0]["codim"] == 2
    report = charloci.oracle_check(c, 0, 1, f.torus, samples=20, seed=3)
    assert report["mismatches"] == []


def test_perversity():
    f = charloci.load_objects(DATA / "pushforward_g2_h1.json")
    c = f.complex()
    assert charloci.is_m_perverse(c, f.torus)
    assert not charloci.is_m_perverse(c.shift(1), f.torus)
    rep = charloci.perversity_report(c, f.torus)
    assert rep["surprise"]["r"] == 1


def test_intersection_complex():
    rep = charloci.ic_report(DATA / "ic_second_syzygy_n4.json")
    assert rep["reflexive"]
    assert rep["m_perverse"]


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        charloci.Complex.from_json("{not json")
    with pytest.raises(charloci.Error):
        charloci.load_objects(DATA / "constant_g1.json").complex().derived_fiber(["1"])
