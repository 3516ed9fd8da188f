"""Smoke tests for the endofree python module."""

import endofree as ef


def test_canonical_forms():
    sg = ef.variety("free-semigroup", 2)
    assert ef.canon(sg, "x1*x2*x2") == "x1*x2^2"
    g = ef.variety("free-group", 2)
    assert ef.canon(g, "x1*x1^-1*x2") == "x2"
    inv = ef.variety("free-inverse", 2)
    assert ef.canon(inv, "x1*x1^-1*x1") == "x1"
    mod = ef.variety("free-module", 2, "GF(4)")
    assert ef.canon(mod, "x1 + x2") == "[g1,g1]"  # coefficient vector


def test_element_and_endo_operations():
    g = ef.variety("free-group", 2)
    assert ef.multiply(g, "x1", "x1^-1") == "e"  # the group identity
    assert ef.invert(g, "x1*x2") == "x2^-1*x1^-1"
    assert ef.apply_endo(g, "x2;x1", "x1*x2") == "x2*x1"
    assert ef.compose(g, "x2;x1", "x2;x1") == "x1;x2"
    assert ef.is_automorphism(g, "x1*x2;x2")
    assert not ef.is_automorphism(g, "x1;x1")
    assert ef.invert_automorphism(g, "x1*x2;x2") == "x1*x2^-1;x2"


def test_matrix_and_automorphisms():
    sg = ef.variety("free-semigroup", 2)
    assert ef.matrix(sg, "inner:x2;x1") == "x2,x2;x1,x1"
    assert ef.matrix(sg, "mirror") == "x1,x1;x2,x2"
    assert ef.main_permutation(sg, "mirror", "x1*x2*x1") == "x1*x2*x1"
    verdict = ef.report(ef.verify_aut(sg, "mirror", count=50, seed=1))
    assert verdict["status"] == "holds"


def test_suite_reports():
    rep = ef.report(ef.suite_semigroup_binary(4))
    assert rep["schema"] == "endofree-report/1"
    assert rep["solutions"] == ["v1*v2", "v2*v1"]
    rep = ef.report(ef.suite_group_words(3, 2))
    assert rep["solutions"] == ["v1*v2", "v2*v1"]
    assert rep["params"]["after_filter1"] > rep["params"]["after_filter2"]
    rep = ef.report(ef.suite_inverse_system(4, "A"))
    assert rep["solutions"] == ["v1*v2", "v2*v1"]
    assert all(c["status"] == "holds" for c in rep["checks"])


def test_suite_determinism():
    def strip(raw):
        rep = ef.report(raw)
        rep.pop("wall_ms")
        return rep

    a = strip(ef.suite_mirror_classification(2, count=50, seed=42))
    b = strip(ef.suite_mirror_classification(2, count=50, seed=42))
    assert a == b
