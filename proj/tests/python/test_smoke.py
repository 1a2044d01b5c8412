import math

import pytest

import nodalsurf as ns


def test_counts():
    assert [ns.count_singular_U(d) for d in (3, 6, 9)] == [4, 59, 220]
    assert ns.count_singular_V(9) == 216
    assert ns.mu_lower_bound(2) == 59
    assert ns.hypersurface_count(2) == 283
    assert ns.hypersurface_excess(2) == 6


def test_q3_text_and_eval():
    q = ns.folding_Q(3)
    assert q.degree == 3
    assert q.to_text().splitlines()[0] == "arity 2 vars x y"
    assert abs(q([3, 3]) + 3) < 1e-12
    assert ns.Poly.from_text(q.to_text()) == q


def test_oracle_identity():
    q = ns.folding_Q(6)
    for u, v in [(0.1, 0.2), (0.37, -0.05), (0.9, 0.4)]:
        h1, h2 = ns.trig_h(u, v)
        assert abs(q([h1, h2]) - ns.trig_H(6, u, v)) < 1e-8


def test_lemma_census():
    census = ns.lemma_census(6)
    assert census["totals"] == {"-2": 15, "-3": 7, "6": 3}
    assert census["distinct_images"] == 25
    points = ns.family_enumerate(6)
    assert len(points) == 25
    assert {p.family for p in points} == {"a", "b1", "b2", "c1", "c2"}


def test_singular_report():
    report = ns.singular_report(6)
    assert report["count_enumerated"] == 59
    assert all(p["q_value"] + p["t_value"] == 0 for p in report["points"])


def test_real_variant_and_mesh():
    r = ns.real_variant(3)
    assert r.to_text(["X", "Y", "Z"]).startswith("arity 3 vars X Y Z")
    vertices, faces = ns.mesh_real_variant(3, 2.0, 16)
    assert vertices and faces
    assert all(math.isfinite(c) for v in vertices for c in v)


def test_errors():
    with pytest.raises(ValueError):
        ns.count_singular_U(4)
    with pytest.raises(ValueError):
        ns.surface(3, "W")


def test_verify_all():
    results = ns.verify_all([3, 6])
    assert results and all(passed for _, _, passed, _ in results)
