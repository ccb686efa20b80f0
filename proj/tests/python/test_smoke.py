"""Smoke tests for the python bindings."""

import json

import pytest

import graphlie as gl


def square_fixture():
    return gl.DirectedEdgeColoredGraph(
        4, 2, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1)]
    )


def test_build_gn():
    g = gl.build_gn(5)
    assert g.n_vertices == 5
    assert g.n_colors == 5
    assert len(g.edges) == 10
    assert g.color_of(0, 1) == 1
    assert g.color_of(1, 4) == 0
    with pytest.raises(ValueError, match="odd order required"):
        gl.build_gn(4)


def test_uniformity():
    uniform, witness = gl.is_uniform(gl.build_gn(9))
    assert uniform and witness is None

    bad = gl.EdgeColoredGraph(4, 2, [(0, 1, 0), (1, 2, 0), (2, 3, 1), (0, 3, 1)])
    uniform, witness = gl.is_uniform(bad)
    assert not uniform
    assert "vertex 1" in witness


def test_cpa_is_the_holomorph():
    group = gl.enumerate_cpa(gl.build_gn(5), method="both")
    assert group.order == 20
    ident = gl.identify(group, prefer="holomorph")
    assert ident == {"kind": "holomorph", "parameter": 5, "verified": True}
    assert gl.is_isomorphic(group, gl.build_holomorph(5)) is not None


def test_gla_is_dihedral():
    group = gl.enumerate_gla(gl.build_hn(7), method="both")
    assert group.order == 14
    ident = gl.identify(group)
    assert ident["kind"] == "dihedral" and ident["parameter"] == 7
    assert group.contains(gl.Permutation([1, 2, 3, 4, 5, 6, 0]))
    assert group.orbit(0) == list(range(7))
    assert group.stabilizer(0).order == 2


def test_special_affine_equivalence():
    f = gl.Permutation([(2 * x + 1) % 5 for x in range(5)])
    assert gl.is_special(f)
    assert gl.affine_witness(f) == (1, 2)
    swap = gl.Permutation([1, 0, 2, 3, 4])
    assert not gl.is_special(swap)
    assert gl.affine_witness(swap) is None


def test_gla_witness_on_the_square():
    square = square_fixture()
    phi = gl.gla_witness(gl.Permutation([1, 0, 3, 2]), square)
    assert phi == [(0, -1), (1, 1)]
    assert gl.gla_witness(gl.Permutation([1, 2, 3, 0]), square) is None
    assert gl.enumerate_gla(square).order == 4


def test_lie_layer():
    alg = gl.from_graph(gl.build_hn(5))
    assert alg.dimension == 10
    assert gl.check_two_step(alg)
    assert gl.check_jacobi(alg)
    assert gl.derived_subalgebra(alg) == [0, 1, 2, 3, 4]
    mats = gl.gla_image_group(gl.build_hn(5))
    assert len(mats) == 10
    assert all(m.rank() == 10 for m in mats)
    assert all(gl.is_lie_automorphism(m, alg) for m in mats)


def test_bracket_values():
    alg = gl.from_graph(square_fixture())
    e = lambda i: [(1, 1) if k == i else (0, 1) for k in range(6)]  # noqa: E731
    assert alg.bracket(e(0), e(1)) == [(0, 1)] * 4 + [(1, 1), (0, 1)]
    assert alg.bracket(e(1), e(0)) == [(0, 1)] * 4 + [(-1, 1), (0, 1)]
    assert alg.bracket(e(0), e(2)) == [(0, 1)] * 6


def test_json_round_trip_and_dot():
    g = gl.build_gn(5)
    assert gl.parse_graph(gl.to_json(g)) == g
    h = gl.build_hn(5)
    assert gl.parse_graph(gl.to_json(h)) == h
    dot = gl.to_dot(g, "gn5")
    assert 'color="c1"' in dot and 'label="Z_1"' in dot


def test_verify_report():
    report = json.loads(gl.verify_report(5, method="both"))
    assert report["all_pass"] is True
    assert report["cpa_order"] == 20
    assert report["gla_order"] == 10
    assert report["lie_dimension"] == 10
    assert "timing_ms" not in report


def test_stabilizer_lemmas():
    report = gl.verify_stabilizer_lemmas(7)
    assert report["all_pass"] is True
    assert len(report["checks"]) == 4
