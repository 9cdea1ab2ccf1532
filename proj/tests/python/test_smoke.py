"""Smoke tests for the python bindings."""

import math

import pytest

import netcolor as nc


def triangle():
    return nc.Graph(3, [(0, 1), (1, 2), (2, 0)])


def test_graph_basics():
    g = triangle()
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.degree(1) == 2
    assert g.neighbors(0) == [1, 2]
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(ValueError):
        nc.Graph(2, [(0, 0)])


def test_components_and_lcc():
    g = nc.Graph(5, [(0, 1), (1, 2), (2, 0), (3, 4)])
    comps = nc.connected_components(g)
    assert sorted(comps.component_sizes) == [2, 3]
    lcc = nc.largest_connected_component(g)
    assert lcc.graph.node_count == 3
    assert lcc.old_to_new[3] is None
    assert lcc.new_to_old == [0, 1, 2]


def test_generators_deterministic():
    a = nc.gen_er(100, 0.05, seed=7)
    b = nc.gen_er(100, 0.05, seed=7)
    assert a == b
    assert nc.gen_er(10, 1.0, seed=0).edge_count == 45
    sf = nc.gen_powerlaw_config(200, 2.5, 3, seed=1)
    assert sf.node_count == 200
    tc = nc.gen_two_community(50, 0.2, 0.02, seed=2)
    assert tc.node_count == 50
    spec = nc.GraphSpec.er(30, 0.2)
    assert nc.realize(spec, 5) == nc.realize(spec, 5)


def test_lci_and_metrics():
    g = triangle()
    col = nc.Coloring([0, 0, 1], 2)
    w = nc.WeightScheme.from_graph(g, 0.0)
    assert nc.lci(g, col, w, 0) == 1.0
    assert nc.candidate_lci(g, col, w, 0, 1) == 1.0
    assert nc.fraction_defective(g, col) == pytest.approx(1.0 / 3.0)
    assert nc.r_max(g, col) == 2
    rec = nc.measure(g, col)
    assert rec.defective_edge_count == 1
    assert rec.max_defective_degree == 1


def test_run_ddc_reaches_proper_coloring():
    g = triangle()
    res = nc.run_ddc(g, q=3, beta=0.0, seed=11)
    assert res.terminated_by == nc.TerminatedBy.Proper
    assert nc.fraction_defective(g, res.final_coloring) == 0.0
    again = nc.run_ddc(g, nc.DdcConfig(q=3, seed=11))
    assert again == res


def test_sweep_and_summary():
    spec = nc.SweepSpec(
        graph_spec=nc.GraphSpec.er(40, 0.15),
        q_values=[3, 4],
        beta_values=[0.0],
        schemes=[nc.Scheme.Random, nc.Scheme.Ddc],
        runs_per_point=3,
        base_seed=9,
        workers=1,
    )
    result = nc.run_sweep(spec)
    assert result.generation_failures == 0
    assert len(result.rows) == 2 * 2 * 3
    assert nc.run_sweep(spec).rows == result.rows
    points = nc.summarize(result.rows)
    assert len(points) == 4
    assert all(0.0 <= p.mean_f_d <= 1.0 for p in points)
    random_fd = {p.q: p.mean_f_d for p in points if p.scheme == nc.Scheme.Random}
    ddc_fd = {p.q: p.mean_f_d for p in points if p.scheme == nc.Scheme.Ddc}
    assert all(ddc_fd[q] <= random_fd[q] for q in (3, 4))


def test_convergence_profile_is_sane():
    profile = nc.convergence_profile(nc.GraphSpec.er(3, 1.0), q=3, beta=0.0, runs=5, seed=3)
    assert profile[0][0] == 0
    assert profile[-1][1] == 0.0
    assert all(0.0 <= v <= 1.0 and not math.isnan(v) for _, v in profile)


def test_edge_list_io(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("# comment\n1 2\n2 3\n3 1\n")
    loaded = nc.load_edge_list(str(path))
    assert loaded.graph.node_count == 3
    assert loaded.detected_base == 1
    assert loaded.node_labels == [1, 2, 3]

    out = tmp_path / "rows.json"
    spec = nc.SweepSpec(nc.GraphSpec.er(20, 0.3), q_values=[3], runs_per_point=2, base_seed=1,
                        workers=1)
    rows = nc.run_sweep(spec).rows
    nc.write_rows(rows, "json", str(out))
    assert nc.read_rows_json(str(out)) == rows
    assert nc.rows_to_csv(rows).startswith("scheme,q,beta,run,seed,f_d")


def test_version():
    assert nc.__version__
