import pytest

import tfpmis


def test_generators_and_basic_queries():
    g = tfpmis.gen_jones(8)
    assert g.n == 8
    assert g.triangle_free()
    hist, low = g.degree_profile()
    assert sum(hist.values()) == 8
    assert 5 * low >= g.n

    cube = tfpmis.gen_cube()
    assert [len(f) for f in cube.faces()] == [4] * 6

    with pytest.raises(tfpmis.TfpmisError):
        tfpmis.gen_jones(6)


def test_pg_round_trip():
    g = tfpmis.gen_hex(2, 2)
    text = g.to_pg()
    back = tfpmis.parse_pg(text)
    assert back == g
    assert back.to_pg() == text


def test_random_generator_deterministic():
    a = tfpmis.gen_random_tfp(18, 7)
    b = tfpmis.gen_random_tfp(18, 7)
    assert a == b
    assert a.triangle_free()
    assert a.n == 18


def test_decide_and_find():
    g = tfpmis.gen_jones(8)
    yes = tfpmis.decide(g, 1)
    assert yes["answer"] == "yes"
    assert yes["alpha"] == 3

    no = tfpmis.decide(g, 2)
    assert no["answer"] == "no"

    found = tfpmis.find_set(g, 1)
    assert found["answer"] == "yes"
    s = found["set"]
    assert len(s) == 3
    ok, _ = tfpmis.verify_independent(g.n, g.edges(), s)
    assert ok


def test_alpha_and_dp_agree():
    g = tfpmis.gen_random_tfp(16, 3)
    alpha, witness = tfpmis.alpha_exact(g.n, g.edges())
    td = tfpmis.heuristic_td(g.n, g.edges())
    size, dp_witness = tfpmis.mis_dp(g.n, g.edges(), td["bags"], td["tree_edges"])
    assert size == alpha
    assert len(witness) == alpha
    ok, _ = tfpmis.verify_independent(g.n, g.edges(), dp_witness)
    assert ok


def test_cycles_and_decomposition():
    cube = tfpmis.gen_cube()
    ws = tfpmis.enumerate_4cycles(cube)
    assert len(ws) == 6
    assert all(w["kind"] == "facial" for w in ws)
    assert tfpmis.find_separating_4cycle_fast(cube) is None

    dec = tfpmis.swept_decompose(cube)
    assert dec["s_hat"] == 8
    assert len(dec["parts"]) == 1


def test_scatter_certificates():
    g = tfpmis.gen_hex(2, 2)
    S = [v for v in range(g.n) if g.degree(v) <= 4]
    r = tfpmis.fat_extract(g.n, g.edges(), S, 5, 14)
    assert r["q_ratio_ok"] and r["x_ratio_ok"]
    ok, _ = tfpmis.verify_scattered(g.n, g.edges(), r["Q"], r["X"], 5)
    assert ok

    sel = tfpmis.spec_select(1, [[0], [0], [0], [0]], 1, 1)
    assert sel["Q"] == [0, 1, 2, 3]
    assert sel["X"] == [0]
    assert sel["K0"] == "16"


def test_coloring_pipeline():
    assert tfpmis.gimbel_bad_pattern([1, 2, 3, 1, 2, 3])
    assert not tfpmis.gimbel_bad_pattern([1, 2, 1, 2, 1, 2])

    g = tfpmis.gen_k23()
    status, colors = tfpmis.mono3_gadget(g, 2)
    assert status == "found"
    nb = {colors[u] for u in g.rotation(2)}
    assert len(nb) == 1

    mono = tfpmis.color3_monochromatic(g, [0], [])
    assert mono["status"] == "found"
    s, sizes = tfpmis.boost_independent_set(
        g.n, g.edges(), [], mono["q_prime"], mono["coloring"]
    )
    assert sorted(sizes, reverse=True)[0] == len(s)
    assert sum(sizes) >= g.n + len(mono["q_prime"])


def test_theorem_mode_pipeline():
    g = tfpmis.gen_hex(3, 3)
    r = tfpmis.find_set(g, 1, mode="theorem", c_num=1, c_den=1)
    assert r["answer"] == "yes"
    assert r["path"] == "theorem_shortcut"
    s = r["set"]
    assert 3 * len(s) >= g.n + 1
    ok, _ = tfpmis.verify_independent(g.n, g.edges(), s)
    assert ok


def test_analyze():
    rep = tfpmis.analyze(tfpmis.gen_cube())
    assert rep["s_hat"] == 8
    assert rep["alpha"] == 4
    assert rep["separating_4cycles"] == 0
    assert "s_hat" in rep["text"]
