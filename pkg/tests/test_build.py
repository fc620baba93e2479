import random
from math import comb

import pytest

from distgraphs.build import (SignplaceConfig, build_config, build_gn, build_nagy, build_signplaces,
                              complement, from_dimacs, gn_index, gn_vertices, induced_gn, DimacsError,
                              to_dimacs)
from distgraphs.model import MINUS, PLUS, Graph, Signplace
from distgraphs.solver import brute_force_mis, max_independent_set

from conftest import random_graph


def test_small_gn():
    assert build_gn(1).order == 0
    assert build_gn(2).order == 0
    cube = build_gn(3)
    assert cube.order == 8
    assert set(cube.degrees().tolist()) == {3}
    assert cube.n_edges == 12


@pytest.mark.parametrize("n", range(3, 13))
def test_gn_order(n):
    assert len(gn_vertices(n)) == 8 * comb(n, 3)


def test_gn_5_order():
    assert build_gn(5).order == 8 * (5 * 4 * 3 // 6)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_gn_index_matches_build_order(n):
    verts = gn_vertices(n)
    assert [gn_index(v) for v in verts] == list(range(len(verts)))


def test_induced_gn_agrees_with_full_graph():
    g = build_gn(7)
    idx = random.Random(1).sample(range(g.order), 40)
    sub = induced_gn(7, [g.labels[i] for i in idx])
    assert sub == g.induced(idx)


def test_nagy():
    g3 = build_nagy(3)
    assert g3.order == 1 and g3.n_edges == 0
    g4 = build_nagy(4)
    assert g4.order == 4 and g4.n_edges == 0
    assert max_independent_set(build_nagy(7)).alpha == 5


def test_config_equivalences():
    assert build_config(SignplaceConfig(3, 0)) == build_gn(3)
    assert build_config(SignplaceConfig(0, 7)) == build_nagy(7)
    assert max_independent_set(build_config(SignplaceConfig(0, 7))).alpha == 5
    assert max_independent_set(build_config(SignplaceConfig(6, 0))).alpha == 16


def test_config_small_l_is_empty():
    assert build_config(SignplaceConfig(1, 1)).order == 0
    assert build_config(SignplaceConfig(0, 0)).order == 0
    cfg = SignplaceConfig(2, 3)
    assert (cfg.m, cfg.l) == (7, 5)
    with pytest.raises(ValueError):
        SignplaceConfig(-1, 2)


def test_complement_examples(rng):
    k5 = complement(Graph.from_edges(5, []))
    assert k5.n_edges == 10
    for _ in range(20):
        g = random_graph(rng, rng.randint(0, 64), rng.random())
        assert complement(complement(g)) == g


def _brute_clique(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.order):
        members = [i for i in range(g.order) if mask >> i & 1]
        if len(members) > best and all(g.has_edge(u, v) for a, u in enumerate(members) for v in members[a + 1:]):
            best = len(members)
    return best


def test_alpha_is_clique_number_of_complement(rng):
    for _ in range(15):
        g = random_graph(rng, 15, rng.random())
        assert brute_force_mis(g) == _brute_clique(complement(g))


def test_dimacs_examples():
    g = from_dimacs("p edge 3 2\ne 1 2\ne 2 3\n")
    assert list(g.edges()) == [(0, 1), (1, 2)]
    cube = build_gn(3)
    assert from_dimacs(to_dimacs(cube, comment="cube")) == cube
    with pytest.raises(DimacsError, match="out of range"):
        from_dimacs("p edge 3 1\ne 1 5\n")


def test_dimacs_tolerates_duplicates_and_comments():
    g = from_dimacs("c hello\np edge 3 3\ne 1 2\ne 2 1\n\ne 1 2\n")
    assert g.n_edges == 1


@pytest.mark.parametrize("text,line", [
    ("p edge x 1\n", 1),
    ("e 1 2\n", 1),
    ("p edge 3 1\ne 1\n", 2),
    ("p edge 3 1\nq 1 2\n", 2),
    ("p edge 3 1\ne 2 2\n", 2),
    ("c only comments\n", None),
])
def test_dimacs_errors_carry_line_numbers(text, line):
    with pytest.raises(DimacsError) as exc:
        from_dimacs(text)
    assert exc.value.line == line


def _random_realization(cfg: SignplaceConfig, rng: random.Random, dim: int):
    places = rng.sample(range(dim), cfg.l)
    sps = set()
    for i, p in enumerate(places):
        flip = rng.choice((PLUS, MINUS))
        if i < cfg.d:
            sps |= {Signplace(p, PLUS), Signplace(p, MINUS)}
        else:
            sps.add(Signplace(p, flip))
    return sps


def test_config_alpha_invariant_under_relabeling(rng):
    configs = [SignplaceConfig(d, m - 2 * d) for m in range(3, 9) for d in range(m // 2 + 1)]
    base = {c: brute_force_mis(build_config(c)) if build_config(c).order <= 25
            else max_independent_set(build_config(c)).alpha for c in configs}
    for _ in range(100):
        cfg = rng.choice(configs)
        g = build_signplaces(_random_realization(cfg, rng, cfg.l + rng.randint(0, 3)), cfg.l + 3)
        assert g.order == build_config(cfg).order
        assert max_independent_set(g).alpha == base[cfg]


SMALL_CONFIGS = [SignplaceConfig(d, m - 2 * d) for m in range(0, 11) for d in range(m // 2 + 1)]


@pytest.fixture(scope="module")
def config_alphas():
    grown = SMALL_CONFIGS + [SignplaceConfig(c.d, c.s + 1) for c in SMALL_CONFIGS]
    return {c: max_independent_set(build_config(c)).alpha for c in set(grown)}


@pytest.mark.parametrize("cfg", SMALL_CONFIGS, ids=str)
def test_adding_a_signplace_never_decreases_alpha(cfg, config_alphas):
    # a new plus-only place, or the missing minus sign on a plus-only place
    assert config_alphas[SignplaceConfig(cfg.d, cfg.s + 1)] >= config_alphas[cfg]
    if cfg.s > 0:
        assert config_alphas[SignplaceConfig(cfg.d + 1, cfg.s - 1)] >= config_alphas[cfg]


def test_alpha_gn_non_decreasing():
    alphas = [max_independent_set(build_gn(n)).alpha for n in range(1, 8)]
    assert alphas == sorted(alphas)
