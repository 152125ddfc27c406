import random

import pytest

from isoclique import (
    BAConfig,
    FeatureModelConfig,
    GeneratorConfigError,
    canonical_edge_list,
    canonical_spec,
    generate,
    generate_ba,
    generate_feature_model,
    parse_generator_spec,
)


def ba_edge_count(n, m):
    # complete seed on m+1 vertices plus m attachments per later vertex
    return (m + 1) * m // 2 + m * (n - m - 1)


def is_connected(g):
    if g.vertex_count == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == g.vertex_count


def rederive_feature_classes(cfg):
    # mirrors the documented draw order: vertex-major, feature-minor
    rng = random.Random(cfg.seed)
    classes = [[] for _ in range(cfg.m)]
    for v in range(cfg.n):
        for f in range(cfg.m):
            if rng.random() < cfg.p:
                classes[f].append(v)
    return classes


def test_ba_with_single_attachment_is_a_tree():
    g = generate_ba(BAConfig(n=5, m=1, seed=123))
    g.validate()
    assert g.vertex_count == 5
    assert g.edge_count == 4
    assert is_connected(g)


def test_ba_edge_counts_follow_construction():
    for n, m in [(10, 2), (50, 5), (200, 7), (333, 12)]:
        for seed in (0, 1):
            g = generate_ba(BAConfig(n=n, m=m, seed=seed))
            g.validate()
            assert g.vertex_count == n
            assert g.edge_count == ba_edge_count(n, m)


def test_ba_is_deterministic():
    cfg = BAConfig(n=120, m=4, seed=99)
    a = canonical_edge_list(generate_ba(cfg))
    b = canonical_edge_list(generate_ba(cfg))
    assert a == b
    different = canonical_edge_list(generate_ba(BAConfig(n=120, m=4, seed=100)))
    assert different != a


def test_ba_config_validation():
    with pytest.raises(GeneratorConfigError):
        BAConfig(n=5, m=0)
    with pytest.raises(GeneratorConfigError):
        BAConfig(n=5, m=5)


def test_feature_model_extremes():
    empty = generate_feature_model(FeatureModelConfig(n=10, m=3, p=0.0, seed=1))
    empty.validate()
    assert (empty.vertex_count, empty.edge_count) == (10, 0)

    full = generate_feature_model(FeatureModelConfig(n=7, m=3, p=1.0, seed=1))
    full.validate()
    assert full.edge_count == 7 * 6 // 2


def test_feature_classes_induce_cliques():
    cfg = FeatureModelConfig(n=200, m=25, p=0.1, seed=2024)
    g = generate_feature_model(cfg)
    g.validate()
    classes = rederive_feature_classes(cfg)
    class_edges = set()
    for members in classes:
        for i, u in enumerate(members):
            for w in members[i + 1 :]:
                assert w in g.adjacency[u], f"feature class pair {u}-{w} missing"
                class_edges.add((u, w))
    # and nothing else: every edge is explained by some shared feature
    assert class_edges == set(g.edges())


def test_feature_model_is_deterministic():
    cfg = FeatureModelConfig(n=80, m=10, p=0.2, seed=5)
    assert canonical_edge_list(generate_feature_model(cfg)) == canonical_edge_list(
        generate_feature_model(cfg)
    )


def test_feature_model_config_validation():
    with pytest.raises(GeneratorConfigError):
        FeatureModelConfig(n=10, m=0, p=0.5)
    with pytest.raises(GeneratorConfigError):
        FeatureModelConfig(n=10, m=3, p=1.5)
    with pytest.raises(GeneratorConfigError):
        FeatureModelConfig(n=-1, m=3, p=0.5)


def test_parse_generator_spec():
    cfg = parse_generator_spec("ba:n=100,m=5,seed=7")
    assert cfg == BAConfig(n=100, m=5, seed=7)
    cfg = parse_generator_spec("gnmp:n=50,m=10,p=0.1")
    assert cfg == FeatureModelConfig(n=50, m=10, p=0.1, seed=0)
    cfg = parse_generator_spec("gnmp:n=50,m=10,p=0.1", default_seed=9)
    assert cfg.seed == 9


def test_parse_generator_spec_errors():
    for bad in ("er:n=5", "ba", "ba:n=5", "ba:n=5,m=2,k=3", "ba:n=five,m=2", "gnmp:n=5,m=2"):
        with pytest.raises(GeneratorConfigError):
            parse_generator_spec(bad)


def test_canonical_spec_round_trips():
    for spec in ("ba:n=10,m=2,seed=3", "gnmp:n=9,m=4,p=0.25,seed=1"):
        cfg = parse_generator_spec(spec)
        assert parse_generator_spec(canonical_spec(cfg)) == cfg


def test_generate_dispatch():
    assert generate(BAConfig(n=6, m=2, seed=0)).vertex_count == 6
    assert generate(FeatureModelConfig(n=6, m=2, p=0.5, seed=0)).vertex_count == 6
    with pytest.raises(TypeError):
        generate("ba:n=6,m=2")
