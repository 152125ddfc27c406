"""Seeded synthetic graphs for benchmarking.

Two models: preferential attachment (each new vertex wires to ``m``
existing ones, biased by degree) and a shared-feature model (each vertex
holds each of ``m`` features with probability ``p`` and every feature
class becomes a clique). Draws come from ``random.Random(seed)``
(Mersenne Twister) in the documented order, so a config reproduces the
same graph byte for byte within this implementation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph


class GeneratorConfigError(ValueError):
    """A generator config or spec string is invalid."""


@dataclass(frozen=True)
class BAConfig:
    """Preferential attachment: n total vertices, m edges per new vertex."""

    n: int
    m: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 1 or self.m >= self.n:
            raise GeneratorConfigError(
                f"preferential attachment needs 1 <= m < n, got n={self.n}, m={self.m}"
            )


@dataclass(frozen=True)
class FeatureModelConfig:
    """Feature model: n vertices, m features, per-feature probability p."""

    n: int
    m: int
    p: float
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GeneratorConfigError(f"vertex count must be non-negative, got {self.n}")
        if self.m < 1:
            raise GeneratorConfigError(f"feature count must be >= 1, got {self.m}")
        if not 0.0 <= self.p <= 1.0:
            raise GeneratorConfigError(f"feature probability must be in [0, 1], got {self.p}")


def generate_ba(cfg: BAConfig) -> Graph:
    """Grow a preferential-attachment graph.

    Starts from a complete seed on m+1 vertices, so every later vertex
    can always find m distinct targets. Each of vertices m+1 .. n-1 draws
    targets uniformly from a pool holding every existing vertex once per
    incident edge; duplicate draws within one vertex's round are retried.
    """
    rng = random.Random(cfg.seed)
    n, m = cfg.n, cfg.m
    edges: list[tuple[int, int]] = []
    pool: list[int] = []  # one entry per edge endpoint: degree-weighted sampling
    seed_size = m + 1
    for u in range(seed_size):
        for v in range(u + 1, seed_size):
            edges.append((u, v))
        pool.extend([u] * m)
    for v in range(seed_size, n):
        targets: set[int] = set()
        while len(targets) < m:
            t = pool[rng.randrange(len(pool))]
            if t not in targets:
                targets.add(t)
        for t in sorted(targets):
            edges.append((t, v))
            pool.append(t)
        pool.extend([v] * m)
    return Graph.from_edges(n, edges)


def generate_feature_model(cfg: FeatureModelConfig) -> Graph:
    """Draw the feature matrix and union the per-feature cliques.

    Features are independent Bernoulli(p) trials, drawn vertex by vertex
    and feature by feature in index order.
    """
    rng = random.Random(cfg.seed)
    classes: list[list[int]] = [[] for _ in range(cfg.m)]
    for v in range(cfg.n):
        for f in range(cfg.m):
            if rng.random() < cfg.p:
                classes[f].append(v)
    edges: set[tuple[int, int]] = set()
    for members in classes:
        for i, u in enumerate(members):
            for w in members[i + 1 :]:
                edges.add((u, w))
    return Graph.from_edges(cfg.n, edges)


def generate(cfg: BAConfig | FeatureModelConfig) -> Graph:
    if isinstance(cfg, BAConfig):
        return generate_ba(cfg)
    if isinstance(cfg, FeatureModelConfig):
        return generate_feature_model(cfg)
    raise TypeError(f"unsupported generator config {type(cfg).__name__}")


_SPEC_FIELDS = {
    "ba": {"n": int, "m": int, "seed": int},
    "gnmp": {"n": int, "m": int, "p": float, "seed": int},
}
_REQUIRED = {"ba": ("n", "m"), "gnmp": ("n", "m", "p")}


def parse_generator_spec(spec: str, default_seed: int = 0) -> BAConfig | FeatureModelConfig:
    """Parse a spec string like ``ba:n=100,m=5,seed=7`` or
    ``gnmp:n=50,m=10,p=0.1``; a missing seed falls back to default_seed."""
    kind, sep, body = spec.partition(":")
    kind = kind.strip()
    if not sep or kind not in _SPEC_FIELDS:
        raise GeneratorConfigError(
            f"unknown generator spec {spec!r}; expected 'ba:...' or 'gnmp:...'"
        )
    types = _SPEC_FIELDS[kind]
    fields: dict[str, object] = {}
    for item in body.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or key not in types:
            raise GeneratorConfigError(f"bad field {item!r} in generator spec {spec!r}")
        try:
            fields[key] = types[key](raw.strip())
        except ValueError:
            raise GeneratorConfigError(
                f"field {key!r} in generator spec {spec!r} is not a valid {types[key].__name__}"
            ) from None
    missing = [name for name in _REQUIRED[kind] if name not in fields]
    if missing:
        raise GeneratorConfigError(
            f"generator spec {spec!r} is missing {', '.join(missing)}"
        )
    fields.setdefault("seed", default_seed)
    return BAConfig(**fields) if kind == "ba" else FeatureModelConfig(**fields)


def canonical_spec(cfg: BAConfig | FeatureModelConfig) -> str:
    """Normalized spec string for a config; stable across runs."""
    if isinstance(cfg, BAConfig):
        return f"ba:n={cfg.n},m={cfg.m},seed={cfg.seed}"
    if isinstance(cfg, FeatureModelConfig):
        return f"gnmp:n={cfg.n},m={cfg.m},p={cfg.p!r},seed={cfg.seed}"
    raise TypeError(f"unsupported generator config {type(cfg).__name__}")
