"""Shared test fixtures."""

from pathlib import Path

import pytest
import yaml

from engine.config.schema import SolverConfig
from engine.graph.generators import gen_er
from engine.graph.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"


def det_config(**overrides: object) -> SolverConfig:
    """Small deterministic solver config; keyword overrides are top-level sections."""
    data: dict[str, object] = {
        "k": 2,
        "seed": 0,
        "local_search": {"m_step": 15, "bms_samples": 8},
        "tabu": {"bits": 4096},
        "budget": {"mode": "deterministic", "ls_individuals": 5, "ga_generations": 4},
    }
    data.update(overrides)
    return SolverConfig(**data)


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], name="triangle")


@pytest.fixture
def path4() -> Graph:
    """0 - 1 - 2 - 3"""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], name="path4")


@pytest.fixture
def square() -> Graph:
    """4-cycle 0-1-2-3-0."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], name="square")


@pytest.fixture
def two_triangles() -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by edge 2-3, plus isolated vertex 6."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    return Graph.from_edges(7, edges, name="two_triangles")


@pytest.fixture
def er_graph() -> Graph:
    return gen_er(30, 0.3, seed=11)


@pytest.fixture
def petersen_path() -> Path:
    return FIXTURES / "petersen.clq"


@pytest.fixture
def config_yaml_path(tmp_path: Path) -> Path:
    """Write a small deterministic config YAML and return its path."""
    data = {
        "k": 2,
        "local_search": {"m_step": 10, "bms_samples": 4},
        "tabu": {"bits": 2048},
        "budget": {"mode": "deterministic", "ls_individuals": 4, "ga_generations": 3},
    }
    path = tmp_path / "config.yaml"
    path.write_text(yaml.dump(data))
    return path


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
