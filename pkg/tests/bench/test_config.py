import os
import unittest

from cheapars.bench.config import Cell, ExperimentConfig, load_config
from cheapars.bench.config import load_config_file
from cheapars.exc import InvalidConfig
from cheapars.sampler import ARS, CARS

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(__file__)), "fixtures")
EXPERIMENT = os.path.join(FIXTURES, "experiment.yml")


class CellTest(unittest.TestCase):
    def test_parse(self):
        cell = Cell.parse("ARS:5000:3")
        assert cell == Cell(ARS, 5000, 3), cell
        assert str(cell) == "ars:5000:3"
        with self.assertRaises(ValueError):
            Cell.parse("ars:5000")
        with self.assertRaises(ValueError):
            Cell.parse("mcmc:5000:3")


class ExperimentConfigTest(unittest.TestCase):
    def test_defaults(self):
        config = ExperimentConfig(jobs=1)
        assert config.target == "gaussian"
        assert config.methods == [ARS, CARS]
        assert config.replicas == 100
        assert len(config.cells) == 2 * 3 * 3
        assert config.baseline == Cell(ARS, 5000, 3)
        assert config.make_target().sigma2 == 0.5

    def test_cells_order(self):
        config = ExperimentConfig(n_samples_list=[10, 20], node_counts=[3], jobs=1)
        cells = [str(c) for c in config.cells]
        assert cells == ["ars:10:3", "cars:10:3", "ars:20:3", "cars:20:3"], cells

    def test_invalid(self):
        with self.assertRaises(InvalidConfig) as ctx:
            ExperimentConfig(target="banana", replicas=0, node_counts=[1], jobs=1)
        errors = ctx.exception.errors
        assert "target" in errors, errors
        assert "replicas" in errors, errors
        assert "node_counts" in errors, errors
        with self.assertRaises(InvalidConfig):
            ExperimentConfig(target_params={"sigma2": -1.0}, jobs=1)
        with self.assertRaises(InvalidConfig):
            ExperimentConfig(baseline=Cell(CARS, 7, 3), jobs=1)
        with self.assertRaises(InvalidConfig):
            ExperimentConfig(initial_rule=("window", 1.0, -1.0), jobs=1)

    def test_from_dict(self):
        config = ExperimentConfig.from_dict(
            {
                "target": "Gaussian",
                "sigma2": "2",
                "method": "cars",
                "n": "100,200",
                "nodes": 4,
                "replicas": "5",
                "jobs": 1,
                "init_rule": "endpoints",
                "init_lo": -1,
                "init_hi": 1,
                "literal": "yes",
            }
        )
        assert config.target_params == {"sigma2": 2.0}
        assert config.methods == [CARS]
        assert config.n_samples_list == [100, 200]
        assert config.node_counts == [4]
        assert config.replicas == 5
        assert config.initial_rule == ("endpoints", -1.0, 1.0)
        assert config.rebuild_each_step is True
        data = config.to_dict()
        assert data["sigma2"] == 2.0
        assert data["init_rule"] == "endpoints"
        assert ExperimentConfig.from_dict(data).cells == config.cells

    def test_rule_aliases(self):
        for kind in ("uniform-window", "uniform", "fixed-endpoints"):
            config = ExperimentConfig(initial_rule=(kind, -1.0, 1.0), jobs=1)
            assert config.initial_rule[0] == kind
        with self.assertRaises(InvalidConfig):
            ExperimentConfig(initial_rule=("banana", -1.0, 1.0), jobs=1)

    def test_trace_points_not_configured(self):
        config = ExperimentConfig.from_dict({"trace_at": "1,2", "jobs": 1})
        assert not hasattr(config, "trace_at")
        assert "trace_at" not in config.to_dict()

    def test_from_dict_invalid(self):
        with self.assertRaises(InvalidConfig):
            ExperimentConfig.from_dict({"n": "many"})
        with self.assertRaises(InvalidConfig):
            ExperimentConfig.from_dict({"init_rule": "window", "init_lo": 0})
        with self.assertRaises(InvalidConfig):
            ExperimentConfig.from_dict({"method": "mcmc", "jobs": 1})


class LoadConfigTest(unittest.TestCase):
    def test_includes(self):
        data = load_config_file(EXPERIMENT)
        assert data["target"] == "gamma", data
        assert data["seed"] == 11, data
        assert "include" not in data, data

    def test_load(self):
        config = load_config(EXPERIMENT, jobs=1)
        assert config.target == "gamma"
        assert config.target_params == {"r": 2.0, "a": 2.0}
        assert config.methods == [ARS, CARS]
        assert config.n_samples_list == [100, 200]
        assert config.node_counts == [3, 5]
        assert config.replicas == 3
        assert config.seed == 11
        assert config.baseline == Cell(CARS, 100, 3)

    def test_overrides(self):
        config = load_config(EXPERIMENT, seed=3, replicas=None, nodes=[], jobs=1)
        assert config.seed == 3
        assert config.replicas == 3
        assert config.node_counts == [3, 5]

    def test_missing(self):
        with self.assertRaises(InvalidConfig):
            load_config(os.path.join(FIXTURES, "banana.yml"))

    def test_shipped_experiments(self):
        root = os.path.dirname(os.path.dirname(FIXTURES))
        directory = os.path.join(root, "docs", "experiments")
        config = load_config(os.path.join(directory, "gamma.yml"), jobs=1)
        assert config.target == "gamma"
        assert config.initial_rule == ("endpoints", 0.01, 4.0)
        assert len(config.cells) == 18
        config = load_config(os.path.join(directory, "gaussian.yml"), jobs=1)
        assert config.initial_rule == ("window", -2.0, 2.0)
