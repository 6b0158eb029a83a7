import os
import logging
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import yaml
from banal import is_listish, is_mapping, ensure_list
from normality import stringify

from cheapars.exc import InvalidConfig
from cheapars.sampler import ARS, CARS, METHODS, RULE_KINDS
from cheapars.targets import registry
from cheapars.util import get_env_int, parse_ints

log = logging.getLogger(__name__)

DEFAULT_REPLICAS = 100
DEFAULT_N = [5000, 10000, 50000]
DEFAULT_NODES = [3, 5, 10]
TARGET_PARAMS = {"gaussian": ("sigma2",), "gamma": ("r", "a")}


class Cell(NamedTuple):
    """One (method, N, node count) combination of an experiment grid."""

    method: str
    n_samples: int
    nodes: int

    @classmethod
    def parse(cls, text):
        """Parse "ars:5000:3" (method, N, nodes)."""
        parts = [p.strip() for p in str(text).split(":")]
        if len(parts) != 3:
            raise ValueError("Expected method:N:nodes, got %r" % text)
        method = parts[0].lower()
        if method not in METHODS:
            raise ValueError("Unknown method: %r" % parts[0])
        return cls(method, int(parts[1]), int(parts[2]))

    def __str__(self):
        return "%s:%d:%d" % self


class ExperimentConfig(object):
    """Everything needed to re-run a benchmark grid deterministically.
    Replica k of every cell is seeded with seed + k."""

    def __init__(
        self,
        target: str = "gaussian",
        target_params: Optional[Dict[str, float]] = None,
        methods: Optional[List[str]] = None,
        n_samples_list: Optional[List[int]] = None,
        node_counts: Optional[List[int]] = None,
        replicas: int = DEFAULT_REPLICAS,
        seed: int = 0,
        jobs: Optional[int] = None,
        initial_rule: Optional[Tuple[str, float, float]] = None,
        baseline: Optional[Cell] = None,
        rebuild_each_step: bool = False,
        out: Optional[str] = None,
    ):
        self.target = target
        self.target_params = target_params or {}
        self.methods = methods or [ARS, CARS]
        self.n_samples_list = n_samples_list or list(DEFAULT_N)
        self.node_counts = node_counts or list(DEFAULT_NODES)
        self.replicas = replicas
        self.seed = seed
        self.jobs = jobs if jobs is not None else get_env_int("CHEAPARS_JOBS", 1)
        self.initial_rule = initial_rule
        self.baseline = baseline or self.cells[0]
        self.rebuild_each_step = rebuild_each_step
        self.out = out
        self.validate()

    @property
    def cells(self) -> List[Cell]:
        cells = []
        for n_samples in self.n_samples_list:
            for method in self.methods:
                for nodes in self.node_counts:
                    cells.append(Cell(method, n_samples, nodes))
        return cells

    def make_target(self):
        return registry.make(self.target, self.target_params)

    def validate(self):
        errors = {}
        if registry.get(self.target) is None:
            errors["target"] = "Unknown target: %r" % self.target
        else:
            try:
                self.make_target()
            except Exception as exc:
                errors["target"] = str(exc)
        for method in self.methods:
            if method not in METHODS:
                errors["method"] = "Unknown method: %r" % method
        for key in ("n_samples_list", "node_counts"):
            values = getattr(self, key)
            if not len(values) or min(values) < 1:
                errors[key] = "Need a non-empty list of positive integers"
        if min(self.node_counts or [2]) < 2:
            errors["node_counts"] = "At least two nodes are required"
        if self.replicas < 1:
            errors["replicas"] = "Need at least one replica"
        if self.seed < 0:
            errors["seed"] = "Seed must be non-negative"
        if self.jobs < 1:
            errors["jobs"] = "Need at least one job"
        if self.baseline not in self.cells:
            errors["baseline"] = "Baseline %s is not in the grid" % (self.baseline,)
        if self.initial_rule is not None:
            kind, lo, hi = self.initial_rule
            if kind not in RULE_KINDS or not lo < hi:
                errors["init_rule"] = "Invalid initial rule: %r" % (self.initial_rule,)
        if len(errors):
            raise InvalidConfig("Invalid experiment configuration", errors=errors)

    @classmethod
    def from_dict(cls, data):
        """Build a configuration from a flat mapping of config-file keys.
        Unset (None) values fall back to defaults."""
        try:
            return cls(**_parse(data))
        except (TypeError, ValueError) as exc:
            raise InvalidConfig("Invalid experiment configuration: %s" % exc)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "target": self.target,
            "method": list(self.methods),
            "n": list(self.n_samples_list),
            "nodes": list(self.node_counts),
            "replicas": self.replicas,
            "seed": self.seed,
            "jobs": self.jobs,
            "baseline": str(self.baseline),
            "literal": self.rebuild_each_step,
        }
        data.update(self.target_params)
        if self.initial_rule is not None:
            data["init_rule"], data["init_lo"], data["init_hi"] = self.initial_rule
        return data

    def __repr__(self):
        return "<ExperimentConfig(%r, %d cells, %d replicas)>" % (
            self.target,
            len(self.cells),
            self.replicas,
        )


def _parse(data):
    kwargs: Dict[str, Any] = {}
    target = stringify(data.get("target"))
    if target is not None:
        kwargs["target"] = target.lower()
    params = {}
    for name in TARGET_PARAMS.get(kwargs.get("target", "gaussian"), ()):
        value = stringify(data.get(name))
        if value is not None:
            params[name] = float(value)
    kwargs["target_params"] = params
    methods = []
    for value in ensure_list(data.get("method")):
        for part in str(value).split(","):
            part = part.strip().lower()
            if part == "both":
                methods.extend([ARS, CARS])
            elif len(part):
                methods.append(part)
    if len(methods):
        kwargs["methods"] = methods
    if data.get("n") is not None:
        kwargs["n_samples_list"] = parse_ints(data.get("n"))
    if data.get("nodes") is not None:
        kwargs["node_counts"] = parse_ints(data.get("nodes"))
    for key in ("replicas", "seed", "jobs"):
        if data.get(key) is not None:
            kwargs[key] = int(data.get(key))
    kind = stringify(data.get("init_rule"))
    if kind is not None:
        lo, hi = data.get("init_lo"), data.get("init_hi")
        if lo is None or hi is None:
            raise ValueError("init_rule needs init_lo and init_hi")
        kwargs["initial_rule"] = (kind.lower(), float(lo), float(hi))
    baseline = stringify(data.get("baseline"))
    if baseline is not None:
        kwargs["baseline"] = Cell.parse(baseline)
    if data.get("literal") is not None:
        kwargs["rebuild_each_step"] = _parse_bool(data.get("literal"))
    out = stringify(data.get("out"))
    if out is not None:
        kwargs["out"] = out
    return kwargs


def _parse_bool(value):
    if isinstance(value, bool):
        return value
    return (stringify(value) or "").lower() in ("1", "true", "yes", "on")


def load_config_file(file_path):
    """Load a flat YAML experiment config, resolving includes."""
    file_path = os.path.abspath(file_path)
    try:
        with open(file_path, "r") as fh:
            data = yaml.safe_load(fh) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise InvalidConfig("Cannot read config %s: %s" % (file_path, exc))
    if not is_mapping(data):
        raise InvalidConfig("Config file is not a mapping: %s" % file_path)
    return resolve_includes(file_path, data)


def resolve_includes(file_path, data):
    """Handle include statements in the experiment configuration file.

    This allows shared settings (a target, a seed) to live in one file
    and be reused by several experiment files. Keys in the including file
    win over included ones."""
    if is_listish(data):
        return [resolve_includes(file_path, i) for i in data]
    if is_mapping(data):
        merged = {}
        include_paths = ensure_list(data.pop("include", []))
        for include_path in include_paths:
            dir_prefix = os.path.dirname(file_path)
            include_path = os.path.join(dir_prefix, include_path)
            merged.update(load_config_file(include_path))
        merged.update(data)
        return merged
    return data


def load_config(file_path=None, **overrides):
    """Read the config file (if any) and apply overrides, which win."""
    data = {}
    if file_path is not None:
        data = load_config_file(file_path)
    for key, value in overrides.items():
        if value is None:
            continue
        if is_listish(value) and not len(value):
            continue
        data[key] = value
    log.debug("Experiment configuration: %r", data)
    return ExperimentConfig.from_dict(data)


__all__ = ["Cell", "ExperimentConfig", "load_config", "load_config_file"]
