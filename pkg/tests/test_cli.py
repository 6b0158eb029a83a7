import os
import csv
import unittest
from unittest import mock

from click.testing import CliRunner

from cheapars.bench.validation import check_oracles
from cheapars.cli import cli
from cheapars.cli.util import parse_nodes
from cheapars.exc import DiagnosticFailure, InvalidParameter
from cheapars.export.csv import BENCH_HEADER

BENCH = ["-n", "100", "--nodes", "3", "-r", "2", "-j", "1", "-s", "1", "-o", "out"]


def broken():
    raise DiagnosticFailure("no convergence")


def read_csv(path):
    with open(path, "r") as fh:
        return list(csv.reader(fh))


class CLITest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli, ["-q"] + list(args))

    def test_parse_nodes(self):
        assert parse_nodes("5") == 5
        assert parse_nodes(None) == 3
        assert parse_nodes("-1,0,1") == [-1.0, 0.0, 1.0]
        with self.assertRaises(InvalidParameter):
            parse_nodes("a,b")

    def test_sample(self):
        with self.runner.isolated_filesystem():
            args = ["-n", "50", "-s", "1", "--report"]
            result = self.invoke("sample", *args, "-o", "samples.txt")
            assert result.exit_code == 0, result.output
            with open("samples.txt", "r") as fh:
                values = [float(line) for line in fh]
            assert len(values) == 50

    def test_sample_gamma(self):
        with self.runner.isolated_filesystem():
            args = ["sample", "-t", "gamma", "--r", "3", "-m", "ars", "-n", "20"]
            result = self.invoke(*args, "--nodes", "0.5,2,9", "-o", "samples.txt")
            assert result.exit_code == 0, result.output
            with open("samples.txt", "r") as fh:
                values = [float(line) for line in fh]
            assert all(v > 0.0 for v in values)

    def test_bench(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("bench", "-m", "both", *BENCH)
            assert result.exit_code == 0, result.output
            rows = read_csv(os.path.join("out", "bench.csv"))
            assert rows[0] == BENCH_HEADER, rows[0]
            assert [r[0] for r in rows[1:]] == ["ars", "cars"], rows

    def test_bench_config(self):
        config = os.path.join(os.path.dirname(__file__), "fixtures", "experiment.yml")
        with self.runner.isolated_filesystem():
            args = ["-n", "50", "--baseline-cell", "cars:50:3"]
            result = self.invoke("bench", "-c", config, *args, *BENCH[4:])
            assert result.exit_code == 0, result.output
            rows = read_csv(os.path.join("out", "bench.csv"))
            assert len(rows) == 1 + 2 * 2
            assert all(r[1] == "gamma" for r in rows[1:])

    def test_sweep(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("sweep", "--over", "n", "-n", "100,200", *BENCH[2:])
            assert result.exit_code == 0, result.output
            rows = read_csv(os.path.join("out", "sweep_n.csv"))
            assert len(rows) == 5
            args = ["sweep", "--nodes", "3,4", "-n", "100", *BENCH[4:]]
            result = self.invoke(*args)
            assert result.exit_code == 0, result.output
            rows = read_csv(os.path.join("out", "sweep_nodes.csv"))
            assert [r[3] for r in rows[1:]] == ["3", "4"], rows

    def test_trace(self):
        with self.runner.isolated_filesystem():
            args = ["trace", "-n", "200", "--trace-at", "0,5", "-s", "2", "-o", "out"]
            result = self.invoke(*args)
            assert result.exit_code == 0, result.output
            assert os.path.exists(os.path.join("out", "trace_envelope.csv"))
            rows = read_csv(os.path.join("out", "trace_nodes.csv"))
            assert rows[1][0] == "0", rows[1]

    def test_config_errors(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("bench", "-r", "0", "-j", "1")
            assert result.exit_code == 1, result.output
            result = self.invoke("bench", "--banana")
            assert result.exit_code == 1, result.output
            result = self.invoke("sample", "--sigma2=-1")
            assert result.exit_code == 1, result.output

    def test_runtime_error(self):
        rule = ["--init-rule", "window", "--init-lo", "1", "--init-hi", "2"]
        with self.runner.isolated_filesystem():
            result = self.invoke("bench", "-m", "cars", *BENCH, *rule)
            assert result.exit_code == 2, result.output
            rows = read_csv(os.path.join("out", "bench.csv"))
            assert rows == [BENCH_HEADER], rows

    def test_rule_alias(self):
        rule = ["--init-rule", "uniform-window", "--init-lo", "-2", "--init-hi", "2"]
        with self.runner.isolated_filesystem():
            result = self.invoke("bench", "-m", "cars", *BENCH, *rule)
            assert result.exit_code == 0, result.output

    def test_numerical_error(self):
        error = OverflowError("math range error")
        with mock.patch("cheapars.cli.sample.run", side_effect=error):
            result = self.invoke("sample", "-n", "10")
            assert result.exit_code == 2, result.output

    def test_validate(self):
        with mock.patch("cheapars.bench.validation.CHECKS", [check_oracles]):
            result = self.invoke("validate")
            assert result.exit_code == 0, result.output
            assert "PASS oracles" in result.output
        with mock.patch("cheapars.bench.validation.CHECKS", [check_oracles, broken]):
            result = self.invoke("validate")
            assert result.exit_code == 3, result.output
            assert "FAIL broken" in result.output
