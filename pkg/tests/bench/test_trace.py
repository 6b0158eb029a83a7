import unittest

from cheapars.bench.trace import trace_run
from cheapars.sampler import ARS, CARS
from cheapars.targets import GaussianTarget


class TraceTest(unittest.TestCase):
    def test_snapshots(self):
        target = GaussianTarget(0.5)
        snapshots = trace_run(
            target,
            CARS,
            [-1.5, -1.0, 1.8],
            2000,
            seed=4,
            snapshot_iterations=[0, 10, 50],
        )
        iterations = [s.iteration for s in snapshots]
        assert iterations[:3] == [0, 10, 50], iterations
        assert len(snapshots) == 4
        first = snapshots[0]
        assert first.nodes == (-1.5, -1.0, 1.8)
        assert len(first.pieces) == 3
        for snapshot in snapshots:
            assert len(snapshot.nodes) == 3
        normalizers = [s.log_normalizer for s in snapshots]
        assert normalizers == sorted(normalizers, reverse=True), normalizers

    def test_final_only(self):
        target = GaussianTarget()
        snapshots = trace_run(target, ARS, 3, 100, seed=1, snapshot_iterations=[])
        assert len(snapshots) == 1
        assert snapshots[0].iteration >= 100

    def test_unreached(self):
        snapshots = trace_run(
            GaussianTarget(), CARS, 3, 10, seed=1, snapshot_iterations=[0, 10 ** 6]
        )
        assert [s.iteration for s in snapshots][0] == 0
        assert len(snapshots) == 2
