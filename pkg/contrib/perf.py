from cheapars.sampler import ARS, CARS, SamplerState, run
from cheapars.targets import GaussianTarget

TARGET = GaussianTarget(0.5)


def create_chain(method, literal=False):
    state = SamplerState.create(TARGET, method, 3, seed=0, rebuild_each_step=literal)
    samples, stats = run(state, 50000)
    return stats


def benchmark():
    for method in (ARS, CARS):
        for literal in (False, True):
            stats = create_chain(method, literal=literal)
            print(method, literal, stats.final_nodes, "%.3fs" % stats.elapsed)


if __name__ == "__main__":
    benchmark()
