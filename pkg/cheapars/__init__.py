from cheapars.targets import registry, LogConcaveTarget
from cheapars.targets import make_gaussian, make_gamma
from cheapars.envelope import SupportSet, Envelope, build_envelope
from cheapars.sampler import ARS, CARS, SamplerState, run, sample

__version__ = "0.3.0"

__all__ = [
    "registry",
    "LogConcaveTarget",
    "make_gaussian",
    "make_gamma",
    "SupportSet",
    "Envelope",
    "build_envelope",
    "ARS",
    "CARS",
    "SamplerState",
    "run",
    "sample",
]
