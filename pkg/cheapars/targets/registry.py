from banal import ensure_dict

from cheapars.targets.common import LogConcaveTarget
from cheapars.exc import InvalidParameter


class Registry(object):
    """This registry keeps the target families available to experiment
    configurations and the command line. It can be used to build a target
    from a family name and a mapping of parameters."""

    def __init__(self):
        self.named = {}

    def add(self, clazz):
        if not issubclass(clazz, LogConcaveTarget) or clazz.name is None:
            return
        self.named[clazz.name] = clazz

    def get(self, name):
        """For a given family name, get the target class."""
        if isinstance(name, type) and issubclass(name, LogConcaveTarget):
            return name
        return self.named.get(name)

    def make(self, name, params=None, **kwargs):
        """Build a target of the named family from parameters, ignoring
        parameters which are unset."""
        clazz = self.get(name)
        if clazz is None:
            raise InvalidParameter("Unknown target family: %r" % name)
        params = dict(ensure_dict(params))
        params.update(kwargs)
        params = {k: v for k, v in params.items() if v is not None}
        try:
            return clazz(**params)
        except TypeError as exc:
            raise InvalidParameter("Invalid parameters for %s: %s" % (name, exc))

    @property
    def names(self):
        return sorted(self.named.keys())

    def __getattr__(self, name):
        try:
            return self.named[name]
        except KeyError:
            raise AttributeError(name)
