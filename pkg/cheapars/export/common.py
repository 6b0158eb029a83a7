class Exporter(object):
    """Base class for writers of benchmark and trace records."""

    def write(self, record, **kwargs):
        pass

    def finalize(self):
        pass
