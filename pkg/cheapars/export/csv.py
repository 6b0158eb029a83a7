import csv
import math
from pathlib import Path

from cheapars.export.common import Exporter

BENCH_HEADER = [
    "method",
    "target",
    "N",
    "nodes",
    "mean_time_s",
    "normalized_time",
    "mean_eta_final",
    "stderr_eta",
    "mean_m_final",
]
# Columns that depend on the wall clock and differ between identical runs.
TIMING_COLUMNS = ("mean_time_s", "normalized_time")
ENVELOPE_HEADER = [
    "iteration",
    "index",
    "slope",
    "log_offset",
    "left",
    "right",
    "log_area",
]
NODES_HEADER = ["iteration", "log_normalizer", "index", "node"]


class PlotDialect(csv.unix_dialect):
    """Unquoted, newline-terminated records for plotting tools."""

    quoting = csv.QUOTE_MINIMAL


def format_cell(value):
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return repr(value)
    return str(value)


class CSVMixin(object):
    def _configure(self, directory, dialect=PlotDialect):
        self.directory = Path(directory)
        self.dialect = dialect
        self.handles = {}

    def _open_csv_file(self, name):
        self.directory.mkdir(parents=True, exist_ok=True)
        file_path = self.directory.joinpath("{0}.csv".format(name))
        handle = open(file_path, mode="w", newline="")
        writer = csv.writer(handle, dialect=self.dialect)
        return handle, writer

    def _get_writer(self, name, header):
        if name not in self.handles:
            handle, writer = self._open_csv_file(name)
            self.handles[name] = (handle, writer)
            writer.writerow(header)
        handle, writer = self.handles[name]
        return writer

    def path(self, name):
        return self.directory.joinpath("{0}.csv".format(name))

    def close(self):
        for (handle, writer) in self.handles.values():
            handle.close()


class BenchCSVExporter(Exporter, CSVMixin):
    """Write benchmark rows to {directory}/{name}.csv with a fixed header."""

    def __init__(self, directory, name="bench"):
        self.name = name
        self._configure(directory, dialect=PlotDialect)

    def write(self, row, **kwargs):
        writer = self._get_writer(self.name, BENCH_HEADER)
        writer.writerow([format_cell(getattr(row, col)) for col in BENCH_HEADER])

    def finalize(self):
        # An experiment without rows still gets its header.
        self._get_writer(self.name, BENCH_HEADER)
        self.close()


class TraceCSVExporter(Exporter, CSVMixin):
    """Write envelope snapshots as two tables: the pieces of every hull,
    and the support set with its normalizer."""

    def __init__(self, directory, prefix="trace"):
        self.prefix = prefix
        self._configure(directory, dialect=PlotDialect)

    def write(self, snapshot, **kwargs):
        pieces = self._get_writer(self.prefix + "_envelope", ENVELOPE_HEADER)
        for record in snapshot.pieces:
            pieces.writerow([snapshot.iteration] + [format_cell(v) for v in record])
        nodes = self._get_writer(self.prefix + "_nodes", NODES_HEADER)
        for index, node in enumerate(snapshot.nodes):
            row = [snapshot.iteration, format_cell(snapshot.log_normalizer)]
            nodes.writerow(row + [index, format_cell(node)])

    def finalize(self):
        self.close()


def write_rows(stream, rows, header=BENCH_HEADER):
    """Write benchmark rows as CSV to an open text stream."""
    writer = csv.writer(stream, dialect=PlotDialect)
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(getattr(row, col)) for col in header])
