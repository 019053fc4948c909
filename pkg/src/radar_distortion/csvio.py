"""CSV files: one header row, comma-separated, LF endings, 17 significant digits."""

from __future__ import annotations

import io

import numpy as np

from .analysis import SignalTrace


def write_columns(stream, names, columns) -> None:
    data = np.column_stack([np.asarray(c, dtype=float) for c in columns])
    np.savetxt(stream, data, fmt="%.17g", delimiter=",", header=",".join(names), comments="", newline="\n")


def columns_to_text(names, columns) -> str:
    buf = io.StringIO()
    write_columns(buf, names, columns)
    return buf.getvalue()


def write_trace(stream, trace: SignalTrace, time_name: str = "t_s") -> None:
    write_columns(stream, (time_name, "re", "im"), (trace.times, trace.samples.real, trace.samples.imag))


def read_columns(stream) -> tuple[list[str], np.ndarray]:
    header = stream.readline().strip()
    if not header:
        raise ValueError("empty CSV file")
    names = [h.strip() for h in header.split(",")]
    data = np.loadtxt(stream, delimiter=",", ndmin=2)
    if data.size and data.shape[1] != len(names):
        raise ValueError(f"expected {len(names)} columns, found {data.shape[1]}")
    return names, data


def read_trace(stream) -> SignalTrace:
    """Read a t_s, re, im file back into a trace; the time axis must be uniform."""
    names, data = read_columns(stream)
    if len(names) != 3:
        raise ValueError("trace CSV needs three columns: time, re, im")
    if data.shape[0] < 1:
        raise ValueError("trace CSV has no rows")
    t = data[:, 0]
    if t.size == 1:
        raise ValueError("cannot infer the sample interval from a single row")
    dt = (t[-1] - t[0]) / (t.size - 1)
    if not np.allclose(np.diff(t), dt, rtol=1e-6, atol=0.0):
        raise ValueError("time column is not uniformly spaced")
    return SignalTrace(float(t[0]), float(dt), data[:, 1] + 1j * data[:, 2])
