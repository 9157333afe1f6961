"""Deterministic file output: JSON, CSV, SVG and hashes."""
import hashlib
import json
import numpy as np


def canonical_json(obj):
    """Serialize to JSON with sorted keys and no whitespace variation."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      default=_to_builtin)


def config_hash(obj):
    """SHA-256 of the canonical JSON representation of a config."""
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def file_hash(filename):
    """SHA-256 of a file's bytes."""
    h = hashlib.sha256()
    with open(filename, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def write_json(filename, obj):
    with open(filename, "w") as f:
        json.dump(obj, f, sort_keys=True, indent=2, default=_to_builtin)
        f.write("\n")


def read_json(filename):
    with open(filename, "r") as f:
        return json.load(f)


def write_csv(filename, columns, header):
    """Write equally long columns with a header line.

    Integer columns are written as integers, everything else with 17
    significant digits so that floats survive a round trip.
    """
    columns = [np.asarray(c) for c in columns]
    n_rows = len(columns[0])
    if any(len(c) != n_rows for c in columns):
        raise ValueError("Columns must have equal length")
    formats = []
    for c in columns:
        if c.dtype.kind in "iub":
            formats.append("%d")
        elif c.dtype.kind in "SUO":
            formats.append("%s")
        else:
            formats.append("%.17g")
    with open(filename, "w") as f:
        f.write(",".join(header) + "\n")
        for i in range(n_rows):
            f.write(",".join(fmt % c[i] for fmt, c in zip(formats, columns)))
            f.write("\n")


def read_csv(filename):
    """Read a CSV file with a header line into a dict of arrays."""
    data = np.atleast_1d(np.genfromtxt(filename, delimiter=",", names=True,
                                       dtype=None, encoding="utf-8"))
    return dict((name, np.asarray(data[name])) for name in data.dtype.names)


def plot_polylines(filename, polylines, labels=None, title=None,
                   equal_aspect=True):
    """Save closed or open polylines as an SVG figure.

    Parameters
    ----------
    filename : string
        Output file name

    polylines : list of arrays, shape (n_points, 2)
        Curves to draw

    labels : list of strings, optional (default: None)
        Legend entries

    title : string, optional (default: None)
        Figure title

    equal_aspect : bool, optional (default: True)
        Use the same scale on both axes
    """
    plt = _pyplot()
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(111)
    for i, line in enumerate(polylines):
        line = np.asarray(line)
        label = None if labels is None else labels[i]
        ax.plot(line[:, 0], line[:, 1], lw=1, label=label)
    if labels is not None:
        ax.legend(loc="best")
    if equal_aspect:
        ax.set_aspect("equal", adjustable="datalim")
    if title is not None:
        ax.set_title(title)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    _save(fig, filename)


def plot_curve(filename, x, y, xlabel="x", ylabel="density", title=None):
    """Save a function graph as an SVG figure."""
    plt = _pyplot()
    fig = plt.figure(figsize=(6, 4))
    ax = fig.add_subplot(111)
    ax.plot(x, y, lw=1)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title is not None:
        ax.set_title(title)
    _save(fig, filename)


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    # fixed element ids make repeated runs byte-identical
    matplotlib.rcParams["svg.hashsalt"] = "skorohod"
    return plt


def _save(fig, filename):
    import matplotlib.pyplot as plt
    fig.savefig(filename, format="svg", metadata={"Date": None})
    plt.close(fig)


def _to_builtin(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError("Object of type %s is not JSON serializable"
                    % type(obj).__name__)
