"""Matrix, design and report serialization.

The matrix JSON document is the interchange format for constructed
codes:

    {
      "field": {"p", "m", "prim_poly", "generator"},
      "rows", "cols",
      "entries": row-major element encodings,
      "coordinate_roles": optional ["information" | "line_parity" |
                                    "global_parity", ...],
      "params": optional {"r", "delta", "t_i", "k", "b", "s", "mu"}
    }

Export followed by import is bit-exact.
"""

from __future__ import annotations

import csv
import json

import numpy as np

from .construct import ConstructedCode
from .field import GF
from .linear import LinearCode


def matrix_to_dict(code):
    if isinstance(code, ConstructedCode):
        p = code.params
        return {
            "field": code.field.spec_dict(),
            "rows": int(code.H.shape[0]),
            "cols": int(code.H.shape[1]),
            "entries": [int(x) for x in code.H.ravel()],
            "coordinate_roles": list(code.coordinate_roles),
            "params": {"r": p.r, "delta": p.delta, "t_i": p.t_i,
                       "k": p.k, "b": p.b, "s": p.s, "mu": p.mu},
        }
    lc = code
    return {
        "field": lc.field.spec_dict(),
        "rows": int(lc.H.shape[0]),
        "cols": int(lc.H.shape[1]),
        "entries": [int(x) for x in lc.H.ravel()],
        "coordinate_roles": None,
        "params": None,
    }


def dict_to_matrix(doc):
    """Returns (field, H, coordinate_roles, params_dict)."""
    fld = GF.from_spec_dict(doc["field"])
    rows, cols = doc["rows"], doc["cols"]
    entries = doc["entries"]
    if len(entries) != rows * cols:
        raise ValueError(
            f"entries length {len(entries)} != rows*cols = {rows * cols}")
    H = np.array(entries, dtype=np.int64).reshape(rows, cols)
    if H.size and (H.min() < 0 or H.max() >= fld.q):
        raise ValueError("matrix entry outside the field range")
    return fld, H, doc.get("coordinate_roles"), doc.get("params")


def save_matrix(code, path):
    with open(path, "w") as fh:
        json.dump(matrix_to_dict(code), fh, sort_keys=True)
        fh.write("\n")


def load_matrix(path):
    with open(path) as fh:
        return dict_to_matrix(json.load(fh))


def load_linear_code(path):
    """Load a matrix file as a plain LinearCode plus its metadata."""
    fld, H, roles, params = load_matrix(path)
    return LinearCode(fld, H), roles, params


def save_matrix_csv(code, path):
    H = code.H
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in H:
            writer.writerow(int(x) for x in row)


def load_matrix_csv(path):
    with open(path, newline="") as fh:
        rows = [[int(x) for x in row] for row in csv.reader(fh) if row]
    return np.array(rows, dtype=np.int64)
