"""Local MDS parity-check matrices [Q | I] over GF(q).

The local code has length r + delta - 1, dimension r and minimum
distance exactly delta; the MDS property is never assumed from the
entry pattern but always verified by checking every (delta-1)-subset of
columns for independence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import ConstructionError, ParameterError
from .field import GF
from .linear import matrix_rank


@dataclass(frozen=True)
class MdsLocalMatrix:
    r: int
    delta: int
    field: GF
    Q: np.ndarray = dc_field(repr=False)  # (delta-1) x r

    @property
    def matrix(self):
        """Full parity check [Q | I] of shape (delta-1) x (r+delta-1)."""
        ident = np.eye(self.delta - 1, dtype=np.int64)
        return np.hstack([self.Q, ident])

    @property
    def length(self):
        return self.r + self.delta - 1


def build_mds_parity(r, delta, field: GF, style="vandermonde"):
    """Build a verified [r+delta-1, r, delta] MDS parity check.

    vandermonde: Q[i][j] = beta^(i*j) with beta the field generator
    (row 0 all ones).  cauchy: Q[i][j] = 1/(x_i - y_j) over the first
    r+delta-1 field elements in encoding order; in characteristic 2 the
    difference equals the sum.  Either way the candidate must pass
    verify_mds, otherwise the call fails rather than substituting.
    """
    if r < 1 or delta < 2:
        raise ParameterError(f"need r >= 1 and delta >= 2, got r={r}, delta={delta}")
    if field.q < r + delta - 2:
        raise ParameterError(
            f"q = {field.q} < r + delta - 2 = {r + delta - 2}: field too small")
    rows = delta - 1
    if style == "vandermonde":
        beta = field.generator
        Q = np.array([[field.pow(beta, i * j) for j in range(r)]
                      for i in range(rows)], dtype=np.int64)
    elif style == "cauchy":
        if field.q < r + delta - 1:
            raise ParameterError(
                f"cauchy style needs r + delta - 1 = {r + delta - 1} distinct "
                f"field elements, q = {field.q}")
        xs = list(range(rows))
        ys = list(range(rows, rows + r))
        Q = np.array([[field.inv(field.sub(x, y)) for y in ys] for x in xs],
                     dtype=np.int64)
    else:
        raise ParameterError(f"unknown MDS style {style!r}")

    mds = MdsLocalMatrix(r=r, delta=delta, field=field, Q=Q)
    ok, witness = verify_mds(mds)
    if not ok:
        hint = "; try style='cauchy'" if style == "vandermonde" else ""
        raise ConstructionError(
            f"{style} candidate for (r={r}, delta={delta}, q={field.q}) is not "
            f"MDS: columns {witness} are dependent{hint}")
    return mds


def verify_mds(mds: MdsLocalMatrix):
    """True iff every (delta-1)-subset of columns of [Q | I] is linearly
    independent; on failure returns a dependent subset as witness."""
    H = mds.matrix
    rows = mds.delta - 1
    for cols in itertools.combinations(range(H.shape[1]), rows):
        if matrix_rank(mds.field, H[:, cols]) < rows:
            return False, cols
    return True, None
