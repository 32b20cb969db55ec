"""Assembly of the global parity-check matrix.

The construction expands every line of the incidence matrix into a
(delta-1)-row block carrying the columns of Q, stacks the identity over
the line-parity coordinates, and appends a block-diagonal W* tier that
ties the first ceil(s/r)*r line parities to the global parities:

    H = [ M*   I_mu                      0 ]
        [ 0    W* (zero-padded to mu)    I ]

Coordinate layout (0-based): information 0..k-1, line parities
k..k+mu-1 (line j owns the delta-1 consecutive columns starting at
k + j*(delta-1)), global parities afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .designs import Design, validate_design
from .errors import ParameterError
from .field import GF, same_field
from .linear import LinearCode, mat_vec
from .mds import MdsLocalMatrix


@dataclass(frozen=True)
class ConstructionParams:
    r: int
    delta: int
    t_i: int
    field: GF
    design: Design
    mds: MdsLocalMatrix

    def __post_init__(self):
        same_field(self.field, self.mds.field)
        if self.mds.r != self.r or self.mds.delta != self.delta:
            raise ParameterError(
                f"MDS matrix is for (r={self.mds.r}, delta={self.mds.delta}), "
                f"params say (r={self.r}, delta={self.delta})")
        if self.design.r != self.r or self.design.t_i != self.t_i:
            raise ParameterError(
                f"design is ({self.design.t_i}, {self.design.r})-regular, "
                f"params say (t_i={self.t_i}, r={self.r})")
        if self.field.q < self.r + self.delta - 2:
            raise ParameterError(
                f"q = {self.field.q} < r + delta - 2 = {self.r + self.delta - 2}")
        if self.t_i > self.delta:
            raise ParameterError(
                f"t_i = {self.t_i} exceeds delta = {self.delta}")
        ok, report = validate_design(self.design)
        if not ok:
            raise ParameterError(f"invalid design: {report['violation']}")

    @property
    def k(self):
        return self.design.k

    @property
    def b(self):
        return self.design.b

    @property
    def s(self):
        return math.ceil(self.k / self.r)

    @property
    def mu(self):
        return self.b * (self.delta - 1)

    @property
    def w_blocks(self):
        return math.ceil(self.s / self.r)


@dataclass(frozen=True)
class CodeShape:
    """Parameter block of a constructed code, without the generating
    design and MDS objects; what a loaded matrix file can rehydrate."""
    field: GF
    r: int
    delta: int
    t_i: int
    k: int
    b: int

    @property
    def s(self):
        return math.ceil(self.k / self.r)

    @property
    def mu(self):
        return self.b * (self.delta - 1)

    @property
    def w_blocks(self):
        return math.ceil(self.s / self.r)


@dataclass(frozen=True)
class ConstructedCode:
    params: ConstructionParams
    H: np.ndarray = dc_field(repr=False)
    coordinate_roles: tuple = ()

    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def field(self):
        return self.params.field

    @property
    def n(self):
        return self.H.shape[1]

    @property
    def k(self):
        return self.params.k

    @property
    def rank(self):
        return self.as_linear_code().rank

    @property
    def dimension(self):
        return self.as_linear_code().dimension

    def as_linear_code(self):
        if "code" not in self._cache:
            self._cache["code"] = LinearCode(self.field, self.H)
        return self._cache["code"]

    def information_coords(self):
        return range(self.k)

    def line_parity_coords(self):
        return range(self.k, self.k + self.params.mu)

    def global_parity_coords(self):
        return range(self.k + self.params.mu, self.n)

    def row_block_support(self, j):
        """Nonzero columns of row block j (0-based, j < b + w_blocks)."""
        d1 = self.params.delta - 1
        block = self.H[j * d1:(j + 1) * d1]
        return tuple(int(c) for c in np.flatnonzero(block.any(axis=0)))

    def encode(self, message):
        """Systematic codeword for a k-symbol message."""
        p = self.params
        fld = self.field
        if len(message) != p.k:
            raise ValueError(f"message length {len(message)} != k = {p.k}")
        word = [fld.check(int(x)) for x in message] + [0] * (self.n - p.k)
        # line parities from the top mu rows, then global parities from
        # the bottom rows (which only read line parities)
        for row_idx in range(p.mu):
            row = self.H[row_idx]
            acc = 0
            for j in range(p.k):
                if row[j] and word[j]:
                    acc = fld.add(acc, fld.mul(int(row[j]), word[j]))
            word[p.k + row_idx] = fld.neg(acc)
        for t, row_idx in enumerate(range(p.mu, self.H.shape[0])):
            row = self.H[row_idx]
            acc = 0
            for j in range(p.k, p.k + p.mu):
                if row[j] and word[j]:
                    acc = fld.add(acc, fld.mul(int(row[j]), word[j]))
            word[p.k + p.mu + t] = fld.neg(acc)
        assert all(v == 0 for v in mat_vec(fld, self.H, word))
        return tuple(word)


def expand_m_star(design: Design, mds: MdsLocalMatrix):
    """Expand the incidence matrix into the b(delta-1) x k matrix M*:
    the j-th one of each line (left to right) becomes the j-th column
    of Q, zeros become zero columns."""
    if any(len(line) != mds.r for line in design.lines):
        raise ParameterError(
            f"design row weight differs from MDS locality r = {mds.r}")
    d1 = mds.delta - 1
    M_star = np.zeros((design.b * d1, design.k), dtype=np.int64)
    for li, line in enumerate(design.lines):
        for j, point in enumerate(sorted(line)):
            M_star[li * d1:(li + 1) * d1, point] = mds.Q[:, j]
    return M_star


def build_w_star(s, mds: MdsLocalMatrix):
    """Block-diagonal matrix with ceil(s/r) copies of Q."""
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    blocks = math.ceil(s / mds.r)
    d1 = mds.delta - 1
    W = np.zeros((blocks * d1, blocks * mds.r), dtype=np.int64)
    for t in range(blocks):
        W[t * d1:(t + 1) * d1, t * mds.r:(t + 1) * mds.r] = mds.Q
    return W


def build_parity_check(params: ConstructionParams):
    """Assemble the full parity-check matrix and wrap it as a code."""
    d1 = params.delta - 1
    mu = params.mu
    w_cols = params.w_blocks * params.r
    if w_cols > mu:
        raise ParameterError(
            f"W* width {w_cols} exceeds the {mu} line-parity columns; "
            f"increase b (more lines) or delta")
    M_star = expand_m_star(params.design, params.mds)
    W_star = build_w_star(params.s, params.mds)
    g = params.w_blocks * d1  # global parity rows
    k = params.k

    top = np.hstack([
        M_star,
        np.eye(mu, dtype=np.int64),
        np.zeros((mu, g), dtype=np.int64),
    ])
    bottom = np.hstack([
        np.zeros((g, k), dtype=np.int64),
        W_star,
        np.zeros((g, mu - w_cols), dtype=np.int64),
        np.eye(g, dtype=np.int64),
    ])
    H = np.vstack([top, bottom])
    roles = (("information",) * k
             + ("line_parity",) * mu
             + ("global_parity",) * g)
    return ConstructedCode(params=params, H=H, coordinate_roles=roles)


def constructed_from_matrix(field: GF, H, params_dict, roles=None):
    """Rehydrate a ConstructedCode from a loaded matrix file.

    params_dict carries the scalar parameter block of the file format;
    the originating design and MDS matrix are not needed for
    verification or simulation.
    """
    shape = CodeShape(field=field, r=params_dict["r"], delta=params_dict["delta"],
                      t_i=params_dict["t_i"], k=params_dict["k"],
                      b=params_dict["b"])
    H = np.atleast_2d(np.asarray(H, dtype=np.int64))
    if roles is None:
        g = H.shape[1] - shape.k - shape.mu
        roles = (("information",) * shape.k
                 + ("line_parity",) * shape.mu
                 + ("global_parity",) * g)
    return ConstructedCode(params=shape, H=H, coordinate_roles=tuple(roles))


def code_params(params: ConstructionParams):
    """Derived parameter report for a construction.

    t_claim = t_i * (delta - 1) is the tolerance the construction is
    designed to certify; t_abstract = delta * t_i + 1 is a stronger
    figure sometimes quoted for this family, which the verifier
    measures rather than presumes.
    """
    d1 = params.delta - 1
    k = params.k
    n = k + (params.b + params.w_blocks) * d1
    return {
        "n": n,
        "k": k,
        "rate": Fraction(k, n),
        "b": params.b,
        "s": params.s,
        "mu": params.mu,
        "t_claim": params.t_i * d1,
        "t_abstract": params.delta * params.t_i + 1,
        "t_abstract_status": "to verify",
    }
