"""Linear-code machinery over GF(q).

Matrices are numpy integer arrays whose entries are field-element
encodings.  Row reduction is done with plain loops (desk-scale sizes);
the one hot spot, enumerating the row space of a parity-check matrix to
find low-weight dual codewords, is vectorized through the field's
lookup tables.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleError
from .field import GF

# Above this many row-space vectors, dual enumeration switches from the
# full vectorized sweep to bounded column-subset elimination (the dense
# sweep materializes q^rank vectors in memory).
ENUM_LIMIT = 1 << 22
# Column-subset search refuses weights beyond this without enumeration.
SUBSET_WMAX_LIMIT = 6
SUBSET_BUDGET = 5_000_000


def rref(field: GF, A):
    """Row-reduce A over the field; returns (R, pivot_columns)."""
    R = [[int(x) for x in row] for row in np.atleast_2d(np.asarray(A))]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if R[i][c] != 0), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = field.inv(R[r][c])
        R[r] = [field.mul(inv, x) for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return np.array(R, dtype=np.int64).reshape(nrows, ncols), pivots


def rank_and_basis(field: GF, A):
    """Rank plus an echelon basis of the row space."""
    R, pivots = rref(field, A)
    return len(pivots), R[:len(pivots)]


def matrix_rank(field: GF, A):
    return rank_and_basis(field, A)[0]


def nullspace(field: GF, A):
    """Basis (as rows) of {x : A x = 0}; shape (dim, ncols)."""
    A = np.atleast_2d(np.asarray(A))
    ncols = A.shape[1]
    R, pivots = rref(field, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][f])
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)


def mat_vec(field: GF, A, x):
    """A @ x over the field (x a 1-D sequence)."""
    out = []
    for row in np.atleast_2d(np.asarray(A)):
        acc = 0
        for a, b in zip(row, x):
            if a and b:
                acc = field.add(acc, field.mul(int(a), int(b)))
        out.append(acc)
    return out


@dataclass(frozen=True)
class RecoverySet:
    """Helpers and coefficients expressing coordinate `target` as a
    linear combination valid on every codeword."""
    target: int
    helpers: tuple
    coeffs: tuple


@dataclass(frozen=True)
class DualWord:
    vector: tuple      # normalized: leading nonzero entry is 1
    support: frozenset


class LinearCode:
    """A linear code given by a parity-check matrix over GF(q)."""

    def __init__(self, field: GF, H):
        self.field = field
        H = np.atleast_2d(np.asarray(H, dtype=np.int64))
        if H.size and (H.min() < 0 or H.max() >= field.q):
            raise ValueError("matrix entries outside field range")
        self.H = H
        self.n = H.shape[1]
        self.rank, self._row_basis = rank_and_basis(field, H)
        self.dimension = self.n - self.rank
        self._generator = None
        self._dual_cache = {}

    @property
    def generator(self):
        """Generator matrix (dimension x n), rows span the code."""
        if self._generator is None:
            self._generator = nullspace(self.field, self.H)
        return self._generator

    def contains(self, word):
        return all(v == 0 for v in mat_vec(self.field, self.H, word))

    def codewords(self):
        """Iterate all q^dimension codewords (desk scale only)."""
        q = self.field.q
        if q ** self.dimension > ENUM_LIMIT:
            raise InfeasibleError(
                f"q^dim = {q}^{self.dimension} codewords is too many to list")
        G = self.generator
        for coeffs in itertools.product(range(q), repeat=self.dimension):
            w = [0] * self.n
            for c, row in zip(coeffs, G):
                if c:
                    for j, g in enumerate(row):
                        if g:
                            w[j] = self.field.add(w[j], self.field.mul(c, int(g)))
            yield tuple(w)


def min_distance(code: LinearCode, cap=None):
    """Exact minimum nonzero codeword weight.

    Enumerates all codewords when feasible; otherwise searches dependent
    column subsets of H up to size `cap`.  Returns None when the search
    proves only that the distance exceeds cap.
    """
    if code.dimension == 0:
        raise ValueError("the zero code has no nonzero codeword")
    q = code.field.q
    if q ** code.dimension <= ENUM_LIMIT:
        best = None
        for w in code.codewords():
            wt = sum(1 for x in w if x)
            if wt and (best is None or wt < best):
                best = wt
                if best == 1:
                    break
        return best
    if cap is None:
        raise InfeasibleError(
            f"q^dim = {q}^{code.dimension}: pass a cap for subset search")
    H = code.H
    for w in range(1, cap + 1):
        for cols in itertools.combinations(range(code.n), w):
            if matrix_rank(code.field, H[:, cols]) < w:
                return w
    return None


def puncture(code: LinearCode, keep):
    """Project the code onto the coordinate subset `keep`."""
    keep = sorted(keep)
    if not keep:
        raise ValueError("keep must be nonempty")
    G = code.generator[:, keep]
    Hp = nullspace(code.field, G)
    if Hp.shape[0] == 0:
        Hp = np.zeros((0, len(keep)), dtype=np.int64)
    return LinearCode(code.field, Hp)


def _enumerate_rowspace(field: GF, rows):
    """All q^len(rows) combinations of the rows, vectorized via tables."""
    q = field.q
    n = rows.shape[1] if rows.size else 0
    words = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(q)
    for row in rows:
        multiples = field.mul_table[np.ix_(scalars, row)]     # (q, n)
        words = field.add_table[words[:, None, :], multiples[None, :, :]]
        words = words.reshape(-1, n)
    return words


def dual_low_weight(code: LinearCode, wmax):
    """All dual codewords (row space of H) of weight in [1, wmax],
    deduplicated up to scalar multiples and normalized so the leading
    nonzero entry is 1.  Deterministically ordered."""
    cached = code._dual_cache.get(wmax)
    if cached is not None:
        return cached
    for w, words in sorted(code._dual_cache.items()):
        if w > wmax:
            result = [d for d in words if len(d.support) <= wmax]
            code._dual_cache[wmax] = result
            return result

    field = code.field
    q = field.q
    if q ** code.rank <= ENUM_LIMIT and field.add_table is not None:
        words = _enumerate_rowspace(field, code._row_basis)
        weights = np.count_nonzero(words, axis=1)
        keep = (weights > 0) & (weights <= wmax)
        words = words[keep]
        if len(words):
            lead = np.argmax(words != 0, axis=1)
            lead_vals = words[np.arange(len(words)), lead]
            words = field.mul_table[field.inv_table[lead_vals][:, None], words]
            words = np.unique(words, axis=0)
        found = {tuple(int(x) for x in w) for w in words}
    else:
        if wmax > SUBSET_WMAX_LIMIT:
            raise InfeasibleError(
                f"dual search with wmax={wmax} needs row-space enumeration "
                f"({q}^{code.rank} vectors), which exceeds the desk budget")
        total = sum(math.comb(code.n, w) for w in range(1, wmax + 1))
        if total > SUBSET_BUDGET:
            raise InfeasibleError(
                f"{total} column subsets to test exceeds the desk budget")
        found = set()
        G = code.generator
        for w in range(1, wmax + 1):
            for cols in itertools.combinations(range(code.n), w):
                B = G[:, cols]
                ns = nullspace(field, B)
                if ns.shape[0] == 0:
                    continue
                for coeffs in itertools.product(range(q), repeat=ns.shape[0]):
                    if not any(coeffs):
                        continue
                    v = [0] * w
                    for c, row in zip(coeffs, ns):
                        if c:
                            v = [field.add(x, field.mul(c, int(y)))
                                 for x, y in zip(v, row)]
                    if all(v):  # support is exactly `cols`
                        inv = field.inv(v[0])
                        v = [field.mul(inv, x) for x in v]
                        full = [0] * code.n
                        for j, val in zip(cols, v):
                            full[j] = val
                        found.add(tuple(full))

    result = [DualWord(vector=v,
                       support=frozenset(j for j, x in enumerate(v) if x))
              for v in found]
    result.sort(key=lambda d: (len(d.support), d.vector))
    code._dual_cache[wmax] = result
    return result


def recovery_sets_for(code: LinearCode, i, r):
    """All recovery sets of size <= r for coordinate i.

    A recovery set is the non-target support of a dual codeword through
    i, with coefficients normalized so that c_i equals the combination
    of the helpers.
    """
    field = code.field
    sets = []
    seen = set()
    for dw in dual_low_weight(code, r + 1):
        if i not in dw.support:
            continue
        helpers = tuple(sorted(dw.support - {i}))
        vi = dw.vector[i]
        scale = field.neg(field.inv(vi))
        coeffs = tuple(field.mul(scale, dw.vector[j]) for j in helpers)
        key = (helpers, coeffs)
        if key not in seen:
            seen.add(key)
            sets.append(RecoverySet(target=i, helpers=helpers, coeffs=coeffs))
    sets.sort(key=lambda s: (len(s.helpers), s.helpers, s.coeffs))
    return sets


def all_recovery_sets(code: LinearCode, r):
    """Recovery-set table for every coordinate, computed in one pass."""
    return {i: recovery_sets_for(code, i, r) for i in range(code.n)}
