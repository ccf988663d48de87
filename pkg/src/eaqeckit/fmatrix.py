"""Dense exact matrices over a single finite field.

Matrices are value objects: every operation returns a new matrix and no
mutation is observable through the public surface.  Pivoting during
elimination always takes the first nonzero entry scanning top to bottom,
so reduced row echelon forms (and everything derived from them) are
deterministic.

Text format (bit-exact round trip):
    line 1:  "p e rows cols"
    line 2:  modulus coefficients c_0 .. c_{e-1}, space separated
    then one line per row of enc values, space separated
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import errors
from .gf import Element, FieldSpec


class FMatrix:
    """Dense matrix over one FieldSpec, stored row-major as Element tuples."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable], ncols: int | None = None):
        self.field = field
        converted = []
        for row in rows:
            converted.append(tuple(field.element(x) for x in row))
        if converted:
            ncols_seen = {len(r) for r in converted}
            if len(ncols_seen) != 1:
                raise errors.ShapeMismatch("ragged rows")
            width = ncols_seen.pop()
            if ncols is not None and ncols != width:
                raise errors.ShapeMismatch(f"rows have {width} columns, expected {ncols}")
            ncols = width
        elif ncols is None:
            raise errors.ShapeMismatch("empty matrix needs an explicit column count")
        self.rows = tuple(converted)
        self.nrows = len(self.rows)
        self.ncols = ncols
        self._rref = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "FMatrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FMatrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    # -- basics ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> Element:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Element, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[Element, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, FMatrix) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        return f"FMatrix({self.field.label}, {self.nrows}x{self.ncols})"

    def encs(self) -> list[list[int]]:
        """Entries as enc integers, row-major."""
        return [[x.enc for x in r] for r in self.rows]

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    # -- elimination ------------------------------------------------------------

    def rref(self) -> tuple["FMatrix", int, list[int]]:
        """Reduced row echelon form, rank and pivot columns."""
        if self._rref is not None:
            return self._rref
        work = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = None
            for i in range(r, len(work)):
                if work[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            inv = work[r][c].inverse()
            work[r] = [x * inv for x in work[r]]
            prow = work[r]
            for i in range(len(work)):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], prow)]
            pivots.append(c)
            r += 1
            if r == len(work):
                break
        R = FMatrix(self.field, work, self.ncols)
        result = (R, r, pivots)
        self._rref = result
        R._rref = result
        return result

    def rank(self) -> int:
        return self.rref()[1]

    def row_basis(self) -> "FMatrix":
        """Canonical basis of the row space: the nonzero rows of the RREF."""
        R, rank, _ = self.rref()
        return FMatrix(self.field, R.rows[:rank], self.ncols)

    def kernel_basis(self) -> "FMatrix":
        """Canonical basis of the right kernel {x : self @ x^T = 0}.

        One basis row per free column of the RREF, taken in increasing
        column order, so the result is deterministic.
        """
        R, rank, pivots = self.rref()
        field = self.field
        z, o = field.zero, field.one
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [z] * self.ncols
            v[f] = o
            for i, pc in enumerate(pivots):
                v[pc] = -R.rows[i][f]
            basis.append(v)
        return FMatrix(field, basis, self.ncols)

    # -- entrywise Frobenius -------------------------------------------------

    def frobenius_entrywise(self, t: int) -> "FMatrix":
        """Each entry raised to p^t (t reduced mod e)."""
        t %= self.field.e
        if t == 0:
            return self
        exp = self.field.p**t
        return FMatrix(self.field, [[x**exp for x in r] for r in self.rows], self.ncols)

    # -- products and stacking -------------------------------------------------

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        if not isinstance(other, FMatrix):
            return NotImplemented
        if self.field != other.field:
            raise errors.FieldMismatch("matrix product across different fields")
        if self.ncols != other.nrows:
            raise errors.ShapeMismatch(
                f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        bcols = [other.col(j) for j in range(other.ncols)]
        out = []
        for arow in self.rows:
            orow = []
            for bcol in bcols:
                acc = z
                for x, y in zip(arow, bcol):
                    if x and y:
                        acc = acc + x * y
                orow.append(acc)
            out.append(orow)
        return FMatrix(self.field, out, other.ncols)

    def transpose(self) -> "FMatrix":
        return FMatrix(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    def vstack(self, other: "FMatrix") -> "FMatrix":
        if self.field != other.field:
            raise errors.FieldMismatch("stack across different fields")
        if self.ncols != other.ncols:
            raise errors.ShapeMismatch(
                f"cannot stack {self.shape} on {other.shape}")
        return FMatrix(self.field, self.rows + other.rows, self.ncols)

    def scaled_row(self, i: int, factor: Element) -> tuple[Element, ...]:
        return tuple(factor * x for x in self.rows[i])

    # -- serialization ----------------------------------------------------------

    def to_text(self) -> str:
        f = self.field
        lines = [f"{f.p} {f.e} {self.nrows} {self.ncols}",
                 " ".join(map(str, f.modulus))]
        lines.extend(" ".join(str(x.enc) for x in r) for r in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FMatrix":
        lines = [ln for ln in text.strip().splitlines()]
        p, e, nrows, ncols = map(int, lines[0].split())
        modulus = tuple(map(int, lines[1].split()))
        field = FieldSpec(p, e, modulus)
        rows = []
        for ln in lines[2:2 + nrows]:
            rows.append([field.element(int(v)) for v in ln.split()])
            if len(rows[-1]) != ncols:
                raise errors.ShapeMismatch("row width disagrees with header")
        if len(rows) != nrows:
            raise errors.ShapeMismatch("row count disagrees with header")
        return cls(field, rows, ncols)


def matmul(a: FMatrix, b: FMatrix) -> FMatrix:
    return a @ b


def transpose(a: FMatrix) -> FMatrix:
    return a.transpose()


def vstack(a: FMatrix, b: FMatrix) -> FMatrix:
    return a.vstack(b)


def rref(m: FMatrix):
    return m.rref()


def rank(m: FMatrix) -> int:
    return m.rank()


def kernel_basis(m: FMatrix) -> FMatrix:
    return m.kernel_basis()


def frobenius_entrywise(m: FMatrix, t: int) -> FMatrix:
    return m.frobenius_entrywise(t)


# ---------------------------------------------------------------------------
# Batched full-rank testing (numpy fast path for small fields)
# ---------------------------------------------------------------------------

def batched_full_rank(field: FieldSpec, mats) -> "list[bool]":
    """True per batch entry iff the square matrix has full rank.

    mats: numpy int array of shape (B, w, w) holding enc values.  Requires
    field.vec_ops(); callers fall back to per-matrix rank() otherwise.
    """
    import numpy as np
    ops = field.vec_ops()
    if ops is None:
        raise errors.UnsupportedSize(f"no vectorized tables for GF({field.label})")
    M = np.array(mats, dtype=np.int64, copy=True)
    B, w, w2 = M.shape
    if w != w2:
        raise errors.ShapeMismatch("batched_full_rank expects square matrices")
    ok = np.ones(B, dtype=bool)
    bidx = np.arange(B)
    for i in range(w):
        col = M[:, i:, i]
        nz = col != 0
        ok &= nz.any(axis=1)
        j = nz.argmax(axis=1)  # 0 for dead batches; harmless
        # swap rows i and i+j
        tgt = i + j
        rows_tgt = M[bidx, tgt, :].copy()
        M[bidx, tgt, :] = M[:, i, :]
        M[:, i, :] = rows_tgt
        piv = M[:, i, i].copy()
        piv[piv == 0] = 1  # keep arithmetic defined on dead batches
        pinv = ops.inv(piv)
        if i + 1 < w:
            factor = ops.mul(M[:, i + 1:, i], pinv[:, None])
            M[:, i + 1:, i:] = ops.sub(M[:, i + 1:, i:],
                                       ops.mul(factor[:, :, None], M[:, None, i, i:]))
    return ok
