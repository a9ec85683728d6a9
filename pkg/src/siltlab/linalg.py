"""Exact dense linear algebra over prime fields F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  Every
routine is deterministic: pivoting always picks the leftmost nonzero column
and the first row carrying a nonzero entry, so results are reproducible
bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class MalformedInputError(ValueError):
    """Raised on shape mismatches or non-field moduli."""


_SMALL_PRIMES = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}


def is_prime(p: int) -> bool:
    if p in _SMALL_PRIMES:
        return True
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise MalformedInputError(f"modulus {p} is not prime")


def reduce_mod(a, p: int) -> np.ndarray:
    """Coerce to an int64 array with entries in [0, p)."""
    return np.asarray(a, dtype=np.int64) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise MalformedInputError(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % p


def inverse_scalar(a: int, p: int) -> int:
    if a % p == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(int(a), p - 2, p)


@dataclass(frozen=True)
class EchelonData:
    """Reduced row-echelon data of a matrix A over F_p.

    transform @ A == rref (mod p).  kernel_basis has one column per free
    column of A; image_basis repeats the pivot columns of A itself, so its
    columns are independent and span the column space.
    """

    rank: int
    pivot_columns: tuple[int, ...]
    rref: np.ndarray
    transform: np.ndarray
    kernel_basis: np.ndarray  # cols x (cols - rank)
    image_basis: np.ndarray  # rows x rank
    modulus: int


def row_reduce(a, p: int) -> EchelonData:
    """Gauss-Jordan elimination with deterministic pivoting."""
    check_prime(p)
    a = reduce_mod(a, p)
    if a.ndim != 2:
        raise MalformedInputError("expected a 2-d array")
    m, n = a.shape
    r = a.copy()
    t = identity(m)
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        i = row + int(nz[0])
        if i != row:
            r[[row, i]] = r[[i, row]]
            t[[row, i]] = t[[i, row]]
        inv = inverse_scalar(int(r[row, col]), p)
        r[row] = (r[row] * inv) % p
        t[row] = (t[row] * inv) % p
        other = r[:, col].copy()
        other[row] = 0
        r = (r - np.outer(other, r[row])) % p
        t = (t - np.outer(other, t[row])) % p
        pivots.append(col)
        row += 1
    rank = len(pivots)
    free = [c for c in range(n) if c not in pivots]
    kernel = zeros(n, len(free))
    for k, c in enumerate(free):
        kernel[c, k] = 1
        for i, pc in enumerate(pivots):
            kernel[pc, k] = (-r[i, c]) % p
    image = a[:, pivots] if pivots else zeros(m, 0)
    return EchelonData(rank, tuple(pivots), r, t, kernel, image, p)


def rank(a, p: int) -> int:
    return row_reduce(a, p).rank


def kernel(a, p: int) -> np.ndarray:
    """Columns form a basis of the right null space."""
    return row_reduce(a, p).kernel_basis


@dataclass(frozen=True)
class Solution:
    """All solutions of A X = B: particular + kernel combinations."""

    particular: np.ndarray
    kernel_basis: np.ndarray
    modulus: int


def solve(a, b, p: int) -> Solution | None:
    """Solve A X = B exactly; None when inconsistent."""
    a = reduce_mod(a, p)
    b = reduce_mod(b, p)
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise MalformedInputError(f"row mismatch: {a.shape} vs {b.shape}")
    ech = row_reduce(a, p)
    tb = matmul(ech.transform, b, p)
    if ech.rank < a.shape[0] and np.any(tb[ech.rank :, :]):
        return None
    x = zeros(a.shape[1], b.shape[1])
    for i, c in enumerate(ech.pivot_columns):
        x[c, :] = tb[i, :]
    return Solution(x, ech.kernel_basis, p)


def in_column_space(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    """Is every column of b a combination of columns of a?"""
    return solve(a, b, p) is not None


def column_space_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of the column span: rref rows of the transpose,
    returned as columns.  Two matrices with equal column spans yield
    byte-identical output."""
    ech = row_reduce(reduce_mod(a, p).T, p)
    return ech.rref[: ech.rank].T.copy()


def assemble_block(blocks: list[list[np.ndarray]], p: int) -> np.ndarray:
    """Assemble a block matrix from a rectangular grid of blocks."""
    if not blocks:
        return zeros(0, 0)
    ncols_grid = len(blocks[0])
    if any(len(row) != ncols_grid for row in blocks):
        raise MalformedInputError("ragged block grid")
    row_heights = [row[0].shape[0] for row in blocks]
    col_widths = [blocks[0][j].shape[1] for j in range(ncols_grid)]
    for i, row in enumerate(blocks):
        for j, blk in enumerate(row):
            if blk.shape != (row_heights[i], col_widths[j]):
                raise MalformedInputError(
                    f"block ({i},{j}) has shape {blk.shape}, "
                    f"expected {(row_heights[i], col_widths[j])}"
                )
    out = zeros(sum(row_heights), sum(col_widths))
    r0 = 0
    for i, row in enumerate(blocks):
        c0 = 0
        for j, blk in enumerate(row):
            out[r0 : r0 + row_heights[i], c0 : c0 + col_widths[j]] = (
                reduce_mod(blk, p)
            )
            c0 += col_widths[j]
        r0 += row_heights[i]
    return out


def block_diag(blocks: list[np.ndarray], p: int) -> np.ndarray:
    grid = [
        [blk if i == j else zeros(blocks[i].shape[0], blocks[j].shape[1])
         for j in range(len(blocks))]
        for i, blk in enumerate(blocks)
    ]
    return assemble_block(grid, p)


def invert(a: np.ndarray, p: int) -> np.ndarray:
    n, m = a.shape
    if n != m:
        raise MalformedInputError("only square matrices are invertible")
    ech = row_reduce(a, p)
    if ech.rank != n:
        raise MalformedInputError("matrix is singular")
    return ech.transform
