"""Dense complex operators over multi-qudit registers.

An :class:`Operator` is a dense complex matrix together with the list of
local dimensions of its row and column registers. Position 0 of a shape is
the leftmost tensor factor and the most significant digit of the matrix
index (big-endian), which matches ``numpy.kron`` ordering.

Hermiticity and positivity are not invariants of the type; they are checked
by the operations that require them. All functions are pure and safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ContractViolationError, ShapeMismatchError

Shape = tuple[int, ...]

# Tolerance scales for double-precision eigensolver noise on matrices of the
# target sizes (up to a few thousand rows).
HERM_TOL_SCALE = 1e-10
PSD_TOL_SCALE = 1e-9


def _as_shape(dims: Iterable[int]) -> Shape:
    shape = tuple(int(d) for d in dims)
    if any(d < 1 for d in shape):
        raise ShapeMismatchError(f"local dimensions must be >= 1, got {shape}")
    return shape


def shape_dim(dims: Iterable[int]) -> int:
    return math.prod(_as_shape(dims))


@dataclass(frozen=True)
class Operator:
    """Dense complex matrix with attached subsystem shapes."""

    mat: np.ndarray
    row_dims: Shape
    col_dims: Shape

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "row_dims", _as_shape(self.row_dims))
        object.__setattr__(self, "col_dims", _as_shape(self.col_dims))
        expected = (math.prod(self.row_dims), math.prod(self.col_dims))
        if mat.ndim != 2 or mat.shape != expected:
            raise ShapeMismatchError(
                f"matrix shape {mat.shape} does not match subsystem shapes "
                f"{self.row_dims} x {self.col_dims} (expected {expected})"
            )

    @property
    def is_square(self) -> bool:
        return self.row_dims == self.col_dims

    def dag(self) -> "Operator":
        return Operator(self.mat.conj().T, self.col_dims, self.row_dims)

    def trace(self) -> complex:
        if not self.is_square:
            raise ShapeMismatchError("trace requires matching row and column shapes")
        return complex(np.trace(self.mat))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.mat))) if self.mat.size else 0.0

    def __matmul__(self, other: "Operator") -> "Operator":
        if self.col_dims != other.row_dims:
            raise ShapeMismatchError(
                f"cannot compose {self.col_dims} with {other.row_dims}"
            )
        return Operator(self.mat @ other.mat, self.row_dims, other.col_dims)

    def __add__(self, other: "Operator") -> "Operator":
        if self.row_dims != other.row_dims or self.col_dims != other.col_dims:
            raise ShapeMismatchError("operator addition requires equal shapes")
        return Operator(self.mat + other.mat, self.row_dims, self.col_dims)

    def __sub__(self, other: "Operator") -> "Operator":
        if self.row_dims != other.row_dims or self.col_dims != other.col_dims:
            raise ShapeMismatchError("operator subtraction requires equal shapes")
        return Operator(self.mat - other.mat, self.row_dims, self.col_dims)

    def __mul__(self, scalar) -> "Operator":
        return Operator(self.mat * scalar, self.row_dims, self.col_dims)

    __rmul__ = __mul__


def operator(mat, row_dims: Iterable[int], col_dims: Iterable[int] | None = None) -> Operator:
    """Wrap a matrix; column shape defaults to the row shape."""
    row = _as_shape(row_dims)
    col = row if col_dims is None else _as_shape(col_dims)
    return Operator(np.asarray(mat, dtype=complex), row, col)


def identity(dims: Iterable[int]) -> Operator:
    shape = _as_shape(dims)
    return Operator(np.eye(math.prod(shape), dtype=complex), shape, shape)


def vector(entries, dims: Iterable[int]) -> Operator:
    """Column vector on a register, stored as a dims x (1,) operator."""
    shape = _as_shape(dims)
    mat = np.asarray(entries, dtype=complex).reshape(math.prod(shape), 1)
    return Operator(mat, shape, (1,))


def outer(v: Operator) -> Operator:
    """|v><v| for a column vector."""
    if v.col_dims != (1,):
        raise ShapeMismatchError("outer expects a column vector")
    return Operator(v.mat @ v.mat.conj().T, v.row_dims, v.row_dims)


def kron(a: Operator, b: Operator) -> Operator:
    """Tensor product; result shapes concatenate the input shapes."""
    return Operator(np.kron(a.mat, b.mat), a.row_dims + b.row_dims, a.col_dims + b.col_dims)


def kron_power(a: Operator, m: int) -> Operator:
    if m < 1:
        raise ShapeMismatchError("kron_power requires m >= 1")
    out = a
    for _ in range(m - 1):
        out = kron(out, a)
    return out


def partial_trace(a: Operator, keep: Iterable[int]) -> Operator:
    """Trace out every subsystem not in ``keep`` (0-based indices).

    The result keeps the retained subsystems in their original order.
    Tracing all subsystems yields a 1x1 matrix holding the full trace.
    """
    if not a.is_square:
        raise ShapeMismatchError("partial_trace requires a square operator")
    dims = a.row_dims
    n = len(dims)
    keep_set = set(int(i) for i in keep)
    if any(i < 0 or i >= n for i in keep_set):
        raise ShapeMismatchError(f"keep indices {sorted(keep_set)} out of range for {n} subsystems")
    kept = [i for i in range(n) if i in keep_set]

    tens = a.mat.reshape(dims + dims)
    # Row axis i labeled i; column axis i labeled i (traced) or n+i (kept).
    row_labels = list(range(n))
    col_labels = [n + i if i in keep_set else i for i in range(n)]
    out_labels = [i for i in kept] + [n + i for i in kept]
    reduced = np.einsum(tens, row_labels + col_labels, out_labels)

    kept_dims = tuple(dims[i] for i in kept)
    side = math.prod(kept_dims) if kept_dims else 1
    return Operator(reduced.reshape(side, side), kept_dims or (1,), kept_dims or (1,))


def hermitian_part(a: Operator) -> Operator:
    if not a.is_square:
        raise ShapeMismatchError("hermitian_part requires a square operator")
    return Operator((a.mat + a.mat.conj().T) / 2, a.row_dims, a.col_dims)


def herm_tolerance(a: Operator) -> float:
    return HERM_TOL_SCALE * (1.0 + a.max_abs())


def psd_tolerance(a: Operator) -> float:
    return PSD_TOL_SCALE * (1.0 + a.max_abs())


def require_hermitian(a: Operator, what: str = "operator") -> Operator:
    """Return the Hermitian part after checking a is Hermitian within tolerance."""
    if not a.is_square:
        raise ShapeMismatchError(f"{what} must be square")
    dev = float(np.max(np.abs(a.mat - a.mat.conj().T))) if a.mat.size else 0.0
    if dev > herm_tolerance(a):
        raise ContractViolationError(
            f"{what} deviates from Hermitian by {dev:.3e} (tolerance {herm_tolerance(a):.3e})"
        )
    return hermitian_part(a)


def eigvals_hermitian(a: Operator) -> np.ndarray:
    """Ascending eigenvalues of the Hermitian part, with a real fast path."""
    h = hermitian_part(a).mat
    if np.max(np.abs(h.imag)) <= HERM_TOL_SCALE * (1.0 + np.max(np.abs(h.real))) if h.size else True:
        return np.linalg.eigvalsh(h.real)
    return np.linalg.eigvalsh(h)


def min_eigenvalue(a: Operator) -> float:
    """Smallest eigenvalue of the Hermitian part of a near-Hermitian operator."""
    require_hermitian(a, "min_eigenvalue input")
    return float(eigvals_hermitian(a)[0])


def is_psd(a: Operator) -> bool:
    return min_eigenvalue(a) >= -psd_tolerance(a)


def trace_distance(a: Operator, b: Operator) -> float:
    """(1/2) sum of |eigenvalues| of the Hermitian difference a - b."""
    if a.row_dims != b.row_dims or a.col_dims != b.col_dims:
        raise ShapeMismatchError(f"shape mismatch {a.row_dims} vs {b.row_dims}")
    require_hermitian(a, "trace_distance first argument")
    require_hermitian(b, "trace_distance second argument")
    return float(0.5 * np.sum(np.abs(eigvals_hermitian(a - b))))


def transpose(a: Operator) -> Operator:
    """Entrywise (i, j) -> (j, i) swap in the computational basis."""
    return Operator(a.mat.T, a.col_dims, a.row_dims)
