"""Cuntz-Krieger matrix descriptors and K-theoretic invariants.

The algebra itself is only ever represented by its defining nonnegative
integer matrix; k0/k1/bowen_franks are pure integer linear algebra and are
therefore defined for any square matrix, admissible or not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FgAbelianGroup, cokernel
from .intmat import IntMatrix, kernel_basis

__all__ = [
    "NotNonnegative",
    "DegenerateRelations",
    "CKDescriptor",
    "make_descriptor",
    "k0",
    "k1",
    "bowen_franks",
    "is_irreducible",
    "is_primitive",
    "wielandt_bound",
    "edge_dilation",
]


class NotNonnegative(ValueError):
    """Raised when a matrix required to be entrywise nonnegative is not."""


class DegenerateRelations(ValueError):
    """Raised for matrices with a zero row or zero column, whose defining
    relations would force one of the generating isometries to vanish."""


@dataclass(frozen=True)
class CKDescriptor:
    """A validated defining matrix together with the number n of generating
    partial isometries (symbolic only; no operator model is built)."""

    matrix: IntMatrix
    n: int


def _require_nonnegative(a: IntMatrix, what: str) -> None:
    if not a.is_nonnegative:
        raise NotNonnegative(f"{what} requires nonnegative entries")


def make_descriptor(a: IntMatrix) -> CKDescriptor:
    """Validate a as a Cuntz-Krieger defining matrix.

    Requires a square nonnegative matrix with no zero row and no zero column.
    """
    if not a.is_square:
        raise ValueError(f"descriptor matrix must be square, got {a.shape}")
    _require_nonnegative(a, "make_descriptor")
    for i in range(a.rows):
        if all(x == 0 for x in a.row(i)):
            raise DegenerateRelations(f"row {i} is zero")
    for j in range(a.cols):
        if all(x == 0 for x in a.column(j)):
            raise DegenerateRelations(f"column {j} is zero")
    return CKDescriptor(matrix=a, n=a.rows)


def k0(a: IntMatrix) -> FgAbelianGroup:
    """K0 invariant: the cokernel of (I - a^t) in canonical form."""
    if not a.is_square:
        raise ValueError(f"k0 requires a square matrix, got {a.shape}")
    return cokernel(IntMatrix.identity(a.rows) - a.transpose())


def k1(a: IntMatrix) -> FgAbelianGroup:
    """K1 invariant: the kernel of (I - a^t), always free."""
    if not a.is_square:
        raise ValueError(f"k1 requires a square matrix, got {a.shape}")
    rank = len(kernel_basis(IntMatrix.identity(a.rows) - a.transpose()))
    return FgAbelianGroup.free(rank)


def bowen_franks(a: IntMatrix) -> FgAbelianGroup:
    """Bowen-Franks group: the cokernel of (I - a); isomorphic to k0(a)."""
    if not a.is_square:
        raise ValueError(f"bowen_franks requires a square matrix, got {a.shape}")
    return cokernel(IntMatrix.identity(a.rows) - a)


def _adjacency(a: IntMatrix) -> list[list[int]]:
    return [[1 if x > 0 else 0 for x in row] for row in a.entries]


def _bool_matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    n = len(x)
    cols = list(zip(*y))
    return [[1 if any(p and q for p, q in zip(row, col)) else 0 for col in cols] for row in x]


def is_irreducible(a: IntMatrix) -> bool:
    """True iff the digraph with an arc i -> j whenever a[i, j] > 0 is
    strongly connected."""
    if not a.is_square:
        raise ValueError(f"is_irreducible requires a square matrix, got {a.shape}")
    _require_nonnegative(a, "is_irreducible")
    adj = _adjacency(a)
    return _reaches_all(adj, 0) and _reaches_all(list(map(list, zip(*adj))), 0)


def _reaches_all(adj: list[list[int]], start: int) -> bool:
    n = len(adj)
    seen = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for j in range(n):
            if adj[i][j] and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def wielandt_bound(n: int) -> int:
    """Power bound (n-1)^2 + 1: a primitive n x n matrix has a strictly
    positive power by this exponent, so testing further is pointless."""
    return (n - 1) ** 2 + 1


def is_primitive(a: IntMatrix) -> bool:
    """True iff some power of a is entrywise strictly positive.

    Decided on the 0/1 pattern (nonnegativity means no cancellation), testing
    exponents up to the Wielandt bound.
    """
    if not a.is_square:
        raise ValueError(f"is_primitive requires a square matrix, got {a.shape}")
    _require_nonnegative(a, "is_primitive")
    pattern = _adjacency(a)
    power = pattern
    for _ in range(wielandt_bound(a.rows)):
        if all(all(row) for row in power):
            return True
        power = _bool_matmul(power, pattern)
    return False


def edge_dilation(a: IntMatrix) -> IntMatrix:
    """0/1 adjacency matrix of the arc graph of a.

    Each entry a[i, j] = m contributes m parallel arcs i -> j; arcs are
    ordered by (tail, head, copy index) and the output has a 1 at (e, f)
    exactly when head(e) = tail(f). A matrix that is already 0/1 is returned
    unchanged. Preserves the conjugacy class of the associated shift.
    """
    if not a.is_square:
        raise ValueError(f"edge_dilation requires a square matrix, got {a.shape}")
    _require_nonnegative(a, "edge_dilation")
    if a.is_zero:
        raise ValueError("edge_dilation requires at least one nonzero entry")
    if a.is_zero_one:
        return a
    arcs = [
        (i, j)
        for i in range(a.rows)
        for j in range(a.cols)
        for _ in range(a[i, j])
    ]
    return IntMatrix(
        [[1 if head == tail2 else 0 for (tail2, _head2) in arcs] for (_tail, head) in arcs]
    )
