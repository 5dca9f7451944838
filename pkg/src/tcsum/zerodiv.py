"""Zero divisors: the kernel of the iterated cup product ``H^{(x)s} -> H``."""

from __future__ import annotations

from dataclasses import dataclass

from tcsum import gf2
from tcsum.algebra import ClassVector, RingError
from tcsum.product import ProductRing


@dataclass(frozen=True)
class CupMatrix:
    """Degree-``d`` part of the cup map as a bit matrix.

    ``bits[i]`` encodes the image of ``rows[i]``: bit ``j`` is set when
    factor basis element ``cols[j]`` occurs in it.
    """

    degree: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[int, ...]
    bits: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def transpose_bits(self) -> list[int]:
        """Column-major form: one bitmask over ``rows`` per factor column."""
        out = [0] * len(self.cols)
        for i, r in enumerate(self.bits):
            j = 0
            while r:
                if r & 1:
                    out[j] |= 1 << i
                r >>= 1
                j += 1
        return out

    def rank(self) -> int:
        return gf2.rank(list(self.bits))


@dataclass(frozen=True)
class KernelBasis:
    degree: int
    vectors: tuple[ClassVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _check_degree(pr: ProductRing, d: int) -> None:
    if not 0 <= d <= pr.top_degree:
        raise RingError(f"degree {d} outside 0..{pr.top_degree}")


def cup_map(pr: ProductRing, d: int) -> CupMatrix:
    _check_degree(pr, d)
    rows = pr.basis_in_degree(d)
    cols = tuple(pr.factor.in_degree(d))
    pos = {c: j for j, c in enumerate(cols)}
    bits = []
    for term in rows:
        b = 0
        for c in pr.cup(term):
            b |= 1 << pos[c]
        bits.append(b)
    return CupMatrix(d, rows, cols, tuple(bits))


def kernel_basis(pr: ProductRing, d: int, matrix: CupMatrix | None = None) -> KernelBasis:
    """Reduced-echelon basis of the degree-``d`` zero divisors."""
    cm = matrix if matrix is not None else cup_map(pr, d)
    rows = cm.rows
    vectors = []
    for v in gf2.nullspace(cm.transpose_bits(), len(rows)):
        terms = []
        i = 0
        while v:
            if v & 1:
                terms.append(rows[i])
            v >>= 1
            i += 1
        vectors.append(ClassVector._from_set(pr, terms))
    return KernelBasis(d, tuple(vectors))


def cup_image(pr: ProductRing, c: ClassVector) -> ClassVector:
    """Image of a class under the iterated cup product, in the factor ring."""
    if c.ring is not pr and c.ring != pr:
        raise RingError("class does not belong to this product ring")
    return ClassVector(pr.factor, (e for term in c.terms for e in pr.cup(term)))


def is_zero_divisor(pr: ProductRing, c: ClassVector) -> bool:
    if not c.is_homogeneous():
        raise RingError("zero-divisor test requires a homogeneous class")
    return not cup_image(pr, c)
