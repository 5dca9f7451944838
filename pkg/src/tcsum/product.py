"""Tensor powers of a :class:`~tcsum.algebra.RingTable`.

The cohomology of ``X^s`` is the s-fold tensor power of ``H*(X)`` (mod 2,
no signs).  Basis elements are s-tuples of factor basis indices, ordered
lexicographically; :meth:`ProductRing.index` gives the matching mixed-radix
integer.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product as _cartesian

from tcsum.algebra import ClassVector, RingError, RingTable

SEPARATOR = "|"


class ProductRing:
    """``factor`` tensored with itself ``s`` times.

    Multiplication is slotwise; only the basis tuples of a requested degree
    are ever enumerated, and those lists are cached.
    """

    def __init__(self, factor: RingTable, s: int):
        if not isinstance(s, int) or s < 2:
            raise RingError(f"tensor power needs s >= 2, got {s!r}")
        self.factor = factor
        self.s = s
        self._table = factor.table
        self._degrees = factor.degrees
        self._by_degree: dict[int, tuple[tuple[int, ...], ...]] = {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProductRing):
            return NotImplemented
        return self.s == other.s and self.factor == other.factor

    def __hash__(self) -> int:
        return hash((self.s, self.factor.structure()))

    def __repr__(self) -> str:
        return f"ProductRing(s={self.s}, factor_size={len(self.factor)}, meta={self.factor.meta})"

    # -- ring protocol
    def _product(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        tab = self._table
        slots = []
        single = True
        for x, y in zip(a, b):
            p = tab[x][y]
            if not p:
                return ()
            if len(p) != 1:
                single = False
            slots.append(p)
        if single:
            return (tuple(p[0] for p in slots),)
        return tuple(_cartesian(*slots))

    def degree(self, term: tuple[int, ...]) -> int:
        degs = self._degrees
        return sum(degs[i] for i in term)

    def label(self, term: tuple[int, ...]) -> str:
        labels = self.factor.labels
        return SEPARATOR.join(labels[i] for i in term)

    def check_term(self, term) -> None:
        n = len(self.factor)
        if not (isinstance(term, tuple) and len(term) == self.s and all(0 <= i < n for i in term)):
            raise RingError(f"invalid basis tuple {term!r}")

    # -- structure
    @property
    def size(self) -> int:
        return len(self.factor) ** self.s

    @property
    def top_degree(self) -> int:
        return self.s * self.factor.top_degree

    def index(self, term: tuple[int, ...]) -> int:
        """Mixed-radix position of a basis tuple (slot 1 most significant)."""
        self.check_term(term)
        n = len(self.factor)
        idx = 0
        for i in term:
            idx = idx * n + i
        return idx

    def term_at(self, idx: int) -> tuple[int, ...]:
        n = len(self.factor)
        if not 0 <= idx < self.size:
            raise RingError(f"basis index {idx} out of range")
        digits = []
        for _ in range(self.s):
            idx, d = divmod(idx, n)
            digits.append(d)
        return tuple(reversed(digits))

    def basis_in_degree(self, d: int) -> tuple[tuple[int, ...], ...]:
        """All basis tuples of total degree ``d``, in lexicographic order."""
        cached = self._by_degree.get(d)
        if cached is not None:
            return cached
        f = self.factor
        top = f.top_degree
        buckets = [f.in_degree(k) for k in range(top + 1)]
        out: list[tuple[int, ...]] = []

        def fill(prefix: tuple[int, ...], slot: int, remaining: int) -> None:
            slots_left = self.s - slot
            if remaining > slots_left * top or remaining < 0:
                return
            if slot == self.s:
                if remaining == 0:
                    out.append(prefix)
                return
            for k in range(min(top, remaining) + 1):
                for i in buckets[k]:
                    fill(prefix + (i,), slot + 1, remaining - k)

        fill((), 0, d)
        out.sort()
        result = tuple(out)
        self._by_degree.setdefault(d, result)
        return self._by_degree[d]

    def poincare(self) -> list[int]:
        """Graded dimensions: the s-th convolution power of the factor's."""
        base = self.factor.poincare()
        dims = [1]
        for _ in range(self.s):
            nxt = [0] * (len(dims) + len(base) - 1)
            for i, a in enumerate(dims):
                for j, b in enumerate(base):
                    nxt[i + j] += a * b
            dims = nxt
        return dims

    # -- classes
    def zero(self) -> ClassVector:
        return ClassVector._from_set(self, ())

    def one(self) -> ClassVector:
        return ClassVector._from_set(self, ((0,) * self.s,))

    def basis_class(self, term: tuple[int, ...]) -> ClassVector:
        self.check_term(term)
        return ClassVector._from_set(self, (term,))

    def element(self, *labels: str) -> ClassVector:
        """Sum of basis tuples given as ``"x1|1|t"``-style labels."""
        terms = []
        for lab in labels:
            parts = lab.split(SEPARATOR)
            if len(parts) != self.s:
                raise RingError(f"label {lab!r} does not have {self.s} slots")
            terms.append(tuple(self.factor.index(p) for p in parts))
        return ClassVector(self, terms)

    def inject(self, j: int, c: ClassVector) -> ClassVector:
        """Pull back a factor class along the projection to slot ``j`` (1-based)."""
        if not 1 <= j <= self.s:
            raise RingError(f"slot {j} out of range 1..{self.s}")
        if c.ring is not self.factor and c.ring != self.factor:
            raise RingError("class does not belong to the factor ring")
        pad = (0,) * self.s
        return ClassVector._from_set(self, (pad[: j - 1] + (e,) + pad[j:] for e in c.terms))

    def x(self, u: int, j: int, k: int = 1) -> ClassVector:
        """``x_{u,j}^k`` for family rings (``k = m`` gives ``t_j``)."""
        return self.inject(j, self.factor.element(f"x{u}")) ** k

    def t(self, j: int) -> ClassVector:
        """Image of the factor's top class in slot ``j``."""
        return self.inject(j, self.factor.basis_class(self._factor_top))

    @cached_property
    def _factor_top(self) -> int:
        tops = self.factor.in_degree(self.factor.top_degree)
        if len(tops) != 1:
            raise RingError(
                f"factor top component has dimension {len(tops)}; no unique top class"
            )
        return tops[0]

    def top_class(self) -> ClassVector:
        return ClassVector._from_set(self, ((self._factor_top,) * self.s,))

    def cup(self, term: tuple[int, ...]) -> tuple[int, ...]:
        """Image of a basis tuple under the iterated cup product, as factor terms."""
        tab = self._table
        acc: set[int] = {0}
        for i in term:
            nxt: set[int] = set()
            for a in acc:
                nxt.symmetric_difference_update(tab[a][i])
            acc = nxt
            if not acc:
                break
        return tuple(sorted(acc))


def power(r: RingTable, s: int) -> ProductRing:
    return ProductRing(r, s)
