"""Finite graded GF(2) algebras given by multiplication tables.

A :class:`RingTable` stores a degree-sorted basis (index 0 is the unit) and
the full table of basis products in normal form.  Classes are GF(2) sums of
basis elements, i.e. sets of basis indices, wrapped in :class:`ClassVector`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Iterable, Mapping, Sequence

from tcsum.gf2 import rank


class RingError(ValueError):
    """Raised for invalid ring data or mismatched operands."""


class ClassVector:
    """An element of a finite GF(2) algebra: a set of basis terms.

    ``ring`` is any object exposing ``_product(a, b)``, ``degree(term)``,
    ``label(term)`` and ``check_term(term)``.  Repeated terms passed to the
    constructor cancel in pairs.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: Iterable = ()):
        acc: set = set()
        for term in terms:
            acc ^= {term}
        self.ring = ring
        self.terms = tuple(sorted(acc))

    @classmethod
    def _from_set(cls, ring, terms) -> "ClassVector":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = tuple(sorted(terms))
        return obj

    def _check_same(self, other: "ClassVector") -> None:
        if not isinstance(other, ClassVector):
            raise TypeError(f"expected ClassVector, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingError("classes belong to different rings")

    def __add__(self, other: "ClassVector") -> "ClassVector":
        self._check_same(other)
        return ClassVector._from_set(self.ring, set(self.terms).symmetric_difference(other.terms))

    __sub__ = __add__

    def __mul__(self, other: "ClassVector") -> "ClassVector":
        self._check_same(other)
        ring = self.ring
        acc: set = set()
        for a in self.terms:
            for b in other.terms:
                for c in ring._product(a, b):
                    if c in acc:
                        acc.remove(c)
                    else:
                        acc.add(c)
        return ClassVector._from_set(ring, acc)

    def __pow__(self, k: int) -> "ClassVector":
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
            if not result:
                break
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __contains__(self, term) -> bool:
        return term in self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassVector):
            return NotImplemented
        return self.terms == other.terms and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self) -> int:
        return hash(self.terms)

    def degrees(self) -> set[int]:
        return {self.ring.degree(t) for t in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous class, ``None`` for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise RingError("class is not homogeneous")
        return degs.pop()

    def labels(self) -> list[str]:
        return sorted(self.ring.label(t) for t in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(self.ring.label(t) for t in self.terms)


@dataclass(frozen=True)
class RingTable:
    """Finite graded-commutative algebra over GF(2).

    ``table[a][b]`` is the sorted tuple of basis indices of ``e_a * e_b``.
    ``meta`` carries ``(g, m)`` for members of the connected-sum family and
    takes no part in equality.
    """

    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    table: tuple[tuple[tuple[int, ...], ...], ...]
    meta: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0 or len(self.degrees) != n or len(self.table) != n:
            raise RingError("labels, degrees and table must have equal nonzero length")
        if self.degrees[0] != 0 or any(d <= 0 for d in self.degrees[1:]):
            raise RingError("index 0 must be the unique degree-0 element")
        if list(self.degrees) != sorted(self.degrees):
            raise RingError("basis must be sorted by degree")
        if len(set(self.labels)) != n:
            raise RingError("labels must be unique")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    # -- ring protocol used by ClassVector
    def _product(self, a: int, b: int) -> tuple[int, ...]:
        return self.table[a][b]

    def degree(self, term: int) -> int:
        return self.degrees[term]

    def label(self, term: int) -> str:
        return self.labels[term]

    def check_term(self, term: int) -> None:
        if not isinstance(term, int) or not 0 <= term < len(self.labels):
            raise RingError(f"basis index {term!r} out of range")

    # -- convenience
    def __len__(self) -> int:
        return len(self.labels)

    @property
    def top_degree(self) -> int:
        return self.degrees[-1]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise RingError(f"unknown label {label!r}") from None

    def element(self, *labels: str) -> ClassVector:
        """Sum of the named basis elements."""
        return ClassVector(self, [self.index(lab) for lab in labels])

    def basis_class(self, i: int) -> ClassVector:
        self.check_term(i)
        return ClassVector._from_set(self, (i,))

    def zero(self) -> ClassVector:
        return ClassVector._from_set(self, ())

    def one(self) -> ClassVector:
        return ClassVector._from_set(self, (0,))

    def in_degree(self, d: int) -> list[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    def poincare(self) -> list[int]:
        """Graded dimensions, ``poincare()[k] == dim H^k``."""
        dims = [0] * (self.top_degree + 1)
        for d in self.degrees:
            dims[d] += 1
        return dims

    def mul_basis(self, a: int, b: int) -> ClassVector:
        self.check_term(a)
        self.check_term(b)
        return ClassVector._from_set(self, self.table[a][b])

    def check_axioms(self) -> None:
        """Unit law, commutativity, homogeneity and associativity on all triples."""
        validate_table(self.labels, self.degrees, self.table)

    def structure(self) -> tuple:
        """Label-free structural key: degrees and multiplication table."""
        return (self.degrees, self.table)

    def relabel(self, mapping: Mapping[str, str]) -> "RingTable":
        labels = tuple(mapping.get(lab, lab) for lab in self.labels)
        return RingTable(labels, self.degrees, self.table)


def format_poincare(dims: Sequence[int], var: str = "q") -> str:
    parts = []
    for k, c in enumerate(dims):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        coef = "" if c == 1 else str(c)
        power = var if k == 1 else f"{var}^{k}"
        parts.append(coef + power)
    return " + ".join(parts) if parts else "0"


def _mul_classes(table, p: Iterable[int], q: Iterable[int]) -> set[int]:
    acc: set[int] = set()
    for a in p:
        for b in q:
            acc.symmetric_difference_update(table[a][b])
    return acc


def validate_table(labels, degrees, table) -> None:
    n = len(labels)
    for a in range(n):
        if tuple(table[0][a]) != (a,) or tuple(table[a][0]) != (a,):
            raise RingError(f"unit law fails for {labels[a]!r}")
        for b in range(n):
            if set(table[a][b]) != set(table[b][a]):
                raise RingError(f"not commutative: {labels[a]!r} * {labels[b]!r}")
            for c in table[a][b]:
                if degrees[c] != degrees[a] + degrees[b]:
                    raise RingError(
                        f"degree inconsistency: {labels[a]!r} * {labels[b]!r} contains "
                        f"{labels[c]!r} of degree {degrees[c]}, expected {degrees[a] + degrees[b]}"
                    )
    for a, b, c in _cartesian(range(1, n), repeat=3):
        left = _mul_classes(table, table[a][b], (c,))
        right = _mul_classes(table, (a,), table[b][c])
        if left != right:
            raise RingError(
                f"associativity fails on ({labels[a]}, {labels[b]}, {labels[c]})"
            )


def _generator_label(u: int, k: int) -> str:
    return f"x{u}" if k == 1 else f"x{u}^{k}"


def ring_new(g: int, m: int) -> RingTable:
    """Mod-2 cohomology ring of the g-fold connected sum of RP^m.

    Basis: ``1``, then ``x_u^k`` for ``1 <= k <= m-1`` ordered by ``(k, u)``,
    then the top class ``t``.  ``x_u^j x_v^k = 0`` for ``u != v`` and
    ``x_u^m = t`` for every ``u``.
    """
    if not isinstance(g, int) or g < 1:
        raise RingError(f"g must be >= 1, got {g!r}")
    if not isinstance(m, int) or m < 2:
        raise RingError(f"m must be >= 2, got {m!r}")
    labels = ["1"]
    degrees = [0]
    pos: dict[tuple[int, int], int] = {}
    for k in range(1, m):
        for u in range(1, g + 1):
            pos[(u, k)] = len(labels)
            labels.append(_generator_label(u, k))
            degrees.append(k)
    top = len(labels)
    labels.append("t")
    degrees.append(m)
    n = len(labels)

    # (u, k) of each basis element; unit is (0, 0), top is (0, m)
    key = [(0, 0)] + sorted(pos, key=lambda uk: pos[uk]) + [(0, m)]
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            if a == 0:
                row.append((b,))
            elif b == 0:
                row.append((a,))
            else:
                (u, j), (v, k) = key[a], key[b]
                if a == top or b == top or u != v or j + k > m:
                    row.append(())
                elif j + k == m:
                    row.append((top,))
                else:
                    row.append((pos[(u, j + k)],))
        table.append(tuple(row))
    return RingTable(tuple(labels), tuple(degrees), tuple(table), meta=(g, m))


@dataclass
class StructureSpec:
    """Generators with degrees and the nonzero basis products, by label.

    The unit ``"1"`` is implicit.  ``products`` maps an unordered label pair
    to the list of labels summed in the product.
    """

    gens: list[tuple[str, int]] = field(default_factory=list)
    products: dict[tuple[str, str], list[str]] = field(default_factory=dict)

    def add_product(self, a: str, b: str, result: Sequence[str]) -> None:
        key = tuple(sorted((a, b)))
        self.products[key] = list(result)


def ring_from_table(spec: StructureSpec, *, meta=None) -> RingTable:
    """Build and validate a ring from a :class:`StructureSpec`.

    Basis order is the unit followed by the generators stably sorted by
    degree.
    """
    seen = {"1"}
    for lab, deg in spec.gens:
        if lab in seen:
            raise RingError(f"duplicate generator {lab!r}")
        if deg <= 0:
            raise RingError(f"generator {lab!r} must have positive degree, got {deg}")
        seen.add(lab)
    gens = sorted(spec.gens, key=lambda gd: gd[1])
    labels = ("1",) + tuple(lab for lab, _ in gens)
    degrees = (0,) + tuple(deg for _, deg in gens)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    table = [[() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        table[0][i] = (i,)
        table[i][0] = (i,)
    for (a, b), result in spec.products.items():
        for lab in (a, b, *result):
            if lab not in index:
                raise RingError(f"unknown label {lab!r}")
        if "1" in (a, b):
            raise RingError("products with the unit are implicit and must not be listed")
        ia, ib = index[a], index[b]
        acc: set[int] = set()
        for r in result:
            acc ^= {index[r]}
        terms = tuple(sorted(acc))
        for c in terms:
            if degrees[c] != degrees[ia] + degrees[ib]:
                raise RingError(
                    f"degree inconsistency: {a} * {b} = {labels[c]} has degree "
                    f"{degrees[c]}, expected {degrees[ia] + degrees[ib]}"
                )
        table[ia][ib] = terms
        table[ib][ia] = terms
    frozen = tuple(tuple(row) for row in table)
    validate_table(labels, degrees, frozen)
    return RingTable(labels, degrees, frozen, meta=meta)


def check_duality(r: RingTable) -> None:
    """Require mod-2 Poincaré duality: 1-dimensional top component and a
    nondegenerate pairing ``H^k x H^(n-k) -> H^n`` in every degree."""
    n = r.top_degree
    tops = r.in_degree(n)
    if len(tops) != 1:
        raise RingError(f"top component has dimension {len(tops)}, expected 1")
    top = tops[0]
    for k in range(n + 1):
        left, right = r.in_degree(k), r.in_degree(n - k)
        if len(left) != len(right):
            raise RingError(f"dim H^{k} != dim H^{n - k}: no Poincaré duality")
        rows = []
        for a in left:
            bits = 0
            for j, b in enumerate(right):
                if top in r.table[a][b]:
                    bits |= 1 << j
            rows.append(bits)
        if rank(rows) != len(left):
            raise RingError(f"degenerate cup pairing in degree {k}")


def connected_sum(A: RingTable, B: RingTable) -> RingTable:
    """Cohomology ring of a connected sum of two closed n-manifolds.

    Positive degrees below ``n`` are the direct sum of those of ``A`` and
    ``B``; mixed products vanish and the two top classes are identified.
    Both inputs must satisfy mod-2 Poincaré duality in the same top degree.
    """
    if A.top_degree != B.top_degree:
        raise RingError(f"top degrees differ: {A.top_degree} vs {B.top_degree}")
    n = A.top_degree
    if n < 1:
        raise RingError("connected sum needs positive top degree")
    check_duality(A)
    check_duality(B)
    topA, topB = A.in_degree(n)[0], B.in_degree(n)[0]
    midA = [i for i in range(1, len(A)) if i != topA]
    midB = [i for i in range(1, len(B)) if i != topB]

    family = A.meta is not None and B.meta is not None and A.meta[1] == B.meta[1]
    labA = {i: A.labels[i] for i in midA}
    labB = {i: B.labels[i] for i in midB}
    if family:
        gA = A.meta[0]
        labB = {i: _shift_generator(B.labels[i], gA) for i in midB}
    elif set(labA.values()) & set(labB.values()) or A.labels[topA] in labB.values():
        labA = {i: f"{lab}1" for i, lab in labA.items()}
        labB = {i: f"{lab}2" for i, lab in labB.items()}

    # order: unit, then (degree, side, original index), then top
    entries = [(A.degrees[i], 0, i) for i in midA] + [(B.degrees[i], 1, i) for i in midB]
    entries.sort()
    labels = ["1"] + [labA[i] if side == 0 else labB[i] for _, side, i in entries] + [A.labels[topA]]
    degrees = [0] + [d for d, _, _ in entries] + [n]
    N = len(labels)
    top = N - 1
    where = {(side, i): pos + 1 for pos, (_, side, i) in enumerate(entries)}
    where[(0, 0)] = where[(1, 0)] = 0
    where[(0, topA)] = where[(1, topB)] = top
    src = [(0, 0)] + [(side, i) for _, side, i in entries] + [(0, topA)]

    def image(side: int, terms) -> tuple[int, ...]:
        return tuple(sorted(where[(side, c)] for c in terms))

    table = []
    for a in range(N):
        row = []
        for b in range(N):
            if a == 0:
                row.append((b,))
            elif b == 0:
                row.append((a,))
            else:
                (sa, ia), (sb, ib) = src[a], src[b]
                if sa != sb:
                    row.append(())
                else:
                    ring = A if sa == 0 else B
                    row.append(image(sa, ring.table[ia][ib]))
        table.append(tuple(row))
    meta = (A.meta[0] + B.meta[0], n) if family else None
    result = RingTable(tuple(labels), tuple(degrees), tuple(table), meta=meta)
    result.check_axioms()
    return result


def _shift_generator(label: str, offset: int) -> str:
    base, _, power = label.partition("^")
    u = int(base[1:]) + offset
    return f"x{u}^{power}" if power else f"x{u}"


def iterated_sum(r: RingTable, g: int) -> RingTable:
    """``r # r # ... # r`` with ``g`` summands."""
    if g < 1:
        raise RingError("need at least one summand")
    acc = r
    for _ in range(g - 1):
        acc = connected_sum(acc, r)
    return acc
