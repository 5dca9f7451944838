"""Zero-divisor cup-length certificates for ``TC_s`` of ``g # RP^m``.

``zcl_s(X) <= TC_s(X) <= s * dim(X)``, so a nonzero product of ``s * m``
zero divisors in ``H*((g # RP^m)^s)`` pins ``TC_s`` down exactly.  This
module builds the explicit product, expands it, checks every factor, and
searches for long nonzero products in rings where no closed-form witness
is available.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from tcsum import __version__
from tcsum.algebra import ClassVector, RingError, ring_new
from tcsum.product import ProductRing
from tcsum.zerodiv import is_zero_divisor, kernel_basis

log = logging.getLogger(__name__)

EXACT = "exact"
BOUNDS_ONLY = "bounds-only"
FAILED = "failed"

POOLS = ("std1", "kernel")
STRATEGIES = ("greedy", "dfs", "exhaustive")
DEFAULT_BUDGET = 1 << 20
DEFAULT_NODE_BUDGET = 200_000


class ParameterError(ValueError):
    """Parameters outside the range an operation is defined for."""


@lru_cache(maxsize=64)
def family_product(g: int, m: int, s: int) -> ProductRing:
    """``H*((g # RP^m)^s)``, cached per parameter triple."""
    return ProductRing(ring_new(g, m), s)


@dataclass(frozen=True)
class FactorList:
    """Ordered ``(class, multiplicity)`` pairs whose product is under test."""

    items: tuple[tuple[ClassVector, int], ...]

    def __post_init__(self):
        for c, k in self.items:
            if not isinstance(c, ClassVector):
                raise TypeError("factors must be ClassVector instances")
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {k!r}")
        if any(c.ring != self.items[0][0].ring for c, _ in self.items[1:]):
            raise RingError("factors live in different rings")

    @classmethod
    def from_sequence(cls, classes: Iterable[ClassVector]) -> "FactorList":
        """Group a flat sequence of factors into runs of equal classes."""
        items: list[list] = []
        for c in classes:
            if items and items[-1][0] == c:
                items[-1][1] += 1
            else:
                items.append([c, 1])
        return cls(tuple((c, k) for c, k in items))

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    @property
    def total_length(self) -> int:
        return sum(k for _, k in self.items)

    @property
    def total_degree(self) -> int:
        return sum(c.degree * k for c, k in self.items if c)

    def flat(self) -> list[ClassVector]:
        return [c for c, k in self.items for _ in range(k)]

    @property
    def ring(self):
        return self.items[0][0].ring if self.items else None


def witness_factors(g: int, m: int, s: int, pr: ProductRing | None = None) -> FactorList:
    """The explicit product of ``s * m`` zero divisors hitting the top class.

    ``(x11+x12)^m (x11+x13)^m ... (x11+x1s)^m (x21+x22)^(m-1) (x21+x23)``
    where ``xuj`` is generator ``u`` pulled back from slot ``j``.
    """
    if g < 2 or m < 2 or s < 3:
        raise ParameterError(f"witness needs g >= 2, m >= 2, s >= 3; got g={g}, m={m}, s={s}")
    if pr is None:
        pr = family_product(g, m, s)
    x = pr.x
    items = [(x(1, 1) + x(1, j), m) for j in range(2, s + 1)]
    items.append((x(2, 1) + x(2, 2), m - 1))
    items.append((x(2, 1) + x(2, 3), 1))
    return FactorList(tuple((c, k) for c, k in items if k > 0))


def expand(pr: ProductRing, factors: FactorList) -> ClassVector:
    """Left-to-right product of the factor list, in normal form."""
    result, _ = _expand_traced(pr, factors)
    return result


def _expand_traced(pr: ProductRing, factors: FactorList):
    """Product plus ``(item index, partial product)`` at the first vanishing step."""
    acc = pr.one()
    for i, (c, k) in enumerate(factors):
        if c.ring is not pr and c.ring != pr:
            raise RingError(f"factor {i} belongs to a different ring")
        for _ in range(k):
            nxt = acc * c
            if not nxt:
                return nxt, (i, acc)
            acc = nxt
    return acc, None


def _params_for(pr: ProductRing) -> dict:
    if pr.factor.meta is not None:
        g, m = pr.factor.meta
        return {"g": g, "m": m, "s": pr.s}
    return {"s": pr.s, "factor_size": len(pr.factor), "top_degree": pr.factor.top_degree}


@dataclass
class Certificate:
    """Self-checking record of a zero-divisor cup-length computation."""

    ring: ProductRing = field(repr=False)
    params: dict
    factors: FactorList
    expanded: ClassVector
    zcl_lower: int
    dim_upper: int
    conclusion: str
    zero_divisor_checks: list[bool] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    failure: dict | None = None
    search: dict | None = None

    @property
    def ok(self) -> bool:
        return self.conclusion != FAILED

    def check(self) -> bool:
        """Re-expand the factors and confirm the recorded values."""
        again = expand(self.ring, self.factors)
        if again != self.expanded:
            return False
        if self.conclusion == FAILED:
            return True
        if self.expanded and self.zcl_lower != self.factors.total_length:
            return False
        if not self.expanded and self.zcl_lower != 0:
            return False
        if not all(self.zero_divisor_checks):
            return False
        if any(not is_zero_divisor(self.ring, c) for c, _ in self.factors):
            return False
        return (self.conclusion == EXACT) == (self.zcl_lower == self.dim_upper)

    def to_record(self) -> dict:
        pr = self.ring
        record = {
            "params": dict(self.params),
            "factors": [
                {"terms": c.labels(), "multiplicity": k} for c, k in self.factors
            ],
            "expanded": self.expanded.labels(),
            "zcl_lower": self.zcl_lower,
            "dim_upper": self.dim_upper,
            "conclusion": self.conclusion,
            "zero_divisor_checks": list(self.zero_divisor_checks),
            "notes": list(self.notes),
            "tool_version": __version__,
        }
        if self.conclusion == EXACT and pr.factor.meta is not None:
            record["tc_s"] = self.zcl_lower
        if self.failure is not None:
            record["failure"] = self.failure
        if self.search is not None:
            record["search"] = self.search
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, separators=(",", ":"))

    def render(self) -> str:
        p = self.params
        head = " ".join(f"{k}={p[k]}" for k in sorted(p))
        lines = [f"certificate  {head}"]
        for i, (c, k) in enumerate(self.factors):
            zd = self.zero_divisor_checks[i] if i < len(self.zero_divisor_checks) else "?"
            lines.append(f"  factor {i}: ({' + '.join(c.labels())})^{k}  zero-divisor={zd}")
        exp = " + ".join(self.expanded.labels()) or "0"
        lines.append(f"  expanded: {exp}")
        lines.append(f"  zcl_lower={self.zcl_lower}  dim_upper={self.dim_upper}  conclusion={self.conclusion}")
        if self.conclusion == EXACT:
            lines.append(f"  TC_{p['s']} = {self.zcl_lower}")
        else:
            lines.append(f"  {self.zcl_lower} <= TC_{p['s']} <= {self.dim_upper}")
        if self.search:
            lines.append("  search: " + ", ".join(f"{k}={self.search[k]}" for k in sorted(self.search)))
        if self.failure:
            lines.append("  FAILURE: " + ", ".join(f"{k}={self.failure[k]}" for k in sorted(self.failure)))
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _check_theorem_params(g: int, m: int, s: int) -> None:
    for name, val, lo in (("g", g, 2), ("m", m, 2), ("s", s, 3)):
        if not isinstance(val, int) or val < lo:
            raise ParameterError(f"{name} must be an integer >= {lo}, got {val!r}")


def _regime_notes(m: int) -> list[str]:
    return ["m = 2: surface case, also obtainable from known results on non-orientable surfaces"] if m == 2 else []


def verify_theorem(g: int, m: int, s: int) -> Certificate:
    """Certify ``TC_s(g # RP^m) = s m`` for ``g, m >= 2`` and ``s >= 3``."""
    _check_theorem_params(g, m, s)
    pr = family_product(g, m, s)
    factors = witness_factors(g, m, s, pr)
    dim_upper = s * m
    params = {"g": g, "m": m, "s": s}
    checks = [is_zero_divisor(pr, c) for c, _ in factors]
    expanded, vanished = _expand_traced(pr, factors)

    def failed(info: dict) -> Certificate:
        return Certificate(pr, params, factors, expanded, 0, dim_upper, FAILED,
                           checks, _regime_notes(m), failure=info)

    if not all(checks):
        bad = checks.index(False)
        return failed({"step": "zero-divisor check", "factor_index": bad})
    if vanished is not None:
        idx, partial = vanished
        return failed({"step": "expansion vanished", "factor_index": idx,
                       "partial": partial.labels()})
    if expanded != pr.top_class():
        return failed({"step": "top-class equality", "expanded": expanded.labels()})
    zcl_lower = factors.total_length
    conclusion = EXACT if zcl_lower == dim_upper else BOUNDS_ONLY
    cert = Certificate(pr, params, factors, expanded, zcl_lower, dim_upper, conclusion,
                       checks, _regime_notes(m))
    if not cert.check():
        return failed({"step": "self-check by re-expansion"})
    return cert


# -- the s = 3 computation, one identity per rewriting step

@dataclass(frozen=True)
class StepRecord:
    index: int
    name: str
    relation: str
    lhs: ClassVector
    rhs: ClassVector

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def binomial_sum(a: ClassVector, b: ClassVector, n: int) -> ClassVector:
    """``(a + b)^n`` written out as ``sum of a^k b^(n-k)`` over odd binomials."""
    acc = a.ring.zero()
    for k in range(n + 1):
        if comb(n, k) % 2:
            acc = acc + (a ** k) * (b ** (n - k))
    return acc


def _prod(classes: Sequence[ClassVector]) -> ClassVector:
    acc = classes[0]
    for c in classes[1:]:
        acc = acc * c
    return acc


def verify_steps_s3(g: int, m: int) -> list[StepRecord]:
    """Check the rewriting chain that evaluates the ``s = 3`` product.

    Each step compares the fully expanded normal forms of two consecutive
    lines; the last step compares with ``t1 t2 t3``.
    """
    if g < 2 or m < 2:
        raise ParameterError(f"need g >= 2 and m >= 2, got g={g}, m={m}")
    pr = family_product(g, m, 3)
    x = pr.x
    original = expand(pr, witness_factors(g, m, 3, pr))
    first = binomial_sum(x(1, 1), x(1, 2), m)
    second = binomial_sum(x(1, 1), x(1, 3), m)
    third = binomial_sum(x(2, 1), x(2, 2), m - 1)
    line1 = _prod([first, second, third, x(2, 1) + x(2, 3)])
    if line1 != original:
        # the binomial rewrite is an identity; a mismatch means broken arithmetic
        raise RingError("binomial expansion disagrees with direct product")
    line2 = _prod([first, x(1, 3, m), third, x(2, 1) + x(2, 3)])
    line3 = _prod([first, x(1, 3, m), third, x(2, 1)])
    line4 = _prod([x(1, 2, m), x(1, 3, m), third, x(2, 1)])
    line5 = _prod([x(1, 2, m), x(1, 3, m), x(2, 1, m - 1), x(2, 1)])
    top = pr.t(1) * pr.t(2) * pr.t(3)
    return [
        StepRecord(1, "(2)", "only x13^m contributes to t3", line1, line2),
        StepRecord(2, "(3)", "x13 x23 = 0", line2, line3),
        StepRecord(3, "(4)", "x11 x21 = 0", line3, line4),
        StepRecord(4, "(5)", "x12 x22 = 0", line4, line5),
        StepRecord(5, "top", "x12^m x13^m x21^m = t1 t2 t3", line5, top),
    ]


def first_failing_step(steps: Sequence[StepRecord]) -> int | None:
    for st in steps:
        if not st.holds:
            return st.index
    return None


# -- search

def _combinations(basis: Sequence[ClassVector], pr: ProductRing) -> list[ClassVector]:
    out = []
    for mask in range(1, 1 << len(basis)):
        acc = pr.zero()
        i = 0
        while mask:
            if mask & 1:
                acc = acc + basis[i]
            mask >>= 1
            i += 1
        out.append(acc)
    return out


def build_pool(pr: ProductRing, pool: str, budget: int = DEFAULT_BUDGET) -> tuple[list[ClassVector], list[str]]:
    """Candidate zero divisors, sorted by degree, and any budget warnings.

    Each degree contributes every nonzero combination of its kernel basis;
    when that count would exceed ``budget`` only the basis itself is used.
    """
    if pool not in POOLS:
        raise ValueError(f"unknown pool {pool!r}; expected one of {POOLS}")
    degrees = [1] if pool == "std1" else range(1, pr.top_degree + 1)
    out: list[ClassVector] = []
    warnings: list[str] = []
    for d in degrees:
        kb = kernel_basis(pr, d)
        if not kb.vectors:
            continue
        count = (1 << len(kb.vectors)) - 1
        if count > budget:
            warnings.append(f"degree {d}: {count} combinations exceed budget {budget}; using kernel basis only")
            out.extend(kb.vectors)
        else:
            out.extend(_combinations(kb.vectors, pr))
    return out, warnings


def zcl_search(
    pr: ProductRing,
    pool: str = "std1",
    max_len: int | None = None,
    strategy: str = "exhaustive",
    budget: int = DEFAULT_BUDGET,
    seed: FactorList | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Certificate:
    """Look for a long nonzero product of zero divisors.

    ``exhaustive`` explores every multiset of pool elements (with pruning on
    zero partial products and on remaining degree) and so returns the
    maximum over the pool.  ``dfs`` does the same until ``node_budget``
    nodes have been visited.  ``greedy`` extends a single product.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    top = pr.top_degree
    if max_len is None:
        max_len = top
    if max_len < 0:
        raise ValueError("max_len must be non-negative")

    candidates, warnings = build_pool(pr, pool, budget)
    effective = strategy
    if warnings and strategy == "exhaustive":
        effective = "dfs"
        warnings.append("exhaustive search downgraded to dfs")
    for w in warnings:
        log.warning(w)
    degs = [c.degree for c in candidates]

    best: list[ClassVector] = []
    best_value = pr.one()
    if seed is not None and seed.total_length <= max_len:
        if not all(is_zero_divisor(pr, c) for c, _ in seed):
            raise ValueError("seed contains a factor that is not a zero divisor")
        val = expand(pr, seed)
        if val:
            best, best_value = seed.flat(), val

    nodes = 0
    complete = True

    if effective == "greedy":
        chosen: list[ClassVector] = []
        acc = pr.one()
        degree = 0
        while len(chosen) < max_len:
            nodes += 1
            for c, d in zip(candidates, degs):
                if degree + d > top:
                    continue
                nxt = acc * c
                if nxt:
                    chosen.append(c)
                    acc, degree = nxt, degree + d
                    break
            else:
                break
        if len(chosen) > len(best):
            best, best_value = chosen, acc
        complete = False
    elif candidates:
        min_deg = degs[0]
        limit = node_budget if effective == "dfs" else None
        chosen = []

        def visit(start: int, acc: ClassVector, degree: int) -> None:
            nonlocal best, best_value, nodes, complete
            nodes += 1
            if limit is not None and nodes > limit:
                complete = False
                return
            length = len(chosen)
            if length > len(best):
                best, best_value = list(chosen), acc
            room = min(max_len - length, (top - degree) // min_deg)
            if length + room <= len(best):
                return
            for i in range(start, len(candidates)):
                d = degs[i]
                if degree + d > top:
                    break
                nxt = acc * candidates[i]
                if not nxt:
                    continue
                chosen.append(candidates[i])
                visit(i, nxt, degree + d)
                chosen.pop()
                if not complete:
                    return

        visit(0, pr.one(), 0)

    factors = FactorList.from_sequence(best)
    zcl_lower = factors.total_length if best else 0
    dim_upper = top
    conclusion = EXACT if zcl_lower == dim_upper else BOUNDS_ONLY
    checks = [is_zero_divisor(pr, c) for c, _ in factors]
    params = _params_for(pr)
    notes = list(warnings)
    if pr.factor.meta is not None:
        g, m = pr.factor.meta
        if not (g >= 2 and m >= 2 and pr.s >= 3):
            notes.append("parameters outside the range of the closed-form witness")
        notes.extend(_regime_notes(m) if pr.s >= 3 and g >= 2 else [])
    search = {
        "strategy": strategy,
        "effective_strategy": effective,
        "pool": pool,
        "pool_size": len(candidates),
        "max_len": max_len,
        "nodes": nodes,
        "complete": complete and effective == "exhaustive",
    }
    expanded = best_value if best else pr.one()
    return Certificate(pr, params, factors, expanded, zcl_lower, dim_upper, conclusion,
                       checks, notes, search=search)


def bounds_certificate(g: int, m: int, s: int, **search_kwargs) -> Certificate:
    """Best available certificate for ``TC_s(g # RP^m)``."""
    if g < 1 or m < 2 or s < 2:
        raise ParameterError(f"need g >= 1, m >= 2, s >= 2; got g={g}, m={m}, s={s}")
    if g >= 2 and s >= 3:
        return verify_theorem(g, m, s)
    return zcl_search(family_product(g, m, s), **search_kwargs)


def tc_bounds(g: int, m: int, s: int, **search_kwargs) -> tuple[int, int]:
    """``(zcl lower bound, s * m)`` for ``TC_s(g # RP^m)``."""
    cert = bounds_certificate(g, m, s, **search_kwargs)
    return cert.zcl_lower, cert.dim_upper
