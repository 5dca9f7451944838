"""Line-oriented text format for ring presentations.

::

    # truncated polynomial ring GF(2)[x]/x^3
    gen x 1
    gen x^2 2
    mul x x = x^2

The unit ``1`` is implicit and every unlisted product is zero.
"""

from __future__ import annotations

from tcsum.algebra import RingError, RingTable, StructureSpec, ring_from_table


class PresentationError(RingError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"{message} at line {line}")


_FORBIDDEN = set("+=#") | {" ", "\t"}


def _check_label(label: str, lineno: int) -> None:
    if not label or any(ch in _FORBIDDEN for ch in label):
        raise PresentationError(f"invalid label {label!r}", lineno)


def parse_presentation(text: str) -> StructureSpec:
    spec = StructureSpec()
    degree: dict[str, int] = {"1": 0}
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if words[0] == "gen":
            if len(words) != 3:
                raise PresentationError("malformed gen line, expected 'gen <label> <degree>'", lineno)
            label = words[1]
            _check_label(label, lineno)
            try:
                deg = int(words[2])
            except ValueError:
                raise PresentationError(f"degree {words[2]!r} is not an integer", lineno) from None
            if label in degree:
                raise PresentationError(f"duplicate generator {label!r}", lineno)
            if deg <= 0:
                raise PresentationError(f"generator {label!r} needs positive degree", lineno)
            degree[label] = deg
            spec.gens.append((label, deg))
        elif words[0] == "mul":
            lhs, eq, rhs = line[3:].partition("=")
            factors = lhs.split()
            if not eq or len(factors) != 2:
                raise PresentationError("malformed mul line, expected 'mul <a> <b> = <c>[+<d>...]'", lineno)
            terms = [t.strip() for t in rhs.split("+")]
            if any(not t for t in terms):
                raise PresentationError("empty term in product", lineno)
            pending.append((lineno, factors[0], factors[1], terms))
        else:
            raise PresentationError(f"unknown directive {words[0]!r}", lineno)

    for lineno, a, b, terms in pending:
        for label in (a, b, *terms):
            if label not in degree:
                raise PresentationError(f"unknown label {label!r}", lineno)
        if "1" in (a, b):
            raise PresentationError("products with the unit are implicit", lineno)
        key = tuple(sorted((a, b)))
        if key in spec.products:
            raise PresentationError(f"product {a} * {b} listed twice", lineno)
        want = degree[a] + degree[b]
        for t in terms:
            if degree[t] != want:
                raise PresentationError(
                    f"degree inconsistency: {t!r} has degree {degree[t]}, expected {want}", lineno
                )
        spec.add_product(a, b, terms)
    return spec


def load_ring(text: str) -> RingTable:
    """Parse and validate in one step."""
    return ring_from_table(parse_presentation(text))


def format_presentation(r: RingTable) -> str:
    lines = []
    for i in range(1, len(r)):
        lines.append(f"gen {r.labels[i]} {r.degrees[i]}")
    for a in range(1, len(r)):
        for b in range(a, len(r)):
            terms = r.table[a][b]
            if terms:
                rhs = "+".join(r.labels[c] for c in terms)
                lines.append(f"mul {r.labels[a]} {r.labels[b]} = {rhs}")
    return "\n".join(lines) + ("\n" if lines else "")
