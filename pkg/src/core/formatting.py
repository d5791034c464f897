"""Stable text rendering of workbench objects.

Everything printed on stdout goes through here, so output depends only on
the objects and never on set or dict iteration order.
"""

import re

from src.entity.models import Equivalence, FiniteSemiring, SemiringTable

WORD_PATTERN = re.compile(r"[A-Za-z0-9_]+")


def _labels(A: SemiringTable) -> list[str]:
    """Element labels usable as script words; element ids otherwise."""
    labels = [A.label(e) for e in A.elements]
    if all(WORD_PATTERN.fullmatch(label) for label in labels) and len(set(labels)) == A.size:
        return labels
    return [str(e) for e in A.elements]


def render_semiring(A: SemiringTable) -> str:
    """
    Render a table as an explicit ``semiring ... end`` block that parses
    back to the same structure.

    >>> from src.services.semiring import builtin
    >>> print(render_semiring(builtin("boolean", name="B")).splitlines()[1])
      elements 0 1
    """
    labels = _labels(A)
    lines = [
        f"semiring {A.name}",
        "  elements " + " ".join(labels),
        f"  zero {labels[A.zero]}",
        f"  one {labels[A.one]}",
    ]
    for keyword, op in (("add", A.plus), ("mul", A.times)):
        for a in A.elements:
            for b in A.elements:
                lines.append(f"  {keyword} {labels[a]} {labels[b]} = {labels[op(a, b)]}")
    lines.append("end")
    return "\n".join(lines)


def render_table(A: FiniteSemiring, op) -> list[str]:
    labels = [A.label(e) for e in range(A.size)]
    width = max(len(label) for label in labels)
    return [
        " ".join(labels[op(a, b)].rjust(width) for b in range(A.size))
        for a in range(A.size)
    ]


def render_partition(E: Equivalence) -> str:
    """
    >>> from src.services.semiring import builtin
    >>> A = builtin("zmod", 6)
    >>> render_partition(Equivalence.from_keys(A, [e % 2 for e in A.elements]))
    '{0 2 4}{1 3 5}'
    """
    A = E.owner
    return "".join(
        "{" + " ".join(A.label(e) for e in members) + "}" for members in E.classes
    )


def render_members(A: FiniteSemiring, members) -> str:
    return "{" + " ".join(A.label(e) for e in sorted(members)) + "}"


def render_pairs(A: FiniteSemiring, pairs, diagonal: bool = True) -> str:
    """Sorted ``a~b`` list; the diagonal can be left out."""
    shown = sorted((a, b) for a, b in pairs if diagonal or a != b)
    return ", ".join(f"{A.label(a)}~{A.label(b)}" for a, b in shown)


def render_point(target, point) -> str:
    return "(" + " ".join(target.label(v) for v in point) + ")"


def render_points(target, points) -> str:
    return "".join(render_point(target, p) for p in sorted(points))


def render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def key_values(**fields) -> str:
    """
    One result line of ``key=value`` words in the given order.

    >>> key_values(points=1, homs=1, window=50)
    'points=1 homs=1 window=50'
    >>> key_values(prime=True, radical=False)
    'prime=true radical=false'
    """
    return " ".join(f"{key}={render_value(value)}" for key, value in fields.items())
