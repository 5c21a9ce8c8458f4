"""The arrangement file format.

    # optional comments
    arr v1 n=<N>
    <id> <a> <b> <c>      (N records, ids exactly 1..N in angle order)

Coefficients are integers or "p/q" rationals, never decimals, so files stay
exact.  Ids must already follow increasing direction angle; the loader
rejects any other numbering and suggests the relabeling instead of silently
permuting, so fixtures stay unambiguous across tools.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement, build_arrangement
from .geometry import ArrangementError, LESS, cmp_angle, line


def format_arrangement(arr: Arrangement) -> str:
    out = [f"arr v1 n={arr.n}"]
    for i, ln in enumerate(arr.lines, 1):
        out.append(f"{i} {ln.a} {ln.b} {ln.c}")
    return "\n".join(out) + "\n"


def _rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ArrangementError("bad-file", f"bad rational {token!r}") from exc


def parse_arrangement(text: str) -> Arrangement:
    rows = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not rows or not rows[0].startswith("arr v1 n="):
        raise ArrangementError("bad-file", 'missing "arr v1 n=<N>" header')
    try:
        n = int(rows[0].split("=", 1)[1])
    except ValueError as exc:
        raise ArrangementError("bad-file", f"bad header {rows[0]!r}") from exc
    if len(rows) - 1 != n:
        raise ArrangementError("bad-file", f"expected {n} records, found {len(rows) - 1}")
    by_id = {}
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 4:
            raise ArrangementError("bad-file", f"bad record {row!r}")
        ident = int(parts[0]) if parts[0].isdigit() else None
        if ident is None or not 1 <= ident <= n or ident in by_id:
            raise ArrangementError("bad-file", f"bad or duplicate id in {row!r}")
        by_id[ident] = line(*(_rational(p) for p in parts[1:]))
    lines = [by_id[i] for i in range(1, n + 1)]
    for i in range(n - 1):
        if cmp_angle(lines[i], lines[i + 1]) != LESS:
            order = sorted(range(n), key=_angle_rank(lines))
            suggestion = ", ".join(
                f"{old + 1}->{new + 1}" for new, old in enumerate(order) if old != new
            )
            raise ArrangementError(
                "id-order-mismatch",
                f"ids must follow increasing angle; suggested relabeling: {suggestion}",
            )
    return build_arrangement(lines)


def _angle_rank(lines):
    class Key:
        __slots__ = ("k",)

        def __init__(self, k):
            self.k = k

        def __lt__(self, other):
            return cmp_angle(lines[self.k], lines[other.k]) == LESS

    return Key


def save_arrangement(arr: Arrangement, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_arrangement(arr))


def load_arrangement(path) -> Arrangement:
    with open(path, "r", encoding="ascii") as fh:
        return parse_arrangement(fh.read())
