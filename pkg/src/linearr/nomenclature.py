"""Signed insertion orders for infinity-type arrangements.

An arrangement is *infinity type* when its lines can be inserted one by one
so that each new line keeps all previously created vertices strictly on one
side.  The record of such an insertion order is a *nomenclature*: the
permutation of line ids annotated with +1 when the new line leaves the
previous vertices on the origin's side and -1 when it separates them from
the origin.  The first three entries instead carry the sign pattern of the
triangle the first three lines form; sorted by id those signs always read
(+1, -1, +1) or (-1, +1, -1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement, at_infinity_in_subset, build_arrangement
from .geometry import (
    ArrangementError,
    direction_ladder,
    ladder_direction_vector,
    intersect,
    line,
)

_TOKEN = re.compile(r"^(\d+)\^([+-]1)$")


@dataclass(frozen=True)
class Nomenclature:
    """Entries (label, sign) by position; labels form a permutation of 1..n."""

    labels: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ArrangementError("bad-token", "signs must be +1/-1, one per label")
        if sorted(self.labels) != list(range(1, n + 1)):
            raise ArrangementError(
                "not-a-permutation", f"labels {self.labels} are not a permutation of 1..{n}"
            )
        if n < 3:
            raise ArrangementError(
                "bad-leading-signs", "need at least 3 entries to carry the triangle signs"
            )
        by_label = dict(zip(self.labels[:3], self.signs[:3]))
        i, j, k = sorted(self.labels[:3])
        if (by_label[i], by_label[j], by_label[k]) not in ((1, -1, 1), (-1, 1, -1)):
            raise ArrangementError(
                "bad-leading-signs",
                "the first three signs sorted by label must read +1,-1,+1 or -1,+1,-1",
            )

    @property
    def n(self) -> int:
        return len(self.labels)

    def label_at(self, pos: int) -> int:
        """Label at 1-based position."""
        return self.labels[pos - 1]

    def sign_at(self, pos: int) -> int:
        return self.signs[pos - 1]

    def position_of(self, label: int) -> int:
        """1-based position of a label."""
        return self.labels.index(label) + 1

    def negated(self) -> "Nomenclature":
        return Nomenclature(self.labels, tuple(-s for s in self.signs))

    def __str__(self) -> str:
        return format_nomenclature(self)


def parse_nomenclature(text: str) -> Nomenclature:
    """Parse "1^+1 2^-1 3^+1" style text (whitespace between tokens)."""
    tokens = text.split()
    labels, signs = [], []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ArrangementError("bad-token", f"bad nomenclature token {tok!r}")
        labels.append(int(m.group(1)))
        signs.append(1 if m.group(2) == "+1" else -1)
    return Nomenclature(tuple(labels), tuple(signs))


def format_nomenclature(nom: Nomenclature) -> str:
    return " ".join(
        f"{lab}^{'+1' if s == 1 else '-1'}" for lab, s in zip(nom.labels, nom.signs)
    )


def _pattern_signs(arr: Arrangement, triple) -> dict[int, int]:
    """Triangle sign of each of the three lines: +1 iff the line leaves the
    opposite vertex on the origin's side (which is -1 under the convention)."""
    out = {}
    for x in triple:
        others = [y for y in triple if y != x]
        out[x] = 1 if arr.side_at(x, others[0], others[1]) == -1 else -1
    return out


def triangle_signs(arr: Arrangement) -> tuple[int, int, int]:
    """Sign pattern of a 3-line arrangement, ordered by ascending id."""
    if arr.n != 3:
        raise ArrangementError("too-few-lines", "triangle_signs needs exactly 3 lines")
    pat = _pattern_signs(arr, (1, 2, 3))
    return (pat[1], pat[2], pat[3])


def canonical_infinity_permutation(arr: Arrangement):
    """Greedy insertion order: repeatedly strip the at-infinity line with the
    largest id.  Returns the permutation as an insertion order (first created
    line first) or None when some stage of 3+ lines has no at-infinity line.
    """
    remaining = list(arr.ids)
    suffix = []
    while len(remaining) > 2:
        cands = [m for m in remaining if at_infinity_in_subset(arr, m, remaining)]
        if not cands:
            return None
        pick = max(cands)
        suffix.append(pick)
        remaining.remove(pick)
    suffix.extend(sorted(remaining, reverse=True))
    return tuple(reversed(suffix))


def find_infinity_permutation(arr: Arrangement):
    """Any infinity permutation found by backtracking over all at-infinity
    choices (largest ids first), or None if the arrangement is not infinity
    type.  Exists to cross-check the greedy rule, which is believed to
    suffice whenever any insertion order exists."""
    memo: dict[frozenset, tuple | None] = {}

    def solve(fs: frozenset):
        if len(fs) <= 2:
            return tuple(sorted(fs))
        if fs in memo:
            return memo[fs]
        res = None
        for m in sorted(fs, reverse=True):
            if at_infinity_in_subset(arr, m, fs):
                sub = solve(fs - {m})
                if sub is not None:
                    res = sub + (m,)
                    break
        memo[fs] = res
        return res

    return solve(frozenset(arr.ids))


def derive_nomenclature(arr: Arrangement, perm=None) -> Nomenclature:
    """Read the nomenclature of ``arr`` off a given insertion order.

    ``perm`` defaults to the canonical (greedy) infinity permutation.  The
    first three signs come from the triangle rule; each later sign is +1 iff
    the line keeps all vertices of its predecessors on the origin's side.
    Raises ``not-an-infinity-permutation`` when a prefix line sees vertices
    on both sides.
    """
    if perm is None:
        perm = canonical_infinity_permutation(arr)
        if perm is None:
            raise ArrangementError(
                "not-an-infinity-permutation", "arrangement is not recognized as infinity type"
            )
    perm = tuple(perm)
    if sorted(perm) != list(arr.ids):
        raise ArrangementError("not-a-permutation", f"{perm} is not a permutation of the ids")
    n = arr.n
    signs = [0] * n
    pat = _pattern_signs(arr, perm[:3])
    for pos in range(3):
        signs[pos] = pat[perm[pos]]
    for l in range(3, n + 1):
        m = perm[l - 1]
        want = 0
        for i, j in combinations(perm[: l - 1], 2):
            s = arr.side_at(m, i, j)
            if want == 0:
                want = s
            elif s != want:
                raise ArrangementError(
                    "not-an-infinity-permutation",
                    f"line {m} (position {l}) sees vertices of its prefix on both sides",
                )
        a = 1 if want == -1 else -1
        if l == 3:
            # The triangle rule and the separation rule must agree here.
            assert a == signs[2], "triangle/separation sign rules disagree at position 3"
        else:
            signs[l - 1] = a
    return Nomenclature(perm, tuple(signs))


def realize_nomenclature(nom: Nomenclature, variant: int = 0) -> Arrangement:
    """Construct an arrangement whose nomenclature along ``nom``'s order is
    exactly ``nom``.

    Label m receives the m-th direction of an exact rational ladder, so ids
    come out equal to labels.  Lines are inserted in nomenclature order;
    each new line's x intercept is chosen 1 beyond the bound that puts all
    existing vertices strictly on the required side (origin side for +1,
    far side for -1).  Whenever the bound would force a non-positive
    intercept, the configuration built so far is first translated in +x,
    which changes no established side: vertex-versus-line signs are
    translation invariant and the origin stays on side -1 of every line
    while intercepts stay positive.
    """
    n = nom.n
    ladder = direction_ladder(n, variant)
    dirvec = {m: ladder_direction_vector(ladder[m - 1]) for m in range(1, n + 1)}
    placed: dict[int, object] = {}
    for pos in range(1, n + 1):
        label = nom.label_at(pos)
        want = nom.sign_at(pos)
        dx, dy = dirvec[label]
        a, b = dy, -dx
        verts = [
            intersect(u, v) for u, v in combinations(placed.values(), 2)
        ]
        if not verts:
            p = Fraction(1)
        else:
            bounds = [v.x + Fraction(b, a) * v.y for v in verts]
            p = max(bounds) + 1 if want == 1 else min(bounds) - 1
            if p <= 0:
                delta = Fraction(1) - p
                placed = {m: ln.translated(delta, 0) for m, ln in placed.items()}
                p = Fraction(1)
        placed[label] = line(a, b, a * p)
    arr = build_arrangement(placed.values())
    for m in range(1, n + 1):
        assert arr.line(m).direction == dirvec[m], "ladder order broke the id/label match"
    return arr
