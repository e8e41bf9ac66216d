"""Permutations of {1..n} with composition applied left to right.

Internally a permutation is a tuple of 0-based images: ``p[i]`` is the image
of point ``i``.  All public text I/O (cycle notation) is 1-based.  The
product ``p * q`` means "apply p, then q", so ``(p * q)[i] == q[p[i]]``;
conjugation is ``p ^ q = q⁻¹ p q``, i.e. "q-relabelled p".
"""

from __future__ import annotations

import re
from math import gcd

from .errors import MalformedSyntax, PointOutOfRange, RepeatedPoint

MAX_DEGREE = 4096

_CYCLE_RE = re.compile(r"\(\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\)")


class Permutation(tuple):
    """An immutable permutation; subclasses tuple so instances hash and
    compare like their image tables."""

    __slots__ = ()

    def __new__(cls, images):
        self = super().__new__(cls, images)
        n = len(self)
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
        return self

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Build from 0-based disjoint cycles; repeated points are rejected."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if a in seen:
                    raise RepeatedPoint(f"point {a + 1} occurs twice")
                seen.add(a)
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            from .errors import DegreeMismatch

            raise DegreeMismatch(f"degree {len(self)} * degree {len(other)}")
        return Permutation(map(other.__getitem__, self))

    def inverse(self) -> "Permutation":
        images = [0] * len(self)
        for i, v in enumerate(self):
            images[v] = i
        return Permutation(images)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(len(self))
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def conj(self, by: "Permutation") -> "Permutation":
        """self ^ by = by⁻¹ · self · by."""
        images = [0] * len(self)
        for i, v in enumerate(self):
            images[by[i]] = by[v]
        return Permutation(images)

    def commutator(self, other: "Permutation") -> "Permutation":
        """[self, other] = self⁻¹ other⁻¹ self other."""
        return self.inverse() * other.inverse() * self * other

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by
        least moved point.  0-based."""
        seen = [False] * len(self)
        out = []
        for start, image in enumerate(self):
            if seen[start] or image == start:
                continue
            cycle = [start]
            seen[start] = True
            point = image
            while point != start:
                seen[point] = True
                cycle.append(point)
                point = self[point]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Lengths of nontrivial cycles, descending."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = n * len(c) // gcd(n, len(c))
        return n

    def moved_points(self) -> list[int]:
        return [i for i, v in enumerate(self) if v != i]

    def key(self):
        """Compact hashable key for dedup sets (bytes below degree 256)."""
        if len(self) <= 256:
            return bytes(self)
        return tuple(self)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles
        )

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, degree={len(self)})"

    @staticmethod
    def parse(text: str, degree: int | None = None) -> "Permutation":
        return parse_cycles(text, degree)


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based disjoint cycle notation, e.g. ``"(1,2)(3,4,5,6)"``.

    ``"()"`` is the identity.  When ``degree`` is omitted it is the largest
    point mentioned (0 for the bare identity).
    """
    stripped = text.strip()
    if not stripped:
        raise MalformedSyntax("empty permutation text")
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise MalformedSyntax(f"bad cycle syntax at {stripped[pos:]!r}")
        body = m.group(1).strip()
        if body:
            points = [int(tok) for tok in body.split(",")]
            if any(p < 1 for p in points):
                raise PointOutOfRange("points are numbered from 1")
            cycles.append([p - 1 for p in points])
        pos = m.end()
    top = max((max(c) for c in cycles), default=-1) + 1
    if degree is None:
        degree = top
    elif top > degree:
        raise PointOutOfRange(f"point {top} exceeds degree {degree}")
    if degree > MAX_DEGREE:
        raise PointOutOfRange(f"degree {degree} exceeds the supported maximum {MAX_DEGREE}")
    singles = [c for c in cycles if len(c) == 1]
    # 1-cycles are legal no-ops but still count for the repeated-point check
    return Permutation.from_cycles([c for c in cycles if len(c) > 1] + singles, degree)


def compose(*perms: Permutation) -> Permutation:
    """Left-to-right product of one or more permutations."""
    if not perms:
        raise ValueError("compose() needs at least one permutation")
    result = perms[0]
    for p in perms[1:]:
        result = result * p
    return result
