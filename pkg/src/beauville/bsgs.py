"""Stabilizer chains (base and strong generating set) and the group
operations built on them.

The Schreier-Sims construction here is the deterministic textbook variant:
base points are always the smallest moved point of the permutation that
forces them, orbits are grown breadth-first with generators applied in list
order, and every Schreier generator is sifted.  Identical generator lists
therefore produce identical chains, which the seeded random-element sampler
and all reports rely on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from random import Random
from typing import Iterator

from .errors import BudgetExceeded, NotInGroup, NotTransitive
from .perm import Permutation

DEFAULT_CLASS_BUDGET = 1 << 24
DEFAULT_CLOSURE_BUDGET = 1 << 24


@dataclass
class _Level:
    """One link of the stabilizer chain."""

    point: int
    gens: list[Permutation] = field(default_factory=list)
    # orbit point -> u with u[level.point] == point; insertion order is
    # discovery order, which downstream enumeration depends on
    transversal: dict[int, Permutation] = field(default_factory=dict)

    def rebuild_transversal(self, degree: int) -> None:
        identity = Permutation.identity(degree)
        self.transversal = {self.point: identity}
        queue = deque([self.point])
        while queue:
            a = queue.popleft()
            u = self.transversal[a]
            for g in self.gens:
                b = g[a]
                if b not in self.transversal:
                    self.transversal[b] = u * g
                    queue.append(b)


class GroupHandle:
    """A permutation group held as generators plus a lazily built BSGS."""

    def __init__(self, generators, degree=None, name=None, gen_names=None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree is required for a trivial group")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                from .errors import DegreeMismatch

                raise DegreeMismatch("generators of mixed degree")
        self.degree = degree
        self.generators = generators
        self.name = name
        self.gen_names = tuple(gen_names) if gen_names is not None else None
        self._levels: list[_Level] | None = None
        self._order: int | None = None

    # -- chain construction --------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = _schreier_sims(
                [g for g in self.generators if not g.is_identity()], self.degree
            )
        return self._levels

    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self._chain())

    def strong_generators(self) -> list[Permutation]:
        seen = {}
        for level in self._chain():
            for g in level.gens:
                seen.setdefault(g, None)
        return list(seen)

    def order(self) -> int:
        if self._order is None:
            n = 1
            for level in self._chain():
                n *= len(level.transversal)
            self._order = n
        return self._order

    def sift(self, p: Permutation) -> Permutation:
        """Strip p through the chain; the residue is the identity exactly
        when p is a member."""
        for level in self._chain():
            b = p[level.point]
            if b == level.point:
                continue
            u = level.transversal.get(b)
            if u is None:
                return p
            p = p * u.inverse()
        return p

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        return self.sift(p).is_identity()

    def stabilizer_generators(self, depth: int = 1) -> list[Permutation]:
        """Strong generators fixing the first ``depth`` base points."""
        chain = self._chain()
        out = []
        for level in chain[depth:]:
            for g in level.gens:
                if g not in out:
                    out.append(g)
        return out

    # -- element access -------------------------------------------------

    def random_element(self, seed: int) -> Permutation:
        """Uniform over the group, deterministic in (chain, seed)."""
        rng = Random(seed)
        return self._sample(rng)

    def _sample(self, rng: Random) -> Permutation:
        result = Permutation.identity(self.degree)
        for level in self._chain():
            points = list(level.transversal)
            result = level.transversal[rng.choice(points)] * result
        return result

    def elements(self) -> Iterator[Permutation]:
        """All elements, as products over the transversals (depth-first)."""
        chain = self._chain()
        identity = Permutation.identity(self.degree)
        if not chain:
            yield identity
            return

        def rec(i: int, acc: Permutation) -> Iterator[Permutation]:
            if i == len(chain):
                yield acc
                return
            for u in chain[i].transversal.values():
                yield from rec(i + 1, u * acc)

        # each element factors uniquely as u_{k-1} * ... * u_1 * u_0 with
        # u_i drawn from level i's transversal (the sift order, reversed)
        yield from rec(0, identity)

    # -- orbit structure --------------------------------------------------

    def orbits(self) -> list[list[int]]:
        """Orbits on points, each sorted, listed by least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                a = queue.popleft()
                for g in self.generators:
                    b = g[a]
                    if not seen[b]:
                        seen[b] = True
                        orbit.append(b)
                        queue.append(b)
            out.append(sorted(orbit))
        return out

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbits()) == 1

    def __repr__(self) -> str:
        label = self.name or f"{len(self.generators)} gens"
        return f"<GroupHandle degree={self.degree} ({label})>"


def build_bsgs(generators, degree=None, name=None, gen_names=None) -> GroupHandle:
    """Construct a handle and force its stabilizer chain."""
    handle = GroupHandle(generators, degree=degree, name=name, gen_names=gen_names)
    handle.order()
    return handle


def _first_moved_point(p: Permutation) -> int:
    for i, v in enumerate(p):
        if v != i:
            return i
    raise ValueError("identity has no moved point")


def _schreier_sims(gens: list[Permutation], degree: int) -> list[_Level]:
    levels: list[_Level] = []

    def install(g: Permutation, top: int) -> int:
        """Add g to every level it belongs to, from ``top`` down; returns the
        deepest level index that changed."""
        i = top
        while True:
            if i == len(levels):
                levels.append(_Level(_first_moved_point(g)))
            levels[i].gens.append(g)
            if g[levels[i].point] != levels[i].point:
                return i
            i += 1

    for g in gens:
        install(g, 0)
    for level in levels:
        level.rebuild_transversal(degree)

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        level.rebuild_transversal(degree)
        changed_at = None
        # orbit points in discovery order; list() guards against growth
        for b in list(level.transversal):
            u = level.transversal[b]
            for s in level.gens:
                schreier = u * s * level.transversal[s[b]].inverse()
                if schreier.is_identity():
                    continue
                residue, depth = _strip(schreier, levels, i + 1)
                if residue is not None:
                    deepest = install(residue, i + 1)
                    for j in range(i + 1, deepest + 1):
                        levels[j].rebuild_transversal(degree)
                    changed_at = max(depth, deepest)
                    break
            if changed_at is not None:
                break
        if changed_at is not None:
            i = changed_at
        else:
            i -= 1
    return levels


def _strip(p: Permutation, levels: list[_Level], start: int):
    """Sift p from ``start``; returns (residue, level) or (None, level) when
    p strips to the identity."""
    i = start
    while i < len(levels):
        b = p[levels[i].point]
        u = levels[i].transversal.get(b)
        if u is None:
            return p, i
        p = p * u.inverse()
        i += 1
    if p.is_identity():
        return None, i
    return p, i


# -- operations layered on the chain --------------------------------------


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class: canonical representative (minimal image table),
    size, and the set of member keys."""

    representative: Permutation
    size: int
    members: frozenset

    @property
    def class_id(self):
        return self.representative.key()


def conj_class(
    group: GroupHandle, x: Permutation, budget: int = DEFAULT_CLASS_BUDGET
) -> ConjClass:
    """Closure of {x} under conjugation by the group's generators."""
    if not group.contains(x):
        raise NotInGroup(f"{x} is not in the group")
    gens = [(g, g.inverse()) for g in group.generators]
    seen = {x.key()}
    frontier = [x]
    rep = x
    while frontier:
        nxt = []
        for y in frontier:
            for g, ginv in gens:
                z = ginv * y * g
                k = z.key()
                if k not in seen:
                    if len(seen) >= budget:
                        raise BudgetExceeded(
                            f"conjugacy class exceeds {budget} elements", budget
                        )
                    seen.add(k)
                    nxt.append(z)
                    if z < rep:
                        rep = z
        frontier = nxt
    return ConjClass(representative=rep, size=len(seen), members=frozenset(seen))


def element_closure(
    generators, degree: int | None = None, budget: int = DEFAULT_CLOSURE_BUDGET
) -> list[Permutation]:
    """Brute-force closure of a generating set under multiplication.

    Breadth-first, deterministic, independent of the stabilizer chain; used
    both as the BSGS cross-check and wherever a full element list of a small
    group is genuinely needed.
    """
    generators = list(generators)
    if degree is None:
        if not generators:
            raise ValueError("degree is required for a trivial group")
        degree = generators[0].degree
    identity = Permutation.identity(degree)
    elements = [identity]
    seen = {identity.key()}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                k = y.key()
                if k not in seen:
                    if len(seen) >= budget:
                        raise BudgetExceeded(
                            f"closure exceeds {budget} elements", budget
                        )
                    seen.add(k)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    return elements


def minimal_block(group: GroupHandle, alpha: int, beta: int) -> list[int]:
    """The block of the finest block system fusing ``alpha`` and ``beta``
    (union-find refinement over the generator action)."""
    n = group.degree
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    queue = deque()
    ra, rb = find(alpha), find(beta)
    parent[rb] = ra
    queue.append((alpha, beta))
    while queue:
        a, b = queue.popleft()
        for g in group.generators:
            ga, gb = find(g[a]), find(g[b])
            if ga != gb:
                parent[gb] = ga
                queue.append((ga, gb))
    root = find(alpha)
    return [i for i in range(n) if find(i) == root]


def is_primitive(group: GroupHandle) -> tuple[bool, list[int] | None]:
    """(True, None) for a primitive group; otherwise (False, block) where
    block is a smallest nontrivial block containing point 1."""
    if not group.is_transitive():
        raise NotTransitive("primitivity is defined for transitive groups only")
    n = group.degree
    if n == 1:
        return True, None
    best: list[int] | None = None
    for beta in range(1, n):
        block = minimal_block(group, 0, beta)
        if len(block) < n and (best is None or len(block) < len(best)):
            best = block
    if best is None:
        return True, None
    return False, best


def is_perfect(group: GroupHandle) -> bool:
    """Whether the derived subgroup is the whole group.

    The derived subgroup is the normal closure of the generator commutators;
    the closure loop usually exits on the first order comparison.
    """
    gens = group.generators
    comms = []
    for a in gens:
        for b in gens:
            c = a.commutator(b)
            if not c.is_identity() and c not in comms:
                comms.append(c)
    if not comms:
        return group.order() == 1
    derived = build_bsgs(comms, degree=group.degree)
    worklist = list(comms)
    while worklist:
        if derived.order() == group.order():
            return True
        x = worklist.pop(0)
        for g in gens:
            y = x.conj(g)
            if not derived.contains(y):
                comms.append(y)
                derived = build_bsgs(comms, degree=group.degree)
                worklist.append(y)
    return derived.order() == group.order()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def jordan_witness(
    group: GroupHandle, max_length: int = 6, budget: int = 100_000
) -> Permutation | None:
    """Search for an element that is a single prime-length cycle fixing at
    least three points.

    Words over the generators and their inverses up to ``max_length`` are
    enumerated breadth-first, and every power of each word element is
    examined.  This is a bounded heuristic: None means "not found", not
    "does not exist".
    """
    degree = group.degree
    alphabet = []
    for g in group.generators:
        if g not in alphabet:
            alphabet.append(g)
        gi = g.inverse()
        if gi not in alphabet:
            alphabet.append(gi)

    def check(p: Permutation) -> bool:
        cycles = p.cycles()
        if len(cycles) != 1:
            return False
        length = len(cycles[0])
        return _is_prime(length) and degree - length >= 3

    identity = Permutation.identity(degree)
    seen = {identity.key()}
    frontier = [identity]
    count = 0
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for g in alphabet:
                x = w * g
                k = x.key()
                if k in seen:
                    continue
                seen.add(k)
                count += 1
                if count > budget:
                    return None
                nxt.append(x)
                p = x
                for _ in range(x.order() - 1):
                    if check(p):
                        return p
                    p = p * x
        frontier = nxt
    return None
