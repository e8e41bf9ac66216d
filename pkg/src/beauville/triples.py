"""Hyperbolic generating triples, the conjugate-power set Sigma, mixable
structures on a single group, and the coprime lift into G x G."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bsgs import DEFAULT_CLASS_BUDGET, GroupHandle, build_bsgs, is_perfect
from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    GenerationFailure,
    NotCoprime,
    NotInGroup,
    NotTriple,
)
from .perm import Permutation


@dataclass(frozen=True)
class TripleType:
    """Orders (o(x), o(y), o(xy)) of a candidate triple."""

    l: int
    m: int
    n: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.l, self.m, self.n)

    def sorted_desc(self) -> tuple[int, int, int]:
        return tuple(sorted(self.as_tuple(), reverse=True))

    def is_hyperbolic(self) -> bool:
        return (
            Fraction(1, self.l) + Fraction(1, self.m) + Fraction(1, self.n)
            < 1
        )

    def nu(self) -> int:
        return self.l * self.m * self.n

    def __str__(self) -> str:
        return f"({self.l},{self.m},{self.n})"


def triple_type(x: Permutation, y: Permutation) -> TripleType:
    if x.degree != y.degree:
        raise DegreeMismatch("triple entries live in different degrees")
    return TripleType(x.order(), y.order(), (x * y).order())


NON_HYPERBOLIC = "non_hyperbolic"
NOT_GENERATING = "not_generating"


@dataclass(frozen=True)
class TripleCheck:
    """Outcome of the hyperbolic-generating-triple predicate."""

    ok: bool
    type: TripleType
    reasons: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def is_hyperbolic_triple(group: GroupHandle, x: Permutation, y: Permutation) -> TripleCheck:
    """Both conditions checked: angle sum below 1 and <x,y> = G."""
    for p in (x, y):
        if not group.contains(p):
            raise NotInGroup(f"{p} is not in the group")
    t = triple_type(x, y)
    reasons = []
    if not t.is_hyperbolic():
        reasons.append(NON_HYPERBOLIC)
    if build_bsgs([x, y], degree=group.degree).order() != group.order():
        reasons.append(NOT_GENERATING)
    return TripleCheck(ok=not reasons, type=t, reasons=tuple(reasons))


# -- mixable structures ------------------------------------------------------

NOT_PERFECT = "not_perfect"
FIRST_PAIR_NOT_GENERATING = "first_pair_not_generating"
SECOND_PAIR_NOT_GENERATING = "second_pair_not_generating"
ORDER_X1_ODD = "order_of_x1_odd"
ORDER_Y1_ODD = "order_of_y1_odd"
NU_NOT_COPRIME = "nu_values_not_coprime"


@dataclass(frozen=True)
class MixableStructure:
    group: GroupHandle
    x1: Permutation
    y1: Permutation
    x2: Permutation
    y2: Permutation
    type6: tuple[TripleType, TripleType]
    nu1: int
    nu2: int

    def type_string(self) -> str:
        t1, t2 = self.type6
        return f"({t1.l},{t1.m},{t1.n};{t2.l},{t2.m},{t2.n})"


@dataclass(frozen=True)
class MixableOutcome:
    """Either a populated structure or the list of violated conditions."""

    structure: MixableStructure | None
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.structure is not None

    def __bool__(self) -> bool:
        return self.ok


def is_mixable(
    group: GroupHandle,
    x1: Permutation,
    y1: Permutation,
    x2: Permutation,
    y2: Permutation,
) -> MixableOutcome:
    """Check the mixable conditions: perfect group, both pairs generate,
    o(x1) and o(y1) even, and coprime order products."""
    for p in (x1, y1, x2, y2):
        if not group.contains(p):
            raise NotInGroup(f"{p} is not in the group")
    violations = []
    if not is_perfect(group):
        violations.append(NOT_PERFECT)
    t1 = triple_type(x1, y1)
    t2 = triple_type(x2, y2)
    if build_bsgs([x1, y1], degree=group.degree).order() != group.order():
        violations.append(FIRST_PAIR_NOT_GENERATING)
    if build_bsgs([x2, y2], degree=group.degree).order() != group.order():
        violations.append(SECOND_PAIR_NOT_GENERATING)
    if t1.l % 2:
        violations.append(ORDER_X1_ODD)
    if t1.m % 2:
        violations.append(ORDER_Y1_ODD)
    if gcd(t1.nu(), t2.nu()) != 1:
        violations.append(NU_NOT_COPRIME)
    if violations:
        return MixableOutcome(structure=None, violations=tuple(violations))
    return MixableOutcome(
        structure=MixableStructure(
            group=group,
            x1=x1,
            y1=y1,
            x2=x2,
            y2=y2,
            type6=(t1, t2),
            nu1=t1.nu(),
            nu2=t2.nu(),
        ),
        violations=(),
    )


# -- Sigma -------------------------------------------------------------------


class SigmaSet:
    """All conjugates of all powers of x, y and xy, conjugation taken in
    the handle the set was built from."""

    __slots__ = ("source", "_elements", "members")

    def __init__(self, source: tuple[Permutation, Permutation], elements: dict):
        self.source = source
        self._elements = elements
        self.members = frozenset(elements)

    def contains(self, p: Permutation) -> bool:
        return p.key() in self.members

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements.values())

    def intersection_keys(self, other: "SigmaSet") -> frozenset:
        return self.members & other.members


def sigma_set(
    group: GroupHandle,
    x: Permutation,
    y: Permutation,
    budget: int = DEFAULT_CLASS_BUDGET,
) -> SigmaSet:
    """Union over w in {x, y, xy} and 1 <= d <= o(w) of the class of w^d.

    Equivalent to sweeping conjugates of powers directly, but touches each
    class once.  The identity is always a member (d = o(w)).
    """
    for p in (x, y):
        if not group.contains(p):
            raise NotInGroup(f"{p} is not in the group")
    elements: dict = {}
    for w in (x, y, x * y):
        p = w
        for _ in range(w.order()):
            if p.key() not in elements:
                for q in _class_elements(group, p, budget):
                    elements.setdefault(q.key(), q)
                if len(elements) > budget:
                    raise BudgetExceeded("sigma set exceeds budget", budget)
            p = p * w
    return SigmaSet(source=(x, y), elements=elements)


def _class_elements(group: GroupHandle, x: Permutation, budget: int):
    """The conjugacy class of x as actual permutations (BFS closure)."""
    gens = [(g, g.inverse()) for g in group.generators]
    seen = {x.key(): x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g, ginv in gens:
                z = ginv * y * g
                k = z.key()
                if k not in seen:
                    if len(seen) >= budget:
                        raise BudgetExceeded("conjugacy class exceeds budget", budget)
                    seen[k] = z
                    nxt.append(z)
        frontier = nxt
    return seen.values()


def sigma_brute(group: GroupHandle, x: Permutation, y: Permutation) -> frozenset:
    """Literal definition: every power index up to |G|, every conjugator.

    Exponential in nothing but patience; retained as the oracle for small
    orders.
    """
    all_elements = list(group.elements())
    order = len(all_elements)
    keys = set()
    for w in (x, y, x * y):
        p = w
        for _ in range(order):
            for g in all_elements:
                keys.add(p.conj(g).key())
            p = p * w
    return frozenset(keys)


# -- direct products and the coprime lift -------------------------------------


def pair_element(x: Permutation, y: Permutation) -> Permutation:
    """(x, y) acting on the disjoint union, second factor shifted."""
    dx = x.degree
    return Permutation(tuple(x) + tuple(v + dx for v in y))


def direct_product(g: GroupHandle, h: GroupHandle, name: str | None = None) -> GroupHandle:
    """G x H on degree(G) + degree(H) points."""
    eg = Permutation.identity(g.degree)
    eh = Permutation.identity(h.degree)
    gens = [pair_element(p, eh) for p in g.generators]
    gens += [pair_element(eg, p) for p in h.generators]
    if name is None:
        name = f"({g.name or 'G'})x({h.name or 'H'})"
    return GroupHandle(gens, degree=g.degree + h.degree, name=name)


@dataclass(frozen=True)
class LiftResult:
    product: GroupHandle
    x: Permutation
    y: Permutation
    type: TripleType


def lift_coprime_triple(group: GroupHandle, x: Permutation, y: Permutation) -> LiftResult:
    """From a generating triple with gcd(o(x), o(y)) = 1, the diagonal-free
    pair ((x,y), (y,x^y)) generating G x G with product (xy, xy)."""
    if gcd(x.order(), y.order()) != 1:
        raise NotCoprime(
            f"o(x)={x.order()} and o(y)={y.order()} share a factor"
        )
    check = is_hyperbolic_triple(group, x, y)
    if not check.ok:
        raise NotTriple(f"not a hyperbolic generating triple: {check.reasons}")
    big_x = pair_element(x, y)
    big_y = pair_element(y, x.conj(y))
    product = direct_product(group, group)
    lifted = build_bsgs([big_x, big_y], degree=product.degree)
    if lifted.order() != product.order():
        raise GenerationFailure(
            "lifted pair generates a proper subgroup of the product"
        )
    return LiftResult(
        product=product,
        x=big_x,
        y=big_y,
        type=triple_type(big_x, big_y),
    )


# -- equivalence --------------------------------------------------------------


def inequivalent_by_type(t1: TripleType, t2: TripleType) -> bool:
    """Different order multisets certify inequivalence; equality proves
    nothing."""
    return sorted(t1.as_tuple()) != sorted(t2.as_tuple())


def find_tuple_conjugator(
    ambient: GroupHandle,
    t1: tuple[Permutation, Permutation],
    t2: tuple[Permutation, Permutation],
    budget: int = 1_000_000,
) -> Permutation | None:
    """An ambient element g with x1^g = x2 and y1^g = y2, or None.

    The relation x1 g = g x2 pins down g on the whole <x1,y1>-orbit of any
    point once the image of that point is chosen, so the search branches
    only on one image per orbit.  Every candidate is validated against both
    equations and ambient membership before being returned.
    """
    x1, y1 = t1
    x2, y2 = t2
    n = ambient.degree
    for p in (x1, y1, x2, y2):
        if p.degree != n:
            raise DegreeMismatch("tuple entries must match the ambient degree")

    orbits = _pair_orbits(x1, y1, n)
    attempts = 0

    def assign(images: list[int], used: list[bool], oi: int):
        nonlocal attempts
        if oi == len(orbits):
            g = Permutation(images)
            if x1.conj(g) == x2 and y1.conj(g) == y2 and ambient.contains(g):
                return g
            return None
        rep = orbits[oi][0]
        for j in range(n):
            if used[j]:
                continue
            attempts += 1
            if attempts > budget:
                raise BudgetExceeded("conjugator search budget exhausted", budget)
            new_images = images[:]
            new_used = used[:]
            if _propagate(new_images, new_used, rep, j, x1, y1, x2, y2):
                result = assign(new_images, new_used, oi + 1)
                if result is not None:
                    return result
        return None

    return assign([-1] * n, [False] * n, 0)


def _pair_orbits(x: Permutation, y: Permutation, n: int) -> list[list[int]]:
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        stack = [start]
        while stack:
            a = stack.pop()
            for p in (x, y):
                b = p[a]
                if not seen[b]:
                    seen[b] = True
                    orbit.append(b)
                    stack.append(b)
        orbits.append(orbit)
    return orbits


def _propagate(
    images: list[int],
    used: list[bool],
    start: int,
    target: int,
    x1: Permutation,
    y1: Permutation,
    x2: Permutation,
    y2: Permutation,
) -> bool:
    """Force g[start] = target and close under g[x1[i]] = x2[g[i]] (same
    for y); False on any clash."""
    stack = [(start, target)]
    while stack:
        i, j = stack.pop()
        if images[i] == j:
            continue
        if images[i] != -1 or used[j]:
            return False
        images[i] = j
        used[j] = True
        stack.append((x1[i], x2[j]))
        stack.append((y1[i], y2[j]))
    return True


def cyclic_alignments(
    pair: tuple[Permutation, Permutation],
) -> list[tuple[Permutation, Permutation]]:
    """The three pair forms of the triple (x, y, (xy)^-1) under rotation."""
    x, y = pair
    z = (x * y).inverse()
    return [(x, y), (y, z), (z, x)]


def triples_equivalent(
    ambient: GroupHandle,
    t1: tuple[Permutation, Permutation],
    t2: tuple[Permutation, Permutation],
    budget: int = 1_000_000,
) -> Permutation | None:
    """Conjugator aligning t1 with some cyclic rotation of t2, or None."""
    for aligned in cyclic_alignments(t2):
        g = find_tuple_conjugator(ambient, t1, aligned, budget=budget)
        if g is not None:
            return g
    return None
