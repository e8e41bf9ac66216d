"""Constructors for the named permutation groups used across the library.

Each returns a :class:`~beauville.bsgs.GroupHandle` with named generators so
word evaluation works against it ("a", "b" unless stated otherwise).  All
actions are the natural ones; orders are proved by the BSGS on construction.
"""

from __future__ import annotations

from .bsgs import GroupHandle, build_bsgs
from .dicyclic import DicyclicElem
from .errors import GenerationFailure, OutOfRange
from .perm import Permutation


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def symmetric_group(n: int) -> GroupHandle:
    """S_n on {1..n} with a = (1,2), b = (1,2,...,n)."""
    if n < 2:
        raise OutOfRange("symmetric_group needs n >= 2")
    a = Permutation.from_cycles([[0, 1]], n)
    b = Permutation.from_cycles([list(range(n))], n)
    handle = build_bsgs([a, b], degree=n, name=f"S{n}", gen_names=("a", "b"))
    if handle.order() != _factorial(n):
        raise GenerationFailure(f"S{n} generators give order {handle.order()}")
    return handle


def alternating_group(n: int) -> GroupHandle:
    """A_n on {1..n} with a = (1,2,3) and b an (n or n-1)-cycle."""
    if n < 3:
        raise OutOfRange("alternating_group needs n >= 3")
    a = Permutation.from_cycles([[0, 1, 2]], n)
    if n % 2:
        b = Permutation.from_cycles([list(range(n))], n)
    else:
        b = Permutation.from_cycles([list(range(1, n))], n)
    gens = [a] if n == 3 else [a, b]
    handle = build_bsgs(gens, degree=n, name=f"A{n}", gen_names=("a", "b")[: len(gens)])
    if handle.order() != _factorial(n) // 2:
        raise GenerationFailure(f"A{n} generators give order {handle.order()}")
    return handle


def cyclic_group(n: int) -> GroupHandle:
    """C_n as the n-cycle on {1..n}."""
    if n < 1:
        raise OutOfRange("cyclic_group needs n >= 1")
    a = Permutation.from_cycles([list(range(n))], max(n, 1))
    return build_bsgs([a], degree=max(n, 1), name=f"C{n}", gen_names=("a",))


def dihedral_group(m: int) -> GroupHandle:
    """The dihedral group of order 2m acting on an m-gon: a = rotation,
    b = reflection fixing vertex 1."""
    if m < 3:
        raise OutOfRange("dihedral_group needs m >= 3")
    rot = Permutation.from_cycles([list(range(m))], m)
    images = [(-i) % m for i in range(m)]
    ref = Permutation(images)
    handle = build_bsgs([rot, ref], degree=m, name=f"D{2 * m}", gen_names=("a", "b"))
    if handle.order() != 2 * m:
        raise GenerationFailure(f"D{2 * m} generators give order {handle.order()}")
    return handle


def dicyclic_permutation_group(k: int) -> GroupHandle:
    """Q_{4k} in its right regular representation on 4k points.

    Point i is the element with index i; the generator images are right
    multiplication by p and q, so words evaluate in the familiar order.
    """
    size = 4 * k
    ident = DicyclicElem.identity(k)
    # regular action needs every element enumerated in index order
    by_index = {0: ident}
    p = DicyclicElem.p(k)
    q = DicyclicElem.q(k)
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in (p, q):
                y = x * g
                i = y.index()
                if i not in by_index:
                    by_index[i] = y
                    nxt.append(y)
        frontier = nxt
    perm_p = Permutation([(by_index[i] * p).index() for i in range(size)])
    perm_q = Permutation([(by_index[i] * q).index() for i in range(size)])
    handle = build_bsgs(
        [perm_p, perm_q], degree=size, name=f"Q{size}", gen_names=("p", "q")
    )
    if handle.order() != size:
        raise GenerationFailure(f"Q{size} regular action has order {handle.order()}")
    return handle
