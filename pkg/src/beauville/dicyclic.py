"""The dicyclic group Q_{4k} = <p, q | p^{2k} = q^4 = 1, p^q = p^-1,
p^k = q^2> in normal form q^i p^j with i in {0,1} and j mod 2k.

Derived multiplication rules (left to right, matching the rest of the
package):

    (q^i p^j) (p^j')      = q^i p^{j+j'}
    (q^i p^j) (q p^j')    = q^{i+1} p^{j'-j}   then fold q^2 = p^k

so in particular (q p^j)(q p^j') = p^{k - j + j'} and q has order 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ParameterMismatch


@dataclass(frozen=True)
class DicyclicElem:
    """q^i p^j inside Q_{4k}."""

    k: int
    i: int
    j: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if not (0 <= self.i <= 1 and 0 <= self.j < 2 * self.k):
            raise ValueError("not in normal form")

    @classmethod
    def identity(cls, k: int) -> "DicyclicElem":
        return cls(k, 0, 0)

    @classmethod
    def p(cls, k: int, exponent: int = 1) -> "DicyclicElem":
        return cls(k, 0, exponent % (2 * k))

    @classmethod
    def q(cls, k: int) -> "DicyclicElem":
        return cls(k, 1, 0)

    def __mul__(self, other: "DicyclicElem") -> "DicyclicElem":
        return dicyclic_mul(self, other)

    def inverse(self) -> "DicyclicElem":
        two_k = 2 * self.k
        if self.i == 0:
            return DicyclicElem(self.k, 0, -self.j % two_k)
        # (q p^j)(q p^{j-k}) = p^{k - j + j - k} = identity
        return DicyclicElem(self.k, 1, (self.j - self.k) % two_k)

    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0

    def order(self) -> int:
        if self.i == 1:
            return 4  # square is p^k, of order 2
        if self.j == 0:
            return 1
        return 2 * self.k // gcd(2 * self.k, self.j)

    def index(self) -> int:
        """Position in the canonical enumeration: i * 2k + j."""
        return self.i * 2 * self.k + self.j

    @classmethod
    def from_index(cls, k: int, idx: int) -> "DicyclicElem":
        return cls(k, idx // (2 * k), idx % (2 * k))

    def __str__(self) -> str:
        if self.is_identity():
            return "1"
        parts = []
        if self.i:
            parts.append("q")
        if self.j == 1:
            parts.append("p")
        elif self.j:
            parts.append(f"p^{self.j}")
        return "".join(parts)


def dicyclic_mul(u: DicyclicElem, v: DicyclicElem) -> DicyclicElem:
    if u.k != v.k:
        raise ParameterMismatch(f"mixed parameters k={u.k} and k={v.k}")
    k = u.k
    two_k = 2 * k
    if v.i == 0:
        return DicyclicElem(k, u.i, (u.j + v.j) % two_k)
    # moving q across p^j inverts the p-part
    j = (v.j - u.j) % two_k
    if u.i == 0:
        return DicyclicElem(k, 1, j)
    return DicyclicElem(k, 0, (j + k) % two_k)


def dicyclic_tables(k: int) -> tuple[list[int], list[int], list[int]]:
    """(mul, inv, swap) flat lookup tables over the 4k element indices.

    mul[t1 * 4k + t2] is the index of the product, inv[t] the inverse, and
    swap[t] the q-parity bit that decides coordinate swapping in the
    twisted product.
    """
    size = 4 * k
    elems = [DicyclicElem.from_index(k, t) for t in range(size)]
    mul = [0] * (size * size)
    for t1, u in enumerate(elems):
        row = t1 * size
        for t2, v in enumerate(elems):
            mul[row + t2] = (u * v).index()
    inv = [u.inverse().index() for u in elems]
    swap = [u.i for u in elems]
    return mul, inv, swap
