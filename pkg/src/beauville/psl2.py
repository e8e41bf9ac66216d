"""PSL2(q) as 2x2 projective matrices and as permutations of the
projective line.

Matrix products compose left to right, like permutations: (m * n) acts by
applying m first.  projective_action is then a homomorphism onto perm-core
permutations, and every matrix identity can be cross-checked on the
permutation side.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bsgs import GroupHandle, build_bsgs
from .errors import GenerationFailure, NotPrimePower, UnsupportedQ
from .gf import Field, make_field
from .perm import Permutation


def factor_prime_power(q: int) -> tuple[int, int]:
    """(p, e) with q = p^e, or NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = q
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


class ProjMatrix:
    """An element of PSL2(q): an SL2 representative, stored in the
    canonical member of its {+m, -m} pair."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, a: int, b: int, c: int, d: int):
        det = field.sub(field.mul(a, d), field.mul(b, c))
        if det != 1:
            raise ValueError("determinant must be 1")
        self.field = field
        self.entries = self._normalize(field, (a, b, c, d))

    @staticmethod
    def _normalize(field: Field, entries: tuple[int, int, int, int]):
        if field.p == 2:
            return entries
        for v in entries:
            if v:
                # scale so the first nonzero entry is the smaller index
                # of the pair {v, -v}
                if field.neg(v) < v:
                    return tuple(field.neg(x) for x in entries)
                return entries
        raise ValueError("zero matrix")

    @classmethod
    def identity(cls, field: Field) -> "ProjMatrix":
        return cls(field, 1, 0, 0, 1)

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        if self.field != other.field:
            raise ValueError("mixed fields")
        f = self.field
        # apply self first: classical product (other . self)
        a1, b1, c1, d1 = self.entries
        a2, b2, c2, d2 = other.entries
        return ProjMatrix(
            f,
            f.add(f.mul(a2, a1), f.mul(b2, c1)),
            f.add(f.mul(a2, b1), f.mul(b2, d1)),
            f.add(f.mul(c2, a1), f.mul(d2, c1)),
            f.add(f.mul(c2, b1), f.mul(d2, d1)),
        )

    def inverse(self) -> "ProjMatrix":
        a, b, c, d = self.entries
        f = self.field
        return ProjMatrix(f, d, f.neg(b), f.neg(c), a)

    def is_identity(self) -> bool:
        return self.entries == self._normalize(self.field, (1, 0, 0, 1))

    def order(self) -> int:
        n = 1
        m = self
        while not m.is_identity():
            m = m * self
            n += 1
            if n > 2 * self.field.q + 2:
                raise RuntimeError("order loop exceeded group exponent bound")
        return n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProjMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        a, b, c, d = self.entries
        return f"[[{a},{b}],[{c},{d}]]"


def projective_action(m: ProjMatrix) -> Permutation:
    """The permutation of PG(1,q) induced by m.

    Points 0..q-1 are [x:1] with x the field element of that index; point q
    is [1:0].  Composition of images matches perm-core's left-to-right
    product, so this map is a homomorphism.
    """
    f = m.field
    q = f.q
    a, b, c, d = m.entries
    images = []
    for i in range(q):
        u = f.add(f.mul(a, i), b)
        v = f.add(f.mul(c, i), d)
        images.append(f.div(u, v) if v else q)
    # image of [1:0]
    images.append(f.div(a, c) if c else q)
    return Permutation(images)


def _standard_matrices(field: Field) -> list[ProjMatrix]:
    t = ProjMatrix(field, 1, 1, 0, 1)
    s = ProjMatrix(field, 0, 1, field.neg(1), 0)
    mats = [t, s]
    if field.e > 1:
        # alpha = the residue class of x, a field generator over GF(p)
        mats.append(ProjMatrix(field, 1, field.p, 0, 1))
    return mats


def psl2_order(q: int) -> int:
    return q * (q + 1) * (q - 1) // gcd(2, q - 1)


def psl2_group(q: int) -> GroupHandle:
    """PSL2(q) acting on the q+1 projective points, order-verified."""
    if q < 4:
        raise UnsupportedQ(f"q={q} is below the supported range (q >= 4)")
    p, e = factor_prime_power(q)
    field = make_field(p, e)
    mats = _standard_matrices(field)
    gens = [projective_action(m) for m in mats]
    names = ("a", "b", "c")[: len(gens)]
    handle = build_bsgs(gens, name=f"PSL2({q})", gen_names=names)
    expected = psl2_order(q)
    if handle.order() != expected:
        raise GenerationFailure(
            f"PSL2({q}) generators produced order {handle.order()}, "
            f"expected {expected}"
        )
    return handle


@dataclass(frozen=True)
class FamilyParams:
    """The two coprime companion parameters of PSL2(q)."""

    q: int
    k2: int
    qplus: int
    qminus: int


def family_params(q: int) -> FamilyParams:
    if q < 4:
        raise UnsupportedQ(f"q={q} is below the supported range (q >= 4)")
    k2 = gcd(2, q + 1)
    return FamilyParams(q=q, k2=k2, qplus=(q + 1) // k2, qminus=(q - 1) // k2)


def element_of_order(
    group: GroupHandle, n: int, seed: int = 0, attempts: int = 4096
) -> Permutation | None:
    """Seeded random search for an element of order exactly n.

    Tries powers of sampled elements too, so any order dividing a sampled
    element's order is reachable.  None means the search failed, not that
    no such element exists.
    """
    for i in range(attempts):
        x = group.random_element(seed * 1_000_003 + i)
        o = x.order()
        if o % n == 0:
            y = x ** (o // n)
            if y.order() == n:
                return y
    return None
