"""The twisted product G = (H x H) : Q_{4k}, its index-2 subgroup
G0 = H x H x <p>, and exhaustive verification of the four mixed-structure
conditions M1-M4.

The group law: q-parity-odd elements swap the two H coordinates of
whatever they multiply on the right, p-powers act trivially, so

    (h1, h2, u) (h1', h2', u') = (h1 * c1, h2 * c2, u u')

with (c1, c2) = (h1', h2') for even u and (h2', h1') for odd u.  The
verifier enumerates the whole group in a packed integer index space; the
hot loops live in kernels.py (compiled lane with pure-Python fallback).
"""

from __future__ import annotations

import time
from array import array
from dataclasses import dataclass, field
from math import gcd

from . import kernels
from .bsgs import GroupHandle, build_bsgs, element_closure
from .dicyclic import DicyclicElem, dicyclic_tables
from .errors import (
    BudgetExceeded,
    InvalidK,
    NotIndexTwo,
    NotInGroup,
    NotMixable,
    ParameterMismatch,
)
from .perm import Permutation
from .triples import MixableStructure, is_mixable, sigma_set

DEFAULT_ENUM_BUDGET = 8_000_000

VARIANTS = ("standard", "a-trivial", "c-trivial")


@dataclass(frozen=True)
class ProdElem:
    """(h1, h2, t) with h1, h2 in H and t in Q_{4k}."""

    h1: Permutation
    h2: Permutation
    t: DicyclicElem

    def _check(self, other: "ProdElem") -> None:
        if self.t.k != other.t.k:
            raise ParameterMismatch("mixed k parameters")
        if self.h1.degree != other.h1.degree:
            raise ParameterMismatch("mixed H degrees")

    def __mul__(self, other: "ProdElem") -> "ProdElem":
        self._check(other)
        if self.t.i:
            c1, c2 = other.h2, other.h1
        else:
            c1, c2 = other.h1, other.h2
        return ProdElem(self.h1 * c1, self.h2 * c2, self.t * other.t)

    def inverse(self) -> "ProdElem":
        a, b = self.h1.inverse(), self.h2.inverse()
        if self.t.i:
            a, b = b, a
        return ProdElem(a, b, self.t.inverse())

    def conj(self, by: "ProdElem") -> "ProdElem":
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return self.h1.is_identity() and self.h2.is_identity() and self.t.is_identity()

    def order(self) -> int:
        n = 1
        x = self
        bound = 4 * self.t.k * self.h1.order() * self.h2.order() * 4
        while not x.is_identity():
            x = x * self
            n += 1
            if n > bound:
                raise RuntimeError("order loop exceeded bound")
        return n

    def __str__(self) -> str:
        return f"({self.h1}, {self.h2}, {self.t})"


def prod_identity(degree: int, k: int) -> ProdElem:
    e = Permutation.identity(degree)
    return ProdElem(e, e, DicyclicElem.identity(k))


def prod_mul(x: ProdElem, y: ProdElem) -> ProdElem:
    return x * y


def to_permutation(x: ProdElem, k: int) -> Permutation:
    """Faithful action on 2n + 4k points: two H-blocks permuted (and
    swapped by odd-parity elements) plus the regular action of Q_{4k}."""
    n = x.h1.degree
    size = 2 * n + 4 * k
    images = [0] * size
    off0 = n if x.t.i else 0
    off1 = 0 if x.t.i else n
    for i in range(n):
        images[i] = off0 + x.h1[i]
        images[n + i] = off1 + x.h2[i]
    base = 2 * n
    for t in range(4 * k):
        v = DicyclicElem.from_index(k, t)
        images[base + t] = base + (v * x.t).index()
    return Permutation(images)


@dataclass(frozen=True)
class MixedQuadruple:
    """The construction output: group parameters plus (a, c, g)."""

    H: GroupHandle
    k: int
    a: ProdElem
    c: ProdElem
    g: ProdElem
    G0_order: int
    G_order: int
    structure: MixableStructure
    variant: str = "standard"


def build_mixed(
    H: GroupHandle,
    structure: MixableStructure,
    k: int,
    variant: str = "standard",
    g_override: ProdElem | None = None,
) -> MixedQuadruple:
    """Assemble the quadruple from a mixable structure on H.

    The default places p in a and p^-1 in c; the two variants instead
    leave a (or c) with trivial third coordinate so the p-power appears in
    their product.  Each variant gates k on the matching pair of
    first-coordinate orders; every case is still verified exhaustively by
    verify_mixed, never taken on faith.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    outcome = is_mixable(H, structure.x1, structure.y1, structure.x2, structure.y2)
    if not outcome.ok:
        raise NotMixable(f"structure fails conditions: {', '.join(outcome.violations)}")
    x1, y1 = structure.x1, structure.y1
    if variant == "standard":
        gate = gcd(x1.order(), y1.order())
        t_a, t_c = DicyclicElem.p(k, 1), DicyclicElem.p(k, -1)
    elif variant == "a-trivial":
        gate = gcd((x1 * y1).order(), y1.order())
        t_a, t_c = DicyclicElem.identity(k), DicyclicElem.p(k, -1)
    else:
        gate = gcd(x1.order(), (x1 * y1).order())
        t_a, t_c = DicyclicElem.p(k, 1), DicyclicElem.identity(k)
    if k <= 1 or gate % k != 0:
        raise InvalidK(f"k={k} must exceed 1 and divide {gate}")
    a = ProdElem(structure.x1, structure.x2, t_a)
    c = ProdElem(structure.y1, structure.y2, t_c)
    g = g_override if g_override is not None else ProdElem(
        Permutation.identity(H.degree),
        Permutation.identity(H.degree),
        DicyclicElem.q(k),
    )
    order_h = H.order()
    return MixedQuadruple(
        H=H,
        k=k,
        a=a,
        c=c,
        g=g,
        G0_order=order_h * order_h * 2 * k,
        G_order=order_h * order_h * 4 * k,
        structure=structure,
        variant=variant,
    )


# -- the packed index space ---------------------------------------------------


class IndexSpace:
    """Bijection between ProdElems and integers, with flat lookup tables
    sized for the kernels: |H|^2 * 4k packed indices."""

    def __init__(self, H: GroupHandle, k: int, budget: int = DEFAULT_ENUM_BUDGET):
        order_h = H.order()
        total = order_h * order_h * 4 * k
        if total > budget:
            raise BudgetExceeded(
                f"index space of {total} elements exceeds budget {budget}", budget
            )
        self.H = H
        self.k = k
        self.elems = element_closure(H.generators, H.degree)
        self.NH = len(self.elems)
        self.T = 4 * k
        self.total = total
        self._key_to_h = {p.key(): i for i, p in enumerate(self.elems)}
        NH = self.NH
        mul_h = [0] * (NH * NH)
        key_to_h = self._key_to_h
        for i, x in enumerate(self.elems):
            row = i * NH
            for j, y in enumerate(self.elems):
                mul_h[row + j] = key_to_h[(x * y).key()]
        # typed arrays: the compiled kernels borrow these without copying
        self.mul_h = array("i", mul_h)
        self.inv_h = array("i", (key_to_h[p.inverse().key()] for p in self.elems))
        dic_mul, dic_inv, dic_swap = dicyclic_tables(k)
        self.dic_mul = array("i", dic_mul)
        self.dic_inv = array("i", dic_inv)
        self.dic_swap = array("i", dic_swap)

    def index(self, x: ProdElem) -> int:
        try:
            h1 = self._key_to_h[x.h1.key()]
            h2 = self._key_to_h[x.h2.key()]
        except KeyError:
            raise NotInGroup("coordinate outside H") from None
        return (h1 * self.NH + h2) * self.T + x.t.index()

    def element(self, idx: int) -> ProdElem:
        t = idx % self.T
        r = idx // self.T
        return ProdElem(
            self.elems[r // self.NH],
            self.elems[r % self.NH],
            DicyclicElem.from_index(self.k, t),
        )

    def mul(self, x: int, y: int) -> int:
        return kernels.mul_index(
            x, y, self.NH, self.T, self.mul_h, self.dic_mul, self.dic_swap
        )

    def inv(self, x: int) -> int:
        return kernels.inv_index(x, self.NH, self.T, self.inv_h, self.dic_inv, self.dic_swap)

    def power_indices(self, x: int) -> list[int]:
        """x, x^2, ..., up to and including the identity."""
        out = [x]
        y = x
        while y != 0:
            y = self.mul(y, x)
            out.append(y)
        return out

    def g0_generator_indices(self) -> list[int]:
        """Canonical generators of H x H x <p>: each H generator in each
        coordinate, plus p.

        Deliberately independent of (a, c): conjugation closures stay
        closures under the intended subgroup even when M1 fails.
        """
        e = Permutation.identity(self.H.degree)
        gens = []
        for h in self.H.generators:
            gens.append(self.index(ProdElem(h, e, DicyclicElem.identity(self.k))))
            gens.append(self.index(ProdElem(e, h, DicyclicElem.identity(self.k))))
        gens.append(self.index(ProdElem(e, e, DicyclicElem.p(self.k, 1))))
        return gens


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class ConditionVerdict:
    name: str
    passed: bool
    detail: str
    witness: str | None = None


@dataclass
class MixedReport:
    """Per-condition outcome of a full verification run."""

    conditions: tuple[ConditionVerdict, ...]
    g_order: int
    g0_order: int
    sigma_size: int
    sigma_conj_size: int
    coset_checked: int
    backend: str
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, name: str) -> ConditionVerdict:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_mixed(qd: MixedQuadruple, budget: int = DEFAULT_ENUM_BUDGET) -> MixedReport:
    """Check M1-M4 by full enumeration of the packed index space.

    M1: <a, c> closes to exactly the index-2 subgroup.
    M2: g lies outside it.
    M3: no element of the outer coset squares into Sigma(a, c).
    M4: Sigma(a, c) and Sigma(a^g, c^g) meet only in the identity.

    Sigma closures conjugate by the canonical subgroup generators, so they
    are correct whether or not M1 holds.
    """
    start = time.perf_counter()
    space = IndexSpace(qd.H, qd.k, budget=budget)
    NH, T = space.NH, space.T
    mul_h, dic_mul, dic_swap = space.mul_h, space.dic_mul, space.dic_swap

    a_idx = space.index(qd.a)
    c_idx = space.index(qd.c)
    g_idx = space.index(qd.g)

    conditions = []

    # M1: closure of <a, c>
    count, _ = kernels.closure_mul(
        NH, T, mul_h, dic_mul, dic_swap, [a_idx, c_idx], qd.G0_order + 1
    )
    m1_ok = count == qd.G0_order
    conditions.append(
        ConditionVerdict(
            name="M1",
            passed=m1_ok,
            detail=f"closure of the two generators reached {count} of {qd.G0_order}",
        )
    )

    # M2: g outside the even-parity subgroup
    g_parity = dic_swap[g_idx % T]
    conditions.append(
        ConditionVerdict(
            name="M2",
            passed=g_parity == 1,
            detail="g has odd q-parity"
            if g_parity == 1
            else "g lies inside the index-2 subgroup",
            witness=None if g_parity == 1 else str(qd.g),
        )
    )

    # Sigma(a, c) under conjugation by the canonical subgroup generators
    conj_pairs = [(s, space.inv(s)) for s in space.g0_generator_indices()]
    seeds = (
        space.power_indices(a_idx)
        + space.power_indices(c_idx)
        + space.power_indices(space.mul(a_idx, c_idx))
    )
    sigma_count, sigma_mask = kernels.conj_closure(
        NH, T, mul_h, dic_mul, dic_swap, seeds, conj_pairs, budget
    )
    if sigma_count > budget:
        raise BudgetExceeded("sigma closure exceeded budget", budget)

    # M3: sweep the coset g * G0 (all elements of g's parity)
    fail_idx, checked = kernels.square_coset_sweep(
        NH, T, mul_h, dic_mul, dic_swap, g_parity, sigma_mask
    )
    if fail_idx < 0:
        conditions.append(
            ConditionVerdict(
                name="M3",
                passed=True,
                detail=f"all {checked} coset squares avoid the {sigma_count}-element sigma set",
            )
        )
    else:
        u = space.element(fail_idx)
        gamma = qd.g.inverse() * u
        conditions.append(
            ConditionVerdict(
                name="M3",
                passed=False,
                detail=f"coset element squares into sigma (checked {checked})",
                witness=f"gamma={gamma}, (g*gamma)^2={u * u}",
            )
        )

    # M4: intersect with the conjugated sigma set
    ag_idx = space.mul(space.mul(space.inv(g_idx), a_idx), g_idx)
    cg_idx = space.mul(space.mul(space.inv(g_idx), c_idx), g_idx)
    seeds_g = (
        space.power_indices(ag_idx)
        + space.power_indices(cg_idx)
        + space.power_indices(space.mul(ag_idx, cg_idx))
    )
    sigma_g_count, sigma_g_mask = kernels.conj_closure(
        NH, T, mul_h, dic_mul, dic_swap, seeds_g, conj_pairs, budget
    )
    if sigma_g_count > budget:
        raise BudgetExceeded("conjugated sigma closure exceeded budget", budget)
    common = kernels.mask_intersection(sigma_mask, sigma_g_mask)
    nontrivial = [i for i in common if i != 0]
    conditions.append(
        ConditionVerdict(
            name="M4",
            passed=not nontrivial,
            detail=(
                f"sigma sets of sizes {sigma_count} and {sigma_g_count} "
                f"intersect in {len(common)} element(s)"
            ),
            witness=str(space.element(nontrivial[0])) if nontrivial else None,
        )
    )

    return MixedReport(
        conditions=tuple(conditions),
        g_order=qd.G_order,
        g0_order=qd.G0_order,
        sigma_size=sigma_count,
        sigma_conj_size=sigma_g_count,
        coset_checked=checked,
        backend=kernels.BACKEND,
        elapsed=time.perf_counter() - start,
    )


def generic_verify_mixed(
    G: GroupHandle,
    g0_gens: list[Permutation],
    a: Permutation,
    c: Permutation,
    g: Permutation,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> MixedReport:
    """The same four checks for an arbitrary permutation group, driven by
    stabilizer chains instead of the packed index space.

    Cross-validates the specialized verifier on instances small enough to
    run both; also handles ingested groups that are not twisted products.
    """
    start = time.perf_counter()
    if G.order() > budget:
        raise BudgetExceeded(f"group order {G.order()} exceeds budget", budget)
    for p in (a, c, g, *g0_gens):
        if not G.contains(p):
            raise NotInGroup(f"{p} is not in the ambient group")
    g0 = build_bsgs(g0_gens, degree=G.degree, name="G0")
    if G.order() != 2 * g0.order():
        raise NotIndexTwo(f"subgroup order {g0.order()} is not half of {G.order()}")

    conditions = []

    # M1
    in_g0 = g0.contains(a) and g0.contains(c)
    closure_order = build_bsgs([a, c], degree=G.degree).order() if in_g0 else 0
    m1_ok = in_g0 and closure_order == g0.order()
    detail = (
        f"<a,c> has order {closure_order} of {g0.order()}"
        if in_g0
        else "a or c lies outside the subgroup"
    )
    conditions.append(ConditionVerdict(name="M1", passed=m1_ok, detail=detail))

    # M2
    m2_ok = not g0.contains(g)
    conditions.append(
        ConditionVerdict(
            name="M2",
            passed=m2_ok,
            detail="g avoids the subgroup" if m2_ok else "g lies inside the subgroup",
            witness=None if m2_ok else str(g),
        )
    )

    # Sigma sets, conjugation within the subgroup
    sigma = sigma_set(g0, a, c, budget=budget)

    # M3
    m3_witness = None
    checked = 0
    for gamma in g0.elements():
        u = g * gamma
        checked += 1
        if sigma.contains(u * u):
            m3_witness = f"gamma={gamma}, (g*gamma)^2={u * u}"
            break
    conditions.append(
        ConditionVerdict(
            name="M3",
            passed=m3_witness is None,
            detail=f"checked {checked} coset squares against {len(sigma)} sigma elements",
            witness=m3_witness,
        )
    )

    # M4
    sigma_g = sigma_set(g0, a.conj(g), c.conj(g), budget=budget)
    common = sigma.members & sigma_g.members
    identity_key = Permutation.identity(G.degree).key()
    nontrivial = sorted(k for k in common if k != identity_key)
    witness = None
    if nontrivial:
        for p in sigma:
            if p.key() == nontrivial[0]:
                witness = str(p)
                break
    conditions.append(
        ConditionVerdict(
            name="M4",
            passed=not nontrivial,
            detail=(
                f"sigma sets of sizes {len(sigma)} and {len(sigma_g)} "
                f"intersect in {len(common)} element(s)"
            ),
            witness=witness,
        )
    )

    return MixedReport(
        conditions=tuple(conditions),
        g_order=G.order(),
        g0_order=g0.order(),
        sigma_size=len(sigma),
        sigma_conj_size=len(sigma_g),
        coset_checked=checked,
        backend="generic",
        elapsed=time.perf_counter() - start,
    )


def quadruple_group(qd: MixedQuadruple) -> GroupHandle:
    """The whole product group as explicit permutations on 2n + 4k points
    (for cross-validation against the generic verifier)."""
    n = qd.H.degree
    e = Permutation.identity(n)
    gens = []
    names = []
    for idx, h in enumerate(qd.H.generators):
        gens.append(to_permutation(ProdElem(h, e, DicyclicElem.identity(qd.k)), qd.k))
        names.append(f"l{idx}")
    for idx, h in enumerate(qd.H.generators):
        gens.append(to_permutation(ProdElem(e, h, DicyclicElem.identity(qd.k)), qd.k))
        names.append(f"r{idx}")
    gens.append(to_permutation(ProdElem(e, e, DicyclicElem.p(qd.k, 1)), qd.k))
    names.append("p")
    gens.append(to_permutation(ProdElem(e, e, DicyclicElem.q(qd.k)), qd.k))
    names.append("q")
    return GroupHandle(
        gens, degree=2 * n + 4 * qd.k, name=f"({qd.H.name or 'H'}^2):Q{4 * qd.k}",
        gen_names=names,
    )


def g0_permutation_generators(qd: MixedQuadruple) -> list[Permutation]:
    """Images of the canonical index-2 subgroup generators under the
    faithful action."""
    n = qd.H.degree
    e = Permutation.identity(n)
    out = []
    for h in qd.H.generators:
        out.append(to_permutation(ProdElem(h, e, DicyclicElem.identity(qd.k)), qd.k))
        out.append(to_permutation(ProdElem(e, h, DicyclicElem.identity(qd.k)), qd.k))
    out.append(to_permutation(ProdElem(e, e, DicyclicElem.p(qd.k, 1)), qd.k))
    return out
