"""Rebuild the bundled sporadic group data files.

Constructs the five Mathieu groups from the classical generator sets
(the stabilizer chain M24 > M23 > M22 comes from Schreier generators),
proves every order with the BSGS, then finds the first seeded generator
pair (a, b) whose catalog words realize the published types and whose
structure verifies as mixable.  That pair is what lands in the data
file, so the catalog never depends on this script at run time.

    python3 scripts/build_sporadic_fixtures.py [outdir]
"""

from __future__ import annotations

import sys
import time
import os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from beauville.bsgs import GroupHandle, build_bsgs
from beauville.catalog import SPORADIC
from beauville.groupfile import save_group_file
from beauville.perm import Permutation, parse_cycles
from beauville.triples import is_mixable, triple_type
from beauville.words import evaluate

ORDERS = {
    "m11": 7_920,
    "m12": 95_040,
    "m22": 443_520,
    "m23": 10_200_960,
    "m24": 244_823_040,
}

SEARCH_SEEDS = 200_000


def point_stabilizer_gens(group: GroupHandle, point: int) -> list[Permutation]:
    """Schreier generators of the stabilizer of a point (0-based)."""
    transversal = {point: Permutation.identity(group.degree)}
    frontier = [point]
    while frontier:
        p = frontier.pop()
        t = transversal[p]
        for g in group.generators:
            q = g[p]
            if q not in transversal:
                transversal[q] = t * g
                frontier.append(q)
    out, seen = [], set()
    for p, t in transversal.items():
        for g in group.generators:
            u = t * g
            s = u * transversal[u[point]].inverse()
            if not s.is_identity() and s.key() not in seen:
                seen.add(s.key())
                out.append(s)
    return out


def restrict(p: Permutation, n: int) -> Permutation:
    assert all(p[i] == i for i in range(n, p.degree)), "point not fixed"
    return Permutation(tuple(p)[:n])


def extend(p: Permutation, n: int) -> Permutation:
    return Permutation(tuple(p) + tuple(range(p.degree, n)))


def build_mathieu_chain() -> dict[str, GroupHandle]:
    a11 = parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11)
    b11 = parse_cycles("(3,7,11,8)(4,10,5,6)", 11)
    m11 = build_bsgs([a11, b11], degree=11, name="M11")

    inv12 = parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)
    m12 = build_bsgs(
        [extend(a11, 12), extend(b11, 12), inv12], degree=12, name="M12"
    )

    al = parse_cycles(
        "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)", 24
    )
    be = parse_cycles(
        "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)", 24
    )
    ga = parse_cycles(
        "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)"
        "(11,17)(13,22)(15,19)",
        24,
    )
    m24 = build_bsgs([al, be, ga], degree=24, name="M24")

    g23 = [restrict(p, 23) for p in point_stabilizer_gens(m24, 23)]
    m23 = build_bsgs(g23, degree=23, name="M23")
    g22 = [restrict(p, 22) for p in point_stabilizer_gens(m23, 22)]
    m22 = build_bsgs(g22, degree=22, name="M22")

    chain = {"m11": m11, "m12": m12, "m22": m22, "m23": m23, "m24": m24}
    for name, handle in chain.items():
        if handle.order() != ORDERS[name]:
            raise SystemExit(
                f"{name}: got order {handle.order()}, want {ORDERS[name]}"
            )
    return chain


def element_of(group: GroupHandle, order: int, seed: int) -> Permutation | None:
    r = group.random_element(seed)
    o = r.order()
    return r ** (o // order) if o % order == 0 else None


def find_pair(name: str, group: GroupHandle) -> tuple[Permutation, Permutation]:
    entry = SPORADIC[name]
    oa, ob, oab = entry.signature
    want1, want2 = entry.type6
    for seed in range(SEARCH_SEEDS):
        a = element_of(group, oa, 2 * seed)
        b = element_of(group, ob, 2 * seed + 1)
        if a is None or b is None or (a * b).order() != oab:
            continue
        # Word types first: they reject almost every non-standard pair
        # and cost a few permutation products, while the generation
        # check below is a full BSGS build.
        env = {"a": a, "b": b}
        x1, y1, x2, y2 = (evaluate(w, env) for w in entry.words)
        if triple_type(x1, y1).as_tuple() != want1:
            continue
        if triple_type(x2, y2).as_tuple() != want2:
            continue
        if build_bsgs([a, b], degree=group.degree).order() != group.order():
            continue
        if not is_mixable(group, x1, y1, x2, y2).ok:
            continue
        print(f"  {name}: pair found at seed {seed}")
        return a, b
    raise SystemExit(f"{name}: no pair within {SEARCH_SEEDS} seeds")


def main() -> None:
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "src", "beauville", "data"
    )
    os.makedirs(outdir, exist_ok=True)
    chain = build_mathieu_chain()
    for name, handle in chain.items():
        print(f"{name}: order {handle.order()} verified")
        path = os.path.join(outdir, SPORADIC[name].file)
        if os.path.exists(path):
            print(f"  {path} already present, skipping")
            continue
        t0 = time.time()
        a, b = find_pair(name, handle)
        named = GroupHandle(
            [a, b], degree=handle.degree, name=name, gen_names=("a", "b")
        )
        save_group_file(
            path,
            named,
            comment=(
                f"{name}: order {handle.order()}, degree {handle.degree}; "
                "generator pair chosen so the catalog words realize the "
                "published types"
            ),
        )
        print(f"  wrote {path} ({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main()
