"""Pure-Python enumeration kernels for the twisted product (H x H) : Q_{4k}.

Elements are packed as idx = (h1 * NH + h2) * T + t with NH = |H| and
T = 4k.  All kernels take the same flat tables: mul_h (NH x NH index
products in H), dic_mul (T x T), dic_swap (q-parity bit per t).  The
compiled extension mirrors these signatures exactly; see kernels.py.
"""

from __future__ import annotations

BACKEND = "python"


def mul_index(x: int, y: int, NH: int, T: int, mul_h, dic_mul, dic_swap) -> int:
    """Product of two packed elements."""
    tx = x % T
    rx = x // T
    x2 = rx % NH
    x1 = rx // NH
    ty = y % T
    ry = y // T
    y2 = ry % NH
    y1 = ry // NH
    if dic_swap[tx]:
        y1, y2 = y2, y1
    return (mul_h[x1 * NH + y1] * NH + mul_h[x2 * NH + y2]) * T + dic_mul[
        tx * T + ty
    ]


def inv_index(x: int, NH: int, T: int, inv_h, dic_inv, dic_swap) -> int:
    """Inverse of a packed element."""
    t = x % T
    r = x // T
    h2 = r % NH
    h1 = r // NH
    a, b = inv_h[h1], inv_h[h2]
    if dic_swap[t]:
        a, b = b, a
    return (a * NH + b) * T + dic_inv[t]


def closure_mul(
    NH: int,
    T: int,
    mul_h,
    dic_mul,
    dic_swap,
    gen_idxs,
    limit: int,
) -> tuple[int, bytearray]:
    """Breadth-first right-multiplication closure from the identity.

    Returns (count, visited mask over the full index space).  Stops once
    the count would pass ``limit`` (caller treats that as failure-by-
    overflow, so the mask is still meaningful).
    """
    n_total = NH * NH * T
    visited = bytearray(n_total)
    visited[0] = 1
    frontier = [0]
    count = 1
    gens = []
    for g in gen_idxs:
        tg = g % T
        rg = g // T
        gens.append((rg // NH, rg % NH, tg))
    while frontier:
        nxt = []
        for x in frontier:
            tx = x % T
            rx = x // T
            x2 = rx % NH
            x1 = rx // NH
            swap = dic_swap[tx]
            row = tx * T
            for g1, g2, tg in gens:
                if swap:
                    y = (mul_h[x1 * NH + g2] * NH + mul_h[x2 * NH + g1]) * T + dic_mul[
                        row + tg
                    ]
                else:
                    y = (mul_h[x1 * NH + g1] * NH + mul_h[x2 * NH + g2]) * T + dic_mul[
                        row + tg
                    ]
                if not visited[y]:
                    visited[y] = 1
                    count += 1
                    if count > limit:
                        return count, visited
                    nxt.append(y)
        frontier = nxt
    return count, visited


def conj_closure(
    NH: int,
    T: int,
    mul_h,
    dic_mul,
    dic_swap,
    seed_idxs,
    conj_pairs,
    limit: int,
) -> tuple[int, bytearray]:
    """Mask of the union of conjugacy classes of the seeds.

    conj_pairs lists (s, s_inverse) packed indices; closure applies
    x -> s^-1 x s for every pair.  Conjugating by a generating set of the
    reference subgroup yields exactly the classes under that subgroup.
    """
    n_total = NH * NH * T
    mask = bytearray(n_total)
    frontier = []
    count = 0
    for s in seed_idxs:
        if not mask[s]:
            mask[s] = 1
            count += 1
            frontier.append(s)
    pairs = list(conj_pairs)
    while frontier:
        nxt = []
        for x in frontier:
            for s, s_inv in pairs:
                # y = s_inv * x * s, inlined twice
                ta = s_inv % T
                ra = s_inv // T
                a2 = ra % NH
                a1 = ra // NH
                tx = x % T
                rx = x // T
                x2 = rx % NH
                x1 = rx // NH
                if dic_swap[ta]:
                    x1, x2 = x2, x1
                m1 = mul_h[a1 * NH + x1]
                m2 = mul_h[a2 * NH + x2]
                tm = dic_mul[ta * T + tx]
                ts = s % T
                rs = s // T
                s2 = rs % NH
                s1 = rs // NH
                if dic_swap[tm]:
                    s1, s2 = s2, s1
                y = (mul_h[m1 * NH + s1] * NH + mul_h[m2 * NH + s2]) * T + dic_mul[
                    tm * T + ts
                ]
                if not mask[y]:
                    mask[y] = 1
                    count += 1
                    if count > limit:
                        return count, mask
                    nxt.append(y)
        frontier = nxt
    return count, mask


def square_coset_sweep(
    NH: int,
    T: int,
    mul_h,
    dic_mul,
    dic_swap,
    parity: int,
    sigma_mask,
) -> tuple[int, int]:
    """Square every element whose q-parity matches ``parity`` and test the
    square against sigma_mask.

    Returns (first offending element index or -1, number checked).
    """
    checked = 0
    ts = [t for t in range(T) if dic_swap[t] == parity]
    for h1 in range(NH):
        base1 = h1 * NH
        for h2 in range(NH):
            base2 = (base1 + h2) * T
            for t in ts:
                x = base2 + t
                if dic_swap[t]:
                    sq = (
                        mul_h[h1 * NH + h2] * NH + mul_h[h2 * NH + h1]
                    ) * T + dic_mul[t * T + t]
                else:
                    sq = (
                        mul_h[h1 * NH + h1] * NH + mul_h[h2 * NH + h2]
                    ) * T + dic_mul[t * T + t]
                checked += 1
                if sigma_mask[sq]:
                    return x, checked
    return -1, checked


def mask_intersection(mask_a, mask_b) -> list[int]:
    """Indices set in both masks."""
    return [i for i, a in enumerate(mask_a) if a and mask_b[i]]
