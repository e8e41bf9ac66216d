"""Times the enumeration kernels on the A6, k=2 workload (1,036,800
packed elements) for every available lane.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

from beauville import _kernels_py
from beauville.bsgs import build_bsgs
from beauville.perm import parse_cycles
from beauville.product import IndexSpace, build_mixed
from beauville.triples import is_mixable

try:
    from beauville import _kernels_c
except ImportError:
    _kernels_c = None


def build_workload():
    a6 = build_bsgs(
        [parse_cycles("(1,2,3)", 6), parse_cycles("(2,3,4,5,6)", 6)],
        degree=6,
        name="A6",
    )
    x1 = parse_cycles("(1,2)(3,4,5,6)", 6)
    y1 = parse_cycles("(1,5,6,4)(2,3)", 6)
    x2 = parse_cycles("(1,2,3,4,5)", 6)
    y2 = x2.conj(parse_cycles("(1,3,6)", 6))
    st = is_mixable(a6, x1, y1, x2, y2).structure
    qd = build_mixed(a6, st, k=2)
    space = IndexSpace(a6, 2)
    a_idx = space.index(qd.a)
    c_idx = space.index(qd.c)
    return qd, space, a_idx, c_idx


def run_lane(lane, qd, space, a_idx, c_idx):
    NH, T = space.NH, space.T
    tables = (space.mul_h, space.dic_mul, space.dic_swap)
    results = {}

    t0 = time.perf_counter()
    count, _ = lane.closure_mul(NH, T, *tables, [a_idx, c_idx], qd.G0_order + 1)
    results["closure_mul"] = time.perf_counter() - t0
    assert count == qd.G0_order

    pairs = [(s, space.inv(s)) for s in space.g0_generator_indices()]
    seeds = (
        space.power_indices(a_idx)
        + space.power_indices(c_idx)
        + space.power_indices(space.mul(a_idx, c_idx))
    )
    t0 = time.perf_counter()
    n_sigma, mask = lane.conj_closure(NH, T, *tables, seeds, pairs, space.total)
    results["conj_closure"] = time.perf_counter() - t0
    assert n_sigma == 52_345

    t0 = time.perf_counter()
    hit, checked = lane.square_coset_sweep(NH, T, *tables, 1, mask)
    results["square_coset_sweep"] = time.perf_counter() - t0
    assert hit == -1 and checked == qd.G0_order
    return results


def main():
    print("building A6 k=2 workload (|G| = 1,036,800) ...")
    t0 = time.perf_counter()
    workload = build_workload()
    print(f"  setup: {time.perf_counter() - t0:.2f}s")

    lanes = [("python", _kernels_py)]
    if _kernels_c is not None:
        lanes.append(("c", _kernels_c))
    else:
        print("  compiled lane not available; timing pure lane only")

    timings = {}
    for name, lane in lanes:
        timings[name] = run_lane(lane, *workload)

    kernels = ["closure_mul", "conj_closure", "square_coset_sweep"]
    width = max(len(k) for k in kernels)
    header = f"{'kernel':<{width}}" + "".join(f"  {n:>10}" for n, _ in lanes)
    if len(lanes) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for k in kernels:
        row = f"{k:<{width}}"
        for n, _ in lanes:
            row += f"  {timings[n][k] * 1000:>8.1f}ms"
        if len(lanes) == 2:
            row += f"  {timings['python'][k] / timings['c'][k]:>7.1f}x"
        print(row)
    total = {n: sum(t.values()) for n, t in timings.items()}
    row = f"{'total':<{width}}"
    for n, _ in lanes:
        row += f"  {total[n] * 1000:>8.1f}ms"
    if len(lanes) == 2:
        row += f"  {total['python'] / total['c']:>7.1f}x"
    print(row)


if __name__ == "__main__":
    main()
