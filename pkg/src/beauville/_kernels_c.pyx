# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirror of _kernels_py: identical signatures, identical results.

Tables arrive as Python lists of small ints; they are copied into typed
arrays once per call (microseconds) so the loops run over raw C buffers.
"""

from cpython cimport array
import array

BACKEND = "c"


cdef array.array _ints(object seq):
    if type(seq) is array.array and (<array.array> seq).typecode == 'i':
        return <array.array> seq
    return array.array('i', seq)


def mul_index(x, y, NH, T, mul_h, dic_mul, dic_swap):
    """Product of two packed elements."""
    cdef array.array mh = _ints(mul_h), dm = _ints(dic_mul), ds = _ints(dic_swap)
    cdef int[::1] mhv = mh, dmv = dm, dsv = ds
    cdef long cx = x, cy = y, cNH = NH, cT = T
    cdef long tx = cx % cT, rx = cx // cT
    cdef long x2 = rx % cNH, x1 = rx // cNH
    cdef long ty = cy % cT, ry = cy // cT
    cdef long y2 = ry % cNH, y1 = ry // cNH, tmp
    if dsv[tx]:
        tmp = y1; y1 = y2; y2 = tmp
    return (mhv[x1 * cNH + y1] * cNH + mhv[x2 * cNH + y2]) * cT + dmv[tx * cT + ty]


def inv_index(x, NH, T, inv_h, dic_inv, dic_swap):
    """Inverse of a packed element."""
    cdef array.array ih = _ints(inv_h), di = _ints(dic_inv), ds = _ints(dic_swap)
    cdef int[::1] ihv = ih, div_ = di, dsv = ds
    cdef long cx = x, cNH = NH, cT = T
    cdef long t = cx % cT, r = cx // cT
    cdef long h2 = r % cNH, h1 = r // cNH
    cdef long a = ihv[h1], b = ihv[h2], tmp
    if dsv[t]:
        tmp = a; a = b; b = tmp
    return (a * cNH + b) * cT + div_[t]


def closure_mul(NH, T, mul_h, dic_mul, dic_swap, gen_idxs, limit):
    """Breadth-first right-multiplication closure from the identity.

    Returns (count, visited mask over the full index space).  Stops once
    the count would pass ``limit``.
    """
    cdef array.array mh = _ints(mul_h), dm = _ints(dic_mul), ds = _ints(dic_swap)
    cdef int[::1] mhv = mh, dmv = dm, dsv = ds
    cdef long cNH = NH, cT = T, climit = limit
    cdef long n_total = cNH * cNH * cT
    mask_obj = bytearray(n_total)
    cdef unsigned char[::1] mask = mask_obj

    gens = _ints(gen_idxs)
    cdef int[::1] gv = gens
    cdef Py_ssize_t n_gens = gv.shape[0]
    # pre-decompose the generators
    cdef array.array g1a = array.array('i', bytes(4 * n_gens))
    cdef array.array g2a = array.array('i', bytes(4 * n_gens))
    cdef array.array gta = array.array('i', bytes(4 * n_gens))
    cdef int[::1] g1 = g1a, g2 = g2a, gt = gta
    cdef Py_ssize_t gi
    cdef long g, rg
    for gi in range(n_gens):
        g = gv[gi]
        gt[gi] = <int> (g % cT)
        rg = g // cT
        g2[gi] = <int> (rg % cNH)
        g1[gi] = <int> (rg // cNH)

    cdef array.array queue_a = array.array('i', bytes(4 * n_total))
    cdef int[::1] queue = queue_a
    cdef long head = 0, tail = 0, count = 1
    mask[0] = 1
    queue[tail] = 0
    tail += 1

    cdef long x, tx, rx, x1, x2, y, y1, y2
    while head < tail:
        x = queue[head]
        head += 1
        tx = x % cT
        rx = x // cT
        x2 = rx % cNH
        x1 = rx // cNH
        for gi in range(n_gens):
            if dsv[tx]:
                y1 = g2[gi]
                y2 = g1[gi]
            else:
                y1 = g1[gi]
                y2 = g2[gi]
            y = (mhv[x1 * cNH + y1] * cNH + mhv[x2 * cNH + y2]) * cT + dmv[tx * cT + gt[gi]]
            if not mask[y]:
                mask[y] = 1
                count += 1
                if count > climit:
                    return count, mask_obj
                queue[tail] = y
                tail += 1
    return count, mask_obj


def conj_closure(NH, T, mul_h, dic_mul, dic_swap, seed_idxs, conj_pairs, limit):
    """Mask of the union of conjugacy classes of the seeds.

    conj_pairs lists (s, s_inverse) packed indices; closure applies
    x -> s^-1 x s for every pair.
    """
    cdef array.array mh = _ints(mul_h), dm = _ints(dic_mul), ds = _ints(dic_swap)
    cdef int[::1] mhv = mh, dmv = dm, dsv = ds
    cdef long cNH = NH, cT = T, climit = limit
    cdef long n_total = cNH * cNH * cT
    mask_obj = bytearray(n_total)
    cdef unsigned char[::1] mask = mask_obj

    pair_list = list(conj_pairs)
    cdef Py_ssize_t n_pairs = len(pair_list)
    cdef array.array sa = array.array('i', bytes(4 * n_pairs))
    cdef array.array sia = array.array('i', bytes(4 * n_pairs))
    cdef int[::1] sv = sa, siv = sia
    cdef Py_ssize_t pi
    for pi in range(n_pairs):
        sv[pi] = pair_list[pi][0]
        siv[pi] = pair_list[pi][1]

    cdef array.array queue_a = array.array('i', bytes(4 * n_total))
    cdef int[::1] queue = queue_a
    cdef long head = 0, tail = 0, count = 0

    cdef long s0
    for s0 in _ints(seed_idxs):
        if not mask[s0]:
            mask[s0] = 1
            count += 1
            queue[tail] = s0
            tail += 1

    cdef long x, s, s_inv, ta, ra, a1, a2, tx, rx, x1, x2, tmp
    cdef long m1, m2, tm, ts, rs, s1, s2, y
    while head < tail:
        x = queue[head]
        head += 1
        for pi in range(n_pairs):
            s = sv[pi]
            s_inv = siv[pi]
            ta = s_inv % cT
            ra = s_inv // cT
            a2 = ra % cNH
            a1 = ra // cNH
            tx = x % cT
            rx = x // cT
            x2 = rx % cNH
            x1 = rx // cNH
            if dsv[ta]:
                tmp = x1; x1 = x2; x2 = tmp
            m1 = mhv[a1 * cNH + x1]
            m2 = mhv[a2 * cNH + x2]
            tm = dmv[ta * cT + tx]
            ts = s % cT
            rs = s // cT
            s2 = rs % cNH
            s1 = rs // cNH
            if dsv[tm]:
                tmp = s1; s1 = s2; s2 = tmp
            y = (mhv[m1 * cNH + s1] * cNH + mhv[m2 * cNH + s2]) * cT + dmv[tm * cT + ts]
            if not mask[y]:
                mask[y] = 1
                count += 1
                if count > climit:
                    return count, mask_obj
                queue[tail] = y
                tail += 1
    return count, mask_obj


def square_coset_sweep(NH, T, mul_h, dic_mul, dic_swap, parity, sigma_mask):
    """Square every element whose q-parity matches ``parity`` and test the
    square against sigma_mask.

    Returns (first offending element index or -1, number checked).
    """
    cdef array.array mh = _ints(mul_h), dm = _ints(dic_mul), ds = _ints(dic_swap)
    cdef int[::1] mhv = mh, dmv = dm, dsv = ds
    cdef const unsigned char[::1] sig = sigma_mask
    cdef long cNH = NH, cT = T, par = parity
    cdef long checked = 0
    cdef long h1, h2, t, x, sq, base1, base2
    cdef array.array ts_a = array.array('i', [t for t in range(cT) if dsv[t] == par])
    cdef int[::1] ts = ts_a
    cdef Py_ssize_t ti, n_ts = ts.shape[0]
    for h1 in range(cNH):
        base1 = h1 * cNH
        for h2 in range(cNH):
            base2 = (base1 + h2) * cT
            for ti in range(n_ts):
                t = ts[ti]
                if dsv[t]:
                    sq = (mhv[h1 * cNH + h2] * cNH + mhv[h2 * cNH + h1]) * cT + dmv[t * cT + t]
                else:
                    sq = (mhv[h1 * cNH + h1] * cNH + mhv[h2 * cNH + h2]) * cT + dmv[t * cT + t]
                checked += 1
                if sig[sq]:
                    return base2 + t, checked
    return -1, checked


def mask_intersection(mask_a, mask_b):
    """Indices set in both masks."""
    cdef const unsigned char[::1] a = mask_a
    cdef const unsigned char[::1] b = mask_b
    cdef Py_ssize_t i, n = a.shape[0]
    out = []
    for i in range(n):
        if a[i] and b[i]:
            out.append(i)
    return out
