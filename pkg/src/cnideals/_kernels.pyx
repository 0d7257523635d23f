# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled exponent-vector kernels.

Same contract as ``cnideals._kernels_py`` (the reference implementation):
identical signatures, identical canonical output order, identical cap
semantics.  Rows live in flat C arrays of 64-bit ints; support bitmasks over
the first 64 coordinates pre-filter every divisibility scan.
"""

from libc.stdlib cimport free, malloc, qsort, realloc
from libc.string cimport memcpy

from .limits import CapExceeded

NAME = "cython"

ctypedef long long i64
ctypedef unsigned long long u64

cdef Py_ssize_t _BATCH = 10000  # interleaved-minimalization batch size


# --- C helpers -----------------------------------------------------------------

cdef inline u64 _mask_of(const i64* v, Py_ssize_t n) noexcept nogil:
    cdef u64 m = 0
    cdef Py_ssize_t i, lim
    lim = n if n < 64 else 64
    for i in range(lim):
        if v[i] != 0:
            m |= (<u64>1) << i
    return m


cdef inline bint _div_row(const i64* g, const i64* f, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if g[i] > f[i]:
            return 0
    return 1


cdef int _cmp_i64(const void* pa, const void* pb) noexcept nogil:
    cdef i64 a = (<const i64*> pa)[0]
    cdef i64 b = (<const i64*> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


cdef i64* _flatten(rows, Py_ssize_t m, Py_ssize_t n) except NULL:
    """Copy a sequence of length-n int sequences into a fresh C array."""
    cdef i64* data = <i64*> malloc(m * n * sizeof(i64))
    if data == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k, idx = 0
    for i in range(m):
        row = rows[i]
        for k in range(n):
            data[idx] = row[k]
            idx += 1
    return data


cdef list _box(const i64* data, Py_ssize_t m, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t i, k
    for i in range(m):
        out.append(tuple([data[i * n + k] for k in range(n)]))
    return out


cdef Py_ssize_t _minimal_inplace(i64* data, Py_ssize_t m, Py_ssize_t n) noexcept nogil:
    """Compact ``data`` to its inclusion-minimal rows; returns the new count.

    Rows are visited in ascending (degree, original index) order so any
    divisor is seen before what it divides; duplicates collapse to their
    first occurrence.  Returns -1 on allocation failure.
    """
    if m <= 1:
        return m
    cdef i64* keys = <i64*> malloc(m * sizeof(i64))
    cdef u64* masks = <u64*> malloc(m * sizeof(u64))
    cdef i64* tmp = <i64*> malloc(m * n * sizeof(i64))
    if keys == NULL or masks == NULL or tmp == NULL:
        free(keys); free(masks); free(tmp)
        return -1
    cdef Py_ssize_t i, k, j, idx, nkept = 0
    cdef i64 deg
    cdef u64 mi
    cdef bint dominated
    for i in range(m):
        deg = 0
        for k in range(n):
            deg += data[i * n + k]
        keys[i] = (deg << 32) | <i64> i
    qsort(keys, m, sizeof(i64), _cmp_i64)
    for i in range(m):
        idx = <Py_ssize_t> (keys[i] & <i64> 0xffffffff)
        mi = _mask_of(data + idx * n, n)
        dominated = 0
        for j in range(nkept):
            if masks[j] & ~mi:
                continue
            if _div_row(tmp + j * n, data + idx * n, n):
                dominated = 1
                break
        if not dominated:
            memcpy(tmp + nkept * n, data + idx * n, n * sizeof(i64))
            masks[nkept] = mi
            nkept += 1
    memcpy(data, tmp, nkept * n * sizeof(i64))
    free(keys); free(masks); free(tmp)
    return nkept


cdef i64 _clamp_cap(object cap):
    cdef object limit = (<object> 1) << 62
    if cap > limit:
        return <i64> (1 << 62)
    return <i64> cap


# --- public kernels ----------------------------------------------------------------

def minimal_vectors(vecs):
    """Inclusion-minimal subset of ``vecs``, deduped, lex-sorted."""
    uniq = list(set(map(tuple, vecs)))
    cdef Py_ssize_t m = len(uniq)
    if m == 0:
        return []
    cdef Py_ssize_t n = len(uniq[0])
    if n == 0:
        return [()]
    cdef i64* data = _flatten(uniq, m, n)
    cdef Py_ssize_t nm
    with nogil:
        nm = _minimal_inplace(data, m, n)
    if nm < 0:
        free(data)
        raise MemoryError()
    out = _box(data, nm, n)
    free(data)
    out.sort()
    return out


def any_divides(gens, f):
    """True iff some vector in ``gens`` divides ``f``."""
    ft = tuple(f)
    glist = list(gens)
    cdef Py_ssize_t m = len(glist)
    if m == 0:
        return False
    cdef Py_ssize_t n = len(ft)
    if n == 0:
        return True
    cdef i64* data = _flatten(glist, m, n)
    cdef i64* fv = _flatten([ft], 1, n)
    cdef u64 mf = _mask_of(fv, n)
    cdef bint hit = 0
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            if _mask_of(data + i * n, n) & ~mf:
                continue
            if _div_row(data + i * n, fv, n):
                hit = 1
                break
    free(data); free(fv)
    return bool(hit)


def filter_outside(gens, vecs):
    """The vectors from ``vecs`` not lying in ideal(gens), in input order."""
    vlist = [tuple(v) for v in vecs]
    glist = list(gens)
    cdef Py_ssize_t mg = len(glist)
    if mg == 0 or not vlist:
        return vlist
    cdef Py_ssize_t n = len(vlist[0])
    if n == 0:
        return []
    cdef i64* G = _flatten(glist, mg, n)
    cdef u64* gm = <u64*> malloc(mg * sizeof(u64))
    cdef i64* buf = <i64*> malloc(n * sizeof(i64))
    if gm == NULL or buf == NULL:
        free(G); free(gm); free(buf)
        raise MemoryError()
    cdef Py_ssize_t i, k
    for i in range(mg):
        gm[i] = _mask_of(G + i * n, n)
    out = []
    cdef u64 mv
    cdef bint keep
    for v in vlist:
        for k in range(n):
            buf[k] = v[k]
        mv = _mask_of(buf, n)
        keep = 1
        for i in range(mg):
            if gm[i] & ~mv:
                continue
            if _div_row(G + i * n, buf, n):
                keep = 0
                break
        if keep:
            out.append(v)
    free(G); free(gm); free(buf)
    return out


def colon_vectors(gens, f):
    """Minimal generators of (ideal(gens) : f): vectors max(g - f, 0)."""
    f = tuple(f)
    out = [tuple(a - b if a > b else 0 for a, b in zip(g, f)) for g in gens]
    return minimal_vectors(out)


def intersect_vectors(a, b, cap):
    """Minimal generators of ideal(a) ∩ ideal(b): pairwise componentwise max."""
    a = minimal_vectors(a)
    b = minimal_vectors(b)
    cdef Py_ssize_t ma = len(a), mb = len(b)
    if ma == 0 or mb == 0:
        return []
    if ma * mb > cap:
        raise CapExceeded(
            f"intersection would form {ma * mb} pairwise products (cap {cap})"
        )
    cdef Py_ssize_t n = len(a[0])
    if n == 0:
        return [()]
    cdef i64* A = _flatten(a, ma, n)
    cdef i64* B = _flatten(b, mb, n)
    cdef Py_ssize_t capacity = 4096
    cdef i64* cur = <i64*> malloc(capacity * n * sizeof(i64))
    if cur == NULL:
        free(A); free(B)
        raise MemoryError()
    cdef Py_ssize_t mcur = 0, pending = 0
    cdef Py_ssize_t i, j, k
    cdef i64 x, y
    cdef i64* grown
    cdef int oom = 0
    with nogil:
        for i in range(ma):
            if oom:
                break
            for j in range(mb):
                if mcur == capacity:
                    capacity <<= 1
                    grown = <i64*> realloc(cur, capacity * n * sizeof(i64))
                    if grown == NULL:
                        oom = 1
                        break
                    cur = grown
                for k in range(n):
                    x = A[i * n + k]
                    y = B[j * n + k]
                    cur[mcur * n + k] = x if x > y else y
                mcur += 1
                pending += 1
                if pending >= _BATCH:
                    mcur = _minimal_inplace(cur, mcur, n)
                    if mcur < 0:
                        oom = 1
                        break
                    pending = 0
        if not oom:
            mcur = _minimal_inplace(cur, mcur, n)
            if mcur < 0:
                oom = 1
    free(A); free(B)
    if oom:
        free(cur)
        raise MemoryError()
    out = _box(cur, mcur, n)
    free(cur)
    out.sort()
    return out


# --- power expansion -----------------------------------------------------------------

ctypedef struct ExpState:
    i64* gens
    Py_ssize_t mg
    Py_ssize_t n
    int t
    i64 cap
    i64 count
    i64* cur
    u64* curmask
    Py_ssize_t mcur      # rows stored (merged + pending)
    Py_ssize_t merged    # rows that took part in the last minimalization
    Py_ssize_t capacity
    Py_ssize_t pending
    i64* scratch         # (t+1) rows of n: partial product per depth
    int status           # 0 ok, 1 cap exceeded, 2 out of memory


cdef void _exp_flush(ExpState* st) noexcept nogil:
    cdef Py_ssize_t i
    st.mcur = _minimal_inplace(st.cur, st.mcur, st.n)
    if st.mcur < 0:
        st.status = 2
        return
    for i in range(st.mcur):
        st.curmask[i] = _mask_of(st.cur + i * st.n, st.n)
    st.merged = st.mcur
    st.pending = 0


cdef void _exp_rec(ExpState* st, Py_ssize_t start, int depth) noexcept nogil:
    if st.status:
        return
    cdef i64* partial = st.scratch + depth * st.n
    cdef u64 mp = _mask_of(partial, st.n)
    cdef Py_ssize_t i, k
    # prune once the partial product is inside the power as known so far
    for i in range(st.merged):
        if st.curmask[i] & ~mp:
            continue
        if _div_row(st.cur + i * st.n, partial, st.n):
            return
    cdef i64* nxt
    cdef u64* newmask
    cdef i64* grown
    if depth == st.t:
        st.count += 1
        if st.count > st.cap:
            st.status = 1
            return
        if st.mcur == st.capacity:
            st.capacity <<= 1
            grown = <i64*> realloc(st.cur, st.capacity * st.n * sizeof(i64))
            newmask = <u64*> realloc(st.curmask, st.capacity * sizeof(u64))
            if grown == NULL or newmask == NULL:
                st.status = 2
                if grown != NULL:
                    st.cur = grown
                if newmask != NULL:
                    st.curmask = newmask
                return
            st.cur = grown
            st.curmask = newmask
        memcpy(st.cur + st.mcur * st.n, partial, st.n * sizeof(i64))
        st.mcur += 1
        st.pending += 1
        if st.pending >= _BATCH:
            _exp_flush(st)
        return
    nxt = st.scratch + (depth + 1) * st.n
    for i in range(start, st.mg):
        for k in range(st.n):
            nxt[k] = partial[k] + st.gens[i * st.n + k]
        _exp_rec(st, i, depth + 1)
        if st.status:
            return


def expand_power(gens, t, cap):
    """Minimal generators of ideal(gens)^t by multiset expansion.

    Same traversal, pruning, and batch-minimalization schedule as the pure
    backend, so the completed-product count hits ``cap`` identically.
    """
    if t < 1:
        raise ValueError("power must be >= 1")
    glist = minimal_vectors(gens)
    if not glist:
        return []
    if t == 1:
        return list(glist)
    cdef Py_ssize_t n = len(glist[0])
    if n == 0:
        return [()]
    cdef ExpState st
    st.mg = len(glist)
    st.n = n
    st.t = <int> t
    st.cap = _clamp_cap(cap)
    st.count = 0
    st.mcur = 0
    st.merged = 0
    st.capacity = 4096
    st.pending = 0
    st.status = 0
    st.gens = _flatten(glist, st.mg, n)
    st.cur = <i64*> malloc(st.capacity * n * sizeof(i64))
    st.curmask = <u64*> malloc(st.capacity * sizeof(u64))
    st.scratch = <i64*> malloc((t + 1) * n * sizeof(i64))
    if st.cur == NULL or st.curmask == NULL or st.scratch == NULL:
        free(st.gens); free(st.cur); free(st.curmask); free(st.scratch)
        raise MemoryError()
    cdef Py_ssize_t i, k
    with nogil:
        for i in range(st.mg):
            for k in range(n):
                st.scratch[n + k] = st.gens[i * n + k]
            _exp_rec(&st, i, 1)
            if st.status:
                break
        if not st.status:
            _exp_flush(&st)
    try:
        if st.status == 1:
            raise CapExceeded(f"power expansion exceeded {cap} products")
        if st.status == 2:
            raise MemoryError()
        out = _box(st.cur, st.mcur, n)
        out.sort()
        return out
    finally:
        free(st.gens); free(st.cur); free(st.curmask); free(st.scratch)


# --- bounded power membership -----------------------------------------------------

cdef bint _pd_rec(
    const i64* elig, const i64* degs, const i64* sufmin,
    Py_ssize_t ne, Py_ssize_t n, int t, int depth,
    i64* rem_stack, i64 rem_deg, Py_ssize_t start,
) noexcept nogil:
    if depth == t:
        return 1
    cdef int need = t - depth
    cdef i64* rem = rem_stack + depth * n
    cdef i64* nxt = rem_stack + (depth + 1) * n
    cdef Py_ssize_t i, k
    cdef bint ok
    cdef i64 d
    for i in range(start, ne):
        if sufmin[i] * need > rem_deg:
            break
        if degs[i] > rem_deg:
            continue
        ok = 1
        for k in range(n):
            d = rem[k] - elig[i * n + k]
            if d < 0:
                ok = 0
                break
            nxt[k] = d
        if ok and _pd_rec(elig, degs, sufmin, ne, n, t, depth + 1, rem_stack, rem_deg - degs[i], i):
            return 1
    return 0


cdef bint _pd_full(
    const i64* gens, Py_ssize_t mg, Py_ssize_t n, int t, const i64* f,
    i64* elig_buf, i64* degs_buf, i64* suf_buf, i64* rem_stack,
) noexcept nogil:
    """Filter generators dividing f, then branch-and-bound for a t-fold divisor."""
    cdef Py_ssize_t ne = 0, i, k
    cdef bint ok
    for i in range(mg):
        ok = 1
        for k in range(n):
            if gens[i * n + k] > f[k]:
                ok = 0
                break
        if ok:
            memcpy(elig_buf + ne * n, gens + i * n, n * sizeof(i64))
            ne += 1
    if ne == 0:
        return 0
    cdef i64 deg, fdeg = 0
    for i in range(ne):
        deg = 0
        for k in range(n):
            deg += elig_buf[i * n + k]
        degs_buf[i] = deg
    cdef i64 mind = (<i64> 1) << 62
    for i in range(ne - 1, -1, -1):
        if degs_buf[i] < mind:
            mind = degs_buf[i]
        suf_buf[i] = mind
    memcpy(rem_stack, f, n * sizeof(i64))
    for k in range(n):
        fdeg += f[k]
    return _pd_rec(elig_buf, degs_buf, suf_buf, ne, n, t, 0, rem_stack, fdeg, 0)


def power_divides(gens, t, f):
    """True iff some product of ``t`` generators (repeats allowed) divides f."""
    if t < 1:
        raise ValueError("power must be >= 1")
    ft = tuple(f)
    glist = minimal_vectors(gens)
    cdef Py_ssize_t mg = len(glist)
    if mg == 0:
        return False
    cdef Py_ssize_t n = len(ft)
    if n == 0:
        return True
    cdef i64* G = _flatten(glist, mg, n)
    cdef i64* fv = _flatten([ft], 1, n)
    cdef i64* elig = <i64*> malloc(mg * n * sizeof(i64))
    cdef i64* degs = <i64*> malloc(mg * sizeof(i64))
    cdef i64* suf = <i64*> malloc(mg * sizeof(i64))
    cdef i64* rem = <i64*> malloc((t + 1) * n * sizeof(i64))
    if elig == NULL or degs == NULL or suf == NULL or rem == NULL:
        free(G); free(fv); free(elig); free(degs); free(suf); free(rem)
        raise MemoryError()
    cdef bint hit
    cdef int tt = <int> t
    with nogil:
        hit = _pd_full(G, mg, n, tt, fv, elig, degs, suf, rem)
    free(G); free(fv); free(elig); free(degs); free(suf); free(rem)
    return bool(hit)


def search_witness(gens, t, nvars, cap):
    """First vector w with all exponents < t, w ∉ J^t, x_i·w ∈ J^t for all i.

    Odometer order (rightmost coordinate fastest); None when exhausted;
    CapExceeded up front when t^nvars exceeds ``cap``.
    """
    if t < 1:
        raise ValueError("power must be >= 1")
    if nvars < 1:
        raise ValueError("need at least one variable")
    space = t ** nvars
    if space > cap:
        raise CapExceeded(f"witness space {t}^{nvars} = {space} exceeds cap {cap}")
    glist = minimal_vectors(gens)
    cdef Py_ssize_t mg = len(glist)
    cdef Py_ssize_t n = nvars
    if mg == 0:
        # nothing is ever in J^t: condition (c) fails for every candidate
        return None
    cdef i64* G = _flatten(glist, mg, n)
    cdef i64* w = <i64*> malloc(n * sizeof(i64))
    cdef i64* f = <i64*> malloc(n * sizeof(i64))
    cdef i64* elig = <i64*> malloc(mg * n * sizeof(i64))
    cdef i64* degs = <i64*> malloc(mg * sizeof(i64))
    cdef i64* suf = <i64*> malloc(mg * sizeof(i64))
    cdef i64* rem = <i64*> malloc((t + 1) * n * sizeof(i64))
    if w == NULL or f == NULL or elig == NULL or degs == NULL or suf == NULL or rem == NULL:
        free(G); free(w); free(f); free(elig); free(degs); free(suf); free(rem)
        raise MemoryError()
    cdef Py_ssize_t i, k
    cdef int tt = <int> t
    cdef bint bumped_all, found = 0
    with nogil:
        for k in range(n):
            w[k] = 0
        while True:
            bumped_all = 1
            for i in range(n):
                memcpy(f, w, n * sizeof(i64))
                f[i] += 1
                if not _pd_full(G, mg, n, tt, f, elig, degs, suf, rem):
                    bumped_all = 0
                    break
            if bumped_all:
                if not _pd_full(G, mg, n, tt, w, elig, degs, suf, rem):
                    found = 1
                    break
            # odometer: rightmost coordinate fastest
            k = n - 1
            while k >= 0:
                w[k] += 1
                if w[k] < tt:
                    break
                w[k] = 0
                k -= 1
            if k < 0:
                break
    if found:
        out = tuple([w[k] for k in range(n)])
    else:
        out = None
    free(G); free(w); free(f); free(elig); free(degs); free(suf); free(rem)
    return out
