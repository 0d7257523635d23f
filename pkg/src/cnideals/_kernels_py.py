"""Pure-Python exponent-vector kernels.

Everything here works on plain tuples of nonnegative ints aligned to a fixed
variable order.  The compiled backend (`_kernels`) implements the same
signatures with the same canonical output order — lists of tuples sorted
lexicographically — so the two are interchangeable and cross-checkable.

Dominance conventions: g "divides" f iff g <= f componentwise; a vector set
is minimal when no element divides another.
"""

from __future__ import annotations

import itertools

from .limits import CapExceeded

NAME = "python"

_MASK_BITS = 64
_BATCH = 10_000  # interleaved-minimalization batch size


def _mask(vec):
    """Support bitmask over the first 64 coordinates (pruning filter only)."""
    m = 0
    for i, e in enumerate(vec[:_MASK_BITS]):
        if e:
            m |= 1 << i
    return m


def _divides(g, f):
    for a, b in zip(g, f):
        if a > b:
            return False
    return True


def minimal_vectors(vecs):
    """Inclusion-minimal subset of ``vecs``, deduped, lex-sorted."""
    uniq = sorted(set(map(tuple, vecs)), key=lambda v: (sum(v), v))
    kept = []
    masks = []
    for v in uniq:
        mv = _mask(v)
        dominated = False
        for u, mu in zip(kept, masks):
            if mu & ~mv:
                continue
            if _divides(u, v):
                dominated = True
                break
        if not dominated:
            kept.append(v)
            masks.append(mv)
    kept.sort()
    return kept


def any_divides(gens, f):
    """True iff some vector in ``gens`` divides ``f``."""
    f = tuple(f)
    mf = _mask(f)
    for g in gens:
        if _mask(g) & ~mf:
            continue
        if _divides(g, f):
            return True
    return False


def filter_outside(gens, vecs):
    """The vectors from ``vecs`` not lying in ideal(gens), in input order."""
    gm = [(g, _mask(g)) for g in gens]
    out = []
    for v in vecs:
        v = tuple(v)
        mv = _mask(v)
        for g, mg in gm:
            if not (mg & ~mv) and _divides(g, v):
                break
        else:
            out.append(v)
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
    if len(a) * len(b) > cap:
        raise CapExceeded(
            f"intersection would form {len(a) * len(b)} pairwise products (cap {cap})"
        )
    current: list[tuple[int, ...]] = []
    batch: list[tuple[int, ...]] = []
    for g in a:
        for h in b:
            batch.append(tuple(x if x > y else y for x, y in zip(g, h)))
            if len(batch) >= _BATCH:
                current = minimal_vectors(current + batch)
                batch = []
    return minimal_vectors(current + batch)


def expand_power(gens, t, cap):
    """Minimal generators of ideal(gens)^t by multiset expansion.

    Walks nondecreasing index multisets of size ``t`` depth-first, minimalizing
    every ``_BATCH`` completed products; a subtree is skipped once its partial
    product is already divisible by a known generator of the power (every
    completion would be non-minimal).  Raises CapExceeded past ``cap``
    completed products.
    """
    if t < 1:
        raise ValueError("power must be >= 1")
    gens = minimal_vectors(gens)
    if not gens:
        return []
    if t == 1:
        return list(gens)
    state = {"count": 0, "current": [], "masks": [], "batch": []}

    def flush():
        merged = minimal_vectors(state["current"] + state["batch"])
        state["current"] = merged
        state["masks"] = [_mask(v) for v in merged]
        state["batch"] = []

    def rec(start, depth, partial):
        mp = _mask(partial)
        for u, mu in zip(state["current"], state["masks"]):
            if not (mu & ~mp) and _divides(u, partial):
                return
        if depth == t:
            state["count"] += 1
            if state["count"] > cap:
                raise CapExceeded(f"power expansion exceeded {cap} products")
            state["batch"].append(partial)
            if len(state["batch"]) >= _BATCH:
                flush()
            return
        for i in range(start, len(gens)):
            g = gens[i]
            rec(i, depth + 1, tuple(a + b for a, b in zip(partial, g)))

    for i in range(len(gens)):
        rec(i, 1, gens[i])
    flush()
    return state["current"]


def power_divides(gens, t, f):
    """True iff some product of ``t`` generators (repeats allowed) divides f.

    Branch-and-bound over nondecreasing generator indices.  Only generators
    dividing f individually can appear in a dividing product, so the rest are
    filtered up front; branches are cut on remaining exponents and on the
    minimum generator degree still reachable.
    """
    if t < 1:
        raise ValueError("power must be >= 1")
    f = tuple(f)
    elig = [g for g in minimal_vectors(gens) if _divides(g, f)]
    if not elig:
        return False
    degs = [sum(g) for g in elig]
    n = len(elig)
    suffix_min = [0] * (n + 1)
    m = 1 << 62
    for i in range(n - 1, -1, -1):
        if degs[i] < m:
            m = degs[i]
        suffix_min[i] = m
    suffix_min[n] = m

    def rec(start, depth, rem, rem_deg):
        if depth == t:
            return True
        need = t - depth
        for i in range(start, n):
            if suffix_min[i] * need > rem_deg:
                break
            if degs[i] > rem_deg:
                continue
            g = elig[i]
            nxt = []
            ok = True
            for a, b in zip(rem, g):
                d = a - b
                if d < 0:
                    ok = False
                    break
                nxt.append(d)
            if ok and rec(i, depth + 1, nxt, rem_deg - degs[i]):
                return True
        return False

    return rec(0, 0, list(f), sum(f))


def search_witness(gens, t, nvars, cap):
    """First vector w with all exponents < t, w ∉ J^t, and x_i·w ∈ J^t for all i.

    Enumerates [0, t-1]^nvars in odometer order (rightmost coordinate fastest,
    i.e. lexicographic with the leftmost variable most significant).  Returns
    the first witness or None when the space is exhausted.  Raises CapExceeded
    immediately when the space itself exceeds ``cap`` candidates.
    """
    if t < 1:
        raise ValueError("power must be >= 1")
    if nvars < 1:
        raise ValueError("need at least one variable")
    space = t ** nvars
    if space > cap:
        raise CapExceeded(f"witness space {t}^{nvars} = {space} exceeds cap {cap}")
    gens = minimal_vectors(gens)
    for w in itertools.product(range(t), repeat=nvars):
        bumped_all = True
        for i in range(nvars):
            bumped = w[:i] + (w[i] + 1,) + w[i + 1 :]
            if not power_divides(gens, t, bumped):
                bumped_all = False
                break
        if bumped_all and not power_divides(gens, t, w):
            return w
    return None


