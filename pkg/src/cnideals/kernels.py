"""Backend selection for the exponent-vector kernels.

Two interchangeable implementations exist: a compiled extension
(``cnideals._kernels``, built from Cython) and a pure-Python fallback
(``cnideals._kernels_py``).  Selection happens once at import time from the
environment variable ``CNIDEALS_BACKEND``:

    auto    (default) compiled if importable, else pure Python
    cython  require the compiled extension; ImportError if missing
    python  force the pure fallback

``get_backend(name)`` returns a specific module regardless of the ambient
choice — the test suite uses it to cross-check the two implementations.
"""

from __future__ import annotations

import os

from . import _kernels_py


def _load_cython():
    from . import _kernels  # compiled extension; absent on pure installs

    return _kernels


def get_backend(name: str):
    if name == "python":
        return _kernels_py
    if name == "cython":
        return _load_cython()
    if name == "auto":
        try:
            return _load_cython()
        except ImportError:
            return _kernels_py
    raise ValueError(f"unknown backend {name!r} (expected auto, cython, or python)")


_choice = os.environ.get("CNIDEALS_BACKEND", "auto")
_impl = get_backend(_choice)

BACKEND: str = _impl.NAME

minimal_vectors = _impl.minimal_vectors
any_divides = _impl.any_divides
filter_outside = _impl.filter_outside
colon_vectors = _impl.colon_vectors
intersect_vectors = _impl.intersect_vectors
expand_power = _impl.expand_power
power_divides = _impl.power_divides
search_witness = _impl.search_witness


def socle_quotient(gens, cap, *, impl=None):
    """Minimal generators of (P : 𝔪) for P = ideal(gens), 𝔪 = all variables.

    Returns ``(q_gens, new_gens)`` where ``new_gens`` are the minimal
    generators of the quotient lying outside P — nonempty exactly when the
    colon enlarges P, i.e. when 𝔪 is associated.

    Method: (P : x_i) = P + D_i where D_i divides each x_i-divisible
    generator by x_i, so (P : 𝔪) = ∩_i (P + D_i) = P + ∩_i D_i.  Working
    modulo P keeps the fold small: at every step the accumulator is cut down
    to its generators outside P (adding P-interior generators back changes
    nothing in P + ·), the D_i are folded smallest-first, and an empty
    accumulator ends the fold early with (P : 𝔪) = P.
    """
    k = impl if impl is not None else _impl
    P = k.minimal_vectors(gens)
    if not P:
        return [], []
    n = len(P[0])
    ds = []
    for i in range(n):
        d = [v[:i] + (v[i] - 1,) + v[i + 1 :] for v in P if v[i] > 0]
        if not d:
            # x_i appears in no generator: (P : x_i) = P already
            return P, []
        d = k.filter_outside(P, k.minimal_vectors(d))
        if not d:
            # D_i ⊆ P forces ∩_j D_j ⊆ P
            return P, []
        ds.append(d)
    ds.sort(key=len)
    acc = ds[0]
    for d in ds[1:]:
        if not acc:
            return P, []
        acc = k.filter_outside(P, k.intersect_vectors(acc, d, cap))
    if not acc:
        return P, []
    q = k.minimal_vectors(list(P) + acc)
    p_set = set(P)
    new = [v for v in q if v not in p_set]
    return q, new
