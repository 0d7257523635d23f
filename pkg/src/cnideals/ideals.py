"""Monomial ideals over a fixed variable set, and the operations on them.

A ``MonomialIdeal`` stores its generators exactly as constructed —
``ni_ideal`` keeps one generator per vertex in vertex order so audits can map
generators back to vertices — while every derived operation (minimalize,
power, colon, intersection) returns canonical form: the unique minimal
generating set sorted lexicographically by exponent vector.  All heavy
lifting happens on exponent tuples in the selected kernel backend.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import kernels
from .graphs import Graph, closed_neighborhood
from .labels import label_key, sort_labels
from .limits import DEFAULT_CAPS, Caps
from .monomials import Monomial, format_monomial


class MonomialIdeal:
    """An ideal generated by monomials in k[ring_vars].

    The zero ideal has an empty generator tuple; the unit ideal is generated
    by the unit monomial.  Generator order is preserved as given.
    """

    __slots__ = ("_ring_vars", "_generators", "_vectors")

    def __init__(self, ring_vars: Iterable[str], generators: Iterable[Monomial] = ()):
        rv = tuple(ring_vars)
        if not rv:
            raise ValueError("a monomial ideal needs at least one ring variable")
        if len(set(rv)) != len(rv):
            raise ValueError("duplicate ring variable")
        self._ring_vars = sort_labels(rv)
        gens = tuple(generators)
        ring = set(self._ring_vars)
        for g in gens:
            foreign = set(g.support) - ring
            if foreign:
                raise ValueError(
                    f"generator {format_monomial(g)!r} uses variables outside the ring: "
                    f"{sort_labels(foreign)}"
                )
        self._generators = gens
        self._vectors: tuple[tuple[int, ...], ...] | None = None

    @property
    def ring_vars(self) -> tuple[str, ...]:
        return self._ring_vars

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self._generators

    def vectors(self) -> tuple[tuple[int, ...], ...]:
        """Generator exponent vectors aligned to ring_vars (cached)."""
        if self._vectors is None:
            self._vectors = tuple(g.vector(self._ring_vars) for g in self._generators)
        return self._vectors

    def is_zero(self) -> bool:
        return not self._generators

    def __repr__(self) -> str:
        return (
            f"<MonomialIdeal n={len(self._ring_vars)} "
            f"gens={[format_monomial(g) for g in self._generators]}>"
        )


def ideal_from_vectors(ring_vars: Sequence[str], vecs: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(ring_vars, [Monomial.from_vector(v, ring_vars) for v in vecs])


def _same_ring(j: MonomialIdeal, k: MonomialIdeal) -> None:
    if j.ring_vars != k.ring_vars:
        raise ValueError("ideals live in different rings")


def _aligned(j: MonomialIdeal, f: Monomial) -> tuple[int, ...]:
    try:
        return f.vector(j.ring_vars)
    except ValueError as exc:
        raise ValueError(f"monomial {format_monomial(f)!r}: {exc}") from None


# --- graph ideals ------------------------------------------------------------

def ni_ideal(g: Graph) -> MonomialIdeal:
    """Closed neighborhood ideal: one generator x_N[v] per vertex v.

    Not minimalized — generator i corresponds to vertex i of ``g.vertices``,
    and audits rely on that correspondence.
    """
    if len(g) == 0:
        raise ValueError("closed neighborhood ideal of the empty graph")
    gens = [Monomial.from_support(closed_neighborhood(g, v)) for v in g.vertices]
    return MonomialIdeal(g.vertices, gens)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """Edge ideal: one generator x_u x_v per edge (already minimal)."""
    edges = g.edges()
    if not edges:
        raise ValueError("edge ideal of an edgeless graph is the zero ideal")
    gens = [Monomial.from_support(e) for e in edges]
    return MonomialIdeal(g.vertices, gens)


# --- ideal operations ---------------------------------------------------------

def minimalize(j: MonomialIdeal) -> MonomialIdeal:
    """Drop every generator divisible by another (unique minimal set)."""
    return ideal_from_vectors(j.ring_vars, kernels.minimal_vectors(j.vectors()))


def power(j: MonomialIdeal, t: int, *, caps: Caps = DEFAULT_CAPS) -> MonomialIdeal:
    """Minimal generating set of J^t via multiset expansion."""
    if t < 1:
        raise ValueError("power must be a positive integer")
    if j.is_zero():
        return MonomialIdeal(j.ring_vars)
    vecs = kernels.expand_power(j.vectors(), t, caps.products)
    return ideal_from_vectors(j.ring_vars, vecs)


def contains(j: MonomialIdeal, f: Monomial) -> bool:
    """Monomial membership: some generator divides f."""
    return kernels.any_divides(j.vectors(), _aligned(j, f))


def power_contains(j: MonomialIdeal, t: int, f: Monomial, *, caps: Caps = DEFAULT_CAPS) -> bool:
    """f ∈ J^t, decided by branch-and-bound over t-fold generator products.

    Never expands J^t; agrees with ``contains(power(j, t), f)``.
    """
    if t < 1:
        raise ValueError("power must be a positive integer")
    return kernels.power_divides(j.vectors(), t, _aligned(j, f))


def colon_by_monomial(j: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """(J : f), generated by g / gcd(g, f) over generators g."""
    return ideal_from_vectors(j.ring_vars, kernels.colon_vectors(j.vectors(), _aligned(j, f)))


def intersect(j: MonomialIdeal, k: MonomialIdeal, *, caps: Caps = DEFAULT_CAPS) -> MonomialIdeal:
    """J ∩ K, generated by pairwise lcms."""
    _same_ring(j, k)
    vecs = kernels.intersect_vectors(j.vectors(), k.vectors(), caps.intersection_products)
    return ideal_from_vectors(j.ring_vars, vecs)


def ideal_equals(j: MonomialIdeal, k: MonomialIdeal) -> bool:
    """Equality as ideals: identical minimal generating sets."""
    _same_ring(j, k)
    return kernels.minimal_vectors(j.vectors()) == kernels.minimal_vectors(k.vectors())
