"""The extremal graph families and their certificate monomials.

Two chain families are built from fixed base blocks:

* ``chain_ni(t)`` — t copies of a 12-vertex block whose closed neighborhood
  ideal first acquires the maximal ideal as an associated prime at power
  t+1, chained leaf-to-leaf; its diameter is 7t−1.
* ``chain_edge(t)`` — t−1 copies of a 5-vertex triangle-with-two-leaves
  block chained leaf-to-leaf; its diameter is 4t−5 and the maximal ideal is
  associated to the t-th power of the edge ideal.

Vertices of copy i are labeled ``"i.j"``.  ``certificate_ni(t)`` is the
squarefree witness monomial over positions 2..11 of every copy, and
``verify_pair_table`` replays, per copy and position, the neighborhood-pair
conditions that make x_{i,j}·f land in successive ideal powers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, closed_neighborhood
from .ideals import MonomialIdeal, ni_ideal, power_contains
from .labels import label_key
from .limits import DEFAULT_CAPS, Caps
from .monomials import Monomial

# Base block on 12 vertices: every closed neighborhood has exactly four
# vertices, and positions 2..11 support the witness monomial.
BASE12_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2), (2, 3), (2, 5), (3, 4), (3, 8), (4, 6), (4, 10), (5, 6),
    (5, 9), (6, 7), (7, 8), (7, 11), (8, 9), (9, 10), (10, 11), (11, 12),
)

# For each interior position j = 2..11, a pair (k, l) with
# N[x_k] ∩ N[x_l] = {x_j} and both neighborhoods inside positions 2..11.
PAIR_TABLE: dict[int, tuple[int, int]] = {
    2: (3, 5), 3: (4, 8), 4: (3, 10), 5: (6, 9),
    6: (5, 7), 7: (6, 8), 8: (7, 9), 9: (5, 8),
    10: (4, 9), 11: (7, 10),
}

# Base block for the edge-ideal family: a triangle 2-3-4 with leaves at 1, 5.
BASE_EDGE_EDGES: tuple[tuple[int, int], ...] = ((1, 2), (2, 3), (3, 4), (2, 4), (4, 5))


def base_graph_ni() -> Graph:
    """The 12-vertex base block (diameter 6)."""
    return Graph(
        [str(v) for v in range(1, 13)],
        [(str(u), str(v)) for u, v in BASE12_EDGES],
        name="ni-base",
    )


def chain_ni(t: int) -> Graph:
    """t copies of the 12-vertex block, copy i's vertex 12 tied to copy i+1's vertex 1."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    vertices = [f"{i}.{j}" for i in range(1, t + 1) for j in range(1, 13)]
    edges = [
        (f"{i}.{u}", f"{i}.{v}")
        for i in range(1, t + 1)
        for u, v in BASE12_EDGES
    ]
    edges += [(f"{i}.12", f"{i + 1}.1") for i in range(1, t)]
    return Graph(vertices, edges, name=f"ni-chain-{t}")


def certificate_ni(t: int) -> Monomial:
    """Squarefree witness over positions 2..11 of every copy (degree 10t)."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return Monomial.from_support(
        f"{i}.{j}" for i in range(1, t + 1) for j in range(2, 12)
    )


def base_graph_edge() -> Graph:
    """Triangle with two pendant leaves (diameter 3)."""
    return Graph(
        [str(v) for v in range(1, 6)],
        [(str(u), str(v)) for u, v in BASE_EDGE_EDGES],
        name="edge-base",
    )


def chain_edge(t: int) -> Graph:
    """t−1 copies of the triangle block, copy i's vertex 5 tied to copy i+1's vertex 1."""
    if t < 2:
        raise ValueError("t must be at least 2 (the family starts at one copy)")
    copies = t - 1
    vertices = [f"{i}.{j}" for i in range(1, copies + 1) for j in range(1, 6)]
    edges = [
        (f"{i}.{u}", f"{i}.{v}")
        for i in range(1, copies + 1)
        for u, v in BASE_EDGE_EDGES
    ]
    edges += [(f"{i}.5", f"{i + 1}.1") for i in range(1, copies)]
    return Graph(vertices, edges, name=f"edge-chain-{t}")


# --- pair-table verification ---------------------------------------------------

@dataclass(frozen=True)
class PairEntry:
    """One neighborhood-pair check: does x_target · f stay in the next power?

    Interior positions require N[k] ∩ N[l] = {target} with the union inside
    supp(f); endpoint positions (1 and 12) require disjoint neighborhoods
    with the union inside {target} ∪ supp(f_i).  ``global_ok`` independently
    confirms x_target·f ∈ J^{t+1} by branch-and-bound, without leaning on the
    per-copy factorization.
    """

    target: str
    pair: tuple[str, str] | None
    intersection_ok: bool
    union_ok: bool
    global_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.pair is not None
            and self.intersection_ok
            and self.union_ok
            and self.global_ok
        )


@dataclass(frozen=True)
class PairTableReport:
    copy_index: int
    entries: tuple[PairEntry, ...]
    endpoint_entries: tuple[PairEntry, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries + self.endpoint_entries)


def _endpoint_entry(
    g: Graph,
    j: MonomialIdeal,
    t: int,
    f: Monomial,
    target: str,
    pair: tuple[str, str],
    allowed: set[str],
    caps: Caps,
) -> PairEntry:
    nk = set(closed_neighborhood(g, pair[0]))
    nl = set(closed_neighborhood(g, pair[1]))
    return PairEntry(
        target=target,
        pair=pair,
        intersection_ok=not (nk & nl),
        union_ok=(nk | nl) <= allowed,
        global_ok=power_contains(j, t + 1, f.times_var(target), caps=caps),
    )


def verify_pair_table(t: int, *, caps: Caps = DEFAULT_CAPS) -> list[PairTableReport]:
    """Replay the pair conditions on chain_ni(t), one report per copy.

    Interior pairs come from PAIR_TABLE; position 1 uses (1, 9) on the first
    copy and (2, 10) on later copies (whose vertex 1 touches the previous
    copy through the connector); position 12 has no printed pair, so the
    lexicographically first valid pair inside the copy is searched for and
    recorded.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    g = chain_ni(t)
    j = ni_ideal(g)
    f = certificate_ni(t)
    fsupp = set(f.support)
    reports = []
    for i in range(1, t + 1):
        def v(pos: int) -> str:
            return f"{i}.{pos}"

        supp_i = {v(pos) for pos in range(2, 12)}
        entries = []
        for pos in range(2, 12):
            k, l = PAIR_TABLE[pos]
            nk = set(closed_neighborhood(g, v(k)))
            nl = set(closed_neighborhood(g, v(l)))
            entries.append(
                PairEntry(
                    target=v(pos),
                    pair=(v(k), v(l)),
                    intersection_ok=(nk & nl) == {v(pos)},
                    union_ok=(nk | nl) <= fsupp,
                    global_ok=power_contains(j, t + 1, f.times_var(v(pos)), caps=caps),
                )
            )
        ep1 = _endpoint_entry(
            g, j, t, f,
            target=v(1),
            pair=(v(1), v(9)) if i == 1 else (v(2), v(10)),
            allowed={v(1)} | supp_i,
            caps=caps,
        )
        # position 12: search the copy for the first valid pair in label order
        allowed12 = {v(12)} | supp_i
        copy_vertices = sorted((v(pos) for pos in range(1, 13)), key=label_key)
        found: tuple[str, str] | None = None
        for k_lbl, l_lbl in itertools.combinations(copy_vertices, 2):
            nk = set(closed_neighborhood(g, k_lbl))
            nl = set(closed_neighborhood(g, l_lbl))
            if not (nk & nl) and (nk | nl) <= allowed12:
                found = (k_lbl, l_lbl)
                break
        global12 = power_contains(j, t + 1, f.times_var(v(12)), caps=caps)
        if found is None:
            ep12 = PairEntry(
                target=v(12), pair=None,
                intersection_ok=False, union_ok=False, global_ok=global12,
            )
        else:
            ep12 = PairEntry(
                target=v(12), pair=found,
                intersection_ok=True, union_ok=True, global_ok=global12,
            )
        reports.append(
            PairTableReport(
                copy_index=i,
                entries=tuple(entries),
                endpoint_entries=(ep1, ep12),
            )
        )
    return reports
