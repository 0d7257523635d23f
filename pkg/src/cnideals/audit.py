"""Diameter-bound audits: replay the bound arguments on a concrete instance.

Given a connected graph whose ideal has the maximal ideal associated to its
t-th power, these audits decompose the verified witness into neighborhood
layers and check each step of the corresponding diameter bound:

* closed neighborhood ideals — diam(G) ≤ min(3t+4s−4, 7t−8), driven by
  U = supp(f), W = {u ∈ U : N[u] ⊆ U}, the components W_i of G[W] and their
  neighborhood hulls U_i = N[W_i], V_i = N[U_i];
* edge ideals — diam(G) ≤ 4t−5, driven by the components of G[U], which must
  each contain an odd cycle and jointly satisfy Σn_i ≤ 3(t−1), s ≤ t−1.

Every report carries per-check booleans and is emitted even when a check
fails; failures are data here, not crashes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .assprimes import (
    OracleInfeasible,
    max_ideal_in_ass_exact,
    max_ideal_in_ass_witness_search,
    verify_witness,
)
from .graphs import (
    Graph,
    closed_neighborhood,
    closed_neighborhood_set,
    connected_components,
    contains_odd_cycle,
    diameter,
    induced_subgraph,
    set_distance,
)
from .ideals import edge_ideal, ni_ideal
from .limits import DEFAULT_CAPS, Caps
from .monomials import Monomial, format_monomial


@dataclass(frozen=True)
class NIComponentAudit:
    """One component of G[W] with its neighborhood hulls and diameters.

    a_i is diam(G[W_i]); diam_U_i and diam_V_i are recorded as observations
    (the argument expects a_i + 2 and a_i + 4 as upper bounds but the audit
    does not assume them).
    """

    W_i: tuple[str, ...]
    U_i: tuple[str, ...]
    V_i: tuple[str, ...]
    a_i: int
    diam_U_i: int | float
    diam_V_i: int | float

    def to_json_dict(self) -> dict:
        return {
            "W_i": list(self.W_i),
            "U_i": list(self.U_i),
            "V_i": list(self.V_i),
            "a_i": self.a_i,
            "diam_U_i": _json_num(self.diam_U_i),
            "diam_V_i": _json_num(self.diam_V_i),
        }


def _json_num(x: int | float):
    return x if x != math.inf else "inf"


@dataclass(frozen=True)
class AuditReport:
    """Step-by-step audit for a closed neighborhood ideal witness."""

    graph_id: str
    t: int
    witness: Monomial
    U: tuple[str, ...]
    W: tuple[str, ...]
    components: tuple[NIComponentAudit, ...]
    s: int
    step1_pass: bool
    step2_pass: bool
    step3_max_dist: int
    step4_sum: int
    step4_pass: bool
    bound_value: int
    diam_G: int
    bound_pass: bool

    def to_json_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "t": self.t,
            "witness": format_monomial(self.witness),
            "U": list(self.U),
            "W": list(self.W),
            "components": [c.to_json_dict() for c in self.components],
            "s": self.s,
            "step1_pass": self.step1_pass,
            "step2_pass": self.step2_pass,
            "step3_max_dist": self.step3_max_dist,
            "step4_sum": self.step4_sum,
            "step4_pass": self.step4_pass,
            "bound_value": self.bound_value,
            "diam_G": self.diam_G,
            "bound_pass": self.bound_pass,
        }


@dataclass(frozen=True)
class EdgeComponentAudit:
    U_i: tuple[str, ...]
    n_i: int
    odd_cycle: bool

    def to_json_dict(self) -> dict:
        return {"U_i": list(self.U_i), "n_i": self.n_i, "odd_cycle": self.odd_cycle}


@dataclass(frozen=True)
class EdgeAuditReport:
    """Step-by-step audit for an edge ideal witness."""

    graph_id: str
    t: int
    witness: Monomial
    U: tuple[str, ...]
    components: tuple[EdgeComponentAudit, ...]
    s: int
    sum_n_i: int
    checks: dict[str, bool]
    diam_G: int
    bound_pass: bool

    def to_json_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "t": self.t,
            "witness": format_monomial(self.witness),
            "U": list(self.U),
            "components": [c.to_json_dict() for c in self.components],
            "s": self.s,
            "sum_n_i": self.sum_n_i,
            "checks": dict(self.checks),
            "diam_G": self.diam_G,
            "bound_pass": self.bound_pass,
        }

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values()) and self.bound_pass


def _graph_id(g: Graph) -> str:
    return g.name if g.name else f"graph-{len(g)}v"


def _require_connected(g: Graph) -> int:
    d = diameter(g)
    if d == math.inf:
        raise ValueError("audit requires a connected graph")
    return int(d)


def audit_ni(g: Graph, t: int, f: Monomial, *, caps: Caps = DEFAULT_CAPS) -> AuditReport:
    """Audit the closed-neighborhood diameter bound using witness f at power t."""
    diam_g = _require_connected(g)
    j = ni_ideal(g)
    report = verify_witness(j, t, f)
    if not report.ok:
        raise ValueError(f"not a witness: {report.reason()}")

    u = f.support
    uset = set(u)
    w = tuple(v for v in u if set(closed_neighborhood(g, v)) <= uset)
    step1 = bool(w) and closed_neighborhood_set(g, w) == u
    step2 = closed_neighborhood_set(g, u) == g.vertices

    comps = connected_components(induced_subgraph(g, w)) if w else []
    audits = []
    for comp in comps:
        u_i = closed_neighborhood_set(g, comp)
        v_i = closed_neighborhood_set(g, u_i)
        audits.append(
            NIComponentAudit(
                W_i=comp,
                U_i=u_i,
                V_i=v_i,
                a_i=int(diameter(induced_subgraph(g, comp))),
                diam_U_i=diameter(induced_subgraph(g, u_i)),
                diam_V_i=diameter(induced_subgraph(g, v_i)),
            )
        )
    s = len(audits)

    step3 = 0
    for idx, a in enumerate(audits):
        for b in audits[idx + 1 :]:
            d = set_distance(g, a.V_i, b.V_i)
            if d > step3:
                step3 = int(d)

    step4_sum = sum(a.a_i // 3 + 1 for a in audits)
    step4_pass = step4_sum <= t - 1

    bound_value = min(3 * t + 4 * s - 4, 7 * t - 8) if s else 7 * t - 8
    return AuditReport(
        graph_id=_graph_id(g),
        t=t,
        witness=f,
        U=u,
        W=w,
        components=tuple(audits),
        s=s,
        step1_pass=step1,
        step2_pass=step2,
        step3_max_dist=step3,
        step4_sum=step4_sum,
        step4_pass=step4_pass,
        bound_value=bound_value,
        diam_G=diam_g,
        bound_pass=diam_g <= 7 * t - 8,
    )


def _member_witness(j, t: int, caps: Caps) -> Monomial | None:
    """Exact oracle first; bounded witness search when the colon is infeasible."""
    try:
        res = max_ideal_in_ass_exact(j, t, caps=caps)
    except OracleInfeasible:
        res = max_ideal_in_ass_witness_search(j, t, caps=caps)
    return res.witness if res.member else None


def audit_ni_bound(g: Graph, t: int, *, caps: Caps = DEFAULT_CAPS) -> AuditReport | None:
    """Decide membership, then audit; None when 𝔪 is not associated at power t."""
    _require_connected(g)
    witness = _member_witness(ni_ideal(g), t, caps)
    if witness is None:
        return None
    return audit_ni(g, t, witness, caps=caps)


def audit_edge(g: Graph, t: int, f: Monomial, *, caps: Caps = DEFAULT_CAPS) -> EdgeAuditReport:
    """Audit the edge-ideal diameter bound using witness f at power t."""
    diam_g = _require_connected(g)
    j = edge_ideal(g)
    report = verify_witness(j, t, f)
    if not report.ok:
        raise ValueError(f"not a witness: {report.reason()}")

    u = f.support
    comps = connected_components(induced_subgraph(g, u))
    audits = tuple(
        EdgeComponentAudit(
            U_i=comp,
            n_i=len(comp),
            odd_cycle=contains_odd_cycle(induced_subgraph(g, comp)),
        )
        for comp in comps
    )
    s = len(audits)
    sum_n = sum(a.n_i for a in audits)
    checks = {
        "neighborhood_covers_graph": closed_neighborhood_set(g, u) == g.vertices,
        "odd_cycle_per_component": all(a.odd_cycle for a in audits),
        "sum_n_i_bound": sum_n <= 3 * (t - 1),
        "component_count_bound": s <= t - 1,
    }
    return EdgeAuditReport(
        graph_id=_graph_id(g),
        t=t,
        witness=f,
        U=u,
        components=audits,
        s=s,
        sum_n_i=sum_n,
        checks=checks,
        diam_G=diam_g,
        bound_pass=diam_g <= 4 * t - 5,
    )


def audit_edge_bound(g: Graph, t: int, *, caps: Caps = DEFAULT_CAPS) -> EdgeAuditReport | None:
    """Decide membership for the edge ideal, then audit; None when not a member."""
    _require_connected(g)
    witness = _member_witness(edge_ideal(g), t, caps)
    if witness is None:
        return None
    return audit_edge(g, t, witness, caps=caps)
