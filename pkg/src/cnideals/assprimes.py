"""Deciding whether the maximal homogeneous ideal is an associated prime.

Everything revolves around the socle test for 𝔪 = (x_1, …, x_n):

    𝔪 ∈ Ass(S/J^t)  ⟺  (J^t : 𝔪) ≠ J^t
                     ⟺  ∃ monomial f with f ∉ J^t and x_i·f ∈ J^t for all i,

and for squarefree J such an f exists with deg_i(f) ≤ t−1 in every variable,
which bounds the witness search space.  Three independent strategies are
exposed (exact colon, bounded witness search, certificate verification) plus
a power-by-power stability scan and the composition rule that reduces a
disjoint union to its connected components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .ideals import MonomialIdeal, power_contains
from .limits import DEFAULT_CAPS, CapExceeded, Caps
from .monomials import Monomial, format_monomial

STRATEGY_EXACT = "exact-colon"
STRATEGY_SEARCH = "witness-search"
STRATEGY_CERTIFICATE = "certificate"


class OracleInfeasible(RuntimeError):
    """A strategy hit its resource cap before reaching a verdict."""


@dataclass(frozen=True)
class AssResult:
    """Verdict of one strategy at one power."""

    member: bool
    power: int
    strategy: str
    witness: Monomial | None
    checks: dict[str, bool]

    def to_json_dict(self) -> dict:
        return {
            "power": self.power,
            "member": self.member,
            "strategy": self.strategy,
            "witness": format_monomial(self.witness) if self.witness is not None else None,
            "checks": dict(self.checks),
        }


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of the three witness conditions, reported individually.

    (a) deg_i(f) < t for every ring variable;
    (b) f ∉ J^t;
    (c) x_i·f ∈ J^t for every ring variable.
    """

    deg_bound: bool
    not_in_power: bool
    closure: bool
    failing_deg_vars: tuple[str, ...]
    failing_closure_vars: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.deg_bound and self.not_in_power and self.closure

    def reason(self) -> str:
        if self.ok:
            return "all conditions hold"
        parts = []
        if not self.deg_bound:
            parts.append(f"(a) fails: deg >= t in {', '.join(self.failing_deg_vars)}")
        if not self.not_in_power:
            parts.append("(b) fails: f lies in J^t")
        if not self.closure:
            parts.append(f"(c) fails: x_i*f not in J^t for {', '.join(self.failing_closure_vars)}")
        return "; ".join(parts)

    def checks_dict(self) -> dict[str, bool]:
        return {
            "deg_bound": self.deg_bound,
            "not_in_power": self.not_in_power,
            "closure": self.closure,
        }


@dataclass(frozen=True)
class AstabScan:
    """Membership verdicts for powers 1..t_max; None marks an infeasible power."""

    per_power: tuple[tuple[int, bool | None], ...]
    lower_bound: int


def verify_witness(j: MonomialIdeal, t: int, f: Monomial) -> WitnessReport:
    """Check the three witness conditions for f at power t, reporting each."""
    if t < 1:
        raise ValueError("power must be a positive integer")
    bad_deg = tuple(v for v, e in f.items() if e >= t)
    # validate support early so (b)/(c) see an aligned vector
    f.vector(j.ring_vars)
    not_in_power = not power_contains(j, t, f)
    bad_closure = tuple(v for v in j.ring_vars if not power_contains(j, t, f.times_var(v)))
    return WitnessReport(
        deg_bound=not bad_deg,
        not_in_power=not_in_power,
        closure=not bad_closure,
        failing_deg_vars=bad_deg,
        failing_closure_vars=bad_closure,
    )


def _reduce_witness(j: MonomialIdeal, t: int, f: Monomial) -> tuple[Monomial, bool]:
    """Divide out variables with deg_i(f) ≥ t while conditions (b), (c) survive.

    The exact oracle's extracted generator already satisfies (b) and (c); this
    loop works toward (a).  Returns the reduced monomial and whether the
    degree bound was reached (no guarantee it can be — the outcome is
    surfaced, not assumed).
    """
    while True:
        over = [v for v, e in f.items() if e >= t]
        if not over:
            return f, True
        for v in over:
            cand = f.quotient(Monomial.variable(v))
            if power_contains(j, t, cand):
                continue  # reduction broke (b)
            if all(power_contains(j, t, cand.times_var(w)) for w in j.ring_vars):
                f = cand
                break
        else:
            return f, False


def max_ideal_in_ass_exact(
    j: MonomialIdeal, t: int, *, caps: Caps = DEFAULT_CAPS
) -> AssResult:
    """Socle test by exact colon: member ⟺ (J^t : 𝔪) ≠ J^t.

    The quotient is computed as J^t + ∩_i D_i where D_i divides each
    x_i-divisible generator by x_i — identical to folding (J^t : x_i) over
    all variables, but with far smaller intermediates.  When membership
    holds, the lexicographically first new minimal generator is returned as
    the witness.
    """
    if t < 1:
        raise ValueError("power must be a positive integer")
    if j.is_zero():
        raise ValueError("zero ideal has no socle test")
    try:
        p_vecs = kernels.expand_power(j.vectors(), t, caps.products)
        _, new = kernels.socle_quotient(p_vecs, caps.intersection_products)
    except CapExceeded as exc:
        raise OracleInfeasible(f"exact colon at power {t}: {exc}") from exc
    if not new:
        return AssResult(
            member=False,
            power=t,
            strategy=STRATEGY_EXACT,
            witness=None,
            checks={"q_equals_p": True},
        )
    witness = Monomial.from_vector(new[0], j.ring_vars)
    witness, bounded = _reduce_witness(j, t, witness)
    return AssResult(
        member=True,
        power=t,
        strategy=STRATEGY_EXACT,
        witness=witness,
        checks={"q_equals_p": False, "deg_bound": bounded, "not_in_power": True, "closure": True},
    )


def max_ideal_in_ass_witness_search(
    j: MonomialIdeal, t: int, *, caps: Caps = DEFAULT_CAPS
) -> AssResult:
    """Exhaustive search for a witness with all exponents ≤ t−1.

    Sound as a complete test only for squarefree ideals (where a witness, if
    any exists, is guaranteed inside the bounded box), so squarefreeness is
    required.  Candidates are enumerated lexicographically and the first hit
    is returned.
    """
    if t < 1:
        raise ValueError("power must be a positive integer")
    if j.is_zero():
        raise ValueError("zero ideal has no socle test")
    if not all(g.is_squarefree() for g in j.generators):
        raise ValueError("witness search requires a squarefree ideal")
    n = len(j.ring_vars)
    try:
        vec = kernels.search_witness(j.vectors(), t, n, caps.witness_candidates)
    except CapExceeded as exc:
        raise OracleInfeasible(f"witness search at power {t}: {exc}") from exc
    if vec is None:
        return AssResult(
            member=False,
            power=t,
            strategy=STRATEGY_SEARCH,
            witness=None,
            checks={"space_exhausted": True},
        )
    witness = Monomial.from_vector(vec, j.ring_vars)
    return AssResult(
        member=True,
        power=t,
        strategy=STRATEGY_SEARCH,
        witness=witness,
        checks={"deg_bound": True, "not_in_power": True, "closure": True},
    )


def certify(j: MonomialIdeal, t: int, f: Monomial) -> AssResult:
    """Turn a supplied certificate monomial into a verdict via verify_witness."""
    report = verify_witness(j, t, f)
    return AssResult(
        member=report.ok,
        power=t,
        strategy=STRATEGY_CERTIFICATE,
        witness=f if report.ok else None,
        checks=report.checks_dict(),
    )


def astab_scan(j: MonomialIdeal, t_max: int, *, caps: Caps = DEFAULT_CAPS) -> AstabScan:
    """Run the exact oracle for t = 1..t_max and extract stability evidence.

    An infeasible power is recorded as None rather than halting the scan.
    lower_bound is the largest power p whose verdict differs from p+1 (both
    known) — membership still changing at p is evidence the associated primes
    have not stabilized below p+1 — or 0 when no flip is visible.
    """
    if t_max < 1:
        raise ValueError("t_max must be a positive integer")
    per_power: list[tuple[int, bool | None]] = []
    for t in range(1, t_max + 1):
        try:
            per_power.append((t, max_ideal_in_ass_exact(j, t, caps=caps).member))
        except OracleInfeasible:
            per_power.append((t, None))
    lower = 0
    for (_, a), (p, b) in zip(per_power, per_power[1:]):
        if a is not None and b is not None and a != b:
            lower = p - 1
    return AstabScan(per_power=tuple(per_power), lower_bound=lower)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` positives."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def disconnected_combine(component_results: Sequence[Sequence[bool]], t: int) -> bool:
    """Membership for a disjoint union from its components' power verdicts.

    For a union with s components, 𝔪 ∈ Ass(S/J^t) iff there are positive
    a_1 + … + a_s = t + s − 1 with component i a member at power a_i.  Each
    vector must cover powers 1..(t+s−1) (index p-1 holds power p).
    """
    if t < 1:
        raise ValueError("power must be a positive integer")
    s = len(component_results)
    if s < 1:
        raise ValueError("need at least one component")
    need = t + s - 1
    for idx, vec in enumerate(component_results):
        if len(vec) < need:
            raise ValueError(
                f"component {idx} membership vector covers {len(vec)} powers, needs {need}"
            )
    for comp in _compositions(need, s):
        if all(component_results[i][a - 1] for i, a in enumerate(comp)):
            return True
    return False
