"""Monomials as exact exponent maps, plus their text format.

A monomial is a map variable → positive exponent (the unit monomial is the
empty map); the coefficient field never enters.  The text format is
whitespace-separated ``VAR`` / ``VAR^EXP`` tokens, with the bare string
``"1"`` denoting the unit.  A variable may itself be labeled ``1``: inside a
multi-token monomial the token ``1`` is that variable, and only when x_1
stands alone does it serialize with an explicit exponent (``1^1``) so the
round-trip stays unambiguous.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .labels import label_key, validate_label


class Monomial:
    """Immutable monomial over string-labeled variables."""

    __slots__ = ("_exp", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        exp: dict[str, int] = {}
        for var, e in items:
            validate_label(var)
            if not isinstance(e, int) or isinstance(e, bool) or e <= 0:
                raise ValueError(f"exponent of {var!r} must be a positive integer, got {e!r}")
            if var in exp:
                raise ValueError(f"repeated variable {var!r}")
            exp[var] = e
        self._exp = exp
        self._hash: int | None = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def unit(cls) -> "Monomial":
        return cls()

    @classmethod
    def variable(cls, var: str) -> "Monomial":
        return cls({var: 1})

    @classmethod
    def from_support(cls, vars: Iterable[str]) -> "Monomial":
        """Squarefree product x_W over a set of variables."""
        return cls({v: 1 for v in vars})

    @classmethod
    def from_vector(cls, vec: Iterable[int], ring_vars: Iterable[str]) -> "Monomial":
        return cls({v: e for v, e in zip(ring_vars, vec) if e})

    # -- views ----------------------------------------------------------------

    def items(self) -> Iterator[tuple[str, int]]:
        """(variable, exponent) pairs in ascending label order."""
        return iter(sorted(self._exp.items(), key=lambda kv: label_key(kv[0])))

    @property
    def exponents(self) -> dict[str, int]:
        return dict(self._exp)

    def deg_in(self, var: str) -> int:
        return self._exp.get(var, 0)

    @property
    def degree(self) -> int:
        return sum(self._exp.values())

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(sorted(self._exp, key=label_key))

    def is_unit(self) -> bool:
        return not self._exp

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self._exp.values())

    def vector(self, ring_vars: Iterable[str]) -> tuple[int, ...]:
        """Exponent vector aligned to ``ring_vars`` (error on foreign support)."""
        order = tuple(ring_vars)
        missing = set(self._exp) - set(order)
        if missing:
            raise ValueError(f"variables outside the ring: {sorted(missing, key=label_key)}")
        return tuple(self._exp.get(v, 0) for v in order)

    # -- arithmetic ------------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        exp = dict(self._exp)
        for v, e in other._exp.items():
            exp[v] = exp.get(v, 0) + e
        return Monomial(exp)

    def times_var(self, var: str) -> "Monomial":
        exp = dict(self._exp)
        exp[var] = exp.get(var, 0) + 1
        return Monomial(exp)

    def divides(self, other: "Monomial") -> bool:
        return all(other._exp.get(v, 0) >= e for v, e in self._exp.items())

    def lcm(self, other: "Monomial") -> "Monomial":
        exp = dict(self._exp)
        for v, e in other._exp.items():
            if e > exp.get(v, 0):
                exp[v] = e
        return Monomial(exp)

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial({v: min(e, other._exp[v]) for v, e in self._exp.items() if v in other._exp})

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): exponents max(a − b, 0)."""
        out = {}
        for v, e in self._exp.items():
            r = e - other._exp.get(v, 0)
            if r > 0:
                out[v] = r
        return Monomial(out)

    def power(self, t: int) -> "Monomial":
        if t < 0:
            raise ValueError("negative power")
        if t == 0:
            return Monomial()
        return Monomial({v: e * t for v, e in self._exp.items()})

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exp == other._exp

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._exp.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"


def sort_monomials(ms: Iterable[Monomial]) -> list[Monomial]:
    """Ascending by (total degree, exponent tuple in label order)."""
    return sorted(ms, key=lambda m: (m.degree, tuple(m.items())))


# --- text format -------------------------------------------------------------

def parse_monomial(text: str) -> Monomial:
    """Parse the monomial format: "VAR", "VAR^EXP" tokens, or the unit "1".

    The bare string "1" is the unit monomial; the token "1" alongside other
    tokens is the variable labeled "1".
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty monomial string")
    if tokens == ["1"]:
        return Monomial()
    exp: dict[str, int] = {}
    for tok in tokens:
        if "^" in tok:
            var, sep, raw = tok.partition("^")
            if not var or not raw or not raw.isdigit():
                raise ValueError(f"malformed token {tok!r}")
            e = int(raw)
            if e < 1:
                raise ValueError(f"exponent must be positive in {tok!r}")
        else:
            var, e = tok, 1
        validate_label(var)
        if var in exp:
            raise ValueError(f"repeated variable {var!r}")
        exp[var] = e
    return Monomial(exp)


def format_monomial(m: Monomial) -> str:
    """Serialize in ascending label order; unit is "1"."""
    if m.is_unit():
        return "1"
    parts = [var if e == 1 else f"{var}^{e}" for var, e in m.items()]
    if parts == ["1"]:
        return "1^1"  # keep the lone variable "1" distinct from the unit
    return " ".join(parts)


def parse_ideal_text(text: str) -> list[Monomial]:
    """One monomial per line; blank lines and '#' comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_monomial(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


def format_ideal(ms: Iterable[Monomial]) -> str:
    return "\n".join(format_monomial(m) for m in ms) + "\n"
