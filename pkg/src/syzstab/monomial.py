"""Monomials with nonnegative integer exponents, and finite families of them.

A monomial is an exponent vector over a fixed list of variables x0, x1, ...
Families keep their members in a canonical order (degree ascending, then
exponent vector descending lexicographically) so that equal families always
serialize identically and member indices are reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateMemberError,
    FamilyFormatError,
    MismatchedVariablesError,
)

# Guard against pathological inputs; everything downstream assumes exact
# integer arithmetic, which stays cheap only for sane exponents.
MAX_DEGREE = 10**6

_TOKEN_RE = re.compile(r"^[xX](\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    """A single monomial, stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) < 2:
            raise ValueError("a monomial needs at least two variables")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        if sum(exps) > MAX_DEGREE:
            raise ValueError(f"degree {sum(exps)} exceeds the limit {MAX_DEGREE}")

    @property
    def var_count(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_pure_power(self) -> bool:
        """True when exactly one variable occurs (with positive exponent)."""
        return sum(1 for e in self.exponents if e > 0) == 1

    def gcd(self, other: Monomial) -> Monomial:
        """Componentwise minimum of the two exponent vectors."""
        if other.var_count != self.var_count:
            raise MismatchedVariablesError(
                f"cannot combine monomials over {self.var_count} and "
                f"{other.var_count} variables"
            )
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        if other.var_count != self.var_count:
            raise MismatchedVariablesError(
                f"cannot compare monomials over {self.var_count} and "
                f"{other.var_count} variables"
            )
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def canon_key(self) -> tuple[int, tuple[int, ...]]:
        """Sort key: degree ascending, then exponents descending-lex."""
        return (self.degree, tuple(-e for e in self.exponents))

    @classmethod
    def unit(cls, var_count: int) -> Monomial:
        return cls((0,) * var_count)

    @classmethod
    def pure_power(cls, var_count: int, index: int, exponent: int) -> Monomial:
        if not 0 <= index < var_count:
            raise ValueError(f"variable index {index} out of range")
        exps = [0] * var_count
        exps[index] = exponent
        return cls(tuple(exps))

    @classmethod
    def parse(cls, text: str, var_count: int | None = None) -> Monomial:
        """Parse a single monomial, either compact (``x0^5 x2^3``) or as a
        bare exponent vector (``5 0 3``)."""
        kind, payload = _parse_member_line(text)
        if kind == "vector":
            if var_count is not None and len(payload) != var_count:
                raise FamilyFormatError(
                    f"expected {var_count} exponents, got {len(payload)}"
                )
            return cls(tuple(payload))
        if var_count is None:
            if kind == "unit":
                raise FamilyFormatError("cannot infer variable count from '1'")
            var_count = max(2, max(i for i, _ in payload) + 1)
        return _compact_to_monomial(kind, payload, var_count)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return " ".join(parts)


def _parse_member_line(line: str):
    """Classify one member line; returns (kind, payload)."""
    tokens = line.split()
    if not tokens:
        raise FamilyFormatError("empty monomial")
    if tokens == ["1"]:
        return "unit", None
    if all(tok.isdigit() for tok in tokens):
        return "vector", [int(tok) for tok in tokens]
    pairs = []
    for tok in tokens:
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise FamilyFormatError(f"unrecognized token {tok!r}")
        index = int(m.group(1))
        exponent = 1 if m.group(2) is None else int(m.group(2))
        pairs.append((index, exponent))
    return "compact", pairs


def _compact_to_monomial(kind: str, pairs, var_count: int) -> Monomial:
    exps = [0] * var_count
    if kind == "compact":
        for index, exponent in pairs:
            if index >= var_count:
                raise FamilyFormatError(
                    f"variable x{index} out of range for {var_count} variables"
                )
            exps[index] += exponent
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class MonomialFamily:
    """An ordered set of distinct monomials over a common variable list.

    Construction canonicalizes member order, so two families with the same
    member set compare equal and report the same member indices.
    """

    var_count: int
    members: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise FamilyFormatError("a family needs at least one member")
        for m in members:
            if m.var_count != self.var_count:
                raise MismatchedVariablesError(
                    f"member {m} has {m.var_count} variables, family expects "
                    f"{self.var_count}"
                )
        ordered = tuple(sorted(members, key=Monomial.canon_key))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise DuplicateMemberError(f"duplicate member {a}")
        object.__setattr__(self, "members", ordered)

    @classmethod
    def of(
        cls, members: Iterable[Monomial | Sequence[int]], var_count: int | None = None
    ) -> MonomialFamily:
        """Build a family from monomials or raw exponent vectors."""
        monos = [
            m if isinstance(m, Monomial) else Monomial(tuple(m)) for m in members
        ]
        if var_count is None:
            if not monos:
                raise FamilyFormatError("a family needs at least one member")
            var_count = monos[0].var_count
        return cls(var_count, tuple(monos))

    @property
    def n(self) -> int:
        return len(self.members)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.degree for m in self.members)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    @property
    def is_equal_degree(self) -> bool:
        return len(set(self.degrees)) == 1

    def overall_gcd(self) -> Monomial:
        return reduce(Monomial.gcd, self.members)

    def is_m_primary(self) -> bool:
        """True when the family contains a pure power of every variable,
        i.e. the ideal it generates contains the whole maximal ideal to a
        power and cuts out only the origin."""
        covered = [False] * self.var_count
        for m in self.members:
            if m.is_pure_power:
                covered[next(i for i, e in enumerate(m.exponents) if e > 0)] = True
        return all(covered)

    def multiples_of(self, g: Monomial) -> tuple[Monomial, ...]:
        """Members divisible by ``g``, in family order."""
        return tuple(m for m in self.members if g.divides(m))

    def indices_of_multiples(self, g: Monomial) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.members) if g.divides(m))

    # -- serialization ---------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> MonomialFamily:
        """Parse the line-oriented family format.

        One monomial per line, compact (``x0^5 x2^3``) or bare exponent
        vector (``5 0 3``); ``#`` starts a comment; an optional first line
        ``vars=K`` pins the variable count.
        """
        var_count: int | None = None
        raw: list[tuple[str, object]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            header = re.match(r"^vars\s*=\s*(\d+)$", line)
            if header:
                if raw or var_count is not None:
                    raise FamilyFormatError(
                        f"line {lineno}: vars= header must come first"
                    )
                var_count = int(header.group(1))
                if var_count < 2:
                    raise FamilyFormatError("vars= must be at least 2")
                continue
            try:
                raw.append(_parse_member_line(line))
            except FamilyFormatError as err:
                raise FamilyFormatError(f"line {lineno}: {err}") from None
        if not raw:
            raise FamilyFormatError("no monomials found")
        if var_count is None:
            vector_lens = {len(p) for kind, p in raw if kind == "vector"}
            if len(vector_lens) > 1:
                raise FamilyFormatError(
                    f"inconsistent exponent vector lengths {sorted(vector_lens)}"
                )
            if vector_lens:
                var_count = vector_lens.pop()
                if var_count < 2:
                    raise FamilyFormatError("exponent vectors need at least 2 entries")
            else:
                indices = [
                    i for kind, p in raw if kind == "compact" for i, _ in p
                ]
                if not indices:
                    raise FamilyFormatError("cannot infer variable count")
                var_count = max(2, max(indices) + 1)
        members = []
        for kind, payload in raw:
            if kind == "vector":
                if len(payload) != var_count:
                    raise FamilyFormatError(
                        f"expected {var_count} exponents, got {len(payload)}"
                    )
                members.append(Monomial(tuple(payload)))
            else:
                members.append(_compact_to_monomial(kind, payload, var_count))
        return cls(var_count, tuple(members))

    def to_text(self) -> str:
        lines = [f"vars={self.var_count}"]
        lines.extend(str(m) for m in self.members)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> MonomialFamily:
        try:
            var_count = int(data["vars"])
            members = [Monomial(tuple(int(e) for e in v)) for v in data["members"]]
        except (KeyError, TypeError, ValueError) as err:
            raise FamilyFormatError(f"bad family JSON: {err}") from None
        return cls(var_count, tuple(members))

    def to_json_dict(self) -> dict:
        return {
            "vars": self.var_count,
            "members": [list(m.exponents) for m in self.members],
        }

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.members) + "}"


def exponent_vectors_of_degree(
    var_count: int, degree: int
) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of the given total degree, in canonical order
    (descending lexicographic), without the Monomial wrapper."""
    if var_count < 2:
        raise ValueError("need at least two variables")
    if degree < 0:
        raise ValueError("degree must be nonnegative")

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for e in range(remaining, -1, -1):
            yield from rec(prefix + (e,), remaining - e, slots - 1)

    return rec((), degree, var_count)


def monomials_of_degree(var_count: int, degree: int) -> Iterator[Monomial]:
    """All monomials of the given total degree, in canonical order."""
    for exps in exponent_vectors_of_degree(var_count, degree):
        yield Monomial(exps)
