"""Root systems of classical type and descriptors for the named classical groups.

Roots are exponent vectors in the coordinate basis of the diagonal torus.  For
type A the ambient coordinate length is ``r`` (the torus of GL(r)); for types
B, C, D of rank ``n`` it is ``n`` (isotropic coordinates).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from segrestrat.errors import DomainError
from segrestrat.lattice import Character

FAMILIES = ("GL", "SL", "SLmod", "PGL", "Sp", "PSp", "SO", "Spin")


def _eps(n: int, *terms: tuple[int, int]) -> Character:
    v = [0] * n
    for i, c in terms:
        v[i] += c
    return Character(tuple(v))


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    ambient_rank: int
    positive_roots: tuple[Character, ...]
    simple_roots: tuple[Character, ...]

    @property
    def roots(self) -> tuple[Character, ...]:
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    @property
    def label(self) -> str:
        return f"{self.type}{self.rank}"

    def doubled_coweight(self, k: int) -> tuple[int, ...]:
        """Twice the fundamental coweight dual to simple root ``k`` (1-based).

        Pairing a root with this vector gives twice its coefficient on the
        ``k``-th simple root.
        """
        if not 1 <= k <= self.rank:
            raise DomainError(f"simple root index {k} outside 1..{self.rank}")
        m = self.ambient_rank
        first_k = tuple(2 if i < k else 0 for i in range(m))
        if self.type in ("A", "B"):
            return first_k
        if self.type == "C":
            return first_k if k < self.rank else (1,) * m
        # type D
        n = self.rank
        if k <= n - 2:
            return first_k
        if k == n - 1:
            return (1,) * (n - 1) + (-1,)
        return (1,) * n

    def simple_coefficients(self, root: Character) -> tuple[int, ...]:
        """Coefficients of ``root`` in the basis of simple roots."""
        out = []
        for k in range(1, self.rank + 1):
            w = self.doubled_coweight(k)
            twice = sum(a * b for a, b in zip(root.exponents, w))
            c = Fraction(twice, 2)
            if c.denominator != 1:
                raise DomainError(f"{root} is not in the root lattice of {self.label}")
            out.append(int(c))
        return tuple(out)


def _type_a(r: int) -> RootSystem:
    pos = tuple(_eps(r, (i, 1), (j, -1)) for i in range(r) for j in range(i + 1, r))
    simple = tuple(_eps(r, (i, 1), (i + 1, -1)) for i in range(r - 1))
    return RootSystem("A", r - 1, r, pos, simple)


def _type_bcd(kind: str, n: int) -> RootSystem:
    pos: list[Character] = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_eps(n, (i, 1), (j, -1)))
            pos.append(_eps(n, (i, 1), (j, 1)))
        if kind == "B":
            pos.append(_eps(n, (i, 1)))
        elif kind == "C":
            pos.append(_eps(n, (i, 2)))
    simple = [_eps(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
    if kind == "B":
        simple.append(_eps(n, (n - 1, 1)))
    elif kind == "C":
        simple.append(_eps(n, (n - 1, 2)))
    else:
        simple.append(_eps(n, (n - 2, 1), (n - 1, 1)))
    return RootSystem(kind, n, n, tuple(pos), tuple(simple))


@dataclass(frozen=True)
class FundamentalGroup:
    """A cyclic group: ``Z`` when ``order`` is None, else ``Z_order`` (order 1 is trivial)."""

    order: int | None

    @property
    def is_free(self) -> bool:
        return self.order is None

    @property
    def free_rank(self) -> int:
        return 1 if self.order is None else 0

    @property
    def torsion(self) -> tuple[int, ...]:
        return () if self.order in (None, 1) else (self.order,)

    @property
    def label(self) -> str:
        if self.order is None:
            return "Z"
        if self.order == 1:
            return "0"
        return f"Z_{self.order}"

    def contains(self, value: int) -> bool:
        if self.order is None:
            return True
        return 0 <= value < self.order

    def reduce(self, value: int) -> int:
        return value if self.order is None else value % self.order

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "label": self.label}


@dataclass(frozen=True)
class GroupDescriptor:
    """One of the eight classical families, with ``r`` the size of the defining matrices."""

    family: str
    r: int
    m: int = 1

    def __post_init__(self) -> None:
        f, r, m = self.family, self.r, self.m
        if f not in FAMILIES:
            raise DomainError(f"unknown group family {f!r}")
        if f != "SLmod" and m != 1:
            raise DomainError("only SL(r)/mu(m) carries a quotient order m")
        if f == "GL" and r < 1:
            raise DomainError("GL(r) needs r >= 1")
        if f in ("SL", "PGL", "SLmod") and r < 2:
            raise DomainError(f"{f}(r) needs r >= 2")
        if f == "SLmod" and (m < 1 or r % m):
            raise DomainError(f"SL({r})/mu({m}) needs m to divide r")
        if f in ("Sp", "PSp") and (r < 2 or r % 2):
            raise DomainError(f"{f}(2n) needs an even size >= 2, got {r}")
        if f in ("SO", "Spin") and r < 3:
            raise DomainError(f"{f}(r) needs r >= 3")

    @property
    def name(self) -> str:
        if self.family == "SLmod":
            return f"SL({self.r})/mu({self.m})"
        return f"{self.family}({self.r})"

    def __str__(self) -> str:
        return self.name

    @property
    def root_type(self) -> str:
        if self.family in ("GL", "SL", "SLmod", "PGL"):
            return "A"
        if self.family in ("Sp", "PSp"):
            return "C"
        return "D" if self.r % 2 == 0 else "B"

    @property
    def dim(self) -> int:
        r = self.r
        if self.family == "GL":
            return r * r
        if self.family in ("SL", "SLmod", "PGL"):
            return r * r - 1
        if self.family in ("Sp", "PSp"):
            n = r // 2
            return n * (2 * n + 1)
        return r * (r - 1) // 2

    @property
    def dim_center(self) -> int:
        return 1 if self.family == "GL" else 0

    @property
    def torus_rank(self) -> int:
        if self.family == "GL":
            return self.r
        if self.family in ("SL", "SLmod", "PGL"):
            return self.r - 1
        return self.r // 2

    @property
    def ambient_rank(self) -> int:
        """Length of the coordinate vectors used for roots and characters."""
        return self.r if self.root_type == "A" else self.r // 2

    @property
    def pi1(self) -> FundamentalGroup:
        f = self.family
        if f == "GL":
            return FundamentalGroup(None)
        if f in ("SL", "Sp", "Spin"):
            return FundamentalGroup(1)
        if f == "PGL":
            return FundamentalGroup(self.r)
        if f == "SLmod":
            return FundamentalGroup(self.m)
        return FundamentalGroup(2)  # PSp, SO

    @cached_property
    def root_system(self) -> RootSystem:
        return root_system_of(self)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "dim_center": self.dim_center,
            "torus_rank": self.torus_rank,
            "root_system": self.root_system.label,
            "pi1": self.pi1.to_json(),
        }


_GROUP_RE = re.compile(r"^(GL|SL|PGL|Sp|PSp|SO|Spin)\((\d+)\)(?:/mu\((\d+)\))?$")


def parse_group(text: str) -> GroupDescriptor:
    """Parse ``GL(3)``, ``SL(6)/mu(2)``, ``Sp(4)`` and friends."""
    match = _GROUP_RE.match(text.strip())
    if not match:
        raise DomainError(f"cannot parse group name {text!r}")
    family, r, m = match.group(1), int(match.group(2)), match.group(3)
    if m is not None:
        if family != "SL":
            raise DomainError(f"only SL(r) admits a /mu(m) quotient, got {text!r}")
        return GroupDescriptor("SLmod", r, int(m))
    return GroupDescriptor(family, r)


def root_system_of(g: GroupDescriptor) -> RootSystem:
    if g.root_type == "A":
        return _type_a(g.r)
    return _type_bcd(g.root_type, g.r // 2)


@dataclass(frozen=True)
class TopologicalType:
    group: GroupDescriptor
    value: int = 0

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError("topological type must be an integer")
        if not self.group.pi1.contains(self.value):
            raise DomainError(
                f"{self.value} is not a reduced element of pi1({self.group.name}) = {self.group.pi1.label}"
            )

    @classmethod
    def reduced(cls, group: GroupDescriptor, value: int) -> TopologicalType:
        return cls(group, group.pi1.reduce(value))


def moduli_dimension(g: GroupDescriptor, genus: int) -> int:
    """Dimension ``(genus - 1) * dim G + dim Z(G)`` of the moduli of stable G-bundles."""
    if genus < 2:
        raise DomainError(f"genus must be >= 2, got {genus}")
    return (genus - 1) * g.dim + g.dim_center
