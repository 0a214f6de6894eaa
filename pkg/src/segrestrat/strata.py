"""Catalog of Segre strata for the families with published dimension formulas.

Nonemptiness is three-valued.  ``yes`` is returned only inside the range where
a dimension theorem applies; ``no`` when the congruence fails, when ``s <= 0``
(strata live in the moduli of *stable* bundles) or when ``s`` exceeds a proven
upper bound; ``unknown`` in the band between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from segrestrat.errors import DomainError, UnsupportedFamilyError
from segrestrat.parabolic import ParabolicType, dim_flag_variety
from segrestrat.rootdata import GroupDescriptor, TopologicalType, moduli_dimension


class Status(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class DimKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper-bound"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CurveContext:
    genus: int

    def __post_init__(self) -> None:
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 2:
            raise DomainError(f"genus must be an integer >= 2, got {self.genus!r}")


@dataclass(frozen=True)
class StratumRecord:
    group: GroupDescriptor
    delta: TopologicalType
    parabolic: ParabolicType
    s: int
    nonempty: Status
    dim: int | None = None
    dim_is: DimKind = DimKind.UNKNOWN

    def __post_init__(self) -> None:
        if self.delta.group != self.group or self.parabolic.group != self.group:
            raise DomainError("stratum record mixes groups")
        if self.nonempty is Status.NO and self.dim is not None:
            raise DomainError("an empty stratum has no dimension")
        if (self.dim is None) != (self.dim_is is DimKind.UNKNOWN):
            raise DomainError("dim and dim_is disagree")

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "delta": self.delta.value,
            "flag": self.parabolic.label,
            "s": self.s,
            "nonempty": self.nonempty.value,
            "dim": self.dim,
            "dim_is": self.dim_is.value,
        }


def _empty(g, delta, p, s) -> StratumRecord:
    return StratumRecord(g, delta, p, s, Status.NO)


def _unknown(g, delta, p, s) -> StratumRecord:
    return StratumRecord(g, delta, p, s, Status.UNKNOWN)


def hn_upper_bound(p: ParabolicType, ctx: CurveContext) -> int:
    """Upper bound ``g * dim(G/P)`` valid for every G-bundle."""
    return ctx.genus * dim_flag_variety(p)


# type A maximal parabolics

def _check_grassmann(r: int, n: int) -> None:
    if r < 2 or not 1 <= n <= r - 1:
        raise DomainError(f"need r >= 2 and 1 <= n <= r-1, got r={r}, n={n}")


def grassmann_bounds(r: int, n: int, degree: int, ctx: CurveContext) -> tuple[int, int]:
    """(theorem bound gating ``yes``, residue-matched bound gating ``no``)."""
    base = n * (r - n) * (ctx.genus - 1)
    strict = base + (n - 1)
    eps = (n * degree - base) % r
    return strict, base + eps


def _grassmann_status(r, n, degree, s, ctx) -> Status:
    if (s - n * degree) % r:
        return Status.NO
    if s <= 0:
        return Status.NO
    strict, loose = grassmann_bounds(r, n, degree, ctx)
    if s <= strict:
        return Status.YES
    if s <= loose:
        return Status.UNKNOWN
    return Status.NO


def _grassmann_dim(g: GroupDescriptor, n: int, s: int, ctx: CurveContext) -> int:
    """Codimension ``n(r-n)(g-1) - s`` below the moduli space.

    Past ``s = n(r-n)(g-1)`` the only congruent value in range is the generic
    one, whose stratum is open and dense; the codimension count would go
    negative there, so the moduli dimension is returned instead.
    """
    r = g.r
    full = moduli_dimension(g, ctx.genus)
    return min(full, full - (n * (r - n) * (ctx.genus - 1) - s))


def glr_stratum(r: int, n: int, d: int, s: int, ctx: CurveContext) -> StratumRecord:
    """Stratum of GL(r)-bundles of degree d by maximal degree of rank-n subbundles.

    In range the dimension is ``(r^2 - n(r-n))(g-1) + s + 1``.
    """
    _check_grassmann(r, n)
    g = GroupDescriptor("GL", r)
    p = ParabolicType.from_block_sizes(g, (n, r - n))
    delta = TopologicalType(g, d)
    status = _grassmann_status(r, n, d, s, ctx)
    if status is not Status.YES:
        return StratumRecord(g, delta, p, s, status)
    return StratumRecord(g, delta, p, s, status, _grassmann_dim(g, n, s, ctx), DimKind.EXACT)


def pglr_stratum(r: int, n: int, delta_mod_r: int, s: int, ctx: CurveContext) -> StratumRecord:
    """As :func:`glr_stratum`, one Jacobian lower: ``(r^2 - n(r-n) - 1)(g-1) + s``."""
    _check_grassmann(r, n)
    g = GroupDescriptor("PGL", r)
    p = ParabolicType.from_block_sizes(g, (n, r - n))
    delta = TopologicalType.reduced(g, delta_mod_r)
    status = _grassmann_status(r, n, delta.value, s, ctx)
    if status is not Status.YES:
        return StratumRecord(g, delta, p, s, status)
    return StratumRecord(g, delta, p, s, status, _grassmann_dim(g, n, s, ctx), DimKind.EXACT)


# SO(2n) / Spin(2n) with a Lagrangian parabolic

def so2n_bound(n: int, ctx: CurveContext) -> int:
    return (n - 1) * n * (ctx.genus - 1) // 2 + 2


def _orthogonal_stratum(g: GroupDescriptor, delta: TopologicalType, lagrangian: int,
                        s: int, ctx: CurveContext) -> StratumRecord:
    n = g.r // 2
    p = ParabolicType.from_isotropic_flag(g, (n,), lagrangian)
    if s % (n - 1) or s <= 0 or s > hn_upper_bound(p, ctx):
        return _empty(g, delta, p, s)
    if s <= so2n_bound(n, ctx):
        dim = n * (3 * n - 1) * (ctx.genus - 1) // 2 + s
        full = moduli_dimension(g, ctx.genus)
        if dim > full:
            # larger s may still occur above the theorem range, so density is not known
            return StratumRecord(g, delta, p, s, Status.YES, full, DimKind.UPPER_BOUND)
        return StratumRecord(g, delta, p, s, Status.YES, dim, DimKind.EXACT)
    return _unknown(g, delta, p, s)


def so2n_stratum(n: int, delta: int, s: int, ctx: CurveContext,
                 lagrangian: int = 1) -> StratumRecord:
    """Stratum of SO(2n)-bundles by the Lagrangian Segre value.

    The dimension is that of the image in the moduli of SL(2n)-bundles, which
    is finite over the stratum.
    """
    if n < 2:
        raise DomainError(f"SO(2n) strata need n >= 2, got n={n}")
    g = GroupDescriptor("SO", 2 * n)
    return _orthogonal_stratum(g, TopologicalType(g, delta), lagrangian, s, ctx)


def spin2n_stratum(n: int, s: int, ctx: CurveContext, lagrangian: int = 1) -> StratumRecord:
    if n < 2:
        raise DomainError(f"Spin(2n) strata need n >= 2, got n={n}")
    g = GroupDescriptor("Spin", 2 * n)
    return _orthogonal_stratum(g, TopologicalType(g, 0), lagrangian, s, ctx)


# families

@dataclass(frozen=True)
class StratumFamily:
    """A (group, topological type, parabolic) triple with a stratum formula.

    Nonempty strata satisfy ``s % modulus == residue``.
    """

    group: GroupDescriptor
    delta: TopologicalType
    parabolic: ParabolicType
    modulus: int
    residue: int

    def stratum(self, s: int, ctx: CurveContext) -> StratumRecord:
        g, p = self.group, self.parabolic
        if g.family in ("GL", "PGL"):
            r, n = g.r, p.flag_signature[0]
            if g.family == "GL":
                return glr_stratum(r, n, self.delta.value, s, ctx)
            return pglr_stratum(r, n, self.delta.value, s, ctx)
        tag = 2 if p.lagrangian_tag == "lagrangian-2" else 1
        if g.family == "SO":
            return so2n_stratum(g.r // 2, self.delta.value, s, ctx, tag)
        return spin2n_stratum(g.r // 2, s, ctx, tag)

    def congruent(self, s: int) -> bool:
        return (s - self.residue) % self.modulus == 0


def family_of(group: GroupDescriptor, delta: int | TopologicalType,
              parabolic: ParabolicType) -> StratumFamily:
    if isinstance(delta, int):
        delta = TopologicalType(group, delta)
    if delta.group != group or parabolic.group != group:
        raise DomainError("family mixes groups")
    f = group.family
    if f in ("GL", "PGL") and len(parabolic.omitted) == 1:
        n = parabolic.flag_signature[0]
        r = group.r
        return StratumFamily(group, delta, parabolic, r, (n * delta.value) % r)
    if f in ("SO", "Spin") and group.r % 2 == 0 and group.r >= 4 \
            and parabolic.lagrangian_tag is not None and len(parabolic.omitted) == 1:
        n = group.r // 2
        return StratumFamily(group, delta, parabolic, n - 1, 0)
    raise UnsupportedFamilyError(
        f"no stratum formula for {group.name} with flag {parabolic.label}; covered families are "
        "GL(r)/PGL(r) maximal parabolics and SO(2n)/Spin(2n) Lagrangian parabolics"
    )


@dataclass(frozen=True)
class SigmaSet:
    nonempty: frozenset[int]
    unknown: frozenset[int]

    def to_json(self) -> dict:
        return {"nonempty": sorted(self.nonempty), "unknown": sorted(self.unknown)}


def sigma_set(group: GroupDescriptor, delta: int | TopologicalType, parabolic: ParabolicType,
              ctx: CurveContext) -> SigmaSet:
    """Values of s with a nonempty stratum, plus the band left undecided."""
    fam = family_of(group, delta, parabolic)
    yes, unknown = set(), set()
    for s in range(1, hn_upper_bound(parabolic, ctx) + 1):
        status = fam.stratum(s, ctx).nonempty
        if status is Status.YES:
            yes.add(s)
        elif status is Status.UNKNOWN:
            unknown.add(s)
    return SigmaSet(frozenset(yes), frozenset(unknown))


class Order(str, Enum):
    BELOW = "below"
    ABOVE = "above"
    SAME = "same"
    INCOMPARABLE = "incomparable"


def closure_order(s_prime: int, s: int, family: StratumFamily) -> Order:
    """Position of the ``s_prime`` stratum relative to the ``s`` stratum.

    ``below`` means the ``s_prime`` stratum lies in the closure of the ``s`` one.
    """
    if s_prime == s:
        return Order.SAME
    if not (family.congruent(s_prime) and family.congruent(s)) or min(s, s_prime) <= 0:
        return Order.INCOMPARABLE
    return Order.BELOW if s_prime < s else Order.ABOVE
