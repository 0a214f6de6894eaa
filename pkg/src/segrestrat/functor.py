"""Central isogenies between classical groups and transfer of strata along them.

Every isogeny here has finite central kernel, so every parabolic contains the
kernel, the flag varieties ``G/P`` and ``H/phi(P)`` agree, and Segre values are
preserved.  Strata therefore transfer with the same ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass

from segrestrat.errors import DomainError, UnsupportedFamilyError
from segrestrat.parabolic import ParabolicType
from segrestrat.rootdata import GroupDescriptor, TopologicalType
from segrestrat.strata import CurveContext, DimKind, Status, StratumRecord

KINDS = ("adjoint", "central-quotient", "quotient-to-adjoint", "adjoint-symplectic", "cover")

_SOURCE_FAMILY = {
    "adjoint": "GL",
    "central-quotient": "SL",
    "quotient-to-adjoint": "SLmod",
    "adjoint-symplectic": "Sp",
    "cover": "Spin",
}


@dataclass(frozen=True)
class Isogeny:
    kind: str
    source: GroupDescriptor
    target: GroupDescriptor

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown isogeny kind {self.kind!r}; expected one of {KINDS}")
        if self.source.family != _SOURCE_FAMILY[self.kind]:
            raise DomainError(f"{self.kind} isogeny cannot start at {self.source.name}")
        if self.target != _target_of(self.kind, self.source, self.target.m):
            raise DomainError(f"{self.kind} isogeny cannot map {self.source.name} to {self.target.name}")

    @classmethod
    def of(cls, kind: str, source: GroupDescriptor, m: int | None = None) -> Isogeny:
        """Build the isogeny of ``kind`` out of ``source``; ``m`` is the quotient
        order for ``central-quotient``."""
        if kind not in KINDS:
            raise DomainError(f"unknown isogeny kind {kind!r}; expected one of {KINDS}")
        if kind == "central-quotient" and m is None:
            raise DomainError("central-quotient needs the order m of mu_m")
        if source.family != _SOURCE_FAMILY[kind]:
            raise DomainError(f"{kind} isogeny cannot start at {source.name}")
        return cls(kind, source, _target_of(kind, source, m or 1))

    def pi1_map(self, value: int) -> int:
        src, tgt = self.source.pi1, self.target.pi1
        if not src.contains(value):
            raise DomainError(f"{value} is not in pi1({self.source.name}) = {src.label}")
        if self.kind == "adjoint":
            return value % self.source.r
        if self.kind == "quotient-to-adjoint":
            r, m = self.source.r, self.source.m
            return (r // m) * value % r
        return tgt.reduce(0)

    @property
    def surjective_on_moduli(self) -> bool:
        """Whether extension of structure group maps onto the target component.

        Established for the adjoint map of GL(r) (every PGL(r)-bundle on a
        curve lifts), for Sp(2n) -> PSp(2n) onto the trivial component, and for
        Spin(r) -> SO(r) onto the ``w_2 = 0`` component.
        """
        return self.kind in ("adjoint", "adjoint-symplectic", "cover")

    def fibre_dimension(self, ctx: CurveContext) -> int:
        # GL(r) -> PGL(r): fibres are Pic^0(X)-torsors; finite kernels give finite fibres
        return ctx.genus if self.kind == "adjoint" else 0


def _target_of(kind: str, source: GroupDescriptor, m: int) -> GroupDescriptor:
    r = source.r
    if kind == "adjoint":
        return GroupDescriptor("PGL", r)
    if kind == "central-quotient":
        return GroupDescriptor("SLmod", r, m)
    if kind == "quotient-to-adjoint":
        return GroupDescriptor("PGL", r)
    if kind == "adjoint-symplectic":
        return GroupDescriptor("PSp", r)
    return GroupDescriptor("SO", r)


def pi1_pushforward(iso: Isogeny, delta: TopologicalType) -> TopologicalType:
    if delta.group != iso.source:
        raise DomainError(f"topological type of {delta.group.name} given to isogeny from {iso.source.name}")
    return TopologicalType(iso.target, iso.pi1_map(delta.value))


def pi1_pushforward_alt(iso: Isogeny, value: int) -> dict | None:
    """For SL(r)/mu(m) -> PGL(r), the reading with pi1 = Z_{r/m} and ``delta -> m*delta``.

    Returned alongside the standard value for comparison; None for other kinds.
    """
    if iso.kind != "quotient-to-adjoint":
        return None
    r, m = iso.source.r, iso.source.m
    order = r // m
    return {
        "source_pi1": "0" if order == 1 else f"Z_{order}",
        "image": (m * value) % r if 0 <= value < order else None,
    }


def parabolic_image(iso: Isogeny, p: ParabolicType) -> ParabolicType:
    if p.group != iso.source:
        raise DomainError(f"parabolic of {p.group.name} given to isogeny from {iso.source.name}")
    if not p.is_proper:
        raise DomainError("image parabolic requested for P = G")
    return ParabolicType(iso.target, p.omitted)


def transfer_stratum(iso: Isogeny, rec: StratumRecord, ctx: CurveContext) -> StratumRecord:
    """Stratum of the target group with the same ``s``.

    The preimage of the target stratum is exactly the source stratum, so a
    nonempty source stratum gives a nonempty target stratum.  Emptiness
    transfers only when the induced map of moduli is surjective.
    """
    if rec.group != iso.source:
        raise UnsupportedFamilyError(
            f"record for {rec.group.name} cannot be transferred along an isogeny from {iso.source.name}"
        )
    delta = pi1_pushforward(iso, rec.delta)
    p = parabolic_image(iso, rec.parabolic)
    surj = iso.surjective_on_moduli

    if rec.nonempty is Status.YES:
        if surj and rec.dim is not None:
            return StratumRecord(iso.target, delta, p, rec.s, Status.YES,
                                 rec.dim - iso.fibre_dimension(ctx), rec.dim_is)
        return StratumRecord(iso.target, delta, p, rec.s, Status.YES)
    if rec.nonempty is Status.NO and surj:
        return StratumRecord(iso.target, delta, p, rec.s, Status.NO)
    return StratumRecord(iso.target, delta, p, rec.s, Status.UNKNOWN)
