from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import subsets
from segrestrat.errors import DomainError, UnsupportedFamilyError
from segrestrat.functor import (
    KINDS,
    Isogeny,
    parabolic_image,
    pi1_pushforward,
    pi1_pushforward_alt,
    transfer_stratum,
)
from segrestrat.parabolic import ParabolicType, dim_flag_variety
from segrestrat.rootdata import GroupDescriptor, TopologicalType, parse_group
from segrestrat.strata import (
    CurveContext,
    DimKind,
    Status,
    StratumRecord,
    glr_stratum,
    pglr_stratum,
    sigma_set,
    so2n_stratum,
    spin2n_stratum,
)


def iso(kind, name, m=None):
    return Isogeny.of(kind, parse_group(name), m)


def grassmann(g, n):
    return ParabolicType.from_block_sizes(g, (n, g.r - n))


def test_pi1_gl_to_pgl():
    a = iso("adjoint", "GL(3)")
    assert pi1_pushforward(a, TopologicalType(a.source, 7)).value == 1
    assert a.target == parse_group("PGL(3)")


def test_pi1_spin_cover():
    c = iso("cover", "Spin(8)")
    out = pi1_pushforward(c, TopologicalType(c.source, 0))
    assert (out.group.name, out.value) == ("SO(8)", 0)


def test_pi1_quotient_to_adjoint_both_conventions():
    q = iso("quotient-to-adjoint", "SL(6)/mu(2)")
    assert pi1_pushforward(q, TopologicalType(q.source, 1)).value == 3
    assert pi1_pushforward_alt(q, 1) == {"source_pi1": "Z_3", "image": 2}
    assert pi1_pushforward_alt(iso("adjoint", "GL(2)"), 1) is None


@given(st.sampled_from([(6, 2), (6, 3), (4, 2), (8, 4), (9, 3), (12, 4)]), st.integers(0, 11))
def test_quotient_to_adjoint_is_injective_homomorphism(rm, v):
    r, m = rm
    q = Isogeny.of("quotient-to-adjoint", GroupDescriptor("SLmod", r, m))
    v %= m
    image = q.pi1_map(v)
    assert (image * m) % r == 0  # lands in the order-m subgroup of Z_r
    assert (q.pi1_map(v) + q.pi1_map((m - v) % m)) % r == 0
    assert (image == 0) == (v == 0)


def test_pi1_value_out_of_range():
    q = iso("quotient-to-adjoint", "SL(6)/mu(2)")
    with pytest.raises(DomainError):
        q.pi1_map(2)


def test_isogeny_construction_errors():
    with pytest.raises(DomainError):
        iso("adjoint", "SL(3)")
    with pytest.raises(DomainError):
        iso("central-quotient", "SL(6)")
    with pytest.raises(DomainError):
        iso("central-quotient", "SL(6)", 4)
    with pytest.raises(DomainError):
        iso("frobenius", "GL(2)")
    with pytest.raises(DomainError):
        Isogeny("adjoint", parse_group("GL(3)"), parse_group("PGL(4)"))


@pytest.mark.parametrize("kind,name,m,flag,dim", [
    ("adjoint", "GL(3)", None, "borel", 3),
    ("adjoint", "GL(5)", None, (2, 3), 6),
    ("adjoint-symplectic", "Sp(4)", None, "siegel", 3),
])
def test_parabolic_image_examples(kind, name, m, flag, dim):
    i = iso(kind, name, m)
    if flag == "borel":
        p = ParabolicType.borel(i.source)
    elif flag == "siegel":
        p = ParabolicType.from_isotropic_flag(i.source, (2,))
    else:
        p = ParabolicType.from_block_sizes(i.source, flag)
    q = parabolic_image(i, p)
    assert q.group == i.target and q.omitted == p.omitted
    assert dim_flag_variety(q) == dim_flag_variety(p) == dim


ALL_ISOGENIES = [
    iso("adjoint", "GL(4)"), iso("central-quotient", "SL(6)", 3),
    iso("quotient-to-adjoint", "SL(6)/mu(2)"), iso("adjoint-symplectic", "Sp(6)"),
    iso("cover", "Spin(8)"), iso("cover", "Spin(7)"),
]


@pytest.mark.parametrize("i", ALL_ISOGENIES, ids=lambda i: f"{i.kind}:{i.source}")
def test_every_parabolic_has_an_image(i):
    for omitted in subsets(i.source.root_system.rank):
        if omitted:
            p = ParabolicType(i.source, frozenset(omitted))
            assert dim_flag_variety(parabolic_image(i, p)) == dim_flag_variety(p)
    assert {i.kind for i in ALL_ISOGENIES} == set(KINDS)


def test_parabolic_image_errors():
    a = iso("adjoint", "GL(3)")
    with pytest.raises(DomainError):
        parabolic_image(a, ParabolicType(a.source, frozenset()))
    with pytest.raises(DomainError):
        parabolic_image(a, ParabolicType.borel(parse_group("GL(4)")))


def test_transfer_gl2_example():
    ctx = CurveContext(2)
    rec = glr_stratum(2, 1, 1, 1, ctx)
    out = transfer_stratum(iso("adjoint", "GL(2)"), rec, ctx)
    assert (out.group.name, out.delta.value, out.s, out.nonempty) == ("PGL(2)", 1, 1, Status.YES)
    assert out.dim == pglr_stratum(2, 1, 1, 1, ctx).dim == rec.dim - 2


@pytest.mark.parametrize("genus", range(2, 6))
def test_sigma_equality_gl3_pgl3(genus):
    ctx = CurveContext(genus)
    gl3, pgl3 = parse_group("GL(3)"), parse_group("PGL(3)")
    a = sigma_set(gl3, 0, grassmann(gl3, 1), ctx)
    b = sigma_set(pgl3, 0, grassmann(pgl3, 1), ctx)
    assert a == b


def test_spin_forward_transfer():
    ctx = CurveContext(3)
    c = iso("cover", "Spin(6)")
    for s in range(1, 10):
        rec = spin2n_stratum(3, s, ctx)
        out = transfer_stratum(c, rec, ctx)
        direct = so2n_stratum(3, 0, s, ctx)
        assert (out.s, out.nonempty, out.dim) == (s, direct.nonempty, direct.dim)


def test_non_surjective_kinds_only_push_forward():
    ctx = CurveContext(2)
    q = iso("quotient-to-adjoint", "SL(4)/mu(2)")
    p = grassmann(q.source, 2)
    t = TopologicalType(q.source, 1)
    yes = transfer_stratum(q, StratumRecord(q.source, t, p, 4, Status.YES, 10, DimKind.EXACT), ctx)
    assert (yes.nonempty, yes.dim, yes.delta.value) == (Status.YES, None, 2)
    no = transfer_stratum(q, StratumRecord(q.source, t, p, 4, Status.NO), ctx)
    assert no.nonempty is Status.UNKNOWN


def test_transfer_rejects_foreign_record():
    ctx = CurveContext(2)
    with pytest.raises(UnsupportedFamilyError):
        transfer_stratum(iso("adjoint", "GL(3)"), glr_stratum(2, 1, 1, 1, ctx), ctx)


def test_composition_through_the_intermediate_quotient():
    ctx = CurveContext(2)
    sl = parse_group("SL(6)")
    first = Isogeny.of("central-quotient", sl, 2)
    second = Isogeny.of("quotient-to-adjoint", first.target)
    direct = Isogeny.of("central-quotient", sl, 6)  # SL(6)/mu(6) is PGL(6) up to naming
    for omitted in ({1}, {3}, {1, 4}):
        p = ParabolicType(sl, frozenset(omitted))
        rec = StratumRecord(sl, TopologicalType(sl, 0), p, 3, Status.YES)
        two_step = transfer_stratum(second, transfer_stratum(first, rec, ctx), ctx)
        one_step = transfer_stratum(direct, rec, ctx)
        assert two_step.s == one_step.s == 3
        assert two_step.nonempty is one_step.nonempty is Status.YES
        assert two_step.parabolic.omitted == one_step.parabolic.omitted
        assert two_step.delta.value == one_step.delta.value == 0


@given(st.integers(2, 5), st.data(), st.integers(2, 5), st.integers(-5, 25))
def test_transfer_preserves_s_and_status(r, data, genus, s):
    n = data.draw(st.integers(1, r - 1))
    d = data.draw(st.integers(-6, 6))
    ctx = CurveContext(genus)
    a = Isogeny.of("adjoint", GroupDescriptor("GL", r))
    rec = glr_stratum(r, n, d, s, ctx)
    out = transfer_stratum(a, rec, ctx)
    direct = pglr_stratum(r, n, d, s, ctx)
    assert out.s == s
    assert (out.nonempty, out.dim, out.delta) == (direct.nonempty, direct.dim, direct.delta)
