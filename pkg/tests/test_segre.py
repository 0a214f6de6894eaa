from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segrestrat.errors import DegenerateParabolicError
from segrestrat.lattice import Cocharacter, pairing
from segrestrat.parabolic import NumericalType, ParabolicType, character_blocks, isotropy_det_char
from segrestrat.rootdata import GroupDescriptor, parse_group
from segrestrat.segre import (
    closed_form_gl3_borel,
    closed_form_grassmann,
    closed_form_orthogonal_lagrangian,
    closed_form_siegel,
    expand_to_torus,
    segre_value,
)

small = st.integers(-20, 20)


def grassmann(r, n, e, d):
    p = ParabolicType.from_block_sizes(GroupDescriptor("GL", r), (n, r - n))
    return NumericalType(p, (e, d - e))


def test_balanced_degree_gives_zero():
    assert segre_value(grassmann(3, 1, 0, 0)) == 0


@given(st.integers(2, 9), st.data(), small, small)
def test_grassmann_closed_form(r, data, d, e):
    n = data.draw(st.integers(1, r - 1))
    assert segre_value(grassmann(r, n, e, d)) == closed_form_grassmann(r, n, d, e)


@given(st.integers(1, 6), small)
def test_siegel_and_lagrangian(n, e):
    sp = ParabolicType.from_isotropic_flag(GroupDescriptor("Sp", 2 * n), (n,))
    assert segre_value(NumericalType(sp, (e,))) == closed_form_siegel(n, e)
    if n >= 2:
        for tag in (1, 2):
            so = ParabolicType.from_isotropic_flag(GroupDescriptor("SO", 2 * n), (n,), tag)
            assert segre_value(NumericalType(so, (e,))) == closed_form_orthogonal_lagrangian(n, e)


@given(small, small, small)
def test_gl3_borel(d1, d2, d3):
    b = ParabolicType.borel(GroupDescriptor("GL", 3))
    assert segre_value(NumericalType(b, (d1, d2, d3))) == closed_form_gl3_borel((d1, d2, d3))


def test_expand_examples():
    b = ParabolicType.borel(GroupDescriptor("GL", 3))
    assert expand_to_torus(NumericalType(b, (4, -1, 2))).degrees == (4, -1, 2)
    assert expand_to_torus(grassmann(3, 1, 2, 5)).degrees == (2, 3, 0)
    sp = ParabolicType.from_isotropic_flag(parse_group("Sp(4)"), (2,))
    assert expand_to_torus(NumericalType(sp, (7,))).degrees == (7, 0)


@st.composite
def type_a_numerical(draw):
    sizes = draw(st.lists(st.integers(1, 4), min_size=2, max_size=4))
    p = ParabolicType.from_block_sizes(GroupDescriptor("GL", sum(sizes)), sizes)
    degs = tuple(draw(st.lists(small, min_size=len(sizes), max_size=len(sizes))))
    return NumericalType(p, degs)


@given(type_a_numerical())
def test_expansion_reproduces_block_degrees(nt):
    lam = expand_to_torus(nt)
    for block, deg in zip(character_blocks(nt.parabolic), nt.block_degrees):
        assert pairing(block.det, lam) == deg


@given(type_a_numerical(), st.data())
def test_redistribution_within_blocks_is_invisible(nt, data):
    det = isotropy_det_char(nt.parabolic)
    spread = []
    for block, deg in zip(character_blocks(nt.parabolic), nt.block_degrees):
        parts = data.draw(st.lists(small, min_size=block.size - 1, max_size=block.size - 1))
        spread += [deg - sum(parts), *parts]
    assert pairing(det, Cocharacter(tuple(spread))) == segre_value(nt)


@given(type_a_numerical())
def test_reversed_flag_with_negated_degrees(nt):
    sizes = nt.parabolic.flag_signature
    q = ParabolicType.from_block_sizes(nt.parabolic.group, tuple(reversed(sizes)))
    dual = NumericalType(q, tuple(-d for d in reversed(nt.block_degrees)))
    assert segre_value(dual) == segre_value(nt)


@pytest.mark.parametrize("names", [("GL(4)", "PGL(4)", "SL(4)", "SL(4)/mu(2)"),
                                   ("Sp(6)", "PSp(6)"), ("SO(8)", "Spin(8)"), ("SO(7)", "Spin(7)")])
def test_isogeny_classes_agree(names):
    groups = [parse_group(x) for x in names]
    rank = groups[0].root_system.rank
    for mask in range(1, 2 ** rank):
        omitted = frozenset(k for k in range(1, rank + 1) if mask >> (k - 1) & 1)
        ps = [ParabolicType(g, omitted) for g in groups]
        k = len(character_blocks(ps[0]))
        degs = tuple(range(-k, 2 * k, 3))[:k]
        values = {segre_value(NumericalType(p, degs)) for p in ps}
        assert len(values) == 1


def test_degenerate_rejected():
    p = ParabolicType(GroupDescriptor("GL", 3), frozenset())
    with pytest.raises(DegenerateParabolicError):
        segre_value(NumericalType(p, (0,)))
