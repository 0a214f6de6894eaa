"""Segre value of a single reduction, computed as a character pairing.

For a reduction with numerical type ``[sigma]`` the degree of the restricted
vertical tangent bundle is ``<[sigma], det iota>``.  The Segre invariant of a
bundle is the minimum of this over all reductions, which depends on the
bundle itself and is not computed here.

The ``closed_form_*`` helpers are the classical specialisations.  They are
kept separate from :func:`segre_value` and used only as cross-checks.
"""

from __future__ import annotations

from typing import Sequence

from segrestrat.lattice import Cocharacter, pairing
from segrestrat.parabolic import (
    NumericalType,
    _require_proper,
    character_blocks,
    isotropy_det_char,
)


def expand_to_torus(d: NumericalType) -> Cocharacter:
    """Torus degree vector reproducing ``d`` on every block determinant.

    Each block degree is placed on the first coordinate of its block, all
    other coordinates are zero.  The first coordinate of every block carries
    exponent +1 in that block's determinant, so ``<det_i, result> = d_i``.
    """
    p = d.parabolic
    out = [0] * p.group.ambient_rank
    for block, deg in zip(character_blocks(p), d.block_degrees):
        out[block.coords[0]] = deg
    return Cocharacter(tuple(out))


def segre_value(d: NumericalType) -> int:
    _require_proper(d.parabolic)
    return pairing(isotropy_det_char(d.parabolic), expand_to_torus(d))


# closed forms (oracles)

def closed_form_grassmann(r: int, n: int, total_degree: int, sub_degree: int) -> int:
    """Rank-n subbundle of degree e in a rank-r bundle of degree d: ``n*d - r*e``."""
    return n * total_degree - r * sub_degree


def closed_form_siegel(n: int, e: int) -> int:
    """Rank-n isotropic subbundle of degree e in a symplectic bundle: ``deg Sym^2 F^*``."""
    return -(n + 1) * e


def closed_form_orthogonal_lagrangian(n: int, e: int) -> int:
    """Rank-n isotropic subbundle of degree e in an SO(2n)-bundle: ``deg wedge^2 F^*``."""
    return -(n - 1) * e


def closed_form_gl3_borel(degrees: Sequence[int]) -> int:
    d1, _, d3 = degrees
    return 2 * (d3 - d1)
