"""Independent reference computations used as test oracles.

Nothing here calls the grading or coweight machinery of the package; roots of
a parabolic are rebuilt by closing the negative simple roots of the Levi under
addition, and simple-root coefficients come from an exact linear solve.
"""

from __future__ import annotations

from itertools import chain, combinations

import sympy

from segrestrat.rootdata import GroupDescriptor


def enumerate_roots(kind: str, n: int) -> set[tuple[int, ...]]:
    """All roots by brute force over sign patterns; ``n`` is the coordinate length."""
    out: set[tuple[int, ...]] = set()

    def vec(pairs):
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            out.add(vec([(i, 1), (j, -1)]))
            if kind != "A":
                for a in (1, -1):
                    out.add(vec([(i, a), (j, a)]))
        if kind == "B":
            out |= {vec([(i, 1)]), vec([(i, -1)])}
        if kind == "C":
            out |= {vec([(i, 2)]), vec([(i, -2)])}
    return out


def simple_root_matrix(simple) -> sympy.Matrix:
    return sympy.Matrix([list(a.exponents) for a in simple]).T


def solve_simple_coefficients(simple, root) -> list[sympy.Rational]:
    m = simple_root_matrix(simple)
    sol, params = m.gauss_jordan_solve(sympy.Matrix(list(root)))
    assert not params.free_symbols, "simple roots must be linearly independent"
    return list(sol)


def levi_closure(group: GroupDescriptor, omitted) -> set[tuple[int, ...]]:
    """Roots of the Levi: the closure of +-(kept simple roots) under root addition."""
    rs = group.root_system
    all_roots = {a.exponents for a in rs.roots}
    kept = [rs.simple_roots[k - 1].exponents for k in range(1, rs.rank + 1) if k not in omitted]
    frontier = set(kept) | {tuple(-x for x in a) for a in kept}
    found = set(frontier)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                c = tuple(x + y for x, y in zip(a, b))
                if c in all_roots and c not in found:
                    new.add(c)
        found |= new
        frontier = new
    return found


def parabolic_root_set(group: GroupDescriptor, omitted) -> set[tuple[int, ...]]:
    positive = {a.exponents for a in group.root_system.positive_roots}
    return positive | levi_closure(group, omitted)


def dim_parabolic(group: GroupDescriptor, omitted) -> int:
    return group.torus_rank + len(parabolic_root_set(group, omitted))


def subsets(rank: int):
    idx = range(1, rank + 1)
    return chain.from_iterable(combinations(idx, k) for k in range(rank + 1))


def descriptors(max_rank: int = 8) -> list[GroupDescriptor]:
    """Every descriptor whose root system has rank at most ``max_rank``."""
    out = []
    for r in range(2, max_rank + 2):
        out += [GroupDescriptor("GL", r), GroupDescriptor("SL", r), GroupDescriptor("PGL", r)]
        out += [GroupDescriptor("SLmod", r, m) for m in range(2, r + 1) if r % m == 0]
    for n in range(1, max_rank + 1):
        out += [GroupDescriptor("Sp", 2 * n), GroupDescriptor("PSp", 2 * n)]
        out += [GroupDescriptor("SO", 2 * n + 1), GroupDescriptor("Spin", 2 * n + 1)]
        if n >= 2:
            out += [GroupDescriptor("SO", 2 * n), GroupDescriptor("Spin", 2 * n)]
    return out
