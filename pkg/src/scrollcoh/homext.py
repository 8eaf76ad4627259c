"""Hom and Ext dimensions between atoms.

Pairs with a line bundle on either side reduce to a single exact cohomology
table.  Pairs of genuine relative differentials are bracketed by two
independent Koszul chases, one resolving the target and one coresolving the
dual of the source, and the intervals are intersected; nothing indeterminate
is ever collapsed.  The Segre scroll additionally has a closed form for the
first Ext group between shifted building blocks.
"""

from __future__ import annotations

from math import comb

from .relative import chase_bounds, koszul_resolution, omega_cohomology
from .scroll import Scroll
from .sheaves import Atom, FormalSheaf, dual_atom
from .tables import CohomTable, intersect


def ext_line_vs_atom(scroll: Scroll, source: Atom, shift: int, target: Atom) -> CohomTable:
    """Exact Ext^k(source^*[-shift], target) for a line-bundle source.

    The k-th entry is h^{k+shift} of the target twisted by the source's
    divisor; the table is long enough to absorb the homological shift.
    """
    if not source.is_line:
        raise ValueError("source must be a (shifted) line bundle")
    coh = omega_cohomology(scroll, target.p, target.twist + source.twist)
    top = scroll.n + 1 - shift
    return CohomTable.exact(tuple(coh.h(k + shift) for k in range(top + 1)))


def hom_upper_bound(scroll: Scroll, source: Atom, target: Atom) -> CohomTable:
    """Bounds on dim Ext^k(source, target) = h^k(source^v x target).

    Exact whenever either side is a line bundle.  For two genuine relative
    differentials the two Koszul chases run independently and their interval
    tables are intersected; the Hom entry additionally gets the identity
    lower bound 1 when source and target agree.  Entries the chases cannot
    force stay intervals.
    """
    if source.is_line:
        table = omega_cohomology(scroll, target.p, target.twist - source.twist)
    elif target.is_line:
        sd = dual_atom(scroll, source)
        table = omega_cohomology(scroll, sd.p, sd.twist + target.twist)
    else:
        table = intersect(_chase_resolving_target(scroll, source, target),
                          _chase_coresolving_source(scroll, source, target))
    if source == target:
        bounds = list(table.bounds)
        lo, hi = bounds[0]
        if hi < 1:
            raise ValueError("identity morphism outside the computed bounds")
        bounds[0] = (max(lo, 1), hi)
        table = CohomTable(tuple(bounds), table.chi)
    return table


def _chase_resolving_target(scroll: Scroll, source: Atom, target: Atom) -> CohomTable:
    # Koszul-resolve the target and tensor with the source's dual, which is
    # again a single twisted relative differential; every term stays exact.
    sd = dual_atom(scroll, source)
    terms = []
    for piece in koszul_resolution(scroll, target.p, target.twist):
        terms.append(FormalSheaf(tuple((Atom(sd.p, sd.twist + atom.twist), mult)
                                       for atom, mult in piece.terms)))
    return chase_bounds(scroll, terms, solve="cokernel")


def _chase_coresolving_source(scroll: Scroll, source: Atom, target: Atom) -> CohomTable:
    # Dualising the source's Koszul resolution coresolves its dual; tensoring
    # with the target keeps every term a sum of computable atoms.
    res = koszul_resolution(scroll, source.p, source.twist)
    terms = []
    for piece in reversed(res):
        terms.append(FormalSheaf(tuple((Atom(target.p, target.twist - atom.twist), mult)
                                       for atom, mult in piece.terms)))
    return chase_bounds(scroll, terms, solve="kernel")


def segre_ext1(scroll: Scroll, i: int, j: int) -> int:
    """Closed-form dim Ext^1 between -H twists of building blocks i and j on
    the Segre scroll S(1, ..., 1): (i-j-1) * C(n+1, i-j) when i >= j+2 and
    zero otherwise."""
    if any(a != 1 for a in scroll.degrees):
        raise ValueError("the closed form is specific to the Segre scroll")
    n = scroll.n
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError("block indices out of range")
    if i <= j + 1:
        return 0
    return (i - j - 1) * comb(n + 1, i - j)
