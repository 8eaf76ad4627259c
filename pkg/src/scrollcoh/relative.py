"""Cohomology of twisted relative differentials.

Everything is driven by the fibrewise Bott regimes: for any twist of
Omega^p_{S|P^1} at most one derived pushforward to the base line survives
and is again a split bundle, so a one-row Leray step gives exact dimensions.
Koszul resolutions built from the relative Euler sequence serve as an
independent route: their alternating Euler characteristics must reproduce
the pushforward answer, and spliced dimension chases bound cohomology of
objects outside the exact engine by intervals that are never guessed tight.
"""

from __future__ import annotations

from functools import lru_cache

from .p1 import SplitBundle, hook_rank
from .scroll import DivClass, Scroll
from .sheaves import Atom, FormalSheaf, line_atom
from .tables import CohomTable, solve_quotient, solve_sub


def fiber_degree(n: int, p: int, a: int) -> int | None:
    """The unique degree where H^*(P^n, Omega^p(a)) can survive, if any."""
    if not 0 <= p <= n:
        return None
    if a >= p + 1:
        return 0
    if a == 0:
        return p
    if a <= p - n - 1:
        return n
    return None


def rel_pushforward(scroll: Scroll, p: int, div: DivClass) -> tuple[int | None, SplitBundle]:
    """The single nonvanishing derived pushforward of Omega^p_{S|P^1}(div).

    Returns (q0, P) with R^{q0} of the projection equal to the split bundle
    P; (None, 0) when the fibrewise cohomology vanishes identically.  With
    div = a*H + b*F the three regimes are: sections for a >= p+1, given by a
    hook Schur functor of the splitting bundle; the trace line O(b) in
    degree p at a = 0; and, for a <= p-n-1, the relative-duality dual of the
    complementary hook in degree n.
    """
    n = scroll.n
    a, b = div.h, div.f
    if not 0 <= p <= n:
        return None, SplitBundle()
    if a >= p + 1:
        return 0, scroll.bundle.hook(a - p, p).twist(b)
    if a == 0:
        return p, SplitBundle((b,))
    if a <= p - n - 1:
        return n, scroll.bundle.hook(-a - (n - p), n - p).twist(-b).dual()
    return None, SplitBundle()


@lru_cache(maxsize=None)
def omega_cohomology(scroll: Scroll, p: int, div: DivClass) -> CohomTable:
    """Exact h^*(S, Omega^p_{S|P^1}(div)) via Leray over the base line."""
    n = scroll.n
    if not 0 <= p <= n:
        return CohomTable.zero(n + 2)
    q0, push = rel_pushforward(scroll, p, div)
    vals = [0] * (n + 2)
    if q0 is not None:
        vals[q0] = push.h0
        vals[q0 + 1] = push.h1
    return CohomTable.exact(vals)


def atom_cohomology(scroll: Scroll, atom: Atom, extra: DivClass | None = None) -> CohomTable:
    div = atom.twist if extra is None else atom.twist + extra
    return omega_cohomology(scroll, atom.p, div)


def sheaf_cohomology(scroll: Scroll, sheaf: FormalSheaf) -> CohomTable:
    """Cohomology of a genuine (nonnegative) atom sum; exact and additive."""
    if not sheaf.is_effective:
        raise ValueError("cohomology needs nonnegative multiplicities")
    table = CohomTable.zero(scroll.n + 2)
    for atom, mult in sheaf.terms:
        table = table + atom_cohomology(scroll, atom).scaled(mult)
    return table


def sheaf_chi(scroll: Scroll, sheaf: FormalSheaf) -> int:
    """Euler characteristic of any signed combination of atoms."""
    return sum(m * atom_cohomology(scroll, a).chi for a, m in sheaf.terms)


def koszul_resolution(scroll: Scroll, p: int, div: DivClass) -> list[FormalSheaf]:
    """Line-bundle resolution of Omega^p_{S|P^1}(div), leftmost term first.

    The exterior powers of the relative Euler sequence splice into the exact
    complex 0 -> W^{n+1}B(-nH) -> ... -> W^{p+1}B(-pH) -> Omega^p(H) -> 0,
    where B is the pullback of the splitting bundle and W^k its k-th exterior
    power; twisting every term by div - H resolves Omega^p(div).  For p = n
    the resolution is empty, the relative canonical bundle being a line
    bundle already.
    """
    n = scroll.n
    if not 0 <= p <= n:
        raise ValueError("relative differentials need 0 <= p <= n")
    if p == n:
        return []
    terms: list[FormalSheaf] = []
    for k in range(n + 1, p, -1):
        wedge = scroll.bundle.wedge(k)
        atoms = tuple((line_atom(DivClass(div.h - k, div.f + w)), 1)
                      for w in wedge.degrees)
        terms.append(FormalSheaf(atoms))
    return terms


def chase_bounds(scroll: Scroll, terms, solve: str = "cokernel") -> CohomTable:
    """Hypercohomology bounds for the object a finite exact complex resolves.

    ``terms`` lists the computable part of the complex from left to right;
    each term must be a genuine atom sum so its cohomology is exact.  With
    solve="cokernel" the unknown is the augmentation on the right (the terms
    are a resolution); with solve="kernel" it is the kernel on the left (a
    coresolution).  Entries the long-exact-sequence chase cannot pin down
    stay intervals; chi is always exact.
    """
    tables = [sheaf_cohomology(scroll, t) for t in terms]
    if not tables:
        return CohomTable.zero(scroll.n + 2)
    if solve == "cokernel":
        acc = tables[0]
        for table in tables[1:]:
            acc = solve_quotient(acc, table)
        return acc
    if solve == "kernel":
        acc = tables[-1]
        for table in reversed(tables[:-1]):
            acc = solve_sub(table, acc)
        return acc
    raise ValueError("solve must be 'cokernel' or 'kernel'")


def pn_omega_cohomology(n: int, p: int, k: int) -> CohomTable:
    """Bott dimensions h^*(P^n, Omega^p(k)), exact for every twist."""
    if n < 1:
        raise ValueError("need n >= 1")
    vals = [0] * (n + 1)
    if 0 <= p <= n:
        if k >= p + 1:
            vals[0] = hook_rank(n + 1, k - p, p)
        elif k == 0:
            vals[p] = 1
        elif k <= p - n - 1:
            vals[n] = hook_rank(n + 1, -k - (n - p), n - p)
    return CohomTable.exact(vals)
