"""Ulrich bundles on a scroll: building blocks, verification, classification
into filtration multiplicities, type enumeration, and the Veronese tables.

Scope: rational normal scrolls, plus the Veronese surface and threefold
through their degree-two collections.  Quadric hypersurfaces and their
spinor bundles need machinery this engine does not have and are excluded.
Numeric types carry no extension data: indecomposability is never asserted
from numerics alone, only slopes and Hom/Ext bounds are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .beilinson import (BeilinsonTable, NotDiagonalError, beilinson_table,
                        beilinson_table_from_profile, diagonal_type)
from .relative import pn_omega_cohomology, sheaf_cohomology
from .scroll import DivClass, H, Scroll
from .sheaves import (Atom, FormalSheaf, atom_rank, deg_slope, omega_atom,
                      sheaf_rank)


def block_atom(scroll: Scroll, i: int) -> Atom:
    """The i-th building block Omega^i_{S|P^1}((i+1)H - F), line-normalised
    at the ends: O(H - F) for i = 0, O((c-1)F) for i = n."""
    if not 0 <= i <= scroll.n:
        raise ValueError("block index out of range")
    atom = omega_atom(scroll, i, DivClass.from_pair(i, i + 1))
    assert atom is not None
    return atom


def block(scroll: Scroll, i: int) -> FormalSheaf:
    return FormalSheaf.of(block_atom(scroll, i))


@dataclass(frozen=True)
class UlrichVerdict:
    passed: bool
    rank: int
    h0: int
    expected_h0: int
    initialized: bool
    vanishing: tuple[tuple[int, tuple[int, ...]], ...]
    failures: tuple[str, ...]


class NotUlrichError(ValueError):
    def __init__(self, verdict: UlrichVerdict):
        super().__init__("; ".join(verdict.failures) or "not Ulrich")
        self.verdict = verdict


def is_ulrich(scroll: Scroll, sheaf: FormalSheaf) -> UlrichVerdict:
    """Finite Ulrich check with full evidence.

    Requires total vanishing of all twists by -jH for j = 1..n+1 together
    with the extremal section count h^0 = c * rank; the initialisation
    h^0(V(-H)) = 0 < h^0(V) is recorded separately even though the sweep
    subsumes it.  Every computed number is returned.
    """
    if not sheaf.is_effective:
        raise ValueError("Ulrich verification needs nonnegative multiplicities")
    rank = sheaf_rank(scroll, sheaf)
    h0 = sheaf_cohomology(scroll, sheaf).h(0)
    expected = scroll.c * rank
    failures = []
    vanishing = []
    for j in range(1, scroll.n + 2):
        vals = sheaf_cohomology(scroll, sheaf.twist(DivClass(-j, 0))).values()
        vanishing.append((j, vals))
        if any(vals):
            failures.append(f"nonzero cohomology of the -{j}H twist: {list(vals)}")
    initialized = h0 > 0 and vanishing[0][1][0] == 0
    if h0 != expected:
        failures.append(f"h^0 = {h0} differs from degree times rank = {expected}")
    if not initialized:
        failures.append("not initialized")
    return UlrichVerdict(not failures, rank, h0, expected, initialized,
                         tuple(vanishing), tuple(failures))


def classify(scroll: Scroll, sheaf: FormalSheaf | None = None,
             profile: dict | None = None) -> tuple[int, ...]:
    """Filtration multiplicities of an Ulrich bundle.

    Formal atom sums are verified first and tabulated after the -H twist;
    profiles are taken at the caller's word and only read off the diagonal.
    """
    if (sheaf is None) == (profile is None):
        raise ValueError("classify needs exactly one of a sheaf or a profile")
    if sheaf is not None:
        verdict = is_ulrich(scroll, sheaf)
        if not verdict.passed:
            raise NotUlrichError(verdict)
        table = beilinson_table(scroll, sheaf.twist(-H))
    else:
        table = beilinson_table_from_profile(scroll, profile)
    return diagonal_type(scroll, table)


@dataclass(frozen=True)
class TypeInfo:
    multiplicities: tuple[int, ...]
    rank: int
    c1: DivClass
    h0: int
    slope: Fraction
    line_block_positions: tuple[int, ...]


def type_sheaf(scroll: Scroll, multiplicities) -> FormalSheaf:
    """The block sum with the given multiplicities."""
    mults = tuple(int(a) for a in multiplicities)
    if len(mults) != scroll.n + 1:
        raise ValueError("a type needs n + 1 multiplicities")
    if any(a < 0 for a in mults):
        raise ValueError("multiplicities must be nonnegative")
    return FormalSheaf(tuple((block_atom(scroll, i), a)
                             for i, a in enumerate(mults) if a))


def type_info(scroll: Scroll, multiplicities) -> TypeInfo:
    mults = tuple(int(a) for a in multiplicities)
    sheaf = type_sheaf(scroll, mults)
    rank, c1, _deg, slope = deg_slope(scroll, sheaf)
    lines = tuple(i for i, a in enumerate(mults)
                  if a and atom_rank(scroll, block_atom(scroll, i)) == 1)
    return TypeInfo(mults, rank, c1, scroll.c * rank, slope, lines)


def enumerate_types(scroll: Scroll, rank: int | None = None,
                    h0: int | None = None) -> list[TypeInfo]:
    """All multiplicity vectors with the requested rank (or section count),
    in ascending lexicographic order; possibly empty."""
    if (rank is None) == (h0 is None):
        raise ValueError("enumerate needs exactly one of rank or h0")
    if h0 is not None:
        if h0 % scroll.c:
            return []
        rank = h0 // scroll.c
    if rank < 1:
        return []
    weights = tuple(comb(scroll.n, i) for i in range(scroll.n + 1))
    found: list[tuple[int, ...]] = []

    def rec(pos: int, remaining: int, acc: list[int]) -> None:
        if pos == len(weights):
            if remaining == 0:
                found.append(tuple(acc))
            return
        for a in range(remaining // weights[pos] + 1):
            acc.append(a)
            rec(pos + 1, remaining - a * weights[pos], acc)
            acc.pop()

    rec(0, rank, [])
    return [type_info(scroll, t) for t in found]


def _pn_labels(dim: int) -> tuple[tuple[str, ...], tuple[str, ...],
                                  tuple[str, ...], tuple[str, ...]]:
    f_plain = ["O"] + [f"Omega^{t}({t})" for t in range(1, dim)] + ["O(-1)"]
    f_tex = ([r"\mathcal{O}"]
             + [rf"\Omega^{{{t}}}({t})" for t in range(1, dim)]
             + [r"\mathcal{O}(-1)"])
    e_plain = ["O"] + [f"O(-{j})" for j in range(1, dim + 1)]
    e_tex = [r"\mathcal{O}"] + [rf"\mathcal{{O}}(-{j})" for j in range(1, dim + 1)]
    return tuple(f_plain), tuple(f_tex), tuple(e_plain), tuple(e_tex)


def veronese_table(dim: int, profile: dict | None = None,
                   atom: tuple[int, int] | None = None) -> BeilinsonTable:
    """Beilinson table on P^dim for the degree-two polarisation collections.

    Column j pairs O(-j) with the dual member (structure sheaf, twisted
    differentials Omega^t(t), and O(-1) last); only dim 2 and 3 are
    supported.  Input is either atom=(p, k) for the twisted differential
    Omega^p(k), evaluated through the Bott dimensions, or an explicit
    profile of {"j", "q", "h"} records.
    """
    if dim not in (2, 3):
        raise ValueError("only the Veronese surface and threefold are supported")
    if (atom is None) == (profile is None):
        raise ValueError("need exactly one of an atom or a profile")
    size = dim + 1
    entries: dict[tuple[int, int], int] = {}
    if atom is not None:
        p, k = atom
        for j in range(size):
            table = pn_omega_cohomology(dim, p, k - j)
            for q in range(dim + 1):
                v = table.h(q)
                if v:
                    entries[(j, q)] = v
    else:
        for rec in profile.get("entries", []):
            j, q, hval = int(rec["j"]), int(rec["q"]), int(rec["h"])
            if not (0 <= j < size and 0 <= q < size):
                raise ValueError(f"profile entry out of range: j={j}, q={q}")
            if hval < 0:
                raise ValueError("profile dimensions must be nonnegative")
            if hval:
                entries[(j, q)] = entries.get((j, q), 0) + hval
    f_plain, f_tex, e_plain, e_tex = _pn_labels(dim)
    return BeilinsonTable(shifts=(0,) * size, f_labels=f_plain, e_labels=e_plain,
                          entries=entries, f_labels_tex=f_tex, e_labels_tex=e_tex)


def veronese_classify(table: BeilinsonTable) -> int:
    """Multiplicity of the unique indecomposable Ulrich bundle on the
    Veronese surface, read off the single admissible diagonal slot; any
    weight elsewhere raises."""
    for (j, q), v in sorted(table.entries.items()):
        if (j, q) != (1, 1):
            raise NotDiagonalError(f"unexpected entry {v} at column {j}, row {q}")
    return table.entry(1, 1)
