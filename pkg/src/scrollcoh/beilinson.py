"""The scroll's full exceptional collection, its right dual, and the
Beilinson tables it induces.

The first collection consists of shifted duals of line bundles indexed by a
staircase of divisor pairs; the second lists the dual sheaves (structure
sheaf, a fibre twist, paired twists of each relative differential, and two
fibre-twisted line bundles at the top).  The two are pinned together by the
Kronecker pairing Ext^k(E_i, F_j) = delta_{i=j=k}, which is verified rather
than derived.  Tables are printed with the dual collection labels on top and
the shifted collection labels on the bottom, columns from the last index
down to 0 and spectral rows decreasing downwards, so that the surviving
positions of an Ulrich twist form the main diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .homext import ext_line_vs_atom
from .relative import sheaf_cohomology
from .scroll import DivClass, Scroll
from .sheaves import Atom, FormalSheaf, line_atom, omega_atom


class NotDiagonalError(ValueError):
    """A Beilinson table carried weight away from the surviving diagonal."""


def sigma(i: int) -> tuple[int, int]:
    """The unique pair (s1, s2) with s1 + s2 = i and s1 - s2 in {0, 1}."""
    return (i + 1) // 2, i // 2


@dataclass(frozen=True)
class CollectionMember:
    atom: Atom
    shift: int = 0


@dataclass(frozen=True)
class Collection:
    flavor: str
    members: tuple[CollectionMember, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, idx: int) -> CollectionMember:
        return self.members[idx]

    def __iter__(self):
        return iter(self.members)


def build_collections(scroll: Scroll) -> tuple[Collection, Collection]:
    """The length 2n+2 exceptional collection and its right dual.

    Members of the E side are stored as (bundle, shift), the collection
    object being the shifted dual of the stored bundle; members 0 and 1 are
    the structure sheaf and a negative fibre twist, the rest follow the
    staircase pairs.  The F side matches it in the Kronecker pairing.
    """
    n, c = scroll.n, scroll.c
    e = [CollectionMember(line_atom(DivClass(0, 0)), 0),
         CollectionMember(line_atom(DivClass.from_pair(-1, 0)), 0)]
    for i in range(2, 2 * n + 2):
        u, v = sigma(-i + 1)
        e.append(CollectionMember(line_atom(DivClass.from_pair(u, v)), v))
    f = [CollectionMember(line_atom(DivClass(0, 0))),
         CollectionMember(line_atom(DivClass.from_pair(-1, 0)))]
    for t in range(1, n):
        f.append(CollectionMember(omega_atom(scroll, t, DivClass.from_pair(t - 1, t))))
        f.append(CollectionMember(omega_atom(scroll, t, DivClass.from_pair(t - 2, t))))
    f.append(CollectionMember(line_atom(DivClass.from_pair(c - 2, -1))))
    f.append(CollectionMember(line_atom(DivClass.from_pair(c - 3, -1))))
    return Collection("E", tuple(e)), Collection("F", tuple(f))


@dataclass(frozen=True)
class DualityReport:
    passed: bool
    violations: tuple[tuple[int, int, int, int], ...]
    dims: tuple[tuple[tuple[int, ...], ...], ...]


def duality_report(scroll: Scroll, e_collection: Collection,
                   f_collection: Collection) -> DualityReport:
    """Check the Kronecker pairing for an arbitrary pair of collections,
    returning the full tensor of Ext dimensions and every violating triple."""
    violations = []
    dims = []
    for i, em in enumerate(e_collection):
        row = []
        for j, fm in enumerate(f_collection):
            table = ext_line_vs_atom(scroll, em.atom, em.shift, fm.atom)
            ext = tuple(table.h(k) for k in range(len(table)))
            row.append(ext)
            for k, d in enumerate(ext):
                if d != (1 if i == j == k else 0):
                    violations.append((i, j, k, d))
        dims.append(tuple(row))
    return DualityReport(not violations, tuple(violations), tuple(dims))


def verify_duality(scroll: Scroll) -> DualityReport:
    e, f = build_collections(scroll)
    return duality_report(scroll, e, f)


def atom_label(atom: Atom, latex: bool = False) -> str:
    u, v = atom.twist.pair()
    if atom.is_line:
        return rf"\mathcal{{O}}_S({u},{v})" if latex else f"O_S({u},{v})"
    if latex:
        return rf"\Omega^{{{atom.p}}}_{{S|\mathbb{{P}}^1}}({u},{v})"
    return f"Omega^{atom.p}({u},{v})"


@dataclass
class BeilinsonTable:
    """A table of numbers m_{j,q} = h^{q+k_j} of the twists by the shifted
    collection, indexed by columns j and spectral rows q.

    Rendering puts the dual collection labels on the top row and the shifted
    collection labels on the bottom one, with columns j = size-1 .. 0 from
    left to right and rows q = size-1 .. 0 from top to bottom; diagonal
    means q = j, the positions that survive for Ulrich input.
    """

    shifts: tuple[int, ...]
    f_labels: tuple[str, ...]
    e_labels: tuple[str, ...]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    f_labels_tex: tuple[str, ...] = ()
    e_labels_tex: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.shifts)

    def entry(self, j: int, q: int) -> int:
        return self.entries.get((j, q), 0)

    def off_diagonal(self) -> list[tuple[int, int, int]]:
        return sorted((j, q, v) for (j, q), v in self.entries.items() if q != j)

    @property
    def is_diagonal(self) -> bool:
        return not self.off_diagonal()

    def to_payload(self) -> dict:
        return {
            "size": self.size,
            "shifts": list(self.shifts),
            "f_labels": list(self.f_labels),
            "e_labels": list(self.e_labels),
            "entries": [{"j": j, "q": q, "h": v}
                        for (j, q), v in sorted(self.entries.items())],
            "diagonal": self.is_diagonal,
        }

    def render_md(self) -> str:
        cols = range(self.size - 1, -1, -1)
        lines = ["| " + " | ".join(self.f_labels[j] for j in cols) + " |",
                 "|" + " --- |" * self.size]
        for q in range(self.size - 1, -1, -1):
            lines.append("| " + " | ".join(str(self.entry(j, q)) for j in cols) + " |")
        lines.append("| " + " | ".join(self.e_labels[j] for j in cols) + " |")
        return "\n".join(lines)

    def render_latex(self) -> str:
        f_tex = self.f_labels_tex or self.f_labels
        e_tex = self.e_labels_tex or self.e_labels
        cols = range(self.size - 1, -1, -1)
        lines = [r"\begin{tabular}{|" + "c|" * self.size + "}",
                 r"\hline",
                 " & ".join(f"${f_tex[j]}$" for j in cols) + r" \\",
                 r"\hline",
                 r"\hline"]
        for q in range(self.size - 1, -1, -1):
            lines.append(" & ".join(f"${self.entry(j, q)}$" for j in cols) + r" \\")
            lines.append(r"\hline")
        lines.append(r"\hline")
        lines.append(" & ".join(f"${e_tex[j]}$" for j in cols) + r" \\")
        lines.append(r"\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)


def _assemble(e: Collection, f: Collection, entries: dict) -> BeilinsonTable:
    def shifted(member: CollectionMember, latex: bool) -> str:
        tag = atom_label(member.atom, latex)
        return f"{tag}[{member.shift}]" if member.shift else tag

    return BeilinsonTable(
        shifts=tuple(m.shift for m in e),
        f_labels=tuple(atom_label(m.atom) for m in f),
        e_labels=tuple(shifted(m, False) for m in e),
        entries=entries,
        f_labels_tex=tuple(atom_label(m.atom, True) for m in f),
        e_labels_tex=tuple(shifted(m, True) for m in e),
    )


def beilinson_table(scroll: Scroll, sheaf: FormalSheaf) -> BeilinsonTable:
    """Table of a genuine atom sum A: column j lists h^{m}(A x E_j) at the
    spectral row q = m - k_j.  Atom sums always evaluate exactly; anything
    indeterminate would abort with a distinct error rather than guess."""
    e, f = build_collections(scroll)
    entries: dict[tuple[int, int], int] = {}
    for j, em in enumerate(e):
        table = sheaf_cohomology(scroll, sheaf.twist(em.atom.twist))
        for m in range(scroll.n + 2):
            v = table.h(m)
            if v:
                entries[(j, m - em.shift)] = v
    return _assemble(e, f, entries)


def beilinson_table_from_profile(scroll: Scroll, profile: dict) -> BeilinsonTable:
    """Table from caller-supplied entries {"j", "q", "h"} with q the spectral
    row as printed; omitted entries are zero."""
    size = 2 * scroll.n + 2
    if "n" in profile and int(profile["n"]) != scroll.n:
        raise ValueError(f"profile is for n = {profile['n']}, scroll has n = {scroll.n}")
    entries: dict[tuple[int, int], int] = {}
    for rec in profile.get("entries", []):
        j, q, hval = int(rec["j"]), int(rec["q"]), int(rec["h"])
        if not (0 <= j < size and 0 <= q < size):
            raise ValueError(f"profile entry out of range: j={j}, q={q}")
        if hval < 0:
            raise ValueError("profile dimensions must be nonnegative")
        if hval:
            entries[(j, q)] = entries.get((j, q), 0) + hval
    e, f = build_collections(scroll)
    return _assemble(e, f, entries)


def diagonal_type(scroll: Scroll, table: BeilinsonTable) -> tuple[int, ...]:
    """Filtration multiplicities (a_0, ..., a_n) read off a diagonal table.

    a_0 sits in column 1, a_i in column 2i for i = 1..n.  Any weight
    elsewhere, off the diagonal or on a diagonal slot that matches no
    building block, means the input was not the -H twist of an Ulrich
    bundle and raises naming the offending slot.
    """
    n = scroll.n
    slots = {1: 0}
    for i in range(1, n + 1):
        slots[2 * i] = i
    result = [0] * (n + 1)
    for (j, q), v in sorted(table.entries.items()):
        if q != j:
            raise NotDiagonalError(f"entry {v} off the diagonal at column {j}, row {q}")
        if j not in slots:
            raise NotDiagonalError(
                f"diagonal entry {v} at column {j} matches no building block")
        result[slots[j]] = v
    return tuple(result)
