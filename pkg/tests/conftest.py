"""Shared test helpers: scroll enumeration and direct enumeration oracles.

The oracles deliberately avoid the library's convolution shortcuts: multisets
and tableaux are enumerated cell by cell so the fast paths have something
independent to agree with.
"""

from itertools import combinations, combinations_with_replacement

from scrollcoh import Scroll


def nondecreasing_tuples(length, total_max, minimum=1):
    """All nondecreasing tuples of the given length with entries >= minimum
    and sum <= total_max."""

    def rec(prefix, lo, budget):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        slots = length - len(prefix)
        for a in range(lo, budget // slots + 1):
            yield from rec(prefix + [a], a, budget - a)

    yield from rec([], minimum, total_max)


def all_scrolls(n_max, c_max, n_min=1):
    for n in range(n_min, n_max + 1):
        for degs in nondecreasing_tuples(n + 1, c_max):
            yield Scroll(degs)


def brute_sym_degrees(degs, k):
    return tuple(sorted(sum(t) for t in combinations_with_replacement(degs, k)))


def brute_wedge_degrees(degs, k):
    return tuple(sorted(sum(t) for t in combinations(degs, k)))


def brute_hook_degrees(degs, m, p):
    """Hook tableau degrees by direct enumeration: a strictly increasing
    first column of p+1 letters and a weakly increasing first row of m
    letters sharing the corner."""
    degs = tuple(sorted(degs))
    out = []
    for col in combinations(range(len(degs)), p + 1):
        corner = col[0]
        for row in combinations_with_replacement(range(corner, len(degs)), m - 1):
            out.append(sum(degs[t] for t in col) + sum(degs[r] for r in row))
    return tuple(sorted(out))
