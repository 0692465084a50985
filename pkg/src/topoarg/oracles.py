"""Brute-force reference computations.

Deliberately naive and independent of the optimised paths they check:
they share no code with :mod:`topoarg.topology` or
:mod:`topoarg.argumentation` beyond the :class:`AttackGraph` container.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import DomainTooLarge


def naive_topology(evidence, full: int) -> frozenset[int]:
    """Add pairwise intersections and unions until nothing changes."""
    fam = set(evidence) | {0, full}
    while True:
        new = {a & b for a in fam for b in fam} | {a | b for a in fam for b in fam}
        if new <= fam:
            return frozenset(fam)
        fam |= new


def fip_bodies(evidence, full: int) -> list[frozenset[int]]:
    """Every non-empty subfamily whose finite subfamilies all intersect, by full scan."""
    pieces = list(evidence)
    out = []
    for r in range(1, len(pieces) + 1):
        for combo in itertools.combinations(pieces, r):
            ok = True
            for k in range(1, r + 1):
                for sub in itertools.combinations(combo, k):
                    inter = full
                    for e in sub:
                        inter &= e
                    if not inter:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(frozenset(combo))
    return out


def maximal_fip_bodies(evidence, full: int) -> list[frozenset[int]]:
    bodies = fip_bodies(evidence, full)
    return [b for b in bodies if not any(b < c for c in bodies)]


def attack_condition_scan(opens, edges) -> dict[int, list[tuple]]:
    """Every witness for each of the three attack conditions, by exhaustive triples."""
    opens = list(opens)
    out = {1: [], 2: [], 3: []}
    for t1 in opens:
        for t2 in opens:
            if ((t1 & t2) == 0) != ((t1, t2) in edges or (t2, t1) in edges):
                out[1].append((t1, t2))
    for t in opens:
        for t1 in opens:
            for t1p in opens:
                if (t1, t) in edges and (t1p | t1) == t1 and (t1p, t) not in edges:
                    out[2].append((t, t1, t1p))
    for t in opens:
        if t and ((0, t) not in edges or (t, 0) in edges):
            out[3].append((t,))
    return out


def _defense_table(graph):
    """For every family (as an index bitmask) the family its members defend."""
    opens = list(graph.opens)
    m = len(opens)
    if m > 20:
        raise DomainTooLarge(f"brute-force fixed points over {m} opens")
    idx = {t: i for i, t in enumerate(opens)}
    families = np.arange(1 << m, dtype=np.int64)
    # hit[a]: does the family contain an attacker of open a?
    hit = []
    for a in opens:
        mask = 0
        for b in opens:
            if (a, b) in graph.edges:
                mask |= 1 << idx[b]
        hit.append((families & mask) != 0)
    defended = np.zeros(1 << m, dtype=np.int64)
    for t in opens:
        ok = np.ones(1 << m, dtype=bool)
        for a in opens:
            if (t, a) in graph.edges:
                ok &= hit[idx[a]]
        defended |= ok.astype(np.int64) << idx[t]
    return opens, families, defended


def brute_force_lfp(graph) -> frozenset[int]:
    """Scan every family of opens, keep the fixed points, return the least one."""
    opens, families, defended = _defense_table(graph)
    fixed = families[defended == families]
    least = int(fixed[np.argmin([int(f).bit_count() for f in fixed])])
    for f in fixed:
        if least & ~int(f):
            raise AssertionError("fixed points have no least element")
    return frozenset(t for i, t in enumerate(opens) if least >> i & 1)


def brute_force_fixed_points(graph) -> list[frozenset[int]]:
    opens, families, defended = _defense_table(graph)
    fixed = families[defended == families]
    return [frozenset(t for i, t in enumerate(opens) if int(f) >> i & 1) for f in fixed]


def interior_belief(opens, p: int) -> bool:
    """Evidence-based belief straight from its definition, by double scan."""
    nonempty = [t for t in opens if t]
    return all(any(s and (s | t) == t and (s | p) == p for s in nonempty) for t in nonempty)
