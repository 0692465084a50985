"""Attack graphs over a topology and their grounded extension.

An edge ``(a, b)`` means *b attacks a*, following the arrow convention of
the attack relation ``a <- b``.  Opens and families of opens are bitmasks and
frozensets of bitmasks, as in :mod:`topoarg.topology`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .errors import SearchBudgetExceeded
from .topology import Topology, canonical, canonical_key, is_subset

Edge = tuple[int, int]
DEFAULT_PREFERRED_BOUND = 14


@dataclass(frozen=True)
class AttackGraph:
    opens: tuple[int, ...]
    edges: frozenset[Edge]

    @cached_property
    def attackers(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {t: set() for t in self.opens}
        for attacked, attacker in self.edges:
            out[attacked].add(attacker)
        return {t: frozenset(s) for t, s in out.items()}

    @cached_property
    def targets(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {t: set() for t in self.opens}
        for attacked, attacker in self.edges:
            out[attacker].add(attacked)
        return {t: frozenset(s) for t, s in out.items()}

    def attacks(self, attacker: int, attacked: int) -> bool:
        return (attacked, attacker) in self.edges

    @property
    def nonempty_edges(self) -> frozenset[Edge]:
        return frozenset(e for e in self.edges if e[0] and e[1])


@dataclass(frozen=True)
class Violation:
    """A failed attack condition.

    Witness layouts: condition 1 ``(t1, t2)``; condition 2 ``(t, t1, t1')``
    where ``t1 <- t`` holds, ``t1' <= t1`` and ``t1' <- t`` is missing;
    condition 3 ``(t,)`` for the non-empty open involved.
    """

    condition: int
    witness: tuple[int, ...]
    reason: str


def validate_attack(graph: AttackGraph) -> list[Violation]:
    opens = graph.opens
    edges = graph.edges
    found: list[Violation] = []
    for i, t1 in enumerate(opens):
        for t2 in opens[i:]:
            conflict = not t1 & t2
            attack = (t1, t2) in edges or (t2, t1) in edges
            if conflict and not attack:
                found.append(Violation(1, (t1, t2), "disjoint opens with no attack either way"))
            elif attack and not conflict:
                found.append(Violation(1, (t1, t2), "attack between overlapping opens"))
    for t1, t in sorted(edges, key=lambda e: (canonical_key(e[0]), canonical_key(e[1]))):
        for t1p in opens:
            if t1p != t1 and is_subset(t1p, t1) and (t1p, t) not in edges:
                found.append(Violation(2, (t, t1, t1p), "attack not inherited by a smaller open"))
    for t in opens:
        if not t:
            continue
        if (0, t) not in edges:
            found.append(Violation(3, (t,), "empty set not attacked by a non-empty open"))
        if (t, 0) in edges:
            found.append(Violation(3, (t,), "empty set attacks a non-empty open"))
    return found


def defends(family: Iterable[int], t: int, graph: AttackGraph) -> bool:
    family = frozenset(family)
    targets = graph.targets
    return all(any(a in targets[f] for f in family) for a in graph.attackers[t])


def characteristic(family: Iterable[int], graph: AttackGraph) -> frozenset[int]:
    family = frozenset(family)
    # opens attacked by some member of the family
    beaten = set()
    for f in family:
        beaten |= graph.targets[f]
    return frozenset(t for t in graph.opens if graph.attackers[t] <= beaten)


@dataclass(frozen=True)
class ExtensionReport:
    grounded: frozenset[int]
    iterations: tuple[frozenset[int], ...]


def grounded_extension(graph: AttackGraph) -> ExtensionReport:
    """Least fixed point of the defense function, by iteration from the empty family."""
    current: frozenset[int] = frozenset()
    trace = [current]
    while True:
        nxt = characteristic(current, graph)
        trace.append(nxt)
        if nxt == current:
            return ExtensionReport(grounded=current, iterations=tuple(trace))
        current = nxt


@dataclass(frozen=True)
class ExtensionFlags:
    conflict_free: bool
    admissible: bool
    complete: bool
    stable: bool
    preferred: bool


def is_conflict_free(family: Iterable[int], graph: AttackGraph) -> bool:
    family = frozenset(family)
    return not any(graph.targets[f] & family for f in family)


def is_admissible(family: Iterable[int], graph: AttackGraph) -> bool:
    family = frozenset(family)
    return is_conflict_free(family, graph) and family <= characteristic(family, graph)


def classify_extension(family: Iterable[int], graph: AttackGraph,
                       preferred_bound: int = DEFAULT_PREFERRED_BOUND) -> ExtensionFlags:
    s = frozenset(family)
    unknown = s - set(graph.opens)
    if unknown:
        raise ValueError(f"not opens of the graph: {sorted(unknown)}")
    d = characteristic(s, graph)
    cf = is_conflict_free(s, graph)
    adm = cf and s <= d
    beaten = set()
    for f in s:
        beaten |= graph.targets[f]
    stable = cf and all(t in beaten for t in graph.opens if t not in s)
    return ExtensionFlags(
        conflict_free=cf,
        admissible=adm,
        complete=adm and d <= s,
        stable=stable,
        preferred=adm and _no_admissible_superset(s, graph, preferred_bound),
    )


def _no_admissible_superset(s: frozenset[int], graph: AttackGraph, bound: int) -> bool:
    if len(graph.opens) > bound:
        raise SearchBudgetExceeded(
            f"preferred check over {len(graph.opens)} opens exceeds the bound {bound}")
    rest = [t for t in graph.opens if t not in s]
    for size in range(len(rest), 0, -1):
        for extra in itertools.combinations(rest, size):
            if is_admissible(s | frozenset(extra), graph):
                return False
    return True


# -- properties of the relation (restricted to non-empty opens) -------------

def is_symmetric(graph: AttackGraph) -> bool:
    edges = graph.nonempty_edges
    return all((b, a) in edges for a, b in edges)


def is_transitive(graph: AttackGraph) -> bool:
    edges = graph.nonempty_edges
    for t1, t2 in edges:
        for t3 in graph.attackers[t2]:
            if t3 and (t1, t3) not in edges:
                return False
    return True


def is_unambiguous(graph: AttackGraph) -> bool:
    """No chain ``t1 <- t2 <- t3`` whose ends are related, for non-empty opens.

    The empty set is excluded: ``{} <- {}`` is forced by the conflict
    condition and would make every relation ambiguous.
    """
    edges = graph.nonempty_edges
    for t1, t2 in edges:
        for t3 in graph.attackers[t2]:
            if t3 and ((t1, t3) in edges or (t3, t1) in edges):
                return False
    return True


def conditional_transitivity_violations(graph: AttackGraph) -> list[tuple[int, int, int]]:
    """Triples with ``t1 <- t2``, ``t2 <- t3``, ``t1 & t3 == 0`` but not ``t1 <- t3``."""
    out = []
    for t1, t2 in graph.edges:
        for t3 in graph.attackers[t2]:
            if not t1 & t3 and (t1, t3) not in graph.edges:
                out.append((t1, t2, t3))
    return out


# -- constructing relations --------------------------------------------------

def empty_set_edges(opens: Iterable[int]) -> set[Edge]:
    return {(0, t) for t in opens}


def close_downward(edges: Iterable[Edge], opens: Iterable[int]) -> set[Edge]:
    """Add ``t1' <- t`` for every open ``t1'`` below an attacked ``t1``."""
    opens = tuple(opens)
    out = set(edges)
    for t1, t in list(out):
        for t1p in opens:
            if is_subset(t1p, t1):
                out.add((t1p, t))
    return out


def complete_relation(edges: Iterable[Edge], topology: Topology) -> AttackGraph:
    """Attach the forced edges on the empty set and wrap as a graph."""
    e = set(edges) | empty_set_edges(topology.opens)
    return AttackGraph(topology.opens, frozenset(e))


def symmetric_attack(topology: Topology) -> AttackGraph:
    nonempty = topology.nonempty
    edges = {(a, b) for a in nonempty for b in nonempty if not a & b}
    return complete_relation(edges, topology)


def measure_attack(topology: Topology, weight: Callable[[int], Fraction]) -> AttackGraph:
    """``a <- b`` iff the opens are disjoint and ``weight(a) <= weight(b)``.

    ``weight`` must be additive and strictly positive on worlds, otherwise
    a non-empty open could be attacked by the empty set.
    """
    opens = topology.opens
    w = {t: weight(t) for t in opens}
    edges = {(a, b) for a in opens for b in opens if not a & b and w[a] <= w[b]}
    return AttackGraph(opens, frozenset(edges))


def weight_function(weights: Mapping[int, Fraction]) -> Callable[[int], Fraction]:
    """Additive weight on masks from per-world-index weights."""

    def weight(mask: int) -> Fraction:
        total = Fraction(0)
        i = 0
        while mask:
            if mask & 1:
                total += weights[i]
            mask >>= 1
            i += 1
        return total

    return weight


def conflict_pairs(topology: Topology) -> list[tuple[int, int]]:
    """Unordered disjoint pairs of non-empty opens, in canonical order."""
    nonempty = topology.nonempty
    return [(a, b) for i, a in enumerate(nonempty) for b in nonempty[i + 1:] if not a & b]


def random_attack(topology: Topology, rng: random.Random) -> AttackGraph:
    """Random valid relation: each conflict gets a direction from {->, <-, <->}.

    Downward closure and the empty-set edges are applied afterwards; both
    keep every attack condition intact.
    """
    edges = set()
    for a, b in conflict_pairs(topology):
        choice = rng.randrange(3)
        if choice != 1:
            edges.add((a, b))
        if choice != 0:
            edges.add((b, a))
    return complete_relation(close_downward(edges, topology.opens), topology)


def search_attack(topology: Topology, rng: random.Random, kind: str,
                  node_budget: int = 20000) -> AttackGraph | None:
    """Randomised backtracking for a valid relation that is transitive or unambiguous.

    Returns ``None`` when no such relation exists or the budget runs out.
    """
    if kind not in ("transitive", "unambiguous"):
        raise ValueError(f"unknown relation kind {kind!r}")
    pairs = conflict_pairs(topology)
    nonempty = topology.nonempty
    if kind == "unambiguous" and _has_disjoint_triple(pairs):
        # every orientation of three mutual conflicts contains a chain with disjoint ends
        return None
    rng.shuffle(pairs)
    below = {t: [s for s in nonempty if s != t and is_subset(s, t)] for t in nonempty}
    above = {t: [s for s in nonempty if s != t and is_subset(t, s)] for t in nonempty}
    edges: set[Edge] = set()
    decided: set[frozenset[int]] = set()
    nodes = 0

    def consistent(new: list[Edge]) -> bool:
        for x, y in new:
            # condition 2 against already decided pairs
            for s in below[x]:
                if frozenset((s, y)) in decided and (s, y) not in edges:
                    return False
        for x, y in edges:
            for z in nonempty:
                if (y, z) not in edges:
                    continue
                if kind == "transitive":
                    if x == z or x & z:
                        return False
                    if frozenset((x, z)) in decided and (x, z) not in edges:
                        return False
                elif x != z and not x & z:
                    return False
        # a pair left out of a decided superset must stay out for the subset too
        for a, b in pairs:
            if frozenset((a, b)) not in decided:
                continue
            for x, y in ((a, b), (b, a)):
                if (x, y) not in edges:
                    for s in above[x]:
                        if (s, y) in edges:
                            return False
        return True

    def options():
        if kind == "transitive":
            opts = [0, 1]
        else:
            opts = [0, 1, 2]
        rng.shuffle(opts)
        return opts

    def solve(k: int) -> bool:
        nonlocal nodes
        if k == len(pairs):
            return True
        nodes += 1
        if nodes > node_budget:
            return False
        a, b = pairs[k]
        key = frozenset((a, b))
        for choice in options():
            new = []
            if choice != 1:
                new.append((a, b))
            if choice != 0:
                new.append((b, a))
            edges.update(new)
            decided.add(key)
            if consistent(new) and solve(k + 1):
                return True
            edges.difference_update(new)
            decided.discard(key)
        return False

    if not solve(0):
        return None
    graph = complete_relation(edges, topology)
    check = is_transitive if kind == "transitive" else is_unambiguous
    if validate_attack(graph) or not check(graph):
        return None
    return graph


def _has_disjoint_triple(pairs: list[tuple[int, int]]) -> bool:
    conflicts: dict[int, set[int]] = {}
    for a, b in pairs:
        conflicts.setdefault(a, set()).add(b)
        conflicts.setdefault(b, set()).add(a)
    return any(conflicts[a] & conflicts[b] for a, b in pairs)


def describe_family(family: Iterable[int], fmt: Callable[[int], str]) -> str:
    return "{" + ", ".join(fmt(t) for t in canonical(family)) + "}"
