"""The belief language: formulas, parsing, model checking and neighborhood models.

Concrete syntax, loosest binding first::

    f <-> g      (left associative)
    f -> g       (right associative)
    f | g
    f & g
    ~f  !f  B f  (prefix)
    atom  true  false  ( f )

Atoms match ``[a-z][a-z0-9_]*``.  Disjunction, implication, equivalence and
``false`` are abbreviations and never appear in a parsed tree.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .core import AttackSpec, Domain, Model, build_model
from .errors import DomainTooLarge, FormulaSyntaxError, InvalidNeighborhood, UnknownAtom
from .topology import canonical, is_subset


# -- abstract syntax -------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Not:
    sub: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Belief:
    sub: "Formula"

    def __str__(self):
        return to_text(self)


Formula = Union[Atom, Top, Not, And, Belief]


def Bottom() -> Formula:
    return Not(Top())


def Or(a: Formula, b: Formula) -> Formula:
    return Not(And(Not(a), Not(b)))


def Implies(a: Formula, b: Formula) -> Formula:
    return Not(And(a, Not(b)))


def Iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def atoms(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Atom):
        return frozenset([phi.name])
    if isinstance(phi, Top):
        return frozenset()
    if isinstance(phi, And):
        return atoms(phi.left) | atoms(phi.right)
    return atoms(phi.sub)


def depth(phi: Formula) -> int:
    if isinstance(phi, (Atom, Top)):
        return 0
    if isinstance(phi, And):
        return 1 + max(depth(phi.left), depth(phi.right))
    return 1 + depth(phi.sub)


# -- parser ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(<->)|(->)|([~!&|()])|(B)|([a-z][a-z0-9_]*))")
_KEYWORDS = {"true", "false"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(text, pos, ["atom", "operator", "(", "B"])
        start = m.start(m.lastindex)
        value = m.group(m.lastindex)
        if m.lastindex == 5:
            kind = value if value in _KEYWORDS else "atom"
        else:
            kind = value
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    UNARY_START = ("~", "!", "B", "(", "atom", "true", "false")

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        raise FormulaSyntaxError(self.text, self.tokens[self.i][2], expected)

    def parse(self) -> Formula:
        phi = self.iff()
        if self.peek() != "end":
            self.fail(["end", "&", "|", "->", "<->"])
        return phi

    def iff(self) -> Formula:
        phi = self.implication()
        while self.peek() == "<->":
            self.take()
            phi = Iff(phi, self.implication())
        return phi

    def implication(self) -> Formula:
        phi = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(phi, self.implication())
        return phi

    def disjunction(self) -> Formula:
        phi = self.conjunction()
        while self.peek() == "|":
            self.take()
            phi = Or(phi, self.conjunction())
        return phi

    def conjunction(self) -> Formula:
        phi = self.unary()
        while self.peek() == "&":
            self.take()
            phi = And(phi, self.unary())
        return phi

    def unary(self) -> Formula:
        kind, value, _ = self.take()
        if kind in ("~", "!"):
            return Not(self.unary())
        if kind == "B":
            return Belief(self.unary())
        if kind == "atom":
            return Atom(value)
        if kind == "true":
            return Top()
        if kind == "false":
            return Bottom()
        if kind == "(":
            phi = self.iff()
            if self.peek() != ")":
                self.fail([")", "&", "|", "->", "<->"])
            self.take()
            return phi
        self.i -= 1
        self.fail(self.UNARY_START)


def parse(text: str) -> Formula:
    return _Parser(text).parse()


# -- printer ---------------------------------------------------------------------

# precedence levels: 0 <->, 1 ->, 2 |, 3 &, 4 prefix/atomic
def _view(phi: Formula):
    """Recognise abbreviations so printing is readable; returns (op, parts)."""
    if isinstance(phi, And):
        l, r = phi.left, phi.right
        if (isinstance(l, Not) and isinstance(l.sub, And) and isinstance(l.sub.right, Not)
                and isinstance(r, Not) and isinstance(r.sub, And) and isinstance(r.sub.right, Not)
                and l.sub.left == r.sub.right.sub and l.sub.right.sub == r.sub.left):
            return "<->", (l.sub.left, l.sub.right.sub)
        return "&", (l, r)
    if isinstance(phi, Not):
        s = phi.sub
        if isinstance(s, Top):
            return "false", ()
        if isinstance(s, And):
            if isinstance(s.left, Not) and isinstance(s.right, Not):
                return "|", (s.left.sub, s.right.sub)
            if isinstance(s.right, Not):
                return "->", (s.left, s.right.sub)
        return "~", (s,)
    if isinstance(phi, Belief):
        return "B", (phi.sub,)
    if isinstance(phi, Top):
        return "true", ()
    return "atom", ()


_LEVEL = {"<->": 0, "->": 1, "|": 2, "&": 3}


def _text(phi: Formula, level: int) -> str:
    op, parts = _view(phi)
    if op == "atom":
        return phi.name
    if op in ("true", "false"):
        return op
    if op in ("~", "B"):
        return f"{op}{' ' if op == 'B' else ''}{_text(parts[0], 4)}"
    mine = _LEVEL[op]
    if op == "->":
        body = f"{_text(parts[0], mine + 1)} -> {_text(parts[1], mine)}"
    else:
        body = f"{_text(parts[0], mine)} {op} {_text(parts[1], mine + 1)}"
    return f"({body})" if mine < level else body


def to_text(phi: Formula) -> str:
    return _text(phi, 0)


# -- neighborhood models ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class NeighborhoodModel:
    """Uniform belief neighborhood model; validated on construction."""

    domain: Domain
    neighborhood: frozenset[int]
    valuation: Mapping[str, int]

    def __post_init__(self):
        full = self.domain.full
        n = self.neighborhood
        if full not in n:
            raise InvalidNeighborhood("the neighborhood must contain the whole domain")
        for b in n:
            if b & ~full:
                raise InvalidNeighborhood(f"{b:#b} lies outside the domain")
            if full & ~b in n:
                raise InvalidNeighborhood(
                    f"contains both {self.domain.format(b)} and its complement")
            for extra in _supersets(b, full):
                if extra not in n:
                    raise InvalidNeighborhood(
                        f"{self.domain.format(extra)} is missing although "
                        f"{self.domain.format(b)} is present")

    def believes(self, p: int) -> bool:
        return p in self.neighborhood

    def __eq__(self, other):
        if not isinstance(other, NeighborhoodModel):
            return NotImplemented
        return (self.domain == other.domain and self.neighborhood == other.neighborhood
                and dict(self.valuation) == dict(other.valuation))

    __hash__ = None


def _supersets(b: int, full: int) -> Iterator[int]:
    rest = full & ~b
    sub = rest
    while True:
        yield b | sub
        if sub == 0:
            return
        sub = (sub - 1) & rest


def up_closure(family: Iterable[int], full: int) -> frozenset[int]:
    out = set()
    for f in family:
        out.update(_supersets(f, full))
    return frozenset(out)


def to_neighborhood(model: Model) -> NeighborhoodModel:
    return NeighborhoodModel(model.domain, up_closure(model.lfp, model.domain.full),
                             dict(model.valuation))


def neighborhood_attack_edges(neighborhood: frozenset[int], full: int) -> set[tuple[int, int]]:
    """``t <- t'`` for non-empty ``t'`` iff disjoint and ``t`` is not a neighborhood."""
    everything = range(full + 1)
    edges = {(t, tp) for t in everything for tp in everything
             if tp and not t & tp and t not in neighborhood}
    edges.add((0, 0))
    return edges


def from_neighborhood(nmodel: NeighborhoodModel, **options) -> Model:
    """Singleton evidence, the discrete topology, and the neighborhood-driven attack."""
    d = nmodel.domain
    full = d.full
    evidence = [1 << i for i in range(d.size)] + [full]
    edges = neighborhood_attack_edges(nmodel.neighborhood, full)
    spec = AttackSpec("explicit", pairs=tuple(edges))
    return build_model(d.labels, evidence, spec, dict(nmodel.valuation), strict=True, **options)


def neighborhood_from_json(data: Mapping, domain: Optional[Domain] = None) -> NeighborhoodModel:
    d = domain or Domain(tuple(str(w) for w in data["worlds"]))
    if "neighborhood" not in data:
        raise InvalidNeighborhood("neighborhood model file lacks 'neighborhood'")
    n = frozenset(d.mask(b) for b in data["neighborhood"])
    val = {k: d.mask(v) for k, v in data.get("valuation", {}).items()}
    return NeighborhoodModel(d, n, val)


def neighborhood_to_json(nmodel: NeighborhoodModel) -> dict:
    d = nmodel.domain
    return {
        "worlds": list(d.labels),
        "neighborhood": [list(d.members(b)) for b in canonical(nmodel.neighborhood)],
        "valuation": {k: list(d.members(v)) for k, v in nmodel.valuation.items()},
    }


# -- semantics -----------------------------------------------------------------------

def extension(model, phi: Formula, valuation: Optional[Mapping[str, int]] = None,
              missing_atoms_empty: bool = False) -> int:
    """Worlds where ``phi`` holds, as a mask.

    ``model`` is anything with ``domain``, ``valuation`` and a
    ``believes(mask)`` predicate: argumentation, neighborhood and
    probabilistic models all qualify.
    """
    val = model.valuation if valuation is None else valuation
    full = model.domain.full
    cache: dict[Formula, int] = {}

    def ev(f: Formula) -> int:
        if f in cache:
            return cache[f]
        if isinstance(f, Atom):
            if f.name in val:
                out = val[f.name]
            elif missing_atoms_empty:
                out = 0
            else:
                raise UnknownAtom(f"atom {f.name!r} has no valuation")
        elif isinstance(f, Top):
            out = full
        elif isinstance(f, Not):
            out = full & ~ev(f.sub)
        elif isinstance(f, And):
            out = ev(f.left) & ev(f.right)
        elif isinstance(f, Belief):
            out = full if model.believes(ev(f.sub)) else 0
        else:
            raise TypeError(f"not a formula: {f!r}")
        cache[f] = out
        return out

    return ev(phi)


def holds(model, phi: Formula, world: str) -> bool:
    return bool(extension(model, phi) >> model.domain.index(world) & 1)


def check_neighborhood_semantics(nmodel: NeighborhoodModel, phi: Formula) -> int:
    return extension(nmodel, phi)


# -- axiom schemas --------------------------------------------------------------------

P, Q = Atom("p"), Atom("q")

SCHEMAS: dict[str, Formula] = {
    "4": Implies(Belief(P), Belief(Belief(P))),
    "5": Implies(Not(Belief(P)), Belief(Not(Belief(P)))),
    "D": Implies(Belief(P), Not(Belief(Not(P)))),
    "M": Implies(Belief(And(P, Q)), And(Belief(P), Belief(Q))),
    "N": Belief(Top()),
}
NON_THEOREM_C = Implies(And(Belief(P), Belief(Q)), Belief(And(P, Q)))
MAX_AXIOM_WORLDS = 8


@dataclass(frozen=True)
class SchemaResult:
    name: str
    formula: Formula
    valid: bool
    witness: Optional[tuple[int, ...]]   # the propositions P (and Q) of a failing instance
    expected_valid: bool = True


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[SchemaResult, ...]

    def __getitem__(self, name: str) -> SchemaResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def sound(self) -> bool:
        return all(r.valid for r in self.results if r.expected_valid)


def _instances(domain: Domain, formula: Formula):
    names = sorted(atoms(formula))
    props = domain.propositions()
    for combo in itertools.product(props, repeat=len(names)):
        yield combo, dict(zip(names, combo))


def check_schema(model, name: str, formula: Formula, expected_valid: bool = True) -> SchemaResult:
    """Valid iff every instantiation of the schema letters by propositions holds everywhere.

    Belief is the same at every world, so instantiating letters by
    arbitrary sets of worlds covers every formula instance.
    """
    full = model.domain.full
    for combo, val in _instances(model.domain, formula):
        if extension(model, formula, valuation=val) != full:
            return SchemaResult(name, formula, False, combo, expected_valid)
    return SchemaResult(name, formula, True, None, expected_valid)


def _check_re(model) -> SchemaResult:
    # B p <-> B q whenever p and q have the same extension; here q = ~~(p & p)
    full = model.domain.full
    same = Not(Not(And(P, P)))
    rule = Iff(Belief(P), Belief(same))
    for p in model.domain.propositions():
        val = {"p": p}
        assert extension(model, same, valuation=val) == p
        if extension(model, rule, valuation=val) != full:
            return SchemaResult("RE", rule, False, (p,))
    return SchemaResult("RE", rule, True, None)


def check_axioms(model, max_worlds: int = MAX_AXIOM_WORLDS) -> AxiomReport:
    """Schemas 4, 5, D, M, N and rule RE, plus the invalid-in-general schema C."""
    if model.domain.size > max_worlds:
        raise DomainTooLarge(
            f"axiom instantiation over {model.domain.size} worlds exceeds {max_worlds}")
    results = [check_schema(model, name, f) for name, f in SCHEMAS.items()]
    results.append(_check_re(model))
    results.append(check_schema(model, "C", NON_THEOREM_C, expected_valid=False))
    return AxiomReport(tuple(results))


# -- modal equivalence --------------------------------------------------------------------

def formulas_up_to(names: Iterable[str], max_depth: int) -> Iterator[Formula]:
    """Every formula over ``names`` (and ``true``) of depth at most ``max_depth``."""
    layer = [Top()] + [Atom(n) for n in sorted(names)]
    everything = list(layer)
    yield from everything
    for _ in range(max_depth):
        fresh = []
        seen = set(everything)
        for f in everything:
            for g in (Not(f), Belief(f)):
                if g not in seen:
                    seen.add(g)
                    fresh.append(g)
        for f, g in itertools.product(everything, repeat=2):
            h = And(f, g)
            if h not in seen:
                seen.add(h)
                fresh.append(h)
        everything.extend(fresh)
        yield from fresh


def modally_equivalent(m1, m2, names: Optional[Iterable[str]] = None,
                       max_depth: Optional[int] = 3) -> Optional[tuple[int, int]]:
    """Check both models give every formula the same extension.

    Works on the pairs of extensions reachable by the connectives, so it
    covers all formulas of bounded depth (``max_depth=None`` saturates and
    covers all formulas).  Returns ``None`` if equivalent, else a pair of
    differing extensions.
    """
    if m1.domain != m2.domain:
        raise ValueError("models must share a domain")
    full = m1.domain.full
    if names is None:
        names = set(m1.valuation) & set(m2.valuation)
    known = {(full, full)} | {(m1.valuation[n], m2.valuation[n]) for n in names}
    frontier = set(known)
    level = 0
    while frontier and (max_depth is None or level < max_depth):
        level += 1
        new = set()
        for a, b in frontier:
            new.add((full & ~a, full & ~b))
            new.add((full if m1.believes(a) else 0, full if m2.believes(b) else 0))
        current = list(known)
        for a, b in frontier:
            for c, d in current:
                new.add((a & c, b & d))
        new -= known
        known |= new
        frontier = new
    for a, b in known:
        if a != b:
            return (a, b)
    return None
