import pytest
from hypothesis import given, settings, strategies as st

from topoarg import logic
from topoarg.core import Domain, build_model
from topoarg.errors import DomainTooLarge, FormulaSyntaxError, InvalidNeighborhood, UnknownAtom
from topoarg.generators import GeneratorConfig, generate_random_model, random_neighborhood_model
from topoarg.logic import (And, Atom, Belief, Bottom, Iff, Implies, Not, Or, Top, extension,
                           parse, to_text)

p, q = Atom("p"), Atom("q")

formulas = st.recursive(
    st.sampled_from([p, q, Atom("r_1"), Top()]),
    lambda sub: st.one_of(st.builds(Not, sub), st.builds(Belief, sub), st.builds(And, sub, sub),
                          st.builds(Or, sub, sub), st.builds(Implies, sub, sub),
                          st.builds(Iff, sub, sub)),
    max_leaves=12,
)


def test_parse_axiom_shapes():
    assert parse("B(p & q) -> (B p & B q)") == Implies(Belief(And(p, q)), And(Belief(p), Belief(q)))
    assert parse("p") == p
    assert parse("~B p -> B ~B p") == Implies(Not(Belief(p)), Belief(Not(Belief(p))))
    assert parse("!Bp") == Not(Belief(p))


def test_parse_precedence():
    assert parse("p | q & p") == Or(p, And(q, p))
    assert parse("p -> q -> p") == Implies(p, Implies(q, p))
    assert parse("p <-> q <-> p") == Iff(Iff(p, q), p)
    assert parse("p -> q <-> q") == Iff(Implies(p, q), q)
    assert parse("true") == Top() and parse("false") == Bottom()
    assert parse("~p & q") == And(Not(p), q)


@pytest.mark.parametrize("text,pos", [("p &", 3), ("(p", 2), ("p q", 2), ("P", 0), ("", 0)])
def test_syntax_errors(text, pos):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.position == pos
    assert info.value.expected


@settings(max_examples=300)
@given(formulas)
def test_round_trip(phi):
    text = to_text(phi)
    assert parse(text) == phi
    assert parse(text.replace(" ", "")) == phi
    assert parse(f"  ( {text} )  ") == phi


def test_round_trip_depth_six():
    layer = list(logic.formulas_up_to(["p", "q"], 1))
    for phi in layer:
        for psi in layer:
            deep = Belief(Not(And(Belief(Not(phi)), Not(Belief(psi)))))
            assert logic.depth(deep) <= 6
            assert parse(to_text(deep)) == deep


def test_fig1_extensions(fig1, m):
    x = fig1.domain.full
    assert extension(fig1, Belief(p)) == x
    assert extension(fig1, Top()) == x and extension(fig1, Bottom()) == 0
    assert extension(fig1, Belief(And(p, q))) == 0
    assert extension(fig1, And(Belief(p), Belief(q))) == x
    assert extension(fig1, p) == m(1, 2)


def test_unknown_atom(fig1):
    with pytest.raises(UnknownAtom):
        extension(fig1, Atom("r"))
    assert extension(fig1, Atom("r"), missing_atoms_empty=True) == 0


@settings(max_examples=150)
@given(formulas, st.integers(0, 10**6))
def test_boolean_homomorphism(phi, seed):
    model = generate_random_model(GeneratorConfig(world_count=3, seed=seed))
    val = dict(model.valuation, r_1=seed % 8)
    full = model.domain.full
    e = extension(model, phi, valuation=val)
    assert extension(model, Not(phi), valuation=val) == full & ~e
    assert extension(model, And(phi, p), valuation=val) == e & val["p"]
    assert extension(model, Belief(phi), valuation=val) in (0, full)


def test_fig1_axioms(fig1, m):
    report = logic.check_axioms(fig1)
    for name in ("4", "5", "D", "M", "N", "RE"):
        assert report[name].valid, name
    assert not report["C"].valid
    assert report["C"].witness == (m(1, 2), m(2, 3))
    assert report.sound


def test_single_world_axioms():
    model = build_model(["1"], [["1"]], {"mode": "symmetric"})
    assert logic.check_axioms(model).sound


def test_axiom_guard():
    model = build_model([str(i) for i in range(9)], [], {"mode": "symmetric"})
    with pytest.raises(DomainTooLarge):
        logic.check_axioms(model)


def test_to_neighborhood_fig1(fig1, m):
    nm = logic.to_neighborhood(fig1)
    assert nm.neighborhood == {m(1, 2), m(2, 3), m(1, 2, 3)}
    assert logic.modally_equivalent(fig1, nm, max_depth=None) is None


def test_to_neighborhood_single_world():
    model = build_model(["1"], [["1"]], {"mode": "symmetric"})
    assert logic.to_neighborhood(model).neighborhood == {1}


def test_from_neighborhood_fig1(fig1, m):
    nm = logic.NeighborhoodModel(fig1.domain, frozenset({m(1, 2), m(2, 3), m(1, 2, 3)}),
                                 dict(fig1.valuation))
    back = logic.from_neighborhood(nm)
    assert back.lfp == nm.neighborhood
    assert back.topology.is_discrete
    assert logic.modally_equivalent(back, fig1, max_depth=None) is None


def test_from_neighborhood_trivial():
    nm = logic.NeighborhoodModel(Domain(("1",)), frozenset({1}), {})
    assert logic.from_neighborhood(nm).lfp == {1}


def test_neighborhood_invariants():
    d = Domain(("1", "2", "3"))
    with pytest.raises(InvalidNeighborhood):
        logic.NeighborhoodModel(d, frozenset({0b011}), {})
    with pytest.raises(InvalidNeighborhood):
        logic.NeighborhoodModel(d, frozenset({0b011, 0b111}) | {0b100, 0b101, 0b110}, {})
    with pytest.raises(InvalidNeighborhood):
        logic.NeighborhoodModel(d, frozenset({0b001, 0b111}), {})


def test_neighborhood_semantics(m):
    d = Domain(("1", "2", "3"))
    nm = logic.NeighborhoodModel(d, frozenset({0b011, 0b110, 0b111}), {"p": 0b011})
    assert logic.check_neighborhood_semantics(nm, Belief(p)) == 0b111
    assert logic.check_neighborhood_semantics(nm, Belief(Top())) == 0b111
    assert logic.check_neighborhood_semantics(nm, And(Belief(p), Belief(Not(p)))) == 0


def test_neighborhood_json_round_trip():
    nm = random_neighborhood_model(5, 3)
    assert logic.neighborhood_from_json(logic.neighborhood_to_json(nm)) == nm


@settings(max_examples=100)
@given(st.integers(0, 10**9), st.integers(1, 4))
def test_random_neighborhood_round_trip(seed, n):
    nm = random_neighborhood_model(seed, n)
    back = logic.from_neighborhood(nm)
    assert back.lfp == nm.neighborhood
    assert logic.modally_equivalent(back, nm, max_depth=3) is None
    assert logic.check_axioms(nm).sound


@settings(max_examples=100)
@given(st.integers(0, 10**9), st.integers(1, 4),
       st.sampled_from(["explicit-random", "symmetric", "measure"]))
def test_model_round_trip(seed, n, mode):
    model = generate_random_model(GeneratorConfig(world_count=n, attack_mode=mode, seed=seed))
    nm = logic.to_neighborhood(model)
    assert logic.modally_equivalent(model, nm, max_depth=None) is None
    back = logic.from_neighborhood(nm)
    assert logic.modally_equivalent(model, back, max_depth=3) is None


def test_bounded_equivalence_agrees_with_enumeration(fig1):
    nm = logic.to_neighborhood(fig1)
    for phi in logic.formulas_up_to(["p", "q"], 2):
        assert extension(fig1, phi) == extension(nm, phi)


def test_inequivalent_models_detected(fig1):
    other = build_model(["1", "2", "3"], [["1"], ["2"], ["3"]], {"mode": "symmetric"},
                        {"p": ["1", "2"], "q": ["2", "3"]})
    assert logic.modally_equivalent(fig1, other) is not None
