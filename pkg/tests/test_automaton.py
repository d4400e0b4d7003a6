"""Tests for word automata and their closure operations."""

import itertools
import json
import random

import pytest

from src.pdwa.atoms import build_atom, build_bounded, build_div
from src.pdwa.automaton import (
    Connective,
    Dwa,
    align,
    as_nfa,
    complement_set,
    cylindrify,
    determinize,
    equivalent,
    find_witness,
    is_empty_nonlambda,
    membership,
    minimize,
    product,
    project_exists,
    to_dot,
    trivial,
)
from src.pdwa.automaton.dot import compress_letters, format_pattern
from src.pdwa.encoding import TupleWord, decode_int, encode_int, enumerate_words, sign_extend
from src.pdwa.errors import AutomatonError
from src.pdwa.formula import Cmp, Div, LinearTerm, Rel, parse
from src.pdwa.testing import X, Y, oracle_mismatches


def atom(text: str, base: int = 2) -> Dwa:
    return build_atom(parse(text), base)


def decoded(a: Dwa, max_len: int) -> dict[tuple[int, ...], bool]:
    """Verdict per decoded tuple; asserts all encodings of a tuple agree."""
    seen: dict[tuple[int, ...], bool] = {}
    for w in enumerate_words(a.arity, a.base, max_len):
        z = decode_int(w, a.base)
        verdict = membership(a, w)
        assert seen.setdefault(z, verdict) == verdict
    return seen


class TestMembership:
    """Test running words through automata."""

    def test_doubling_relation(self):
        """Test y = 2x on (3, 6) and (3, 5)."""
        a = atom("2*x = y")
        assert membership(a, encode_int((3, 6), 2))
        assert not membership(a, encode_int((3, 5), 2))

    def test_empty_word_rejected(self):
        """Test set automata reject λ."""
        assert not membership(atom("2*x = y"), TupleWord(arity=2, letters=()))

    def test_full_automaton(self):
        """Test the automaton for Z accepts every nonempty word."""
        a = trivial(1, 2, True)
        assert all(membership(a, w) for w in enumerate_words(1, 2, 4))

    def test_arity_mismatch(self):
        """Test words must have the automaton's arity."""
        with pytest.raises(AutomatonError):
            membership(atom("x > 0"), encode_int((1, 2), 2))

    def test_transition_table_validated(self):
        """Test rows must cover the whole alphabet."""
        with pytest.raises(AutomatonError):
            Dwa(arity=1, base=2, delta=((1, 1), (1,)), initial=0, accepting=frozenset())


class TestProduct:
    """Test products of automata."""

    def test_idempotent(self):
        """Test A ∧ A ≡ A."""
        a = atom("x - y > 3")
        assert equivalent(product(a, a, Connective.AND), a)

    def test_with_complement_is_empty(self):
        """Test A ∧ ¬A accepts nothing."""
        a = atom("x - y > 3")
        assert is_empty_nonlambda(product(a, complement_set(a), Connective.AND))

    def test_interval(self):
        """Test x > 0 ∧ x < 2 is exactly {1}."""
        a = product(atom("x > 0"), atom("x < 2"), Connective.AND)
        assert {z for z, ok in decoded(a, 8).items() if ok} == {(1,)}

    def test_size_bound(self):
        """Test the product has at most |Q_a|·|Q_b| states."""
        a, b = atom("x - y > 3"), atom("2 divides x + y")
        for op in Connective:
            assert product(a, b, op).num_states <= a.num_states * b.num_states

    def test_alphabet_mismatch(self):
        """Test operands must share arity and base."""
        with pytest.raises(AutomatonError):
            product(atom("x > 0"), atom("x - y > 0"), Connective.OR)


class TestComplement:
    """Test set complementation."""

    def test_complement_of_zero(self):
        """Test ¬(x = 0) accepts 1 but not 0."""
        a = complement_set(atom("x = 0"))
        assert membership(a, encode_int((1,), 2))
        assert not membership(a, encode_int((0,), 2))

    def test_involution(self):
        """Test ¬¬A ≡ A."""
        a = atom("3*x - 2*y < 5")
        assert equivalent(complement_set(complement_set(a)), a)

    def test_against_oracle(self):
        """Test ¬(x - y > 32) represents x - y ≤ 32."""
        a = complement_set(atom("x - y > 32"))
        le = Cmp(LinearTerm.of({X: 1, Y: -1}), Rel.LE, 32)
        assert oracle_mismatches(a, le, (X, Y), max_len=6) == []

    def test_not_equivalent_to_complement(self):
        """Test A and ¬A differ."""
        a = atom("x > 0")
        assert not equivalent(a, complement_set(a))

    def test_needs_set_automaton(self):
        """Test complement_set refuses automata that do not represent sets."""
        a = atom("x > 0")
        plain = Dwa(arity=1, base=2, delta=a.delta, initial=a.initial, accepting=a.accepting, represents_set=False)
        with pytest.raises(AutomatonError):
            complement_set(plain)


class TestCylindrify:
    """Test adding ignored tracks."""

    def test_new_track_ignored(self):
        """Test x > 0 with an extra track accepts (5, anything)."""
        a = atom("x > 0")
        c = cylindrify(a, 1)
        assert c.arity == 2
        assert c.num_states == a.num_states
        for y in (-7, 0, 100):
            assert membership(c, encode_int((5, y), 2))
            assert not membership(c, encode_int((-5, y), 2))

    def test_project_back(self):
        """Test projecting the added track gives the original language."""
        a = atom("x > 0")
        for pos in (0, 1):
            back = determinize(project_exists(cylindrify(a, pos), pos))
            assert equivalent(back, a)

    def test_align(self):
        """Test align inserts every missing track."""
        a = align(atom("x > 0"), (X,), (X, Y))
        assert a.arity == 2
        assert membership(a, encode_int((3, -9), 2))

    def test_out_of_range(self):
        """Test invalid track positions."""
        with pytest.raises(AutomatonError):
            cylindrify(atom("x > 0"), 5)
        with pytest.raises(AutomatonError):
            align(atom("x > 0"), (Y,), (X,))


class TestProjection:
    """Test existential projection with sign saturation."""

    def test_double_exists_for_every_x(self):
        """Test ∃y. y = 2x holds for every x."""
        a = minimize(determinize(project_exists(atom("2*x = y"), 1)))
        assert equivalent(a, trivial(1, 2, True))

    def test_even_numbers(self):
        """Test ∃x. 2x = y gives the even y."""
        a = minimize(determinize(project_exists(atom("2*x = y"), 0)))
        for z, ok in decoded(a, 7).items():
            assert ok == (z[0] % 2 == 0)

    def test_longer_witness_needed(self):
        """Test ∃x. x > y covers y whose witness needs an extra digit."""
        a = determinize(project_exists(atom("x > y"), 0))
        assert equivalent(a, trivial(1, 2, True))
        assert membership(a, encode_int((127,), 2))

    @pytest.mark.parametrize("base", [2, 3])
    def test_fixed_point(self, base):
        """Test ∃x. x = 5 ∧ y = 7 represents {7}."""
        both = product(
            align(atom("x = 5", base), (X,), (X, Y)),
            align(build_atom(Cmp(LinearTerm.var(Y), Rel.EQ, 7), base), (Y,), (X, Y)),
            Connective.AND,
        )
        a = determinize(project_exists(both, 0))
        assert {z for z, ok in decoded(a, 4).items() if ok} == {(7,)}

    def test_track_out_of_range(self):
        """Test projection of a missing track."""
        with pytest.raises(AutomatonError):
            project_exists(atom("x > 0"), 1)


class TestMinimize:
    """Test minimization."""

    def test_bounded_inequation(self):
        """Test the bounded automaton of x - y > 32 minimizes to 13 states."""
        a = build_bounded(parse("x - y > 32"), 2)
        assert a.num_states == 37
        assert minimize(a).num_states == 13

    def test_idempotent(self):
        """Test minimize is a fixpoint with canonical numbering."""
        a = minimize(build_bounded(parse("2*x - 3*y > 4"), 3))
        assert minimize(a) == a

    def test_merges_duplicate_sinks(self):
        """Test two accepting sinks collapse."""
        a = Dwa(
            arity=1,
            base=2,
            delta=((1, 2), (1, 1), (2, 2)),
            initial=0,
            accepting=frozenset({1, 2}),
        )
        assert minimize(a).num_states == 2

    def test_preserves_language(self):
        """Test minimize keeps the language of random products."""
        rng = random.Random(3)
        texts = ["x - y > 3", "2 divides x + y", "x + 2*y < 1", "x - y = 2"]
        for _ in range(10):
            left, right = rng.sample(texts, 2)
            a = product(atom(left), atom(right), rng.choice(list(Connective)))
            assert equivalent(minimize(a), a)

    def test_determinize_deterministic_input(self):
        """Test determinizing a DWA viewed as NFA keeps the language and size."""
        a = minimize(atom("x - y > 32"))
        b = determinize(as_nfa(a))
        assert b.num_states == a.num_states
        assert equivalent(a, b)


class TestWitness:
    """Test emptiness and witnesses."""

    def test_empty(self):
        """Test 1 < 0 has no witness."""
        a = build_atom(parse("1 < 0"), 2)
        assert is_empty_nonlambda(a)
        assert find_witness(a) is None

    def test_zero(self):
        """Test x = 0 has witness "0"."""
        assert find_witness(atom("x = 0")) == TupleWord.track("0")

    def test_shortest(self):
        """Test x = -3 has witness "101"."""
        assert find_witness(atom("x = -3")) == TupleWord.track("101")

    def test_witness_accepted(self):
        """Test the witness of x - y > 32 is accepted and satisfies the atom."""
        a = atom("x - y > 32")
        w = find_witness(a)
        assert w is not None and membership(a, w)
        x, y = decode_int(w, 2)
        assert x - y > 32


class TestSetInvariants:
    """Test closure under sign extension and sign digit choice."""

    @pytest.mark.parametrize("text", ["x - y > 3", "3 divides x - 2*y", "x - 2*y = 1", "x != y"])
    def test_sign_extension(self, text):
        """Test verdicts do not change when the sign letter is repeated."""
        a = atom(text, 3)
        for w in enumerate_words(2, 3, 3):
            for k in range(1, 4):
                assert membership(a, sign_extend(w, k, 3)) == membership(a, w)

    @pytest.mark.parametrize("base", [3, 5])
    @pytest.mark.parametrize("text", ["x - y > 3", "2*x + y < -2", "x - 2*y = 1", "x != y", "3 divides x - 2*y"])
    def test_sign_digit_choice(self, text, base):
        """Test verdicts do not depend on which nonzero sign digit is used."""
        phi = parse(text)
        raw = build_div(phi, base) if isinstance(phi, Div) else build_bounded(phi, base)
        for a in (raw, minimize(raw), build_atom(phi, base)):
            for w in enumerate_words(2, base, 2):
                sign, rest = w.letters[0], w.letters[1:]
                choices = [range(1, base) if digit else (0,) for digit in sign]
                for other in itertools.product(*choices):
                    variant = TupleWord(arity=2, letters=(other, *rest))
                    assert membership(a, variant) == membership(a, w), (text, w, variant)


class TestExport:
    """Test DOT and JSON export."""

    def test_patterns(self):
        """Test wildcards for coordinates covering every digit."""
        assert compress_letters([(0, 0), (0, 1)], 2) == [(0, None)]
        assert compress_letters([(0, 0), (0, 1), (1, 0), (1, 1)], 2) == [(None, None)]
        assert compress_letters([(0, 1), (1, 0)], 2) == [(0, 1), (1, 0)]
        assert format_pattern((0, None)) == "(0,-)"

    def test_dot(self):
        """Test one node line per state and stable output."""
        a = minimize(atom("x - y > 32"))
        text = to_dot(a)
        lines = text.splitlines()
        assert lines[0] == "digraph dwa {"
        assert lines[-1] == "}"
        nodes = [line for line in lines if "[shape=" in line]
        assert len(nodes) == 13
        assert text == to_dot(minimize(atom("x - y > 32")))

    def test_json_round_trip(self):
        """Test from_json inverts to_json."""
        a = atom("x - 2*y = 1")
        data = json.loads(a.dumps())
        assert data["states"] == a.num_states
        assert len(data["transitions"]) == a.num_states * 4
        assert Dwa.from_json(data) == a

    def test_json_partial_relation(self):
        """Test a missing transition is reported."""
        data = json.loads(atom("x > 0").dumps())
        data["transitions"].pop()
        with pytest.raises(AutomatonError):
            Dwa.from_json(data)

    def test_graph(self):
        """Test the transition graph has one node per state."""
        a = atom("x - y > 32")
        assert a.graph().number_of_nodes() == a.num_states
