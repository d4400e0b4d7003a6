"""Tests for the compiler, decision procedures, reports and the MULT benchmark."""

import json

import pytest

from src.pdwa.automaton import equivalent, membership
from src.pdwa.encoding import TupleWord, encode_int
from src.pdwa.engine import (
    CompileOptions,
    CrosscheckOptions,
    EngineKind,
    LedgerEntry,
    bench_mult,
    build_mult,
    compile,
    crosscheck,
    decide,
    qf_bound,
    size_report,
    solve,
    theorem_exponent,
)
from src.pdwa.errors import CapExceeded, EngineError
from src.pdwa.formula import TRUE, Not, Or, parse
from src.pdwa.testing import X, Y, corrupt


class TestCompile:
    """Test formula compilation."""

    def test_inequation(self):
        """Test x - y > 32 compiles to 13 states."""
        assert compile(parse("x - y > 32")).num_states == 13

    def test_projection_matches_divisibility(self):
        """Test ∃x. 2x = y and 2 | y compile to the same language."""
        a = compile(parse("E x. 2*x = y"))
        b = compile(parse("2 divides y"))
        assert a.arity == b.arity == 1
        assert equivalent(a, b)

    def test_true_sentence(self):
        """Test true accepts every nonempty word over the unit letter."""
        a = compile(TRUE)
        assert a.arity == 0
        for n in range(1, 5):
            assert membership(a, TupleWord(arity=0, letters=((),) * n))

    def test_variable_order(self):
        """Test tracks follow the given order, including unused variables."""
        a = compile(parse("x > 0"), CompileOptions(variable_order=(Y, X)))
        assert a.arity == 2
        assert membership(a, encode_int((-5, 3), 2))
        assert not membership(a, encode_int((3, -5), 2))

    def test_options_errors(self):
        """Test invalid bases and variable orders."""
        with pytest.raises(EngineError):
            CompileOptions(base=1)
        with pytest.raises(EngineError):
            CompileOptions(variable_order=(X, X))
        with pytest.raises(EngineError):
            compile(parse("x > y"), CompileOptions(variable_order=(X,)))

    @pytest.mark.parametrize("text", [
        "x - y > 3 & 2 divides x | !(x = y)",
        "E z. x < z & z < y",
        "A z. z > x -> 3 divides z + y | z > y",
    ])
    def test_minimizing_less_often(self, text):
        """Test skipping intermediate minimization gives the same automaton."""
        phi = parse(text)
        assert compile(phi, CompileOptions(minimize_each_step=False)) == compile(phi)

    @pytest.mark.parametrize("text", [
        "E x. 2*x = y",
        "E z. x < z & z < y",
        "A x. x > y -> 2 divides x + y | x > y + 1",
    ])
    def test_engines_agree(self, text):
        """Test compiling after elimination gives the same minimal automaton."""
        phi = parse(text)
        direct = compile(phi)
        via_qe = compile(phi, CompileOptions(engine=EngineKind.QE_THEN_AUTOMATA))
        assert direct.num_states == via_qe.num_states
        assert equivalent(direct, via_qe)

    @pytest.mark.parametrize("base", [3, 5])
    def test_other_bases(self, base):
        """Test the 13-state example is specific to base 2 but the language is not."""
        a = compile(parse("x - y > 32"), CompileOptions(base=base))
        assert membership(a, encode_int((40, 7), base))
        assert not membership(a, encode_int((39, 7), base))

    def test_ledger(self):
        """Test the ledger records atoms, products and projections."""
        entries: list[LedgerEntry] = []
        compile(parse("x - y > 3 & (E z. z = x)"), ledger=entries)
        steps = {e.step for e in entries}
        assert {"atom", "product", "project"} <= steps
        assert all(e.after <= e.before for e in entries)


class TestDecide:
    """Test sentence decision."""

    @pytest.mark.parametrize("text,expected", [
        ("E x. x = 5", True),
        ("A x. 2 divides x", False),
        ("E x. 2*x = 3", False),
        ("A x. E y. x = 2*y | x = 2*y + 1", True),
        ("E x. A y. x <= y", False),
    ])
    def test_examples(self, text, expected):
        """Test known sentences."""
        assert decide(parse(text)) is expected

    @pytest.mark.parametrize("text", ["E x. x = 5", "A x. 2 divides x", "A x. E y. x < y & 3 divides y"])
    def test_excluded_middle(self, text):
        """Test φ ∨ ¬φ holds and φ, ¬φ are not both true."""
        phi = parse(text)
        assert decide(Or(phi, Not(phi)))
        assert not (decide(phi) and decide(Not(phi)))

    def test_free_variables(self):
        """Test formulas with free variables are rejected."""
        with pytest.raises(EngineError):
            decide(parse("x > 0"))


class TestSolve:
    """Test witness extraction."""

    def test_single_value(self):
        """Test x = -3 gives x ↦ -3."""
        assert solve(parse("x = -3")) == {X: -3}

    def test_inequation(self):
        """Test the witness of x - y > 32 satisfies it."""
        assignment = solve(parse("x - y > 32"))
        assert assignment is not None
        assert assignment[X] - assignment[Y] >= 33

    def test_unsatisfiable(self):
        """Test false and contradictory formulas have no witness."""
        assert solve(parse("1 < 0")) is None
        assert solve(parse("x > 0 & x < 1")) is None

    def test_sentence(self):
        """Test a true sentence gives the empty assignment."""
        assert solve(parse("E x. x = 5")) == {}

    def test_quantified(self):
        """Test the witness of ∃x. 2x = y is even."""
        assignment = solve(parse("E x. 2*x = y"))
        assert assignment is not None and assignment[Y] % 2 == 0


class TestSizeReport:
    """Test size ledgers against the theorem bounds."""

    def test_inequation(self):
        """Test x - y > 32: 13 states against the bound 68."""
        ledger = size_report(parse("x - y > 32"))
        assert ledger.final_size == 13
        assert ledger.qf_bound == 68
        assert ledger.qf_holds and ledger.passed

    def test_divisibility(self):
        """Test 3 | x meets its bound of 4 exactly."""
        assert qf_bound(parse("3 divides x")) == 4
        assert size_report(parse("3 divides x")).final_size == 4

    def test_quantified(self):
        """Test ∃x. 2x = y has an astronomically large bound that holds."""
        phi = parse("E x. 2*x = y")
        assert theorem_exponent(phi) == 9 ** 32
        ledger = size_report(phi)
        assert ledger.theorem_bound is None
        assert ledger.theorem_holds
        assert ledger.qf_bound is None
        data = json.loads(ledger.to_json())
        assert data["theorem_bound"] == "astronomical"


class TestCrosscheck:
    """Test the cross-backend check."""

    def test_pass(self):
        """Test ∃x. 2x = y passes on a 33-point grid and 30 words."""
        report = crosscheck(parse("E x. 2*x = y"))
        assert report.passed
        assert report.points_checked == 33
        assert report.words_checked == 30
        assert report.tracks == ("y",)
        assert json.loads(report.to_json())["verdicts"]["engines_equivalent"]

    def test_two_variables(self):
        """Test a two-variable formula with a small grid."""
        report = crosscheck(parse("A z. z > x -> z > y"), check=CrosscheckOptions(grid_radius=3, max_word_len=3))
        assert report.passed
        assert report.points_checked == 49

    def test_corrupted_automaton(self):
        """Test a corrupted automaton is caught."""
        phi = parse("E x. 2*x = y")
        report = crosscheck(phi, automaton=corrupt(compile(phi)))
        assert not report.passed
        assert not report.verdicts["oracle_agrees"]
        assert not report.verdicts["engines_equivalent"]

    def test_negative_limits(self):
        """Test check limits must be non-negative."""
        with pytest.raises(EngineError):
            CrosscheckOptions(grid_radius=-1)


class TestMult:
    """Test the MULT_m lower bound."""

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_lower_bound(self, m):
        """Test the minimal automaton has at least 2^m states."""
        bench = bench_mult(m)
        assert bench.passed
        assert bench.minimized_states >= 2 ** m
        assert bench.raw_states == 2 ** (4 * m) + 2
        assert bench.summary().endswith("PASS")

    def test_membership(self):
        """Test (2, 3, 6) is in MULT_2 and (2, 3, 5) is not."""
        a = build_mult(2)
        assert membership(a, encode_int((2, 3, 6), 2))
        assert not membership(a, encode_int((2, 3, 5), 2))
        assert not membership(a, encode_int((4, 1, 4), 2))
        assert not membership(a, encode_int((-1, -1, 1), 2))

    def test_zero(self):
        """Test MULT_0 is {(0, 0, 0)}."""
        a = build_mult(0)
        assert membership(a, encode_int((0, 0, 0), 2))
        assert not membership(a, encode_int((1, 0, 0), 2))
        assert bench_mult(0).passed

    def test_other_base(self):
        """Test base 3."""
        bench = bench_mult(1, base=3)
        assert bench.passed and bench.lower_bound == 3

    def test_cap(self):
        """Test oversized constructions are refused."""
        with pytest.raises(CapExceeded):
            build_mult(6)
        with pytest.raises(CapExceeded):
            build_mult(2, cap=100)
        with pytest.raises(EngineError):
            build_mult(-1)
