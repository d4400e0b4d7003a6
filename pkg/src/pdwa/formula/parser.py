"""Formula text → syntax tree, via a lark LALR grammar."""

from functools import cache

from lark import Lark, Token, Transformer, Tree, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from ..errors import FormulaError, ParseError
from .syntax import (
    FALSE,
    TRUE,
    And,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Rel,
    make_div,
    normalize_atom,
)
from .terms import AffineTerm, VarId

GRAMMAR = r"""
    start: formula

    ?formula: quant
            | iff

    quant: (EXISTS | FORALL) VAR ("," VAR)* "." formula

    iff: imp ("<->" imp)*
    imp: or_ ("->" or_)*
    or_: and_ ("|" and_)*
    and_: unary ("&" unary)*

    ?unary: "!" unary           -> neg
          | "(" formula ")"
          | atom

    ?atom: term REL term        -> cmp
         | INT "divides" term   -> divides
         | "true"               -> true
         | "false"              -> false

    term: [MINUS] addend ((PLUS | MINUS) addend)*

    addend: INT                 -> const
          | VAR                 -> var
          | INT "*" VAR         -> scaled

    EXISTS: "E"
    FORALL: "A"
    REL: "!=" | "<=" | ">=" | "=" | "<" | ">"
    PLUS: "+"
    MINUS: "-"
    INT: /[0-9]+/
    VAR: /[a-zA-Z_][a-zA-Z0-9_']*/

    %import common.WS
    %ignore WS
"""


@cache
def _parser() -> Lark:
    return Lark(GRAMMAR, parser="lalr", maybe_placeholders=True)


@v_args(inline=True)
class _ToFormula(Transformer):
    """Builds syntax nodes bottom-up; variable indices come from ``order``."""

    def __init__(self, order: dict[str, VarId]):
        super().__init__()
        self._order = order

    def start(self, f: Formula) -> Formula:
        return f

    def quant(self, kind: Token, *rest) -> Formula:
        *names, body = rest
        node = Exists if kind.type == "EXISTS" else Forall
        for name in reversed(names):
            body = node(self._order[str(name)], body)
        return body

    def iff(self, *items: Formula) -> Formula:
        result = items[0]
        for f in items[1:]:
            result = Iff(result, f)
        return result

    def imp(self, *items: Formula) -> Formula:
        result = items[-1]
        for f in reversed(items[:-1]):
            result = Implies(f, result)
        return result

    def or_(self, *items: Formula) -> Formula:
        result = items[0]
        for f in items[1:]:
            result = Or(result, f)
        return result

    def and_(self, *items: Formula) -> Formula:
        result = items[0]
        for f in items[1:]:
            result = And(result, f)
        return result

    def neg(self, body: Formula) -> Formula:
        return Not(body)

    def true(self) -> Formula:
        return TRUE

    def false(self) -> Formula:
        return FALSE

    def cmp(self, lhs: AffineTerm, rel: Token, rhs: AffineTerm) -> Formula:
        return normalize_atom(lhs, Rel(str(rel)), rhs)

    def divides(self, divisor: Token, body: AffineTerm) -> Formula:
        d = int(divisor)
        if d < 2:
            raise FormulaError(f"divisor must be at least 2, got {d}")
        return make_div(d, body)

    def term(self, lead: Token | None, first: AffineTerm, *rest) -> AffineTerm:
        total = -first if lead is not None else first
        for op, addend in zip(rest[::2], rest[1::2]):
            total = total - addend if op.type == "MINUS" else total + addend
        return total

    def const(self, value: Token) -> AffineTerm:
        return AffineTerm.const(int(value))

    def var(self, name: Token) -> AffineTerm:
        return AffineTerm.var(self._order[str(name)])

    def scaled(self, k: Token, name: Token) -> AffineTerm:
        return AffineTerm.var(self._order[str(name)], int(k))


def _variable_order(tree: Tree) -> dict[str, VarId]:
    tokens = tree.scan_values(lambda v: isinstance(v, Token) and v.type == "VAR")
    order: dict[str, VarId] = {}
    for tok in sorted(tokens, key=lambda t: t.start_pos or 0):
        name = str(tok)
        if name not in order:
            order[name] = VarId(name, len(order))
    return order


def parse(text: str) -> Formula:
    """
    Parse formula text.

    Variables are indexed by order of first occurrence. Atoms are normalized
    as they are built, so ``"2+3 < 4"`` parses to ``FALSE``.

    Raises:
        ParseError: if ``text`` does not match the grammar.
        FormulaError: for a divides-atom with divisor below 2.
    """
    try:
        tree = _parser().parse(text)
    except UnexpectedEOF as e:
        lines = text.splitlines() or [""]
        raise ParseError("unexpected end of input", len(lines), len(lines[-1]) + 1) from e
    except (UnexpectedCharacters, UnexpectedToken) as e:
        raise ParseError(f"unexpected input {_describe(e)}", e.line, e.column) from e
    except UnexpectedInput as e:
        raise ParseError("syntax error", e.line, e.column) from e
    try:
        return _ToFormula(_variable_order(tree)).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, FormulaError):
            raise e.orig_exc from None
        raise


def _describe(e: UnexpectedInput) -> str:
    if isinstance(e, UnexpectedToken):
        return repr(str(e.token)) if str(e.token) else "end of input"
    if isinstance(e, UnexpectedCharacters):
        return repr(e.char)
    return ""
