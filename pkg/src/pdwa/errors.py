"""Exception hierarchy for pdwa."""


class PdwaError(Exception):
    """Base class for every error raised by pdwa."""
    pass


class FormulaError(PdwaError):
    """Raised for ill-formed formulas (bad divisor, missing variable, ...)."""
    pass


class ParseError(FormulaError):
    """Raised when formula text does not conform to the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class EncodingError(PdwaError):
    """Raised for invalid bases, digits or empty words."""
    pass


class AutomatonError(PdwaError):
    """Raised when an automaton operation's precondition does not hold."""
    pass


class AtomError(PdwaError):
    """Raised when an atom construction is called outside its domain."""
    pass


class QeError(PdwaError):
    """Raised when quantifier elimination receives an unsupported formula."""
    pass


class EngineError(PdwaError):
    """Raised by the compiler, decision procedures and reports."""
    pass


class CapExceeded(EngineError):
    """Raised when a construction would exceed its configured state cap."""
    pass
