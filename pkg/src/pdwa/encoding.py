"""
Base-ρ, most-significant-digit-first ρ's-complement encoding of integer tuples.

A word b̄_n b̄_{n-1} ... b̄_0 over r-tuples of digits decodes per track to
⟨b_{n-1} ... b_0⟩_N minus ρ^n when the sign digit b_n is nonzero. Any nonzero
sign digit means "negative"; canonical words use sign digits in {0, ρ-1}.
"""

from dataclasses import dataclass
from functools import cache
from itertools import product
from typing import Iterator, Sequence

from .errors import EncodingError
from .type_utils import Letter


@dataclass(frozen=True, slots=True)
class Base:
    """The radix ρ ≥ 2."""
    rho: int

    def __post_init__(self):
        if self.rho < 2:
            raise EncodingError(f"base must be at least 2, got {self.rho}")

    def __int__(self) -> int:
        return self.rho


@dataclass(frozen=True, slots=True)
class TupleWord:
    """A word over r-tuples of digits. Arity 0 words consist of unit letters ()."""
    arity: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.arity < 0:
            raise EncodingError(f"arity must be non-negative, got {self.arity}")
        for letter in self.letters:
            if len(letter) != self.arity:
                raise EncodingError(
                    f"letter {letter} does not have {self.arity} coordinates"
                )

    @classmethod
    def of(cls, letters: Sequence[Sequence[int]], arity: int | None = None) -> "TupleWord":
        letters = tuple(tuple(letter) for letter in letters)
        if arity is None:
            if not letters:
                raise EncodingError("arity of an empty word must be given")
            arity = len(letters[0])
        return cls(arity=arity, letters=letters)

    @classmethod
    def track(cls, digits: str) -> "TupleWord":
        """Single-track word from a digit string, e.g. TupleWord.track("101")."""
        return cls(arity=1, letters=tuple((int(d),) for d in digits))

    def __len__(self) -> int:
        return len(self.letters)

    def validate(self, base: int) -> None:
        for letter in self.letters:
            for digit in letter:
                if not 0 <= digit < base:
                    raise EncodingError(f"digit {digit} out of range for base {base}")


def _rho(base: "Base | int") -> int:
    rho = int(base)
    if rho < 2:
        raise EncodingError(f"base must be at least 2, got {rho}")
    return rho


@cache
def all_letters(arity: int, base: int) -> tuple[Letter, ...]:
    """Every letter of Σ^r in index order (first track most significant)."""
    return tuple(product(range(base), repeat=arity))


def letter_index(letter: Letter, base: int) -> int:
    index = 0
    for digit in letter:
        index = index * base + digit
    return index


def decode_nat(w: TupleWord, base: "Base | int") -> tuple[int, ...]:
    """Per-track base-ρ value; the empty word decodes to 0 on every track."""
    rho = _rho(base)
    w.validate(rho)
    values = [0] * w.arity
    for letter in w.letters:
        for i, digit in enumerate(letter):
            values[i] = values[i] * rho + digit
    return tuple(values)


def decode_int(w: TupleWord, base: "Base | int") -> tuple[int, ...]:
    """Per-track ρ's-complement value. The first letter is the sign letter."""
    rho = _rho(base)
    if not w.letters:
        raise EncodingError("the empty word does not encode an integer tuple")
    rest = TupleWord(arity=w.arity, letters=w.letters[1:])
    magnitudes = decode_nat(rest, rho)
    offset = rho ** len(rest)
    sign = w.letters[0]
    for digit in sign:
        if not 0 <= digit < rho:
            raise EncodingError(f"digit {digit} out of range for base {rho}")
    return tuple(m - offset if s else m for m, s in zip(magnitudes, sign))


def encode_int(z: Sequence[int], base: "Base | int") -> TupleWord:
    """Shortest word with canonical sign letter decoding to ``z``."""
    rho = _rho(base)
    z = tuple(z)
    if not z:
        return TupleWord(arity=0, letters=((),))
    n = 0
    bound = 1
    while any(not -bound <= v <= bound - 1 for v in z):
        n += 1
        bound *= rho
    tracks = []
    for v in z:
        sign, magnitude = (0, v) if v >= 0 else (rho - 1, v + bound)
        digits = []
        for _ in range(n):
            magnitude, digit = divmod(magnitude, rho)
            digits.append(digit)
        tracks.append([sign, *reversed(digits)])
    letters = tuple(tuple(track[i] for track in tracks) for i in range(n + 1))
    return TupleWord(arity=len(z), letters=letters)


def sign_vector(letter: Letter) -> tuple[int, ...]:
    """σ(b̄): 0 for a zero coordinate, -1 otherwise."""
    return tuple(0 if digit == 0 else -1 for digit in letter)


def canonical_letter(letter: Letter, base: "Base | int") -> Letter:
    """Map every nonzero digit to ρ-1; the repeat letter of a sign letter."""
    rho = _rho(base)
    return tuple(0 if digit == 0 else rho - 1 for digit in letter)


def is_canonical_sign(letter: Letter, base: "Base | int") -> bool:
    return letter == canonical_letter(letter, base)


def sign_extend(w: TupleWord, k: int, base: "Base | int") -> TupleWord:
    """Canonicalize the sign letter and prepend ``k`` copies of it."""
    if not w.letters:
        raise EncodingError("cannot sign-extend the empty word")
    if k < 0:
        raise EncodingError(f"extension count must be non-negative, got {k}")
    sign = canonical_letter(w.letters[0], base)
    return TupleWord(arity=w.arity, letters=(sign,) * (k + 1) + w.letters[1:])


def format_word(w: TupleWord) -> str:
    """Digits per letter joined by ',', letters joined by ';'."""
    return ";".join(",".join(str(d) for d in letter) for letter in w.letters)


def parse_word(text: str, base: "Base | int | None" = None) -> TupleWord:
    text = text.strip()
    if not text:
        raise EncodingError("empty word text")
    try:
        letters = [
            tuple(int(d) for d in part.split(",")) if part.strip() else ()
            for part in text.split(";")
        ]
    except ValueError as e:
        raise EncodingError(f"malformed word {text!r}") from e
    word = TupleWord.of(letters)
    if base is not None:
        word.validate(_rho(base))
    return word


def enumerate_words(arity: int, base: "Base | int", max_len: int, min_len: int = 1) -> Iterator[TupleWord]:
    """All words with min_len ≤ length ≤ max_len, shorter first, then by letter index."""
    letters = all_letters(arity, _rho(base))
    layer: list[tuple[Letter, ...]] = [()]
    for length in range(1, max_len + 1):
        layer = [w + (b,) for w in layer for b in letters]
        if length >= min_len:
            for w in layer:
                yield TupleWord(arity=arity, letters=w)
