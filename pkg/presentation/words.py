from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple


@dataclass(frozen=True)
class Word:
    """A word over group generators.

    Letters are signed 1-based generator indices: ``k`` is generator ``k`` and
    ``-k`` its inverse. The empty word is the identity.
    """

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(letter == 0 for letter in self.letters):
            raise ValueError("Word letters must be non-zero signed generator indices")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))

    @classmethod
    def of(cls, *letters: int) -> "Word":
        return cls(tuple(letters))

    @classmethod
    def generator(cls, index: int) -> "Word":
        return cls((index,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n >= 0:
            return Word(self.letters * n)
        return Word(self.inverse().letters * (-n))

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def free_reduce(self) -> "Word":
        return free_reduce(self)


IDENTITY = Word()


def free_reduce(w: Word) -> Word:
    """Cancel adjacent ``g g^-1`` pairs until none remain."""
    stack = []
    for letter in w.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def commutator(*words: Word) -> Word:
    """Left-normed commutator: [x,y] = x^-1 y^-1 x y and [x,y,z] = [[x,y],z]."""
    if len(words) < 2:
        raise ValueError("A commutator needs at least two entries")
    result = words[0]
    for w in words[1:]:
        result = result.inverse() * w.inverse() * result * w
    return result


def conjugate(x: Word, y: Word) -> Word:
    """x^y = y^-1 x y."""
    return y.inverse() * x * y


def product(words: Iterable[Word]) -> Word:
    letters = []
    for w in words:
        letters.extend(w.letters)
    return Word(tuple(letters))


def format_word(w: Word, names: Sequence[str]) -> str:
    """Render a word with run-length exponents, e.g. ``a^3 b^-1``; identity is ``1``."""
    if w.is_identity():
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run = j - i
        name = names[abs(letters[i]) - 1]
        exponent = run if letters[i] > 0 else -run
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
        i = j
    return " ".join(parts)
