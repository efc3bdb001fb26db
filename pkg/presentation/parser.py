import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from presentation.models import Presentation
from presentation.words import IDENTITY, Word, commutator, conjugate, free_reduce
from utils.errors import (
    PresentationSyntaxError,
    UndefinedAbbreviationError,
    UnknownGeneratorError,
)

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<define>:=)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<op>[\^=,;\[\]()\-])"
)

_ATOM_START = {"name", "[", "("}


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PresentationSyntaxError(
                f"Unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = match.lastgroup
        value = match.group()
        column = pos - line_start + 1
        if kind == "op":
            tokens.append(Token(value, value, line, column))
        elif kind == "define":
            tokens.append(Token(":=", value, line, column))
        elif kind in ("name", "int"):
            tokens.append(Token(kind, value, line, column))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rfind("\n") + 1
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Scope:
    """Name resolution for generators and abbreviations while parsing."""

    def __init__(self, generator_names: Sequence[str], define_generators: bool):
        self.generator_names = list(generator_names)
        self.define_generators = define_generators
        self.abbreviations: Dict[str, Word] = {}
        self.definition_relators: List[Word] = []

    def lookup(self, token: Token) -> Word:
        if token.value in self.generator_names:
            return Word.generator(self.generator_names.index(token.value) + 1)
        if token.value in self.abbreviations:
            return self.abbreviations[token.value]
        if self.define_generators:
            raise UnknownGeneratorError(token.value, token.line, token.column)
        raise UndefinedAbbreviationError(
            f"Reference to undefined abbreviation '{token.value}' "
            f"(line {token.line}, column {token.column})"
        )

    def define(self, token: Token, expansion: Word) -> Word:
        if token.value in self.generator_names or token.value in self.abbreviations:
            raise PresentationSyntaxError(
                f"'{token.value}' is already defined", token.line, token.column
            )
        if not self.define_generators:
            self.abbreviations[token.value] = expansion
            return expansion
        # c := w introduces generator c together with the relator c^-1 w
        self.generator_names.append(token.value)
        letter = Word.generator(len(self.generator_names))
        self.definition_relators.append(free_reduce(letter.inverse() * expansion))
        return letter


class _Parser:
    def __init__(self, text: str, scope: _Scope):
        self.tokens = tokenize(text)
        self.pos = 0
        self.scope = scope

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Optional[Token] = None) -> PresentationSyntaxError:
        token = token or self.current
        found = token.value or "end of input"
        return PresentationSyntaxError(f"{message}, found '{found}'", token.line, token.column)

    def expect(self, kind: str, value: Optional[str] = None) -> Token:
        token = self.current
        if token.kind != kind or (value is not None and token.value != value):
            raise self.error(f"Expected '{value or kind}'")
        return self.advance()

    # file := "gens" namelist ";" "rels" rellist ";"
    def parse_file(self) -> List[Word]:
        self.expect("name", "gens")
        names = [self.expect("name")]
        while self.current.kind == ",":
            self.advance()
            names.append(self.expect("name"))
        for token in names:
            if token.value in ("gens", "rels"):
                raise self.error("Keyword used as generator name", token)
            if token.value in self.scope.generator_names:
                raise PresentationSyntaxError(
                    f"Duplicate generator '{token.value}'", token.line, token.column
                )
            self.scope.generator_names.append(token.value)
        self.expect(";")
        self.expect("name", "rels")
        relators = self.parse_relation_chain()
        while self.current.kind == ",":
            self.advance()
            relators.extend(self.parse_relation_chain())
        if self.current.kind == ";":
            self.advance()
        self.expect("eof")
        return relators

    # relchain := term ("=" term)+ ; a lone abbreviation is also accepted
    def parse_relation_chain(self) -> List[Word]:
        start = self.current
        first, pure_definition = self.parse_term()
        terms = [first]
        while self.current.kind == "=":
            self.advance()
            terms.append(self.parse_term()[0])
        if len(terms) == 1:
            if not pure_definition:
                raise self.error("Expected '=' in relation", self.current)
            return []
        rhs_inverse = terms[-1].inverse()
        relators = [lhs * rhs_inverse for lhs in terms[:-1]]
        logger.debug(f"Relation at line {start.line} expands to {len(relators)} relator(s)")
        return relators

    # term := factor+ | "1"
    def parse_term(self) -> Tuple[Word, bool]:
        token = self.current
        if token.kind == "int":
            if token.value != "1":
                raise self.error("Only '1' may stand as a bare integer term")
            self.advance()
            return IDENTITY, False
        if token.kind not in _ATOM_START:
            raise self.error("Expected a term")
        result = IDENTITY
        pure_definition = True
        count = 0
        while self.current.kind in _ATOM_START:
            word, is_definition = self.parse_factor()
            result = result * word
            pure_definition = pure_definition and is_definition
            count += 1
        return result, pure_definition and count == 1

    # factor := atom ("^" (int | atom))?
    def parse_factor(self) -> Tuple[Word, bool]:
        base, is_definition = self.parse_atom()
        if self.current.kind != "^":
            return base, is_definition
        self.advance()
        sign = 1
        if self.current.kind == "-":
            self.advance()
            sign = -1
        if self.current.kind == "int":
            token = self.advance()
            exponent = sign * int(token.value)
            if exponent == 0:
                raise PresentationSyntaxError(
                    "Exponent must be a non-zero integer", token.line, token.column
                )
            return base ** exponent, False
        if sign < 0:
            raise self.error("Expected an integer exponent after '-'")
        conjugator, _ = self.parse_atom()
        return conjugate(base, conjugator), False

    # atom := name | "[" term ("," term)+ "]" | "(" term ")" | name ":=" atom
    def parse_atom(self) -> Tuple[Word, bool]:
        token = self.current
        if token.kind == "name":
            self.advance()
            if self.current.kind == ":=":
                self.advance()
                expansion, _ = self.parse_atom()
                return self.scope.define(token, expansion), True
            return self.scope.lookup(token), False
        if token.kind == "[":
            self.advance()
            entries = [self.parse_term()[0]]
            while self.current.kind == ",":
                self.advance()
                entries.append(self.parse_term()[0])
            self.expect("]")
            if len(entries) < 2:
                raise self.error("A commutator needs at least two entries", token)
            return commutator(*entries), False
        if token.kind == "(":
            self.advance()
            inner, _ = self.parse_term()
            self.expect(")")
            return inner, False
        raise self.error("Expected a generator, '[' or '('")


def parse_presentation(text: str) -> Presentation:
    """Parse DSL source ``gens ...; rels ...;`` into a Presentation.

    Relations ``lhs = rhs`` are stored as free-reduced relators ``lhs rhs^-1``;
    chains ``a^4=b^4=1`` are split pairwise against the final term, and each
    abbreviation ``c:=[a,b]`` adds generator ``c`` with relator ``c^-1 [a,b]``.
    """
    scope = _Scope([], define_generators=True)
    parser = _Parser(text, scope)
    relators = parser.parse_file()
    # definition relators come first, in source order
    ordered = list(scope.definition_relators) + relators
    return Presentation(tuple(scope.generator_names), tuple(free_reduce(r) for r in ordered))


def expand_word(
    text: str,
    generator_names: Sequence[str],
    abbreviations: Optional[Dict[str, Word]] = None,
) -> Word:
    """Expand sugared word syntax (powers, commutators, conjugation) to flat letters.

    The result is not free-reduced. Names that are neither generators nor
    abbreviations raise UndefinedAbbreviationError.
    """
    scope = _Scope(generator_names, define_generators=False)
    scope.abbreviations.update(abbreviations or {})
    parser = _Parser(text, scope)
    word, _ = parser.parse_term()
    parser.expect("eof")
    return word
