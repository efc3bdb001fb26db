from dataclasses import dataclass
from typing import Tuple

from presentation.words import Word, format_word
from utils.errors import UnknownGeneratorError


@dataclass(frozen=True)
class Presentation:
    """A finite presentation: generator names and relator words equal to the identity."""

    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relators", tuple(self.relators))
        if any(not name for name in self.generator_names):
            raise ValueError("Generator names must be non-empty")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError(f"Generator names must be unique: {self.generator_names}")
        for relator in self.relators:
            if relator.max_generator() > len(self.generator_names):
                raise UnknownGeneratorError(f"#{relator.max_generator()}")

    @property
    def rank(self) -> int:
        return len(self.generator_names)

    def index_of(self, name: str) -> int:
        return self.generator_names.index(name) + 1

    def format_relator(self, relator: Word) -> str:
        return format_word(relator, self.generator_names)


def format_presentation(presentation: Presentation, comment: str = "") -> str:
    """Pretty-print a presentation in the DSL; re-parsing yields identical relators."""
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"gens {','.join(presentation.generator_names)};")
    relations = [f"{presentation.format_relator(r)}=1" for r in presentation.relators]
    if not relations:
        relations = ["1=1"]
    lines.append(f"rels {', '.join(relations)};")
    return "\n".join(lines) + "\n"
