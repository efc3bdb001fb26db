from .words import Word, IDENTITY, free_reduce, commutator, conjugate, product, format_word
from .models import Presentation, format_presentation
from .parser import parse_presentation, expand_word, tokenize

all = [
    Word, IDENTITY, free_reduce, commutator, conjugate, product, format_word,
    Presentation, format_presentation, parse_presentation, expand_word, tokenize,
]
