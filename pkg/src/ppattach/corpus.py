"""Reading and writing labeled quintuple corpora.

A corpus file holds one record per line, five whitespace-separated fields::

    0 joined board as director

The first field is the attachment label (1 = noun, 0 = verb), followed by
the verb, first noun, preposition and second noun heads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, TextIO

NOUN = 1
VERB = 0


class CorpusFormatError(ValueError):
    """A corpus line could not be parsed."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class LabelError(CorpusFormatError):
    pass


class Quadruple(NamedTuple):
    v: str
    n1: str
    p: str
    n2: str


def _check_token(tok: str) -> None:
    if not tok or any(ch.isspace() for ch in tok):
        raise ValueError(f"invalid token {tok!r}")


@dataclass(frozen=True)
class LabeledQuintuple:
    a: int
    q: Quadruple

    def __post_init__(self):
        if self.a not in (0, 1) or isinstance(self.a, bool):
            raise ValueError(f"attachment label must be 0 or 1, got {self.a!r}")
        for tok in self.q:
            _check_token(tok)

    @classmethod
    def of(cls, a: int, v: str, n1: str, p: str, n2: str) -> "LabeledQuintuple":
        return cls(a, Quadruple(v, n1, p, n2))

    def to_line(self) -> str:
        return " ".join((str(self.a), *self.q))


class Corpus(tuple):
    """An immutable, ordered sequence of LabeledQuintuple items.

    Duplicates are kept; counting treats the corpus as a multiset.
    """

    def __new__(cls, items: Iterable[LabeledQuintuple] = ()):
        return super().__new__(cls, items)

    def __repr__(self):
        return f"Corpus({list(self)!r})"

    def quadruples(self) -> list[Quadruple]:
        return [item.q for item in self]

    def labels(self) -> list[int]:
        return [item.a for item in self]


def _lines(text: str | TextIO | Iterable[str]) -> Iterator[str]:
    if isinstance(text, str):
        return iter(text.splitlines())
    return iter(text)


def parse_corpus(text: str | TextIO | Iterable[str]) -> Corpus:
    """Parse quintuple records from a string, file object or line iterable.

    Blank lines are skipped. Raises CorpusFormatError (or its LabelError
    subclass) with the 1-based line number of the first bad line.
    """
    items = []
    for lineno, line in enumerate(_lines(text), 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 5:
            raise CorpusFormatError(lineno, f"expected 5 fields, found {len(fields)}")
        if fields[0] not in ("0", "1"):
            raise LabelError(lineno, f"label must be 0 or 1, found {fields[0]!r}")
        items.append(LabeledQuintuple(int(fields[0]), Quadruple(*fields[1:])))
    return Corpus(items)


def parse_rrr_corpus(text: str | TextIO | Iterable[str]) -> Corpus:
    """Parse the distribution format ``id v n1 p n2 N|V`` (as shipped with NLTK)."""
    items = []
    for lineno, line in enumerate(_lines(text), 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 6:
            raise CorpusFormatError(lineno, f"expected 6 fields, found {len(fields)}")
        tag = fields[5]
        if tag not in ("N", "V"):
            raise LabelError(lineno, f"attachment must be N or V, found {tag!r}")
        a = NOUN if tag == "N" else VERB
        items.append(LabeledQuintuple(a, Quadruple(*fields[1:5])))
    return Corpus(items)


def parse_quadruples(text: str | TextIO | Iterable[str]) -> list[Quadruple]:
    """Parse unlabeled ``v n1 p n2`` query lines."""
    queries = []
    for lineno, line in enumerate(_lines(text), 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 4:
            raise CorpusFormatError(lineno, f"expected 4 fields, found {len(fields)}")
        queries.append(Quadruple(*fields))
    return queries


def write_corpus(corpus: Iterable[LabeledQuintuple]) -> str:
    return "".join(item.to_line() + "\n" for item in corpus)


FORMATS = {"quintuple": parse_corpus, "rrr": parse_rrr_corpus}


def read_corpus(path, fmt: str = "quintuple") -> Corpus:
    with open(path, encoding="utf-8") as fh:
        try:
            return FORMATS[fmt](fh)
        except CorpusFormatError as e:
            e.filename = str(path)
            raise
