"""Lexical normalization of quintuples to reduce sparse counts.

Rules, applied in this order:

``year``           four-digit numbers become ``YEAR``
``num``            other numerals (digits with optional commas/periods) become ``NUM``
``lowercase_v_p``  verb and preposition are lowercased
``name``           capitalized words in n1/n2 become ``NAME``
``name_collapse``  hyphenated runs ``NAME-NAME`` shrink to ``NAME``
``stem``           the verb is reduced to its stem
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .corpus import Corpus, LabeledQuintuple, Quadruple
from .stem import get_stemmer

RULES = ("year", "num", "lowercase_v_p", "name", "name_collapse", "stem")
SENTINELS = frozenset({"YEAR", "NUM", "NAME"})

_YEAR = re.compile(r"[0-9]{4}\Z")
_NUM = re.compile(r"[0-9.,]*[0-9][0-9.,]*\Z")
_NAME = re.compile(r"[A-Z][a-z]+\Z")
_NAME_RUN = re.compile(r"(?<![^-])NAME(?:-NAME)+(?![^-])")


@dataclass(frozen=True)
class NormalizeConfig:
    enabled_rules: frozenset = field(default_factory=lambda: frozenset(RULES))
    stemmer: str = "rules"

    def __post_init__(self):
        unknown = set(self.enabled_rules) - set(RULES)
        if unknown:
            raise ValueError(f"unknown normalization rules: {sorted(unknown)}")
        get_stemmer(self.stemmer)

    def without(self, *rules: str) -> "NormalizeConfig":
        return NormalizeConfig(self.enabled_rules - set(rules), self.stemmer)


def normalize_token_year_num(tok: str, year: bool = True, num: bool = True) -> str:
    if year and _YEAR.match(tok):
        return "YEAR"
    if num and _NUM.match(tok):
        return "NUM"
    return tok


def replace_names(tok: str) -> str:
    return "-".join("NAME" if _NAME.match(seg) else seg for seg in tok.split("-"))


def collapse_names(tok: str) -> str:
    prev = None
    while tok != prev:
        prev, tok = tok, _NAME_RUN.sub("NAME", tok)
    return tok


def normalize_name(tok: str) -> str:
    """Replace capitalized words by NAME, then collapse hyphenated NAME runs.

    >>> normalize_name("Smith-Jones"), normalize_name("McDonald")
    ('NAME', 'McDonald')
    """
    return collapse_names(replace_names(tok))


def _lower(tok: str) -> str:
    # sentinels from the numeral rules stay recognizable
    return tok if tok in SENTINELS else tok.lower()


def normalize_quintuple(x: LabeledQuintuple, cfg: NormalizeConfig = NormalizeConfig()) -> LabeledQuintuple:
    rules = cfg.enabled_rules
    v, n1, p, n2 = (normalize_token_year_num(t, "year" in rules, "num" in rules) for t in x.q)
    if "lowercase_v_p" in rules:
        v, p = _lower(v), _lower(p)
    if "name" in rules:
        n1, n2 = replace_names(n1), replace_names(n2)
    if "name_collapse" in rules:
        n1, n2 = collapse_names(n1), collapse_names(n2)
    if "stem" in rules:
        v = get_stemmer(cfg.stemmer)(v)
    return LabeledQuintuple(x.a, Quadruple(v, n1, p, n2))


def normalize_corpus(corpus: Iterable[LabeledQuintuple], cfg: NormalizeConfig = NormalizeConfig()) -> Corpus:
    return Corpus(normalize_quintuple(x, cfg) for x in corpus)
