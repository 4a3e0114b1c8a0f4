"""Frequency tables over every sub-tuple of the (v, n1, p, n2) quadruple.

``f(m, x)`` is how often sub-tuple ``x`` was seen in training with either
attachment and ``f_joint(m, a, x)`` how often it was seen with label ``a``.
All 15 non-empty slot subsets are counted.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence, TextIO

from .corpus import LabeledQuintuple, Quadruple

SLOT_NAMES = ("V", "N1", "P", "N2")
MASK_LETTERS = "VNPD"
HEADER = "ppattach-counts v1"
_DIGITS = re.compile(r"[0-9]+\Z")


class TupleKind(NamedTuple):
    """A non-empty subset of the quadruple's slots, as sorted slot indices."""

    slots: tuple

    @property
    def code(self) -> str:
        return "".join(c if i in self.slots else "." for i, c in enumerate(MASK_LETTERS))

    @property
    def order(self) -> int:
        return len(self.slots)

    @property
    def has_prep(self) -> bool:
        return 2 in self.slots

    @classmethod
    def from_code(cls, code: str) -> "TupleKind":
        if len(code) != 4 or any(c not in (letter, ".") for c, letter in zip(code, MASK_LETTERS)):
            raise ValueError(f"invalid kind code {code!r}")
        slots = tuple(i for i, c in enumerate(code) if c != ".")
        if not slots:
            raise ValueError(f"invalid kind code {code!r}")
        return cls(slots)

    @classmethod
    def of(cls, *names: str) -> "TupleKind":
        """Build a kind from slot names, e.g. ``TupleKind.of("V", "P")``."""
        return cls(tuple(sorted(SLOT_NAMES.index(n) for n in names)))

    def project(self, q: Sequence[str]) -> "SubTuple":
        return SubTuple(self, tuple(q[i] for i in self.slots))

    def __str__(self):
        return " ".join(SLOT_NAMES[i] for i in self.slots)


ALL_KINDS = tuple(
    TupleKind(slots) for r in (4, 3, 2, 1) for slots in combinations(range(4), r)
)
QUADRUPLE = TupleKind((0, 1, 2, 3))
PREP_TRIPLES = (TupleKind.of("V", "N1", "P"), TupleKind.of("V", "P", "N2"), TupleKind.of("N1", "P", "N2"))
PREP_PAIRS = (TupleKind.of("V", "P"), TupleKind.of("N1", "P"), TupleKind.of("P", "N2"))
PREP = TupleKind.of("P")


class SubTuple(NamedTuple):
    kind: TupleKind
    words: tuple


@dataclass
class CountModel:
    joint: Counter = field(default_factory=Counter)  # (a, SubTuple) -> count
    total: Counter = field(default_factory=Counter)  # SubTuple -> count
    label_totals: list = field(default_factory=lambda: [0, 0])
    n_items: int = 0

    def __eq__(self, other):
        if not isinstance(other, CountModel):
            return NotImplemented
        # compare without zero entries
        return (+self.joint == +other.joint and +self.total == +other.total
                and list(self.label_totals) == list(other.label_totals)
                and self.n_items == other.n_items)

    def subtuples(self) -> list:
        return sorted(self.total, key=_sort_key)


def _sort_key(x: SubTuple):
    return (x.kind.code, x.words)


def train(corpus: Iterable[LabeledQuintuple]) -> CountModel:
    m = CountModel()
    for item in corpus:
        for kind in ALL_KINDS:
            x = kind.project(item.q)
            m.total[x] += 1
            m.joint[item.a, x] += 1
        m.label_totals[item.a] += 1
        m.n_items += 1
    return m


def f(m: CountModel, x: SubTuple) -> int:
    return m.total.get(x, 0)


def f_joint(m: CountModel, a: int, x: SubTuple) -> int:
    return m.joint.get((a, x), 0)


def counts(m: CountModel, kind: TupleKind, q: Quadruple) -> tuple[int, int]:
    """Return ``(f(1, x), f(x))`` for the sub-tuple of ``q`` selected by ``kind``."""
    x = kind.project(q)
    return m.joint.get((1, x), 0), m.total.get(x, 0)


def apply_cutoff(m: CountModel, c: int) -> CountModel:
    """Zero every sub-tuple seen fewer than ``c`` times (both joint counts too)."""
    if c < 0:
        raise ValueError("cutoff must be non-negative")
    out = CountModel(label_totals=list(m.label_totals), n_items=m.n_items)
    out.total = Counter({x: n for x, n in m.total.items() if n >= c})
    out.joint = Counter({(a, x): n for (a, x), n in m.joint.items() if m.total.get(x, 0) >= c})
    return out


class ModelFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def save_model(m: CountModel) -> str:
    lines = [f"{HEADER} {m.n_items} {m.label_totals[0]} {m.label_totals[1]}"]
    for x in m.subtuples():
        words = " ".join(x.words)
        if m.total[x]:
            lines.append(f"{x.kind.code} * {words} {m.total[x]}")
        for a in (0, 1):
            n = m.joint.get((a, x), 0)
            if n:
                lines.append(f"{x.kind.code} {a} {words} {n}")
    return "\n".join(lines) + "\n"


def _count(tok: str, lineno: int) -> int:
    if not _DIGITS.match(tok):
        raise ModelFormatError(lineno, f"invalid count {tok!r}")
    return int(tok)


def load_model(text: str | TextIO | Iterable[str]) -> CountModel:
    lines = iter(text.splitlines() if isinstance(text, str) else text)
    header = next(lines, "").split()
    if header[:2] != HEADER.split() or len(header) != 5:
        raise ModelFormatError(1, "missing or malformed header")
    m = CountModel(n_items=_count(header[2], 1),
                   label_totals=[_count(header[3], 1), _count(header[4], 1)])
    if sum(m.label_totals) != m.n_items:
        raise ModelFormatError(1, "label totals do not sum to item count")
    lines_read = 1
    for lineno, line in enumerate(lines, 2):
        lines_read = lineno
        fields = line.split()
        if not fields:
            continue
        try:
            kind = TupleKind.from_code(fields[0])
        except ValueError as e:
            raise ModelFormatError(lineno, str(e)) from None
        if len(fields) != kind.order + 3:
            raise ModelFormatError(lineno, f"expected {kind.order + 3} fields for kind {kind.code}")
        x = SubTuple(kind, tuple(fields[2:-1]))
        n = _count(fields[-1], lineno)
        tag = fields[1]
        if tag == "*":
            m.total[x] = n
        elif tag in ("0", "1"):
            m.joint[int(tag), x] = n
        else:
            raise ModelFormatError(lineno, f"label must be 0, 1 or *, found {tag!r}")
    for x in set(m.total) | {x for _, x in m.joint}:
        if m.total[x] != m.joint[0, x] + m.joint[1, x]:
            raise ModelFormatError(lines_read, f"total for {x.kind.code} {' '.join(x.words)} "
                                   "does not match its joint counts")
    m.total, m.joint = +m.total, +m.joint
    return m


def read_model(path) -> CountModel:
    with open(path, encoding="utf-8") as fh:
        try:
            return load_model(fh)
        except ModelFormatError as e:
            e.filename = str(path)
            raise


def write_model(m: CountModel, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(save_model(m))
