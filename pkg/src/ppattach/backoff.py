"""Backed-off estimate of the probability of noun attachment.

Evidence is taken from the most specific level that has any:

1. the full quadruple (v, n1, p, n2)
2. the three triples containing the preposition
3. the three pairs containing the preposition
4. the preposition alone
5. a default of noun attachment

Counts within a level are pooled (numerators and denominators summed) or,
optionally, their per-tuple ratios are averaged. Probabilities are kept as
exact fractions so the 0.5 tests never depend on float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Optional

from .corpus import NOUN, VERB, Quadruple
from .counts import PREP, PREP_PAIRS, PREP_TRIPLES, QUADRUPLE, CountModel, TupleKind, counts

HALF = Fraction(1, 2)


class Stage(IntEnum):
    QUADRUPLE = 1
    TRIPLE = 2
    PAIR = 3
    SINGLE = 4
    DEFAULT = 5

    @property
    def label(self) -> str:
        return self.name.lower()

    @property
    def title(self) -> str:
        return _TITLES[self]

    @classmethod
    def parse(cls, name: str) -> "Stage":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown stage {name!r}") from None


_TITLES = {Stage.QUADRUPLE: "Quadruples", Stage.TRIPLE: "Triples", Stage.PAIR: "Doubles",
           Stage.SINGLE: "Singles", Stage.DEFAULT: "Defaults"}

STAGE_KINDS = {
    Stage.QUADRUPLE: (QUADRUPLE,),
    Stage.TRIPLE: PREP_TRIPLES,
    Stage.PAIR: PREP_PAIRS,
    Stage.SINGLE: (PREP,),
}

WEIGHTED = "weighted"
AVERAGE = "average"


@dataclass(frozen=True)
class BackoffConfig:
    cutoffs: tuple = (0, 0, 0, 0)
    combination: str = WEIGHTED
    neutral_backoff_stages: frozenset = field(
        default_factory=lambda: frozenset({Stage.QUADRUPLE, Stage.TRIPLE}))

    def __post_init__(self):
        if len(self.cutoffs) != 4 or any(c < 0 for c in self.cutoffs):
            raise ValueError("cutoffs must be four non-negative counts")
        if self.combination not in (WEIGHTED, AVERAGE):
            raise ValueError(f"combination must be {WEIGHTED!r} or {AVERAGE!r}")

    def cutoff(self, stage: Stage) -> int:
        return self.cutoffs[stage - 1]


@dataclass(frozen=True)
class Estimate:
    prob: Fraction
    stage: Stage

    @property
    def p_noun(self) -> float:
        return float(self.prob)

    @property
    def label(self) -> int:
        return NOUN if self.prob >= HALF else VERB


DEFAULT_ESTIMATE = Estimate(Fraction(1), Stage.DEFAULT)


def _combine(pairs, threshold: int, combination: str) -> Optional[Fraction]:
    """Pool ``(noun_count, total_count)`` pairs; None when the evidence is too thin."""
    denom = sum(d for _, d in pairs)
    if denom <= threshold:
        return None
    if combination == WEIGHTED or len(pairs) == 1:
        return Fraction(sum(n for n, _ in pairs), denom)
    ratios = [Fraction(n, d) for n, d in pairs if d]
    return sum(ratios, Fraction(0)) / len(ratios)


def _run(m: CountModel, q: Quadruple, cfg: BackoffConfig, kinds_for) -> Estimate:
    for stage in (Stage.QUADRUPLE, Stage.TRIPLE, Stage.PAIR, Stage.SINGLE):
        pairs = [counts(m, kind, q) for kind in kinds_for(stage)]
        prob = _combine(pairs, cfg.cutoff(stage), cfg.combination)
        if prob is None:
            continue
        if prob == HALF and stage in cfg.neutral_backoff_stages:
            continue
        return Estimate(prob, stage)
    return DEFAULT_ESTIMATE


def estimate(m: CountModel, q: Quadruple, cfg: BackoffConfig = BackoffConfig()) -> Estimate:
    return _run(m, q, cfg, STAGE_KINDS.__getitem__)


def decide(m: CountModel, q: Quadruple, cfg: BackoffConfig = BackoffConfig()) -> tuple[int, Estimate]:
    est = estimate(m, q, cfg)
    return est.label, est


def stage_for_kind(kind: TupleKind) -> Stage:
    if kind.order == 4:
        raise ValueError("the quadruple stage cannot be replaced by a single tuple")
    return Stage(5 - kind.order)


def estimate_single_tuple(m: CountModel, q: Quadruple, kind: TupleKind,
                          cfg: BackoffConfig = BackoffConfig()) -> Estimate:
    """Run the backoff with the stage matching ``kind`` using only that tuple.

    The result's ``stage`` equals ``stage_for_kind(kind)`` exactly when the
    replaced stage produced the estimate.
    """
    replaced = stage_for_kind(kind)
    return _run(m, q, cfg, lambda s: (kind,) if s == replaced else STAGE_KINDS[s])
