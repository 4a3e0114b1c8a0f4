"""Scoring, per-stage breakdowns and the ablation experiments."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .backoff import BackoffConfig, Stage, decide, estimate_single_tuple, stage_for_kind
from .corpus import LabeledQuintuple, Quadruple
from .counts import ALL_KINDS, QUADRUPLE, CountModel, TupleKind, apply_cutoff


def percent(correct: int, total: int) -> Optional[Fraction]:
    return Fraction(100 * correct, total) if total else None


def fmt_percent(value: Optional[Fraction]) -> str:
    if value is None:
        return "-"
    # round half up on the exact value; float formatting would round 84.05 down
    tenths = math.floor(value * 10 + Fraction(1, 2))
    return f"{tenths // 10}.{tenths % 10}"


@dataclass(frozen=True)
class StageRow:
    stage: Stage
    total: int = 0
    correct: int = 0

    @property
    def accuracy(self) -> Optional[Fraction]:
        return percent(self.correct, self.total)


@dataclass(frozen=True)
class EvalReport:
    rows: tuple

    @property
    def overall_total(self) -> int:
        return sum(r.total for r in self.rows)

    @property
    def overall_correct(self) -> int:
        return sum(r.correct for r in self.rows)

    @property
    def overall_accuracy(self) -> Optional[Fraction]:
        return percent(self.overall_correct, self.overall_total)

    def row(self, stage: Stage) -> StageRow:
        return self.rows[stage - 1]

    def format_table(self) -> str:
        lines = [f"{'Stage':<12}{'Total':>8}{'Correct':>9}{'Percent':>9}"]
        for r in self.rows:
            lines.append(f"{r.stage.title:<12}{r.total:>8}{r.correct:>9}{fmt_percent(r.accuracy):>9}")
        lines.append(f"{'Totals':<12}{self.overall_total:>8}{self.overall_correct:>9}"
                     f"{fmt_percent(self.overall_accuracy):>9}")
        return "\n".join(lines)

    def summary(self) -> str:
        return summary_line(self.overall_correct, self.overall_total)


def summary_line(correct: int, total: int) -> str:
    return f"total={total} correct={correct} accuracy={fmt_percent(percent(correct, total))}"


def evaluate(m: CountModel, test: Iterable[LabeledQuintuple], cfg: BackoffConfig = BackoffConfig()) -> EvalReport:
    totals = dict.fromkeys(Stage, 0)
    correct = dict.fromkeys(Stage, 0)
    for item in test:
        label, est = decide(m, item.q, cfg)
        totals[est.stage] += 1
        correct[est.stage] += label == item.a
    return EvalReport(tuple(StageRow(s, totals[s], correct[s]) for s in Stage))


def ablate_cutoff(m: CountModel, test: Iterable[LabeledQuintuple], c: int,
                  cfg: BackoffConfig = BackoffConfig()) -> EvalReport:
    return evaluate(apply_cutoff(m, c), test, cfg)


@dataclass(frozen=True)
class TupleResult:
    kind: TupleKind
    n_cases: int
    correct: int

    @property
    def accuracy(self) -> Optional[Fraction]:
        return percent(self.correct, self.n_cases)


def ablate_tuple(m: CountModel, test: Iterable[LabeledQuintuple], kind: TupleKind,
                 cfg: BackoffConfig = BackoffConfig()) -> TupleResult:
    """Accuracy of one sub-tuple on the items where its stage decided."""
    stage = stage_for_kind(kind)
    n = correct = 0
    for item in test:
        est = estimate_single_tuple(m, item.q, kind, cfg)
        if est.stage == stage:
            n += 1
            correct += est.label == item.a
    return TupleResult(kind, n, correct)


ABLATION_KINDS = tuple(k for k in ALL_KINDS if k != QUADRUPLE)


def rank_tuples(m: CountModel, dev: Iterable[LabeledQuintuple],
                cfg: BackoffConfig = BackoffConfig()) -> list:
    """Run ablate_tuple for all 14 non-quadruple kinds, best first.

    Ties are broken by kind code; kinds with no cases go last.
    """
    dev = list(dev)
    results = [ablate_tuple(m, dev, k, cfg) for k in ABLATION_KINDS]
    return sorted(results, key=lambda r: (r.accuracy is None, -(r.accuracy or 0), r.kind.code))


def score(decide_fn: Callable[[Quadruple], int], test: Iterable[LabeledQuintuple]) -> tuple[int, int]:
    """Return ``(correct, total)`` for an arbitrary decision function."""
    correct = total = 0
    for item in test:
        total += 1
        correct += decide_fn(item.q) == item.a
    return correct, total
