"""Reference decision rules to compare the backed-off estimate against."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable

from .corpus import NOUN, VERB, Corpus, LabeledQuintuple, Quadruple
from .counts import PREP, CountModel, TupleKind, f_joint, counts

N1 = TupleKind.of("N1")
V = TupleKind.of("V")
N1_P = TupleKind.of("N1", "P")
V_P = TupleKind.of("V", "P")


class UndefinedEstimateError(ValueError):
    """The pair estimate has no supporting counts for this quadruple."""


class HindleRoothDecision(Enum):
    NOUN = "noun"
    VERB = "verb"
    INDEFINITE = "indefinite"


class PrepositionTable(dict):
    """Maps a preposition to its ``(f(1, p), f(0, p))`` attachment counts."""

    @classmethod
    def from_model(cls, m: CountModel) -> "PrepositionTable":
        table = cls()
        for x in m.total:
            if x.kind == PREP:
                table[x.words[0]] = (f_joint(m, NOUN, x), f_joint(m, VERB, x))
        return table


def baseline_always_noun(q: Quadruple) -> int:
    return NOUN


def baseline_most_likely_prep(table: PrepositionTable, q: Quadruple) -> int:
    # ties and unseen prepositions go to the majority class
    noun, verb = table.get(q.p, (0, 0))
    return NOUN if noun >= verb else VERB


def hindle_rooth_decide(m: CountModel, q: Quadruple) -> HindleRoothDecision:
    """Compare f(1,n1,p)/f(1,n1) with f(0,v,p)/f(0,v).

    A zero guard denominator or an exact tie gives INDEFINITE.
    """
    noun_n1 = f_joint(m, NOUN, N1.project(q))
    verb_v = f_joint(m, VERB, V.project(q))
    if noun_n1 == 0 or verb_v == 0:
        return HindleRoothDecision.INDEFINITE
    left = Fraction(f_joint(m, NOUN, N1_P.project(q)), noun_n1)
    right = Fraction(f_joint(m, VERB, V_P.project(q)), verb_v)
    if left > right:
        return HindleRoothDecision.NOUN
    if left < right:
        return HindleRoothDecision.VERB
    return HindleRoothDecision.INDEFINITE


def hindle_rooth_label(m: CountModel, q: Quadruple) -> int:
    """Label from the Hindle-Rooth test as stated (``>=`` picks noun).

    Undecidable cases default to noun attachment.
    """
    return VERB if hindle_rooth_decide(m, q) is HindleRoothDecision.VERB else NOUN


def backed_off_pair_decide(m: CountModel, q: Quadruple) -> int:
    n_vp, d_vp = counts(m, V_P, q)
    n_np, d_np = counts(m, N1_P, q)
    if d_vp + d_np == 0:
        raise UndefinedEstimateError(f"no (v,p) or (n1,p) counts for {' '.join(q)}")
    return NOUN if Fraction(n_vp + n_np, d_vp + d_np) >= Fraction(1, 2) else VERB


def restrict_hr_testset(m: CountModel, test: Iterable[LabeledQuintuple]) -> Corpus:
    return Corpus(x for x in test
                  if hindle_rooth_decide(m, x.q) is not HindleRoothDecision.INDEFINITE)
