from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ppattach.baselines import (HindleRoothDecision, PrepositionTable, UndefinedEstimateError,
                                backed_off_pair_decide, baseline_always_noun, baseline_most_likely_prep,
                                hindle_rooth_decide, hindle_rooth_label, restrict_hr_testset)
from ppattach.corpus import Corpus, LabeledQuintuple, Quadruple, parse_corpus
from ppattach.counts import train
from ppattach.evaluation import score

from oracle import count, rows
from strategies import corpora, queries

NOUN, VERB, INDEF = HindleRoothDecision.NOUN, HindleRoothDecision.VERB, HindleRoothDecision.INDEFINITE


def corpus_from(*specs):
    """Build a corpus from (count, line) pairs."""
    return parse_corpus("".join((line + "\n") * n for n, line in specs))


def test_always_noun_accuracy_is_noun_share():
    test = parse_corpus("1 a b c d\n0 a b c d\n1 e f g h\n1 i j k l")
    assert baseline_always_noun(Quadruple("a", "b", "c", "d")) == 1
    assert score(baseline_always_noun, test) == (3, 4)


def test_most_likely_prep():
    m = train(corpus_from((3, "1 a b of c"), (1, "0 a b of c"), (1, "0 a b in c"), (1, "1 x y in z")))
    table = PrepositionTable.from_model(m)
    assert table == {"of": (3, 1), "in": (1, 1)}
    assert baseline_most_likely_prep(table, Quadruple("v", "n", "of", "m")) == 1
    assert baseline_most_likely_prep(table, Quadruple("v", "n", "in", "m")) == 1  # tie
    assert baseline_most_likely_prep(table, Quadruple("v", "n", "with", "m")) == 1  # unseen
    m2 = train(corpus_from((2, "0 a b to c"), (1, "1 a b to c")))
    assert baseline_most_likely_prep(PrepositionTable.from_model(m2), Quadruple("v", "n", "to", "m")) == 0


def test_hindle_rooth_arithmetic():
    # f(1,n1,p)=2, f(1,n1)=4, f(0,v,p)=1, f(0,v)=4
    m = train(corpus_from((2, "1 x n of a"), (2, "1 x n in a"), (1, "0 v y of a"), (3, "0 v y to a")))
    q = Quadruple("v", "n", "of", "z")
    assert hindle_rooth_decide(m, q) is NOUN
    assert hindle_rooth_label(m, q) == 1


def test_hindle_rooth_verb_and_tie():
    m = train(corpus_from((1, "1 x n of a"), (1, "1 x n in a"), (1, "0 v y of a"), (1, "0 v y to a")))
    assert hindle_rooth_decide(m, Quadruple("v", "n", "of", "z")) is INDEF  # 1/2 vs 1/2
    assert hindle_rooth_label(m, Quadruple("v", "n", "of", "z")) == 1
    assert hindle_rooth_decide(m, Quadruple("v", "n", "to", "z")) is VERB  # 0 vs 1/2
    assert hindle_rooth_label(m, Quadruple("v", "n", "to", "z")) == 0


def test_hindle_rooth_guards():
    m = train(corpus_from((1, "1 x n of a"), (1, "0 v y of a")))
    assert hindle_rooth_decide(m, Quadruple("v", "unseen", "of", "z")) is INDEF
    assert hindle_rooth_decide(m, Quadruple("unseen", "n", "of", "z")) is INDEF
    # n1 seen only with verb attachment: f(1,n1) = 0
    assert hindle_rooth_decide(m, Quadruple("v", "y", "of", "z")) is INDEF


def test_pair_backoff():
    m = train(corpus_from((3, "0 v a p x"), (3, "1 b n p x")))
    assert backed_off_pair_decide(m, Quadruple("v", "n", "p", "z")) == 1  # 3/6
    m = train(corpus_from((4, "0 v a p x"), (1, "1 b n p x")))
    assert backed_off_pair_decide(m, Quadruple("v", "n", "p", "z")) == 0  # 1/5
    with pytest.raises(UndefinedEstimateError):
        backed_off_pair_decide(m, Quadruple("q", "r", "p", "z"))


def test_restrict_excludes_unseen_n1():
    m = train(corpus_from((2, "1 x n of a"), (2, "1 x n in a"), (1, "0 v y of a"), (3, "0 v y to a")))
    test = Corpus([LabeledQuintuple.of(1, "v", "unseen", "of", "z"), LabeledQuintuple.of(1, "v", "n", "of", "z")])
    assert restrict_hr_testset(m, test) == Corpus([test[1]])


def _hr_oracle(data, v, n1, p, n2):
    a, b = count(data, 1, n1=n1, p=p), count(data, 1, n1=n1)
    c, d = count(data, 0, v=v, p=p), count(data, 0, v=v)
    if b == 0 or d == 0:
        return INDEF
    if a * d > c * b:
        return NOUN
    if a * d < c * b:
        return VERB
    return INDEF


@given(corpora(), queries())
def test_hindle_rooth_matches_recount(corpus, q):
    assert hindle_rooth_decide(train(corpus), Quadruple(*q)) is _hr_oracle(rows(corpus), *q)


@given(corpora(), st.integers(2, 4))
def test_hindle_rooth_scale_invariant(corpus, k):
    m, scaled = train(corpus), train(Corpus(list(corpus) * k))
    for item in corpus:
        assert hindle_rooth_decide(m, item.q) is hindle_rooth_decide(scaled, item.q)


@given(corpora(), corpora(max_items=20))
def test_restricted_set_is_subsequence_and_pair_defined(train_c, test_c):
    m = train(train_c)
    restricted = restrict_hr_testset(m, test_c)
    it = iter(test_c)
    assert all(any(x is y for y in it) for x in restricted)
    for item in restricted:
        backed_off_pair_decide(m, item.q)


@given(corpora(), queries())
def test_pair_decision_matches_recount(corpus, q):
    data = rows(corpus)
    v, n1, p, n2 = q
    num = count(data, 1, v=v, p=p) + count(data, 1, n1=n1, p=p)
    den = count(data, v=v, p=p) + count(data, n1=n1, p=p)
    m = train(corpus)
    if den == 0:
        with pytest.raises(UndefinedEstimateError):
            backed_off_pair_decide(m, Quadruple(*q))
    else:
        assert backed_off_pair_decide(m, Quadruple(*q)) == int(Fraction(num, den) >= Fraction(1, 2))
