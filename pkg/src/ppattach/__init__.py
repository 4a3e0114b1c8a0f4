"""Prepositional-phrase attachment with a backed-off count model."""

from .backoff import BackoffConfig, Estimate, Stage, decide, estimate, estimate_single_tuple
from .baselines import (HindleRoothDecision, PrepositionTable, backed_off_pair_decide,
                        baseline_always_noun, baseline_most_likely_prep, hindle_rooth_decide,
                        restrict_hr_testset)
from .corpus import Corpus, LabeledQuintuple, Quadruple, parse_corpus, read_corpus, write_corpus
from .counts import CountModel, SubTuple, TupleKind, apply_cutoff, f, f_joint, load_model, save_model, train
from .evaluation import EvalReport, StageRow, ablate_cutoff, ablate_tuple, evaluate, rank_tuples
from .normalize import NormalizeConfig, normalize_corpus, normalize_quintuple

__version__ = "0.1.0"
