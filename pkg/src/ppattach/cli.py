"""Command-line interface: ``ppattach <subcommand> ...``.

Exit status is 0 on success, 1 for usage errors (bad flags, missing files)
and 2 for malformed corpus or model data.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .backoff import AVERAGE, WEIGHTED, BackoffConfig, Stage, decide
from .baselines import (PrepositionTable, UndefinedEstimateError, backed_off_pair_decide,
                        baseline_always_noun, baseline_most_likely_prep, hindle_rooth_label,
                        restrict_hr_testset)
from .corpus import FORMATS, CorpusFormatError, parse_quadruples, read_corpus, write_corpus
from .counts import ModelFormatError, TupleKind, apply_cutoff, read_model, save_model, train
from .evaluation import ablate_cutoff, ablate_tuple, evaluate, fmt_percent, rank_tuples, score, summary_line
from .normalize import RULES, NormalizeConfig, normalize_corpus
from .stem import STEMMERS

USAGE_ERROR = 1
DATA_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _kind(code: str) -> TupleKind:
    try:
        return TupleKind.from_code(code)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _cutoffs(text: str) -> tuple:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected four comma-separated integers, got {text!r}")
    if len(values) != 4 or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected four non-negative integers, got {text!r}")
    return values


def _stages(text: str) -> frozenset:
    if text in ("", "none"):
        return frozenset()
    try:
        return frozenset(Stage.parse(s) for s in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("count must be non-negative")
    return value


def _add_format(p):
    p.add_argument("--format", choices=sorted(FORMATS), default="quintuple",
                   help="corpus file format: 'quintuple' (A V N1 P N2) or 'rrr' (id V N1 P N2 N|V)")


def _add_out(p):
    p.add_argument("--out", help="write the report here instead of stdout")


def _add_model_source(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--model", help="count model file written by 'train'")
    g.add_argument("--train", help="train on this corpus file instead of loading a model")


def _add_backoff(p):
    p.add_argument("--combination", choices=[WEIGHTED, AVERAGE], default=WEIGHTED,
                   help="pool counts within a stage (weighted) or average per-tuple ratios")
    p.add_argument("--stage-cutoffs", type=_cutoffs, default=(0, 0, 0, 0), metavar="C1,C2,C3,C4",
                   help="back off unless a stage's count exceeds its cutoff (default 0,0,0,0)")
    p.add_argument("--neutral-stages", type=_stages, default=_stages("quadruple,triple"),
                   metavar="STAGES",
                   help="stages where an exact 0.5 estimate backs off further "
                        "(comma-separated; default quadruple,triple; 'none' disables)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ppattach", description="Backed-off PP-attachment disambiguation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("preprocess", help="normalize numbers, names, case and verb morphology")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    _add_format(p)
    p.add_argument("--disable", action="append", choices=RULES, default=[],
                   help="turn off one normalization rule (repeatable)")
    p.add_argument("--stemmer", choices=sorted(STEMMERS), default="rules")

    p = sub.add_parser("train", help="count sub-tuples in a training corpus")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--model", required=True, help="output model file")
    p.add_argument("--cutoff", type=_nonneg, default=0,
                   help="zero every sub-tuple seen fewer than this many times")
    _add_format(p)

    p = sub.add_parser("predict", help="decide attachment for quadruples")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="input", help="file of 'v n1 p n2' lines")
    p.add_argument("words", nargs="*", metavar="WORD", help="a single query: v n1 p n2")
    _add_backoff(p)
    _add_out(p)

    p = sub.add_parser("eval", help="per-stage accuracy table on a test corpus")
    _add_model_source(p)
    p.add_argument("--test", required=True)
    _add_format(p)
    _add_backoff(p)
    _add_out(p)

    p = sub.add_parser("baseline", help="score a reference decision rule")
    p.add_argument("--method", choices=["noun", "prep", "hindle-rooth", "pair-backoff"], required=True)
    _add_model_source(p, required=False)
    p.add_argument("--test", required=True)
    p.add_argument("--restrict-hr", action="store_true",
                   help="score only items where the Hindle-Rooth test is definite")
    _add_format(p)
    _add_out(p)

    p = sub.add_parser("ablate", help="count cut-off and single-tuple experiments")
    _add_model_source(p)
    p.add_argument("--test", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cutoff", type=_nonneg)
    g.add_argument("--tuple", type=_kind, metavar="KINDCODE",
                   help="sub-tuple mask over VNPD, e.g. .NPD for (n1,p,n2)")
    g.add_argument("--rank-tuples", action="store_true")
    _add_format(p)
    _add_backoff(p)
    _add_out(p)
    return parser


def _backoff_config(args) -> BackoffConfig:
    return BackoffConfig(args.stage_cutoffs, args.combination, args.neutral_stages)


def _load_model(args):
    if getattr(args, "model", None):
        return read_model(args.model)
    if getattr(args, "train", None):
        return train(read_corpus(args.train, args.format))
    return None


def cmd_preprocess(args) -> str:
    cfg = NormalizeConfig(frozenset(RULES) - set(args.disable), args.stemmer)
    corpus = normalize_corpus(read_corpus(args.input, args.format), cfg)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_corpus(corpus))
    return ""


def cmd_train(args) -> str:
    m = train(read_corpus(args.input, args.format))
    if args.cutoff:
        m = apply_cutoff(m, args.cutoff)
    with open(args.model, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(save_model(m))
    return ""


def cmd_predict(args) -> str:
    if args.input and args.words:
        raise UsageError("give either --in or a quadruple on the command line, not both")
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            queries = parse_quadruples(fh)
    elif len(args.words) == 4:
        queries = parse_quadruples([" ".join(args.words)])
    else:
        raise UsageError("a query needs exactly four words: v n1 p n2")
    m = read_model(args.model)
    cfg = _backoff_config(args)
    lines = []
    for q in queries:
        label, est = decide(m, q, cfg)
        lines.append(f"{label} {est.p_noun:.6f} {est.stage.label}")
    return "\n".join(lines) + "\n"


def cmd_eval(args) -> str:
    m = _load_model(args)
    report = evaluate(m, read_corpus(args.test, args.format), _backoff_config(args))
    return f"{report.format_table()}\n{report.summary()}\n"


def cmd_baseline(args) -> str:
    m = _load_model(args)
    if m is None and (args.method != "noun" or args.restrict_hr):
        raise UsageError(f"--model or --train is required for --method {args.method}"
                         + (" with --restrict-hr" if args.method == "noun" else ""))
    test = read_corpus(args.test, args.format)
    lines = []
    if args.restrict_hr:
        full = len(test)
        test = restrict_hr_testset(m, test)
        lines.append(f"restricted={len(test)} of {full}")
    if args.method == "noun":
        fn = baseline_always_noun
    elif args.method == "prep":
        table = PrepositionTable.from_model(m)
        fn = lambda q: baseline_most_likely_prep(table, q)  # noqa: E731
    elif args.method == "hindle-rooth":
        fn = lambda q: hindle_rooth_label(m, q)  # noqa: E731
    else:
        fn = lambda q: backed_off_pair_decide(m, q)  # noqa: E731
    try:
        correct, total = score(fn, test)
    except UndefinedEstimateError as e:
        raise UsageError(f"{e} (use --restrict-hr)")
    lines.append(f"method={args.method} {summary_line(correct, total)}")
    return "\n".join(lines) + "\n"


def cmd_ablate(args) -> str:
    m = _load_model(args)
    test = read_corpus(args.test, args.format)
    cfg = _backoff_config(args)
    if args.cutoff is not None:
        report = ablate_cutoff(m, test, args.cutoff, cfg)
        return f"cutoff={args.cutoff}\n{report.format_table()}\n{report.summary()}\n"
    if args.tuple is not None:
        r = ablate_tuple(m, test, args.tuple, cfg)
        return (f"tuple={r.kind.code} cases={r.n_cases} correct={r.correct} "
                f"accuracy={fmt_percent(r.accuracy)}\n")
    lines = [f"{'Rank':<6}{'Tuple':<8}{'Slots':<12}{'Cases':>7}{'Correct':>9}{'Percent':>9}"]
    for i, r in enumerate(rank_tuples(m, test, cfg), 1):
        lines.append(f"{i:<6}{r.kind.code:<8}{str(r.kind):<12}{r.n_cases:>7}{r.correct:>9}"
                     f"{fmt_percent(r.accuracy):>9}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "preprocess": cmd_preprocess,
    "train": cmd_train,
    "predict": cmd_predict,
    "eval": cmd_eval,
    "baseline": cmd_baseline,
    "ablate": cmd_ablate,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output = COMMANDS[args.command](args)
    except (CorpusFormatError, ModelFormatError) as e:
        where = f"{e.filename}: " if getattr(e, "filename", None) else ""
        print(f"ppattach: error: {where}{e}", file=sys.stderr)
        return DATA_ERROR
    except UsageError as e:
        print(f"ppattach: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as e:
        print(f"ppattach: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    if output:
        out = getattr(args, "out", None)
        if out and args.command != "preprocess":
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(output)
        else:
            sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run())
