"""Command-line interface: score, sweep, correlate, validate.

Every command is fully specified by flags, reads JSON-lines corpora, and
writes deterministic output: the same argv over the same files always
produces byte-identical stdout. Diagnostics go to stderr. Exit codes:
0 success, 1 input/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bleu import BleuParams, sentence_bleu
from .corpus import CorpusError, QuestionSample, load_corpus, scan_corpus
from .report import canonical_json_bytes, render, score_corpus
from .rouge import RougeParams, rouge_l_sample
from .stats import (
    DegenerateDataError,
    overall_level_protocol,
    paired_bootstrap,
    pearson,
    weight_sweep,
)
from .tokenization import TokenizerConfig, TokenizerMode


class UsageError(Exception):
    pass


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=2.0,
                        help="yes-no bonus weight (default 2.0)")
    parser.add_argument("--beta", type=float, default=1.0,
                        help="entity bonus weight (default 1.0)")
    parser.add_argument("--gamma", type=float, default=1.2,
                        help="recall weight in the ROUGE-L combination (default 1.2)")
    parser.add_argument("--bleu-n", type=int, default=4,
                        help="maximum n-gram order (default 4)")
    parser.add_argument("--tokenizer", choices=["whitespace", "char"],
                        default="whitespace",
                        help="word-level with punctuation split out, or per-character")
    parser.add_argument("--lowercase", action="store_true",
                        help="casefold text before tokenizing")
    parser.add_argument("--adapted", action=argparse.BooleanOptionalAction,
                        default=True, help="apply the bonus terms (default on)")
    parser.add_argument("--harmonic-rouge", action="store_true",
                        help="combine ROUGE precision/recall by plain harmonic mean")


def _tok_config(args: argparse.Namespace) -> TokenizerConfig:
    mode = (
        TokenizerMode.CHARACTER
        if args.tokenizer == "char"
        else TokenizerMode.WHITESPACE_PUNCT
    )
    return TokenizerConfig(mode=mode, lowercase=args.lowercase)


def _bleu_params(args: argparse.Namespace) -> BleuParams:
    return BleuParams(
        n=args.bleu_n, alpha=args.alpha, beta=args.beta, adapted=args.adapted
    )


def _rouge_params(args: argparse.Namespace) -> RougeParams:
    return RougeParams(
        gamma=args.gamma,
        alpha=args.alpha,
        beta=args.beta,
        adapted=args.adapted,
        harmonic=args.harmonic_rouge,
    )


def _write_output(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(data)


def _parse_grid(spec: str) -> list[float]:
    """start:end:step, inclusive of end when reachable; or a comma list."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid must be start:end:step, got {spec!r}")
        try:
            start, end, step = (float(p) for p in parts)
        except ValueError:
            raise UsageError(f"grid values must be numbers, got {spec!r}") from None
        if step <= 0:
            raise UsageError(f"grid step must be positive, got {step}")
        if end < start:
            raise UsageError(f"grid end {end} below start {start}")
        count = int((end - start) / step + 1e-9) + 1
        return [round(start + k * step, 12) for k in range(count)]
    try:
        return [float(p) for p in spec.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"grid values must be numbers, got {spec!r}") from None


def _read_score_file(path: str) -> list[float]:
    values = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise CorpusError(f"{path}: not a number: {line!r}", line=lineno) from None
    return values


def _cmd_score(args: argparse.Namespace) -> int:
    samples = load_corpus(args.corpus)
    report = score_corpus(
        samples,
        bleu_params=_bleu_params(args),
        rouge_params=_rouge_params(args),
        tok=_tok_config(args),
        max_workers=args.threads,
    )
    _write_output(render(report, args.format), args.out)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    samples, problems = scan_corpus(args.corpus)
    if problems:
        for lineno, message in problems:
            print(f"{args.corpus}: line {lineno}: {message}", file=sys.stderr)
        print(
            f"{len(problems)} invalid line(s), {len(samples)} valid sample(s)",
            file=sys.stderr,
        )
        return 1
    print(f"{args.corpus}: {len(samples)} valid sample(s)", file=sys.stderr)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    samples = load_corpus(args.corpus)
    grid = _parse_grid(args.grid)
    fixed_other = args.beta if args.vary == "alpha" else args.alpha
    rows = weight_sweep(
        samples,
        metric=args.metric,
        vary=args.vary,
        grid=grid,
        fixed_other=fixed_other,
        tok=_tok_config(args),
        bleu_n=args.bleu_n,
        gamma=args.gamma,
    )
    lines = ["weight,pcc"] + [f"{w:g},{pcc:.6f}" for w, pcc in rows]
    _write_output(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return 0


def _question_level_scores(
    samples: list[QuestionSample], args: argparse.Namespace
) -> tuple[list[float], list[float], list[float]]:
    """Vanilla scores, adapted scores, and mean human scores per question."""
    scored = [s for s in samples if s.mean_human_score() is not None]
    if not scored:
        raise DegenerateDataError("no sample carries human scores")
    tok = _tok_config(args)
    if args.metric == "bleu":
        params = _bleu_params(args)
        vanilla = [sentence_bleu(s, params.vanilla(), tok) for s in scored]
        adapted = [sentence_bleu(s, params, tok) for s in scored]
    else:
        params = _rouge_params(args)
        vanilla = [rouge_l_sample(s, params.vanilla(), tok) for s in scored]
        adapted = [rouge_l_sample(s, params, tok) for s in scored]
    humans = [s.mean_human_score() for s in scored]
    return vanilla, adapted, humans


def _cmd_correlate(args: argparse.Namespace) -> int:
    if args.scores_a or args.scores_b or args.human:
        if not (args.scores_a and args.human):
            raise UsageError("file mode needs --scores-a and --human")
        if args.corpus:
            raise UsageError("give either score files or --corpus, not both")
        a = _read_score_file(args.scores_a)
        human = _read_score_file(args.human)
        b = _read_score_file(args.scores_b) if args.scores_b else None
        lengths = {len(a), len(human)} | ({len(b)} if b is not None else set())
        if len(lengths) != 1:
            raise UsageError("score files must have the same number of lines")
        result = {"correlation_a": pearson(zip(a, human)).to_dict()}
        if b is not None:
            result["correlation_b"] = pearson(zip(b, human)).to_dict()
            result["bootstrap"] = paired_bootstrap(
                a, b, human, iterations=args.iterations, seed=args.seed
            ).to_dict()
        _write_output(canonical_json_bytes(result), args.out)
        return 0

    if not args.corpus:
        raise UsageError("correlate needs --corpus or score files")

    corpora = [load_corpus(path) for path in args.corpus]
    if args.level == "overall":
        # One corpus per system; scores aggregate per sampled question group.
        per_system_v = {}
        per_system_a = {}
        for path, samples in zip(args.corpus, corpora):
            vanilla, adapted, humans = _question_level_scores(samples, args)
            per_system_v[path] = list(zip(vanilla, humans))
            per_system_a[path] = list(zip(adapted, humans))
        result = {
            "correlation_a": overall_level_protocol(
                per_system_v,
                group_size=args.group_size,
                rounds=args.rounds,
                seed=args.seed,
            ).to_dict(),
            "correlation_b": overall_level_protocol(
                per_system_a,
                group_size=args.group_size,
                rounds=args.rounds,
                seed=args.seed,
            ).to_dict(),
        }
        _write_output(canonical_json_bytes(result), args.out)
        return 0

    if len(args.corpus) != 1:
        raise UsageError("question-level correlate takes exactly one corpus")
    vanilla, adapted, humans = _question_level_scores(corpora[0], args)
    result = {
        "correlation_a": pearson(zip(vanilla, humans)).to_dict(),
        "correlation_b": pearson(zip(adapted, humans)).to_dict(),
        "bootstrap": paired_bootstrap(
            vanilla, adapted, humans, iterations=args.iterations, seed=args.seed
        ).to_dict(),
    }
    _write_output(canonical_json_bytes(result), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrcmetrics",
        description="Score reading-comprehension answers with vanilla and "
        "bonus-adapted BLEU / ROUGE-L, and correlate metric scores with "
        "human judgments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score a corpus and emit a report")
    p_score.add_argument("--corpus", required=True, help="JSON-lines corpus path")
    _add_common_flags(p_score)
    p_score.add_argument("--format", choices=["json", "tsv", "text"], default="json")
    p_score.add_argument("--out", default=None, help="write output here instead of stdout")
    p_score.add_argument("--threads", type=int, default=1,
                         help="worker threads for per-question scoring (default 1)")

    p_validate = sub.add_parser("validate", help="check a corpus file")
    p_validate.add_argument("--corpus", required=True)

    p_sweep = sub.add_parser("sweep", help="correlation across bonus weights, as CSV")
    p_sweep.add_argument("--corpus", required=True)
    _add_common_flags(p_sweep)
    p_sweep.add_argument("--metric", choices=["bleu", "rouge-l"], default="rouge-l")
    p_sweep.add_argument("--vary", choices=["alpha", "beta"], required=True)
    p_sweep.add_argument("--grid", required=True,
                         help="start:end:step (inclusive) or comma-separated weights")
    p_sweep.add_argument("--out", default=None)

    p_corr = sub.add_parser(
        "correlate",
        help="correlate metric scores with human judgments; compare two metrics",
    )
    p_corr.add_argument("--corpus", nargs="+", default=None,
                        help="corpus path(s); several mean one per system at "
                        "--level overall")
    _add_common_flags(p_corr)
    p_corr.add_argument("--metric", choices=["bleu", "rouge-l"], default="rouge-l")
    p_corr.add_argument("--level", choices=["question", "overall"], default="question")
    p_corr.add_argument("--scores-a", default=None, help="file of metric scores, one per line")
    p_corr.add_argument("--scores-b", default=None)
    p_corr.add_argument("--human", default=None, help="file of human scores, one per line")
    p_corr.add_argument("--iterations", type=int, default=100,
                        help="bootstrap resampling rounds (default 100)")
    p_corr.add_argument("--seed", type=int, default=0)
    p_corr.add_argument("--group-size", type=int, default=30,
                        help="questions per group at overall level (default 30)")
    p_corr.add_argument("--rounds", type=int, default=100,
                        help="sampling rounds at overall level (default 100)")
    p_corr.add_argument("--out", default=None)

    return parser


_COMMANDS = {
    "score": _cmd_score,
    "validate": _cmd_validate,
    "sweep": _cmd_sweep,
    "correlate": _cmd_correlate,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CorpusError, DegenerateDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: cannot read {getattr(exc, 'filename', None) or exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
