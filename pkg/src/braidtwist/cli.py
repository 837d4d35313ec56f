"""Command-line front end.

Braid words are read as text: an optional header line ``n <strands>``
followed by whitespace-separated non-zero integers, ``g`` meaning
sigma_|g| with the sign of ``g``.  Without a header the strand count is
``max|g| + 1``.  Text after ``#`` on a line is ignored.

Exit codes: 0 true / success, 2 usage or parse error, 3 genuine false,
4 false (not genuine).
"""

from __future__ import annotations

import argparse
import sys

from .bench import ExperimentConfig, run_experiment, sample_half_twist
from .garside import normalize
from .halftwist import Reason, Verdict
from .randomized import RandomSource, TrialConfig, test_random_half_twist
from .word import BraidWord, degree

EXIT_TRUE = 0
EXIT_USAGE = 2
EXIT_GENUINE_FALSE = 3
EXIT_FALSE = 4


class WordParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        col = 0
        for piece in line.split():
            col = line.index(piece, col)
            yield lineno, col + 1, piece
            col += len(piece)


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse braid-word text; ``strands`` is used when the text has no header."""
    toks = list(_tokens(text))
    n = None
    if toks and toks[0][2] == "n":
        if len(toks) < 2 or toks[1][0] != toks[0][0]:
            raise WordParseError("header 'n' needs a strand count", toks[0][0], toks[0][1])
        line, col, value = toks[1]
        try:
            n = int(value)
        except ValueError:
            raise WordParseError(f"bad strand count {value!r}", line, col) from None
        if n < 1:
            raise WordParseError("strand count must be >= 1", line, col)
        if strands is not None and strands != n:
            raise WordParseError(f"header says n {n} but {strands} strands requested", line, col)
        toks = toks[2:]
    letters = []
    for line, col, value in toks:
        try:
            g = int(value)
        except ValueError:
            raise WordParseError(f"not an integer: {value!r}", line, col) from None
        if g == 0:
            raise WordParseError("zero is not a generator", line, col)
        limit = n if n is not None else strands
        if limit is not None and abs(g) > limit - 1:
            raise WordParseError(f"generator {g} out of range for B_{limit}", line, col)
        letters.append(g)
    if n is None:
        n = strands if strands is not None else max((abs(g) for g in letters), default=0) + 1
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return f"n {w.strands}\n{' '.join(str(x) for x in w.letters)}"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _int_range(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _cmd_check(args) -> int:
    w = parse_word(_read_input(args.file), args.strands)
    config = TrialConfig(max_tries=args.max_tries, seed=args.seed, square_mode=args.square)
    if args.power is not None and args.power != degree(w):
        print(f"false genuine reason={Reason.WRONG_DEGREE.value}")
        return EXIT_GENUINE_FALSE
    out = test_random_half_twist(w, config)
    tag = " square" if out.square else ""
    if out.verdict is Verdict.TRUE:
        wit = out.witness
        print(f"true c={wit.generator} k={wit.power} q={wit.conjugator}{tag}")
        return EXIT_TRUE
    if out.verdict is Verdict.GENUINE_FALSE:
        print(f"false genuine reason={out.reason.value}{tag}")
        return EXIT_GENUINE_FALSE
    print(f"false tries={out.tries}{tag}")
    return EXIT_FALSE


def _cmd_normalize(args) -> int:
    w = parse_word(_read_input(args.file), args.strands)
    nf = normalize(w)
    print(f"r={nf.r}")
    print(format_word(nf.positive_word))
    return EXIT_TRUE


def _cmd_gen(args) -> int:
    rng = RandomSource(args.seed)
    word, witness = sample_half_twist(args.strands, args.power, args.conj_len, rng)
    print(format_word(word))
    print(f"# q={witness.conjugator} c={witness.generator} k={witness.power}")
    return EXIT_TRUE


def _cmd_bench(args) -> int:
    config = ExperimentConfig(
        strands=args.strands,
        powers=args.powers,
        samples_per_power=args.samples,
        conjugator_length_range=(args.conj_len_min, args.conj_len_max),
        bucket_width=args.bucket_width,
        seed=args.seed,
        workers=args.workers,
    )
    table = run_experiment(config)
    text = table.to_csv()
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {len(table.rows)} rows to {args.out} (seed={args.seed})")
    return EXIT_TRUE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = _Parser(prog="braidtwist", description=__doc__.split("\n\n")[0],
                     formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide whether a word is a half-twist power",
                       formatter_class=fmt)
    p.add_argument("file", nargs="?", default="-", help="word file, '-' for stdin")
    p.add_argument("--strands", type=int, help="strand count when the text has no header")
    p.add_argument("--power", type=int,
                   help="expected power; a mismatch with the degree is a genuine false")
    p.add_argument("--max-tries", type=int, default=TrialConfig.max_tries)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--square", action="store_true", help="check w^2 at power 2k instead")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("normalize", help="print the normal form Delta^-r P",
                       formatter_class=fmt)
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--strands", type=int, help="strand count when the text has no header")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("gen", help="sample a random half-twist in normal form",
                       formatter_class=fmt)
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--conj-len", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="single-shot success rates by length bucket (CSV)",
                       formatter_class=fmt)
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--powers", type=_int_range, required=True, help="e.g. 1..5 or 2")
    p.add_argument("--samples", type=int, required=True, help="samples per power")
    p.add_argument("--conj-len-max", type=int, required=True)
    p.add_argument("--conj-len-min", type=int, default=1)
    p.add_argument("--bucket-width", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="CSV path, '-' for stdout")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordParseError as exc:
        print(f"braidtwist: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"braidtwist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
