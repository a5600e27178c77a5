"""
Command-line interface.

Subcommands: stats, map, pattern, rsk, table, verify.  Data goes to
standard output, diagnostics to standard error.  Exit codes: 0 success (or
all checks verified), 1 a check found a counterexample, 2 usage or parse
error.  Every subcommand is a thin wrapper over the library.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import involution, patterns, tableaux, verify, words
from .errors import InternalInvariantError

# Table column order: Adj, des, ides, F, IMAJ, MAJ, STAT.
DEFAULT_SCHEMA = ("adj", "des", "ides", "F", "imaj", "maj", "stat")

_SCHEMA_ALIASES = {
    "Adj": "adj",
    "IMAJ": "imaj",
    "MAJ": "maj",
    "STAT": "stat",
    "Id": "Id-set",
    "D": "D-set",
    "Sh": "Sh-set",
}

_HEADINGS = {
    "F": "F",
    "des": "des",
    "ides": "ides",
    "adj": "Adj",
    "maj": "MAJ",
    "imaj": "IMAJ",
    "stat": "STAT",
    "D-set": "D",
    "Id-set": "Id",
    "Sh-set": "Sh",
}


def _parse_schema(text: str | None) -> list[str]:
    if text is None:
        return list(DEFAULT_SCHEMA)
    tokens = [tok.strip() for tok in text.split(",") if tok.strip()]
    resolved = [_SCHEMA_ALIASES.get(tok, tok) for tok in tokens]
    for tok in resolved:
        verify.statistic(tok)  # raises UnknownNameError on a bad token
    return resolved


def _cell(value: object) -> str:
    if isinstance(value, tuple):
        return words.format_index_set(value)
    return str(value)


def _json_value(value: object) -> object:
    if isinstance(value, tuple):
        return list(value)
    return value


def cmd_stats(args: argparse.Namespace) -> int:
    w = words.parse_word(args.word)
    sv = words.stat_vector(w)
    record = {
        "Adj": sv.adj,
        "des": sv.des,
        "ides": sv.ides,
        "F": sv.first,
        "IMAJ": sv.imaj,
        "MAJ": sv.maj,
        "STAT": sv.stat,
    }
    sets = {"D": sv.d_set, "Id": sv.id_set, "Sh": sv.sh_set}
    if args.format == "json":
        payload: dict[str, object] = {"word": words.format_word(w), **record}
        payload.update({key: sorted(value) for key, value in sets.items()})
        print(json.dumps(payload))
    else:
        fields = [f"{key}={value}" for key, value in record.items()]
        fields += [f"{key}={words.format_index_set(value)}" for key, value in sets.items()]
        print(" ".join(fields))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    w = words.parse_word(args.word)
    if args.name == "code":
        print(words.format_word(words.code(w)))
        return 0
    if args.name == "phi":
        print(words.format_word(involution.phi_on_class(w)))
        return 0
    if not words.is_permutation(w):
        print(f"error: map {args.name!r} needs a permutation of 1..n", file=sys.stderr)
        return 2
    mapper = {
        "p": involution.burstein_p,
        "j": tableaux.foata_j,
        "rc": words.reverse_complement,
    }[args.name]
    print(words.format_word(mapper(w)))
    return 0


def cmd_pattern(args: argparse.Namespace) -> int:
    pat = patterns.parse_pattern(args.pattern)
    w = words.parse_word(args.word)
    print(patterns.count_occurrences(pat, w))
    return 0


def cmd_rsk(args: argparse.Namespace) -> int:
    w = words.parse_word(args.word)
    if not words.is_permutation(w):
        print("error: rsk needs a permutation of 1..n", file=sys.stderr)
        return 2
    insert_tab, record_tab = tableaux.rsk(w)
    print("P:")
    print(insert_tab)
    print("Q:")
    print(record_tab)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    letters = words.parse_word(args.multiset)
    schema = _parse_schema(args.schema)
    if verify.multinomial(letters) > args.cap:
        print(
            f"error: rearrangement class has {verify.multinomial(letters)} elements,"
            f" more than the cap {args.cap}",
            file=sys.stderr,
        )
        return 2
    extractors = [verify.statistic(token) for token in schema]
    headings = [_HEADINGS[token] for token in schema]
    rows = [(v, [f(v) for f in extractors]) for v in verify.rearrangement_class(letters)]
    if args.format == "json":
        payload = [
            {"word": words.format_word(v), **dict(zip(headings, map(_json_value, values)))}
            for v, values in rows
        ]
        print(json.dumps(payload))
    else:
        print("\t".join(["word", *headings]))
        for v, values in rows:
            print("\t".join([words.format_word(v), *[_cell(x) for x in values]]))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = verify.CheckBounds(
        n=args.n,
        alphabet=args.alphabet,
        word=words.parse_word(args.word) if args.word else None,
        cap=args.cap,
        jobs=args.jobs,
    )
    if args.check == "all":
        reports = verify.run_all(bounds)
    else:
        reports = [verify.check(args.check, bounds)]
    if args.format == "json":
        payload = [
            {
                "name": r.name,
                "domain": r.domain,
                "instances": r.instances,
                "passed": r.passed,
                "counterexample": None
                if r.counterexample is None
                else {
                    "input": r.counterexample.input,
                    "expected": r.counterexample.expected,
                    "actual": r.counterexample.actual,
                },
            }
            for r in reports
        ]
        print(json.dumps(payload))
    else:
        for r in reports:
            for line in r.lines():
                print(line)
    return 0 if all(r.passed for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahonian",
        description="Word statistics, vincular pattern counting, RSK, and the"
        " MAJ/STAT involutions, with exhaustive bounded verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="print the seven statistics and index sets of a word")
    p_stats.add_argument("word", help='word text, e.g. "2112" or "10,2,10,3"')
    p_stats.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_stats.set_defaults(func=cmd_stats)

    p_map = sub.add_parser("map", help="apply a named map to a word or permutation")
    p_map.add_argument("name", choices=("phi", "p", "j", "code", "rc"))
    p_map.add_argument("word")
    p_map.set_defaults(func=cmd_map)

    p_pattern = sub.add_parser("pattern", help="count occurrences of a vincular pattern")
    p_pattern.add_argument("pattern", help='dash-separated blocks, e.g. "31-4-2"')
    p_pattern.add_argument("word")
    p_pattern.set_defaults(func=cmd_pattern)

    p_rsk = sub.add_parser("rsk", help="print the insertion and recording tableaux")
    p_rsk.add_argument("word", help="a permutation of 1..n")
    p_rsk.set_defaults(func=cmd_rsk)

    p_table = sub.add_parser("table", help="tabulate statistics over a rearrangement class")
    p_table.add_argument("multiset", help="any word of the class, e.g. \"1122\"")
    p_table.add_argument(
        "--schema",
        default=None,
        help="comma-separated statistic columns (default Adj,des,ides,F,IMAJ,MAJ,STAT)",
    )
    p_table.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_table.add_argument("--cap", type=int, default=10_000_000)
    p_table.add_argument("--jobs", type=int, default=1)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run a named exhaustive check, or all of them")
    p_verify.add_argument("check", choices=verify.CHECK_IDS + ("all",))
    p_verify.add_argument("--n", type=int, default=6)
    p_verify.add_argument("--alphabet", type=int, default=3)
    p_verify.add_argument("--word", default=None, help="restrict class checks to one class")
    p_verify.add_argument("--cap", type=int, default=10_000_000)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalInvariantError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
