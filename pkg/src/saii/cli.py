"""Command-line interface: build, count, verify, bench."""

from __future__ import annotations

import argparse
import itertools
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import construct, oracle
from .alphabet import PackedSequence, decode, encode_text
from .costmodel import HardwareParams, emit_scaling_table, predict_cycles
from .errors import SaiiError
from .fasta import read_sequences
from .fmindex import first_mismatch, search
from .serialize import dump_index, load_index
from .textgen import make_rng, random_sequence


def _build_record(job):
    ordinal, sequence, k, schedule, strict, substitute, path = job
    text = encode_text(sequence, substitute=substitute)
    index = construct.build(text, k=k, schedule=schedule, strict_capacity=strict)
    dump_index(index, path)
    return ordinal, path, index.n


def cmd_build(args) -> int:
    records = read_sequences(args.input)
    out = args.out if args.out else args.input + ".saii"
    if len(records) == 1:
        paths = [out]
    else:
        paths = [f"{out}.{i}.saii" for i in range(1, len(records) + 1)]
    jobs = [
        (i + 1, rec.sequence, args.k, args.schedule, args.strict_capacity, args.substitute, path)
        for i, (rec, path) in enumerate(zip(records, paths))
    ]
    workers = args.jobs if args.jobs else os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_build_record, jobs))
    else:
        results = [_build_record(job) for job in jobs]
    for ordinal, path, n in sorted(results):
        label = records[ordinal - 1].id or f"record {ordinal}"
        print(f"wrote {path} ({label}: n={n}, k={args.k}, schedule={args.schedule})")
    return 0


def cmd_count(args) -> int:
    index = load_index(args.index)
    rng = search(index, encode_text(args.query))
    print(f"{rng.count} {rng.low} {rng.high}")
    return 0


def _verify_one(text: PackedSequence, k: int, tamper: bool) -> tuple:
    """(ok, step, field, detail) for one text."""
    std = construct.init_state(k)
    pre = construct.init_state(k)
    monitor = construct.PrefetchMonitor()
    codes = text.codes()
    for i in range(len(codes) - 1, -1, -1):
        q_std = construct.step(std, codes[i])
        q_pre = construct.prefetch_step(pre, monitor, codes[i])
        if q_std != q_pre:
            return False, len(codes) - 1 - i, "q", f"standard={q_std} prefetch={q_pre}"
    construct.prefetch_flush(pre, monitor)
    built = std.as_index()
    if tamper:
        pos = 0 if built.bwt.dollar_pos != 0 else 1
        built.bwt.data.set(pos, built.bwt.code_at(pos) ^ 1)
    field = first_mismatch(built, pre.as_index())
    if field is not None:
        return False, "final", field, "schedules disagree"
    field = first_mismatch(built, oracle.full_index(text, k=k))
    if field is not None:
        step_at = _locate_bad_step(text, k)
        return False, step_at, field, "differs from oracle"
    return True, None, None, None


def _locate_bad_step(text: PackedSequence, k: int):
    state = construct.init_state(k)
    codes = text.codes()
    for i in range(len(codes) - 1, -1, -1):
        construct.step(state, codes[i])
        if first_mismatch(state.as_index(), oracle.full_index(text.suffix(i), k=k)) is not None:
            return len(codes) - 1 - i
    return "final"


def cmd_verify(args) -> int:
    k = args.k
    failures = 0
    trials = 0
    print(f"# seed {args.seed}")
    if args.exhaustive:
        for length in range(1, args.max_len + 1):
            bad = 0
            for combo in itertools.product(range(4), repeat=length):
                trials += 1
                ok, step_at, field, detail = _verify_one(
                    PackedSequence.from_codes(list(combo)), k, tamper=False
                )
                if not ok:
                    failures += 1
                    bad += 1
                    print(
                        f"FAIL text={''.join('ACGT'[c] for c in combo)} "
                        f"step={step_at} field={field} ({detail})"
                    )
            print(f"len {length}: {4 ** length - bad}/{4 ** length} PASS")
    else:
        if args.input:
            texts = [encode_text(rec.sequence) for rec in read_sequences(args.input)]
        else:
            rng = make_rng(args.seed)
            texts = [
                random_sequence(rng, int(rng.integers(1, args.max_len + 1)))
                for _ in range(args.trials)
            ]
        for t, text in enumerate(texts):
            trials += 1
            ok, step_at, field, detail = _verify_one(text, k, tamper=args.inject_fault and t == 0)
            shown = decode(text) if text.length <= 60 else decode(text)[:57] + "..."
            if ok:
                print(f"trial {t}: len={text.length} PASS")
            else:
                failures += 1
                print(f"trial {t}: len={text.length} FAIL text={shown} step={step_at} field={field} ({detail})")
    print(f"{trials - failures}/{trials} passed (k={k}, seed={args.seed})")
    return 2 if failures else 0


def cmd_bench(args) -> int:
    lengths = sorted({int(part) for part in args.lengths.split(",") if part})
    params = HardwareParams(m=args.m, k=args.k, clock_hz=args.clock_hz)
    if args.mode == "model":
        sys.stdout.write(emit_scaling_table(params, lengths))
        return 0
    print(f"# seed {args.seed}", file=sys.stderr)
    rng = make_rng(args.seed)
    measured = {}
    for n in lengths:
        text = random_sequence(rng, n)
        started = time.perf_counter()
        construct.build(text, k=args.k)
        measured[n] = time.perf_counter() - started
    if args.mode == "measure":
        print("n,build_s")
        for n in lengths:
            print(f"{n},{measured[n]:.6f}")
        return 0
    print("n,cycles_prefetch,cycles_baseline,wall_ms,build_s")
    for n in lengths:
        report = predict_cycles(params, n)
        print(
            f"{n},{report.cycles_prefetch},{report.cycles_baseline},"
            f"{report.wall_time_ms:.3f},{measured[n]:.6f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="saii",
        description="Incremental FM-index construction and search for DNA sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="index a FASTA or raw-text file")
    p.add_argument("input", help="FASTA file or raw ACGT text ('>'-less)")
    p.add_argument("-o", "--out", help="output path (default: INPUT.saii); multi-record FASTA appends .<ordinal>.saii")
    p.add_argument("--k", type=int, default=construct.DEFAULT_K, help="occurrence checkpoint spacing (default %(default)s)")
    p.add_argument("--schedule", choices=("standard", "prefetch"), default="standard")
    p.add_argument("--strict-capacity", action="store_true", help=f"reject texts longer than {construct.HARDWARE_MAX_LEN} symbols")
    p.add_argument("--substitute", action="store_true", help="replace non-ACGT characters with A instead of failing")
    p.add_argument("--jobs", type=int, default=0, help="worker processes for multi-record input (default: all cores)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("count", help="count occurrences of a query in an index")
    p.add_argument("index", help="index file written by 'build'")
    p.add_argument("query", help="ACGT query string")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check builds against the brute-force oracle")
    p.add_argument("input", nargs="?", help="optional FASTA/raw file; otherwise random texts")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-len", type=int, default=64)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--k", type=int, default=4, help="checkpoint spacing used for the verified builds")
    p.add_argument("--exhaustive", action="store_true", help="all texts of length 1..max-len")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="cycle-model table and wall-clock build times")
    p.add_argument("--lengths", default="16384,32768,65536,131072", help="comma-separated sequence lengths")
    p.add_argument("--mode", choices=("model", "measure", "both"), default="model")
    p.add_argument("--k", type=int, default=2048)
    p.add_argument("--m", type=int, default=3, help="search cycles per iteration")
    p.add_argument("--clock-hz", type=int, default=120_000_000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SaiiError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
