"""
Command-line interface.

    check [NAME] [TRIALS] [SEED]                       semiring law check
    stats --input T.tsv [--partitions P] [--mode M]    traffic statistics
    paths --input E.tsv --hops N [--src U --dst V]     least-weight n-hop paths
    provenance --input A.tsv --input B.tsv             contributors of A ⊕.⊗ B
    stream --input EV.tsv [--mode M] [--window-m M]    multi-timescale windows
    bench --input T.tsv --partitions 1 2 8             partitioned triple product

stdout carries JSON lines only; diagnostics go to stderr. Exit status is 0 on
success, 1 when a verification fails and 2 on bad input or usage.
"""

import argparse
import contextlib
import logging
import sys
import time
from typing import Iterator, List, Optional, TextIO

from pydantic import BaseModel, ValidationError

from .algebra.core import ARITH_NAT, MIN_PLUS, STOCK_SEMIRINGS, axiom_check, render_scalar
from .algebra.paths import brute_force_all_paths, brute_force_paths, optimal_nhop_paths
from .algebra.provenance import provenance_product, recover_product
from .algebra.registry import resolve_semiring
from .arrays.assoc_array import array_mul, identity_diag, key_order, transpose
from .arrays.graph import build_graph_arrays
from .config import config
from .errors import EngineError, UnknownSemiringError, UnknownVertexError, VerificationError
from .partition.linear_ops import triple_product
from .partition.sum_partition import STRATEGIES, partition
from .partition.traffic import traffic_stats
from .schemas import (
    BenchRow,
    CliConfig,
    ContributorRecord,
    PathRecord,
    ProvenanceRecord,
    StreamConfig,
)
from .stream.engine import batch_matrix, replay
from .utils import read_edges_tsv, read_events_tsv, read_triples_tsv, setup_logging

logger = logging.getLogger(__name__)

DEFAULT_STRATEGY_BY_MODE = {"source": "row-block", "destination": "col-block"}


class JsonLines:
    """Writes one pydantic record per line."""

    def __init__(self, stream: TextIO):
        self.stream = stream
        self.count = 0

    def emit(self, record: BaseModel) -> None:
        self.stream.write(record.model_dump_json() + "\n")
        self.count += 1


# =============================================================================
# COMMANDS
# =============================================================================

def cmd_check(cfg: CliConfig, out: JsonLines) -> int:
    s = resolve_semiring(cfg.semiring)
    report = axiom_check(s, cfg.trials, cfg.seed)
    out.emit(report)
    return 0 if report.passed else 1


def _stock(name: Optional[str]):
    name = name or config.SEMIRING
    if name not in STOCK_SEMIRINGS:
        raise UnknownSemiringError(name, STOCK_SEMIRINGS)
    return STOCK_SEMIRINGS[name]


def cmd_stats(cfg: CliConfig, out: JsonLines) -> int:
    mode = cfg.mode or config.TRAFFIC_MODE
    strategy = cfg.strategy or DEFAULT_STRATEGY_BY_MODE.get(mode, "row-block")
    traffic = read_triples_tsv(cfg.inputs[0], ARITH_NAT)
    parts = partition(traffic, cfg.partitions[0], strategy, cfg.seed)
    report = traffic_stats(parts, mode)
    out.emit(report)
    return 0 if report.consistent else 1


def cmd_paths(cfg: CliConfig, out: JsonLines) -> int:
    g = build_graph_arrays(read_edges_tsv(cfg.inputs[0]), MIN_PLUS)
    result = optimal_nhop_paths(g, cfg.hops, partitions=cfg.partitions[0], seed=cfg.seed)
    status = 0

    if cfg.src is not None:
        for vertex in (cfg.src, cfg.dst):
            if vertex not in g.adjacency.row_set:
                raise UnknownVertexError(f"Unknown vertex {vertex!r}")
        pairs = [(cfg.src, cfg.dst)]
    else:
        pairs = [(u, v) for u, v, _ in result.triples()]

    oracle = brute_force_all_paths(g, cfg.hops) if cfg.verify and cfg.src is None else None
    for u, v in pairs:
        value = result.get(u, v)
        if cfg.verify:
            expected = (
                brute_force_paths(g, u, v, cfg.hops) if oracle is None
                else oracle[(u, v)]
            )
            if value != expected:
                logger.warning(f"Paths {u}->{v} differ from enumeration: {value!r} vs {expected!r}")
                status = 1
        out.emit(PathRecord(
            src=str(u),
            dst=str(v),
            hops=cfg.hops,
            weight=render_scalar(value.weight),
            paths=[[str(x) for x in p] for p in value.sorted_paths()],
        ))
    if oracle is not None and len(oracle) != len(pairs):
        logger.warning(f"Enumeration found {len(oracle)} pairs, product found {len(pairs)}")
        status = 1
    return status


def cmd_provenance(cfg: CliConfig, out: JsonLines) -> int:
    s = _stock(cfg.semiring)
    a = read_triples_tsv(cfg.inputs[0], s)
    b = read_triples_tsv(cfg.inputs[1], s)
    inner = a.col_set | b.row_set
    a, b = a.with_keys(col_keys=inner), b.with_keys(row_keys=inner)

    vertices = a.row_set | inner | b.col_set
    contributors = provenance_product(a, b, vertices, verify=cfg.verify)
    recovered = recover_product(contributors, expected=array_mul(a, b))

    for u, v, found in contributors.triples():
        out.emit(ProvenanceRecord(
            row=str(u),
            col=str(v),
            contributors=[
                ContributorRecord(
                    keys=str(t.key),
                    a=s.render(t.v1),
                    b=s.render(t.v2),
                    prod=s.render(t.v3),
                )
                for t in sorted(found, key=lambda t: key_order(t.key))
            ],
            recovered=s.render(recovered.get(u, v)),
        ))
    return 0


def cmd_stream(cfg: CliConfig, out: JsonLines) -> int:
    stream_config = StreamConfig(
        mode=cfg.mode or config.STREAM_MODE,
        m=cfg.window_m or config.WINDOW_M,
        t=cfg.window_t or config.WINDOW_T,
        dt=config.SAMPLING_DT,
        levels=cfg.levels or config.LEVELS,
        buffer_capacity=config.BUFFER_CAPACITY,
    )
    events = read_events_tsv(cfg.inputs[0], ARITH_NAT)
    status = 0
    for window in replay(events, stream_config):
        if cfg.verify:
            first, last = window.ordinals
            if window.matrix != batch_matrix(events[first:last]):
                logger.warning(
                    f"Window level={window.level} index={window.index} differs "
                    f"from its raw events"
                )
                status = 1
        out.emit(window.record())
    return status


def cmd_bench(cfg: CliConfig, out: JsonLines) -> int:
    s = _stock(cfg.semiring)
    a = read_triples_tsv(cfg.inputs[0], s)
    left = identity_diag(a.row_set, s)
    right = transpose(a)

    started = time.perf_counter()
    whole = array_mul(array_mul(left, a), right)
    whole_seconds = time.perf_counter() - started

    status = 0
    for P in cfg.partitions:
        started = time.perf_counter()
        parts = partition(a, P, cfg.strategy or config.STRATEGY, cfg.seed)
        combined = triple_product(left, parts, right)
        partitioned_seconds = time.perf_counter() - started

        sizes = parts.part_nnz()
        mean = sum(sizes) / len(sizes)
        exact = combined == whole
        if not exact:
            logger.warning(f"Partitioned triple product differs from whole at P={P}")
            status = 1
        out.emit(BenchRow(
            partitions=P,
            whole_seconds=whole_seconds,
            partitioned_seconds=partitioned_seconds,
            part_nnz=sizes,
            balance=max(sizes) / mean if mean else 0.0,
            exact=exact,
        ))
    return status


COMMANDS = {
    "check": cmd_check,
    "stats": cmd_stats,
    "paths": cmd_paths,
    "provenance": cmd_provenance,
    "stream": cmd_stream,
    "bench": cmd_bench,
}


# =============================================================================
# ARGUMENT PARSING
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", default=[], dest="inputs",
                        help="Input TSV (repeat for provenance: A then B)")
    common.add_argument("--semiring", help="Semiring name")
    common.add_argument("--partitions", type=int, nargs="+",
                        help="Partition count(s) P")
    common.add_argument("--strategy", choices=STRATEGIES, help="Partition strategy")
    common.add_argument("--seed", type=int, help="Seed for sampling and hashing")
    common.add_argument("--hops", type=int, help="Hop count n")
    common.add_argument("--src", help="Source vertex")
    common.add_argument("--dst", help="Destination vertex")
    common.add_argument("--mode", help="Traffic mode or stream window mode")
    common.add_argument("--window-m", type=int, help="Edges per window (fixed-m)")
    common.add_argument("--window-t", type=float, help="Seconds per window (fixed-t)")
    common.add_argument("--levels", type=int, help="Hierarchy depth")
    common.add_argument("--trials", type=int, help="Law-check trials")
    common.add_argument("--verify", action="store_true", help="Recheck results against oracles")
    common.add_argument("--output", help="Write JSON lines here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="hypersparse",
        description="Semiring-generic hypersparse associative array engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="Randomized semiring law check")
    check.add_argument("name", nargs="?", help="Semiring name")
    check.add_argument("trials_pos", nargs="?", type=int, metavar="TRIALS")
    check.add_argument("seed_pos", nargs="?", type=int, metavar="SEED")

    sub.add_parser("stats", parents=[common], help="Traffic statistics over a partition")
    sub.add_parser("paths", parents=[common], help="Least-weight n-hop paths")
    sub.add_parser("provenance", parents=[common], help="Contributors of A ⊕.⊗ B")
    sub.add_parser("stream", parents=[common], help="Multi-timescale stream windows")
    sub.add_parser("bench", parents=[common], help="Partitioned vs whole triple product")
    return parser


def to_config(args: argparse.Namespace) -> CliConfig:
    """Merge parsed arguments with configured defaults and validate."""
    seed = getattr(args, "seed_pos", None)
    trials = getattr(args, "trials_pos", None)
    return CliConfig(
        command=args.command,
        inputs=args.inputs,
        semiring=getattr(args, "name", None) or args.semiring,
        trials=trials if trials is not None else (args.trials or config.AXIOM_TRIALS),
        partitions=args.partitions or [1 if args.command == "paths" else config.PARTITIONS],
        strategy=args.strategy,
        seed=seed if seed is not None else (config.SEED if args.seed is None else args.seed),
        hops=args.hops,
        src=args.src,
        dst=args.dst,
        mode=args.mode,
        window_m=args.window_m,
        window_t=args.window_t,
        levels=args.levels,
        verify=args.verify,
        output=args.output,
    )


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as file:
        yield file


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    setup_logging(verbose=args.verbose)

    try:
        cfg = to_config(args)
    except ValidationError as e:
        for error in e.errors():
            print(f"error: {error['msg']}", file=sys.stderr)
        return 2

    logger.info(f"Running '{cfg.command}' on {cfg.inputs or cfg.semiring}")
    try:
        with _output(cfg.output) as stream:
            status = COMMANDS[cfg.command](cfg, JsonLines(stream))
    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        print(f"verification failed: {e}", file=sys.stderr)
        return e.exit_code
    except (EngineError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return getattr(e, "exit_code", 2)
    except Exception as e:
        logger.critical(f"Unexpected error: {str(e)}", exc_info=True)
        raise

    logger.info(f"'{cfg.command}' finished with status {status}")
    return status
