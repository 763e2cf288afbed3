"""
Utility functions module.

Contains logging setup and the TSV readers for arrays, edge lists and event
streams.
"""

import csv
import logging
import os
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Any, Callable, Iterator, List, Tuple

from .algebra.core import SemiringDef
from .arrays.assoc_array import AssocArray, from_triples
from .arrays.graph import Edge
from .config import config
from .errors import EngineError, TsvParseError
from .stream.engine import StreamEvent, finite_timestamp

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False) -> logging.Logger:
    """
    Configure logging with file rotation and console output on stderr.

    stdout is reserved for JSON lines. File logging is skipped when
    `config.LOG_DIR` is empty.

    Args:
        verbose: Show DEBUG records on the console

    Returns:
        Configured root logger
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    root_logger.handlers = []

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    console_handler.setFormatter(logging.Formatter(config.LOG_FORMAT_CONSOLE))
    root_logger.addHandler(console_handler)

    if config.LOG_DIR:
        os.makedirs(config.LOG_DIR, exist_ok=True)
        log_file = os.path.join(
            config.LOG_DIR,
            f"hypersparse_{datetime.now().strftime('%Y%m%d')}.log"
        )
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=config.LOG_MAX_BYTES,
            backupCount=config.LOG_BACKUP_COUNT,
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter(config.LOG_FORMAT_FILE, datefmt=config.LOG_DATE_FORMAT)
        )
        root_logger.addHandler(file_handler)

    return root_logger


# =============================================================================
# TSV INPUT
# =============================================================================

def _rows(path: str, width: int) -> Iterator[Tuple[int, List[str]]]:
    """Non-blank, non-comment rows of exactly `width` tab-separated fields."""
    try:
        with open(path, 'r', encoding='utf-8', newline='') as file:
            for line_no, row in enumerate(csv.reader(file, delimiter='\t'), 1):
                if not row or not "".join(row).strip() or row[0].startswith('#'):
                    continue
                if len(row) != width:
                    raise TsvParseError(path, line_no, f"expected {width} fields, got {len(row)}")
                yield line_no, [field.strip() for field in row]
    except FileNotFoundError:
        raise TsvParseError(path, 0, "file not found") from None


def _parsed(path: str, line_no: int, parse: Callable[[str], Any], token: str) -> Any:
    try:
        return parse(token)
    except (EngineError, ValueError) as e:
        raise TsvParseError(path, line_no, str(e)) from None


def read_triples_tsv(path: str, s: SemiringDef) -> AssocArray:
    """
    Read `row<TAB>col<TAB>value` lines into an array over `s`.

    Keys stay strings; values go through the semiring's parser and repeated
    (row, col) pairs are ⊕-combined.
    """
    if s.parse is None:
        raise TsvParseError(path, 0, f"semiring '{s.name}' cannot parse values")
    triples = [
        (row, col, _parsed(path, line_no, s.parse, value))
        for line_no, (row, col, value) in _rows(path, 3)
    ]
    logger.info(f"Loaded {len(triples)} triples from {path}")
    return from_triples(triples, s)


def _edge_weight(token: str) -> Any:
    try:
        return int(token)
    except ValueError:
        return float(token)


def read_edges_tsv(path: str) -> List[Edge]:
    """Read `src<TAB>dst<TAB>weight` lines as a weighted edge list."""
    edges = [
        (src, dst, _parsed(path, line_no, _edge_weight, weight))
        for line_no, (src, dst, weight) in _rows(path, 3)
    ]
    logger.info(f"Loaded {len(edges)} edges from {path}")
    return edges


def read_events_tsv(path: str, s: SemiringDef) -> List[StreamEvent]:
    """Read `src<TAB>dst<TAB>count<TAB>timestamp_seconds` lines in file order."""
    events = [
        StreamEvent(
            src,
            dst,
            _parsed(path, line_no, s.parse, count),
            _parsed(path, line_no, finite_timestamp, timestamp),
        )
        for line_no, (src, dst, count, timestamp) in _rows(path, 4)
    ]
    logger.info(f"Loaded {len(events)} events from {path}")
    return events
