"""Streaming analysis of graph6 record streams.

``scan_stream`` classifies records against a :class:`SearchFilter` and emits
matches in input order no matter how many worker threads run the per-record
analysis, so output is byte-identical across worker counts. Disconnected
graphs are counted and skipped (deletion deltas are only defined on
connected graphs); malformed records are skipped or abort the scan,
per configuration.

``enumerate_connected`` is the internal fallback generator: every connected
*labeled* simple graph on n <= 7 vertices, exactly once, as graph6 records.
Isomorphic duplicates are expected; canonical-form deduplication belongs to
external generators.
"""

from __future__ import annotations

import heapq
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from .analysis import DeltaSpectrum, analyze, delta_spectrum
from .errors import (
    Graph6Error,
    InvalidParamsError,
    MalformedRecordError,
    OrderTooLargeError,
)
from .formats import _mask_to_record, emit_graph6, parse_graph6
from .graph import is_connected

ENUMERATION_CAP = 7


@dataclass(frozen=True)
class SearchFilter:
    """Predicate over analysis reports; set criteria are AND-ed together.

    ``delta_target`` is (z, min_count): at least min_count vertices whose
    deletion changes the Wiener index by exactly z.
    """

    min_good_count: Optional[int] = None
    min_good_proportion: Optional[Fraction] = None
    require_all_good: bool = False
    delta_target: Optional[Tuple[int, int]] = None
    max_order: Optional[int] = None

    def __post_init__(self):
        criteria = (
            self.min_good_count is not None,
            self.min_good_proportion is not None,
            self.require_all_good,
            self.delta_target is not None,
            self.max_order is not None,
        )
        if not any(criteria):
            raise InvalidParamsError("search filter sets no criteria")
        if self.min_good_proportion is not None and not (
            0 < self.min_good_proportion <= 1
        ):
            raise InvalidParamsError(
                f"min_good_proportion must be in (0, 1], got {self.min_good_proportion}"
            )
        if self.delta_target is not None and self.delta_target[1] < 1:
            raise InvalidParamsError("delta_target min_count must be >= 1")

    def matches(self, n: int, good_count: int, spectrum: DeltaSpectrum) -> bool:
        if self.max_order is not None and n > self.max_order:
            return False
        if self.require_all_good and good_count != n:
            return False
        if self.min_good_count is not None and good_count < self.min_good_count:
            return False
        if (
            self.min_good_proportion is not None
            and Fraction(good_count, n) < self.min_good_proportion
        ):
            return False
        if self.delta_target is not None:
            z, min_count = self.delta_target
            if spectrum.counts.get(z, 0) < min_count:
                return False
        return True


@dataclass(frozen=True)
class SearchResult:
    """One matching record: its input ordinal, canonical graph6, and summary."""

    sequence_number: int
    graph6: str
    n: int
    wiener: int
    good_count: int
    good_proportion: Fraction
    spectrum: DeltaSpectrum

    def to_json_dict(self) -> dict:
        return {
            "seq": self.sequence_number,
            "graph6": self.graph6,
            "n": self.n,
            "wiener": self.wiener,
            "good_count": self.good_count,
            "good_proportion": {
                "num": self.good_proportion.numerator,
                "den": self.good_proportion.denominator,
            },
            "delta_spectrum": {str(z): c for z, c in sorted(self.spectrum.counts.items())},
            "disconnecting_count": self.spectrum.disconnecting_count,
        }


@dataclass
class ScanSummary:
    """Totals for one scan; partial when the consumer stopped early."""

    scanned: int = 0
    matched: int = 0
    non_matched: int = 0
    skipped_disconnected: int = 0
    malformed: int = 0
    elapsed_seconds: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "matched": self.matched,
            "non_matched": self.non_matched,
            "skipped_disconnected": self.skipped_disconnected,
            "malformed": self.malformed,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }


_MATCH, _NONMATCH, _DISCONNECTED, _MALFORMED = range(4)


def _classify(seq: int, record: Union[str, bytes], filt: SearchFilter) -> tuple:
    try:
        g = parse_graph6(record)
    except Graph6Error as exc:
        return (_MALFORMED, seq, str(exc))
    if g.n == 0 or not is_connected(g):
        return (_DISCONNECTED, seq, None)
    report = analyze(g)
    spectrum = delta_spectrum(g)
    if not filt.matches(g.n, report.good_count, spectrum):
        return (_NONMATCH, seq, None)
    result = SearchResult(
        sequence_number=seq,
        graph6=emit_graph6(g).decode("ascii"),
        n=g.n,
        wiener=report.wiener,
        good_count=report.good_count,
        good_proportion=report.good_proportion,
        spectrum=spectrum,
    )
    return (_MATCH, seq, result)


def _classify_chunk(chunk: List[tuple], filt: SearchFilter) -> List[tuple]:
    return [_classify(seq, rec, filt) for seq, rec in chunk]


def _chunked(iterable: Iterable, size: int) -> Iterator[list]:
    chunk = []
    for item in iterable:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def scan_stream(
    records: Iterable[Union[str, bytes]],
    filt: SearchFilter,
    *,
    workers: int = 1,
    on_malformed: str = "abort",
    summary: Optional[ScanSummary] = None,
    chunk_size: int = 256,
) -> Iterator[SearchResult]:
    """Yield matching records in input order; see the module docstring.

    ``summary`` (if given) is filled in place, including after an early
    ``close()`` of the generator, so cancelled scans still report partial
    totals.
    """
    if on_malformed not in ("skip", "abort"):
        raise InvalidParamsError(f"on_malformed must be skip or abort, got {on_malformed!r}")
    if summary is None:
        summary = ScanSummary()
    start = time.perf_counter()
    numbered = ((seq, rec) for seq, rec in enumerate(records, start=1))

    def outcomes() -> Iterator[tuple]:
        if workers <= 1:
            for seq, rec in numbered:
                yield _classify(seq, rec, filt)
            return
        with ThreadPoolExecutor(max_workers=workers) as pool:
            window: list = []
            chunks = _chunked(numbered, chunk_size)
            try:
                for chunk in chunks:
                    window.append(pool.submit(_classify_chunk, chunk, filt))
                    if len(window) >= workers + 2:
                        yield from window.pop(0).result()
                while window:
                    yield from window.pop(0).result()
            finally:
                for fut in window:
                    fut.cancel()

    try:
        for kind, seq, payload in outcomes():
            summary.scanned += 1
            if kind == _MALFORMED:
                summary.malformed += 1
                if on_malformed == "abort":
                    raise MalformedRecordError(seq, payload)
            elif kind == _DISCONNECTED:
                summary.skipped_disconnected += 1
            elif kind == _NONMATCH:
                summary.non_matched += 1
            else:
                summary.matched += 1
                yield payload
    finally:
        summary.elapsed_seconds = time.perf_counter() - start


def enumerate_connected(n: int) -> Iterator[str]:
    """All connected labeled simple graphs on n vertices as graph6 records.

    Hard-capped at n = 7 (2^21 candidate edge sets); larger orders should
    come from an external generator stream. Bounds are checked at call time,
    before the first record is drawn.
    """
    if n > ENUMERATION_CAP:
        raise OrderTooLargeError(
            f"exhaustive enumeration is capped at n = {ENUMERATION_CAP}, got {n}"
        )
    if n < 1:
        raise InvalidParamsError(f"enumeration needs n >= 1, got {n}")
    return _enumerate_connected(n)


def _enumerate_connected(n: int) -> Iterator[str]:
    npairs = n * (n - 1) // 2
    pair_bits = [(j * (j - 1) // 2 + i, i, j) for j in range(1, n) for i in range(j)]
    full = (1 << n) - 1
    for mask in range(1 << npairs):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            p = low.bit_length() - 1
            m ^= low
            _, i, j = pair_bits[p]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield _mask_to_record(n, mask).decode("ascii")


def rank_by_proportion(
    records: Iterable[Union[str, bytes]],
    top_n: int,
) -> List[SearchResult]:
    """Top records by exact good-vertex proportion.

    Ties break toward smaller order, then lower input ordinal, so the
    ranking is deterministic. Disconnected and malformed records are
    skipped. Memory stays bounded by top_n, not the stream length.
    """
    if top_n <= 0:
        return []
    accept_all = SearchFilter(min_good_count=0)

    def results() -> Iterator[SearchResult]:
        for seq, rec in enumerate(records, start=1):
            kind, _, payload = _classify(seq, rec, accept_all)
            if kind == _MATCH:
                yield payload

    return heapq.nsmallest(
        top_n,
        results(),
        key=lambda r: (-r.good_proportion, r.n, r.sequence_number),
    )
