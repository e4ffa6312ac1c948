import json
import random
from fractions import Fraction

import pytest

from wienerlab import (
    ScanSummary,
    SearchFilter,
    analyze,
    build_bunch,
    build_chorded_cycle_12,
    build_cycle,
    emit_graph6,
    enumerate_connected,
    good_vertices,
    parse_graph6,
    rank_by_proportion,
    scan_stream,
)
from wienerlab.errors import (
    InvalidParamsError,
    MalformedRecordError,
    OrderTooLargeError,
)
from helpers import random_connected_graph


def rec(g):
    return emit_graph6(g).decode("ascii")


def scan_list(records, filt, **kw):
    summary = ScanSummary()
    out = list(scan_stream(records, filt, summary=summary, **kw))
    return out, summary


def test_filter_requires_a_criterion():
    with pytest.raises(InvalidParamsError):
        SearchFilter()


def test_filter_proportion_bounds():
    with pytest.raises(InvalidParamsError):
        SearchFilter(min_good_proportion=Fraction(0))
    with pytest.raises(InvalidParamsError):
        SearchFilter(min_good_proportion=Fraction(3, 2))
    SearchFilter(min_good_proportion=Fraction(1))


def test_filter_delta_target_min_count():
    with pytest.raises(InvalidParamsError):
        SearchFilter(delta_target=(0, 0))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_enumerate_connected_counts(n, count):
    assert sum(1 for _ in enumerate_connected(n)) == count


def test_enumerate_connected_records_are_valid_and_distinct():
    records = list(enumerate_connected(3))
    assert len(set(records)) == 4
    for r in records:
        g = parse_graph6(r)
        assert g.n == 3


def test_enumerate_connected_bounds():
    with pytest.raises(OrderTooLargeError):
        enumerate_connected(8)
    with pytest.raises(InvalidParamsError):
        enumerate_connected(0)


def test_scan_finds_c11_as_all_good():
    out, summary = scan_list([rec(build_cycle(11))], SearchFilter(require_all_good=True))
    assert len(out) == 1
    assert out[0].sequence_number == 1
    assert out[0].good_count == 11
    assert out[0].good_proportion == Fraction(1, 1)
    assert summary.matched == 1


def test_scan_random_11_vertex_graphs_are_negatives():
    rng = random.Random(11)
    records = [rec(random_connected_graph(rng, 11)) for _ in range(60)]
    out, summary = scan_list(records, SearchFilter(require_all_good=True))
    assert out == []
    assert summary.scanned == 60


def test_scan_skips_disconnected_with_counter():
    records = [rec(build_cycle(4)), "C?", rec(build_cycle(11))]  # C? = empty 4-graph
    out, summary = scan_list(records, SearchFilter(require_all_good=True))
    assert [r.sequence_number for r in out] == [3]
    assert summary.skipped_disconnected == 1
    assert summary.non_matched == 1


def test_scan_malformed_abort_names_record():
    records = [rec(build_cycle(5)), "not graph6!!!"]
    with pytest.raises(MalformedRecordError) as exc:
        scan_list(records, SearchFilter(min_good_count=1), on_malformed="abort")
    assert exc.value.record_no == 2


def test_scan_malformed_skip_counts():
    records = ["@garbage", rec(build_cycle(11))]
    out, summary = scan_list(
        records, SearchFilter(require_all_good=True), on_malformed="skip"
    )
    assert len(out) == 1
    assert summary.malformed == 1


def test_scan_completeness_invariant():
    rng = random.Random(7)
    records = ["???bad", rec(build_cycle(4))]
    records += [rec(random_connected_graph(rng, 9)) for _ in range(20)]
    records.insert(3, "B?")  # disconnected 3-vertex graph
    out, summary = scan_list(
        records, SearchFilter(min_good_count=1), on_malformed="skip"
    )
    total = summary.matched + summary.non_matched
    total += summary.skipped_disconnected + summary.malformed
    assert summary.scanned == len(records) == total
    assert summary.matched == len(out)


def test_scan_deterministic_across_worker_counts():
    records = list(enumerate_connected(5))
    outputs = []
    for workers in (1, 4, 8):
        out, summary = scan_list(
            records, SearchFilter(min_good_count=1), workers=workers
        )
        lines = [json.dumps(r.to_json_dict(), separators=(",", ":")) for r in out]
        outputs.append(("\n".join(lines), summary.scanned, summary.matched))
    assert outputs[0] == outputs[1] == outputs[2]


def test_scan_results_pass_independent_recheck():
    records = [rec(build_cycle(11)), rec(build_bunch(2)), rec(build_chorded_cycle_12())]
    filt = SearchFilter(min_good_proportion=Fraction(1, 4))
    out, _ = scan_list(records, filt, workers=4)
    assert out
    for result in out:
        g = parse_graph6(result.graph6)
        rep = analyze(g)
        assert rep.good_count == result.good_count
        assert Fraction(rep.good_count, g.n) >= Fraction(1, 4)
        assert len(good_vertices(g)) == rep.good_count


def test_scan_partial_summary_on_early_close():
    records = [rec(build_cycle(11))] * 10
    summary = ScanSummary()
    stream = scan_stream(records, SearchFilter(require_all_good=True), summary=summary)
    next(stream)
    stream.close()
    assert 1 <= summary.scanned < 10
    assert summary.matched == 1
    assert summary.elapsed_seconds > 0


def test_scan_sequence_numbers_strictly_increase():
    records = list(enumerate_connected(4))
    out, _ = scan_list(records, SearchFilter(min_good_count=1), workers=4)
    seqs = [r.sequence_number for r in out]
    assert seqs == sorted(seqs) and len(set(seqs)) == len(seqs)


def test_scan_delta_target_filter():
    # every vertex of C12 has delta W(C12) - W(P11) = 216 - 220 = -4
    out, _ = scan_list([rec(build_cycle(12))], SearchFilter(delta_target=(-4, 12)))
    assert len(out) == 1
    out, _ = scan_list([rec(build_cycle(12))], SearchFilter(delta_target=(-4, 13)))
    assert out == []
    out, _ = scan_list([rec(build_cycle(12))], SearchFilter(delta_target=(4, 1)))
    assert out == []


def test_scan_max_order_filter():
    records = [rec(build_cycle(11)), rec(build_chorded_cycle_12())]
    out, _ = scan_list(records, SearchFilter(min_good_count=1, max_order=11))
    assert [r.n for r in out] == [11]


def test_exact_proportion_comparison_no_float_ties():
    record = [rec(build_chorded_cycle_12())]
    hit, _ = scan_list(record, SearchFilter(min_good_proportion=Fraction(2, 3)))
    assert len(hit) == 1
    barely_above = Fraction(2, 3) + Fraction(1, 10**12)
    miss, _ = scan_list(record, SearchFilter(min_good_proportion=barely_above))
    assert miss == []


def test_search_result_json_schema():
    out, _ = scan_list([rec(build_chorded_cycle_12())], SearchFilter(min_good_count=1))
    payload = out[0].to_json_dict()
    assert set(payload) == {
        "seq",
        "graph6",
        "n",
        "wiener",
        "good_count",
        "good_proportion",
        "delta_spectrum",
        "disconnecting_count",
    }
    assert payload["good_proportion"] == {"num": 2, "den": 3}
    assert payload["delta_spectrum"]["0"] == 8
    json.dumps(payload)


def test_rank_by_proportion_order():
    records = [rec(build_cycle(11)), rec(build_bunch(2)), rec(build_chorded_cycle_12())]
    ranked = rank_by_proportion(records, 3)
    assert [r.good_proportion for r in ranked] == [
        Fraction(1),
        Fraction(2, 3),
        Fraction(1, 4),
    ]
    assert [r.sequence_number for r in ranked] == [1, 3, 2]


def test_rank_by_proportion_ties_and_limits():
    records = [rec(build_cycle(11)), rec(build_cycle(11))]
    ranked = rank_by_proportion(records, 5)
    assert [r.sequence_number for r in ranked] == [1, 2]
    assert rank_by_proportion([], 3) == []
    assert rank_by_proportion(records, 0) == []


def test_rank_by_proportion_deterministic_over_enumeration():
    records = list(enumerate_connected(5))
    a = rank_by_proportion(records, 1)
    b = rank_by_proportion(iter(records), 1)
    assert a == b
    assert len(a) == 1


def test_rank_top1_over_all_connected_n6():
    # no connected graph on 6 vertices has a good vertex, so every proportion
    # is 0 and the tie-break (order, then ordinal) picks the first record
    winner, = rank_by_proportion(enumerate_connected(6), 1)
    assert winner.sequence_number == 1
    assert winner.graph6 == "Esa?"
    assert winner.good_proportion == Fraction(0)
