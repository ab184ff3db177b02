"""Exhaustive verification sweeps over small symmetric groups.

For every permutation of S_n (or a deterministic sample where noted) the
sweep assembles one record of the five statistics

    wk  size of the weak-order interval [id, w]
    br  size of the Bruhat-order interval [id, w]
    prod  product of (Lehmer code entries + 1)
    ao  acyclic orientations of the inversion graph
    rk  rook placements on the complement of the south-west diagram
    re  regions of the inversion arrangement (oracle, scheduled)

plus pattern-avoidance flags and, at the deeper settings, the rank
generating polynomials.  Every stated inequality, equality, and
pattern-characterized equality among the statistics is checked on every
record; violations are collected with their full records, and empirical
class counts summarize the sweep.

Bulk Bruhat sizes use a precomputed dominance table: the count matrix
R_w[i][j] = #{a <= i : w_a >= j} flattened per permutation, with
u <= w exactly when R_u <= R_w entrywise.  The table is built once per n
and shared; numpy keeps the (n!, n^2) comparison affordable.

The region oracle runs in full for n <= 6 and on a fixed sample of 1000
evenly spaced lexicographic ranks at n = 7; sweeping with the oracle at
n = 8 is rejected.

>>> report = sweep(3, depth="with_region_oracle")
>>> [r.wk for r in report.records]
[1, 2, 2, 3, 3, 6]
>>> report.violations
()
>>> report.class_counts["re_eq_wk"]
4
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import os
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from . import arrangement, orders, rook
from .perm import (
    PATTERN_231,
    PATTERN_312,
    POINCARE_MATCH_PATTERNS,
    REGION_BRUHAT_EQUALITY_PATTERNS,
    Permutation,
    Word,
    all_inversion_masks,
    avoids_all,
    code_product,
    contains_pattern,
    inversion_mask,
    iter_words,
    lehmer_code,
)
from .qpoly import QPolynomial

DEPTHS = ("counts", "polys", "with_region_oracle")
ORACLE_SAMPLE_SIZE = 1000
MAX_SWEEP_N = 8
MAX_ORACLE_SWEEP_N = 7

CLASS_KEYS = (
    "re_eq_wk",
    "wk_eq_prod",
    "prod_eq_rk",
    "re_eq_br",
    "wk_eq_br",
    "avoids_231",
    "avoids_312",
    "avoids_231_312",
    "avoids_four",
    "avoids_3412_4231",
    "ferrers_312_containing",
)
POLY_CLASS_KEYS = ("weak_poly_eq_product_poly_231_containing",)


@dataclass(frozen=True)
class StatRecord:
    """One permutation's statistics; poly and oracle fields may be None."""

    w: Word
    inv: int
    code: tuple[int, ...]
    prod: int
    wk: int
    br: int
    ao: int
    rk: int
    re: int | None
    avoids_231_312: bool
    avoids_four: bool
    avoids_3412_4231: bool
    weak_poly: QPolynomial | None
    bruhat_poly: QPolynomial | None
    product_poly: QPolynomial | None
    distance_poly: QPolynomial | None

    def to_json_dict(self) -> dict:
        def poly(p: QPolynomial | None) -> list[int] | None:
            return None if p is None else p.to_list()

        return {
            "w": list(self.w),
            "inv": self.inv,
            "code": list(self.code),
            "prod": self.prod,
            "wk": self.wk,
            "br": self.br,
            "ao": self.ao,
            "rk": self.rk,
            "re": self.re,
            "avoids_231_312": self.avoids_231_312,
            "avoids_four": self.avoids_four,
            "avoids_3412_4231": self.avoids_3412_4231,
            "weak_poly": poly(self.weak_poly),
            "bruhat_poly": poly(self.bruhat_poly),
            "product_poly": poly(self.product_poly),
            "distance_poly": poly(self.distance_poly),
        }


@dataclass(frozen=True)
class SweepReport:
    n: int
    depth: str
    records: tuple[StatRecord, ...]
    violations: tuple[dict, ...]
    class_counts: dict[str, int]


@dataclass(frozen=True)
class OracleCheckResult:
    name: str
    n: int
    passed: bool
    detail: str = ""


# ---------------------------------------------------------------------------
# shared per-n tables


@dataclass
class _GroupTables:
    n: int
    dom: np.ndarray  # (n!, n * n) uint8 count matrices
    inv: np.ndarray  # (n!,) uint8 inversion counts


@lru_cache(maxsize=3)
def _group_tables(n: int) -> _GroupTables:
    words = np.array(list(iter_words(n)), dtype=np.int8)
    ge = words[:, :, None] >= np.arange(1, n + 1, dtype=np.int8)[None, None, :]
    dom = np.cumsum(ge, axis=1, dtype=np.uint8).reshape(len(words), n * n)
    inv = np.fromiter(
        (m.bit_count() for m in all_inversion_masks(n)),
        dtype=np.uint8,
        count=len(words),
    )
    return _GroupTables(n=n, dom=dom, inv=inv)


def _dominance_vector(word: Word, n: int) -> np.ndarray:
    values = np.array(word, dtype=np.int8)
    ge = values[:, None] >= np.arange(1, n + 1, dtype=np.int8)[None, :]
    return np.cumsum(ge, axis=0, dtype=np.uint8).reshape(n * n)


def _bulk_bruhat(word: Word, tables: _GroupTables, want_poly: bool):
    below = (tables.dom <= _dominance_vector(word, tables.n)).all(axis=1)
    size = int(below.sum())
    if not want_poly:
        return size, None
    counts = np.bincount(tables.inv[below])
    return size, QPolynomial(tuple(int(c) for c in counts))


# ---------------------------------------------------------------------------
# records and checks


def _oracle_ranks(n: int, depth: str) -> frozenset[int]:
    """Lexicographic ranks whose records get the region oracle."""
    if depth == "counts":
        return frozenset()
    if n <= 6:
        return frozenset(range(factorial(n)))
    if n == 7:
        total = factorial(7)
        return frozenset(k * total // ORACLE_SAMPLE_SIZE for k in range(ORACLE_SAMPLE_SIZE))
    return frozenset()


def _build_record(
    word: Word,
    depth: str,
    run_oracle: bool,
    tables: _GroupTables,
) -> tuple[StatRecord, dict]:
    w = Permutation(word)
    code = lehmer_code(w)
    inv = sum(code)
    prod = code_product(w)
    want_polys = depth != "counts"

    weak = orders.weak_interval(w)
    br, bruhat_poly = _bulk_bruhat(word, tables, want_polys)
    ao = arrangement.count_acyclic_orientations(arrangement.inversion_graph(w))
    rk = rook.rook_count(w)

    avoids_231 = not contains_pattern(w, PATTERN_231)
    avoids_312 = not contains_pattern(w, PATTERN_312)
    avoids_four = avoids_all(w, REGION_BRUHAT_EQUALITY_PATTERNS)
    avoids_3412_4231 = avoids_all(w, POINCARE_MATCH_PATTERNS)
    ferrers = rook.is_right_justified_ferrers(rook.southwest_diagram(w))

    re_count: int | None = None
    distance_poly: QPolynomial | None = None
    if run_oracle:
        region_set = arrangement.regions(w)
        distance_poly = arrangement.distance_of_regions(region_set)
        if depth == "with_region_oracle":
            re_count = region_set.size

    record = StatRecord(
        w=word,
        inv=inv,
        code=code,
        prod=prod,
        wk=weak.size,
        br=br,
        ao=ao,
        rk=rk,
        re=re_count,
        avoids_231_312=avoids_231 and avoids_312,
        avoids_four=avoids_four,
        avoids_3412_4231=avoids_3412_4231,
        weak_poly=weak.poincare if want_polys else None,
        bruhat_poly=bruhat_poly,
        product_poly=orders.product_q_formula(w) if want_polys else None,
        distance_poly=distance_poly,
    )
    flags = {"avoids_231": avoids_231, "avoids_312": avoids_312, "ferrers": ferrers}
    return record, flags


def _record_checks(record: StatRecord, flags: dict) -> list[tuple[str, bool, str]]:
    """Every stated (in)equality, evaluated on one record.

    When the region oracle did not run, re falls back to ao (their
    equality is itself checked wherever the oracle ran)."""
    re_eff = record.re if record.re is not None else record.ao
    checks = [
        ("wk_le_prod", record.wk <= record.prod, f"wk={record.wk} prod={record.prod}"),
        ("prod_le_rk", record.prod <= record.rk, f"prod={record.prod} rk={record.rk}"),
        ("ao_eq_rk", record.ao == record.rk, f"ao={record.ao} rk={record.rk}"),
        (
            "re_le_br",
            re_eff <= record.br,
            f"re={re_eff} br={record.br}",
        ),
        (
            "wk_eq_prod_iff_avoids_231",
            (record.wk == record.prod) == flags["avoids_231"],
            f"wk={record.wk} prod={record.prod} avoids_231={flags['avoids_231']}",
        ),
        (
            "prod_eq_rk_iff_avoids_312",
            (record.prod == record.rk) == flags["avoids_312"],
            f"prod={record.prod} rk={record.rk} avoids_312={flags['avoids_312']}",
        ),
        (
            "re_eq_br_iff_avoids_four",
            (re_eff == record.br) == record.avoids_four,
            f"re={re_eff} br={record.br} avoids_four={record.avoids_four}",
        ),
        (
            "re_eq_wk_iff_avoids_231_312",
            (re_eff == record.wk) == record.avoids_231_312,
            f"re={re_eff} wk={record.wk} avoids_231_312={record.avoids_231_312}",
        ),
        (
            "wk_eq_br_iff_avoids_231_312",
            (record.wk == record.br) == record.avoids_231_312,
            f"wk={record.wk} br={record.br} avoids_231_312={record.avoids_231_312}",
        ),
    ]
    if record.re is not None:
        checks.append(
            ("re_eq_ao", record.re == record.ao, f"re={record.re} ao={record.ao}")
        )
    if record.weak_poly is not None:
        checks.append(
            (
                "weak_poly_eq_product_poly_if_avoids_231",
                (not flags["avoids_231"]) or record.weak_poly == record.product_poly,
                f"weak={record.weak_poly} product={record.product_poly}",
            )
        )
    if record.distance_poly is not None:
        checks.append(
            (
                "distance_poly_consistent",
                record.distance_poly(1) == re_eff
                and record.distance_poly.degree == record.inv,
                f"distance={record.distance_poly} re={re_eff} inv={record.inv}",
            )
        )
        if record.bruhat_poly is not None:
            checks.append(
                (
                    "distance_matches_bruhat_iff_avoids_3412_4231",
                    (record.distance_poly == record.bruhat_poly)
                    == record.avoids_3412_4231,
                    f"distance={record.distance_poly} bruhat={record.bruhat_poly} "
                    f"avoids_3412_4231={record.avoids_3412_4231}",
                )
            )
    return checks


def _update_class_counts(counts: dict, record: StatRecord, flags: dict) -> None:
    re_eff = record.re if record.re is not None else record.ao
    counts["re_eq_wk"] += re_eff == record.wk
    counts["wk_eq_prod"] += record.wk == record.prod
    counts["prod_eq_rk"] += record.prod == record.rk
    counts["re_eq_br"] += re_eff == record.br
    counts["wk_eq_br"] += record.wk == record.br
    counts["avoids_231"] += flags["avoids_231"]
    counts["avoids_312"] += flags["avoids_312"]
    counts["avoids_231_312"] += record.avoids_231_312
    counts["avoids_four"] += record.avoids_four
    counts["avoids_3412_4231"] += record.avoids_3412_4231
    counts["ferrers_312_containing"] += flags["ferrers"] and not flags["avoids_312"]
    if record.weak_poly is not None:
        counts["weak_poly_eq_product_poly_231_containing"] += (
            not flags["avoids_231"]
        ) and record.weak_poly == record.product_poly


def _fresh_class_counts(depth: str) -> dict[str, int]:
    keys = CLASS_KEYS + (POLY_CLASS_KEYS if depth != "counts" else ())
    return {key: 0 for key in keys}


def stat_record(w: Permutation, depth: str = "counts") -> StatRecord:
    """The full record for a single permutation.

    Unlike a sweep, which follows the bulk oracle schedule, a single
    record computes every field its depth asks for (regions allow
    n <= 8).

    >>> stat_record(Permutation((2, 5, 1, 3, 4))).wk
    7
    >>> stat_record(Permutation((3, 1, 2)), depth="with_region_oracle").re
    4
    """
    if depth not in DEPTHS:
        raise ValueError(f"depth must be one of {DEPTHS}, got {depth!r}")
    if w.n > MAX_SWEEP_N:
        raise ValueError(f"records support n <= {MAX_SWEEP_N}, got n={w.n}")
    record, _ = _build_record(
        w.word, depth, run_oracle=depth != "counts", tables=_group_tables(w.n)
    )
    return record


def _sweep_block(
    n: int, depth: str, lo: int, hi: int, oracle_ranks: frozenset[int]
) -> tuple[list[StatRecord], list[dict], dict[str, int]]:
    tables = _group_tables(n)
    records: list[StatRecord] = []
    violations: list[dict] = []
    counts = _fresh_class_counts(depth)
    for rank, word in enumerate(itertools.islice(iter_words(n), lo, hi), start=lo):
        record, flags = _build_record(word, depth, rank in oracle_ranks, tables)
        records.append(record)
        _update_class_counts(counts, record, flags)
        for name, ok, detail in _record_checks(record, flags):
            if not ok:
                violations.append(
                    {
                        "rank": rank,
                        "w": list(word),
                        "check": name,
                        "detail": detail,
                        "record": record.to_json_dict(),
                    }
                )
    return records, violations, counts


def sweep(n: int, depth: str = "counts", parallelism: int | None = None) -> SweepReport:
    """Verify every statistic relation over all of S_n.

    ``parallelism`` splits the lexicographic rank range into contiguous
    blocks handled by forked workers; the merged report is byte-for-byte
    identical regardless of the setting.  Defaults to the machine's core
    count.
    """
    if depth not in DEPTHS:
        raise ValueError(f"depth must be one of {DEPTHS}, got {depth!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    cap = MAX_ORACLE_SWEEP_N if depth == "with_region_oracle" else MAX_SWEEP_N
    if n > cap:
        raise ValueError(f"sweep at depth {depth!r} supports n <= {cap}, got n={n}")

    total = factorial(n)
    if parallelism is None:
        parallelism = os.cpu_count() or 1
    parallelism = max(1, min(int(parallelism), total))
    oracle_ranks = _oracle_ranks(n, depth)
    _group_tables(n)  # build before forking so workers inherit the table

    bounds = [total * b // parallelism for b in range(parallelism + 1)]
    blocks = [
        (n, depth, lo, hi, oracle_ranks)
        for lo, hi in zip(bounds, bounds[1:])
        if lo < hi
    ]
    if len(blocks) == 1:
        parts = [_sweep_block(*blocks[0])]
    else:
        try:
            context = multiprocessing.get_context("fork")
        except ValueError:
            parts = [_sweep_block(*block) for block in blocks]
        else:
            with context.Pool(processes=len(blocks)) as pool:
                parts = pool.starmap(_sweep_block, blocks)

    records: list[StatRecord] = []
    violations: list[dict] = []
    class_counts = _fresh_class_counts(depth)
    for part_records, part_violations, part_counts in parts:
        records.extend(part_records)
        violations.extend(part_violations)
        for key, value in part_counts.items():
            class_counts[key] += value
    return SweepReport(
        n=n,
        depth=depth,
        records=tuple(records),
        violations=tuple(violations),
        class_counts=class_counts,
    )


# ---------------------------------------------------------------------------
# report emission


CSV_HEADER = (
    "w,inv,code,prod,wk,br,ao,rk,re,avoids_231_312,avoids_four,"
    "avoids_3412_4231,weak_poly,bruhat_poly,product_poly,distance_poly"
)


def _csv_list(values) -> str:
    return '"' + " ".join(str(v) for v in values) + '"'


def _csv_opt_poly(p: QPolynomial | None) -> str:
    return "" if p is None else _csv_list(p.coeffs)


def _csv_row(record: StatRecord) -> str:
    bool_ = lambda b: "true" if b else "false"
    return ",".join(
        [
            _csv_list(record.w),
            str(record.inv),
            _csv_list(record.code),
            str(record.prod),
            str(record.wk),
            str(record.br),
            str(record.ao),
            str(record.rk),
            "" if record.re is None else str(record.re),
            bool_(record.avoids_231_312),
            bool_(record.avoids_four),
            bool_(record.avoids_3412_4231),
            _csv_opt_poly(record.weak_poly),
            _csv_opt_poly(record.bruhat_poly),
            _csv_opt_poly(record.product_poly),
            _csv_opt_poly(record.distance_poly),
        ]
    )


def emit_report(report: SweepReport, format: str = "json") -> bytes:
    """Serialize a sweep report; output bytes are stable across runs.

    JSON carries records, violations, and class counts; CSV carries the
    records alone, one row per permutation in lexicographic order, with
    list-valued fields space-separated inside quotes and absent fields
    empty.
    """
    if format == "json":
        doc = {
            "n": report.n,
            "depth": report.depth,
            "records": [r.to_json_dict() for r in report.records],
            "violations": list(report.violations),
            "class_counts": report.class_counts,
        }
        return (json.dumps(doc) + "\n").encode("utf-8")
    if format == "csv":
        lines = [CSV_HEADER]
        lines.extend(_csv_row(record) for record in report.records)
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"format must be 'json' or 'csv', got {format!r}")


# ---------------------------------------------------------------------------
# dual-route oracle comparisons


def oracle_checks(n: int) -> list[OracleCheckResult]:
    """Compare every fast route against its slow definitional oracle.

    Each comparison clamps the requested n to the largest size its
    oracle affords; the result rows state the n actually used.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    results = []

    def run(name: str, cap: int, body) -> None:
        used = min(n, cap)
        detail = ""
        passed = True
        for w in (Permutation(word) for word in iter_words(used)):
            mismatch = body(w)
            if mismatch:
                passed = False
                detail = f"w={w}: {mismatch}"
                break
        results.append(OracleCheckResult(name=name, n=used, passed=passed, detail=detail))

    def bruhat_body(w: Permutation) -> str:
        fast = orders.bruhat_interval(w, with_elements=True)
        slow = orders.bruhat_interval_by_chains(w, with_elements=True)
        if fast.size != slow.size or fast.poincare != slow.poincare:
            return f"dominance {fast.size} vs chain closure {slow.size}"
        if set(fast.elements) != set(slow.elements):
            return "element sets differ"
        return ""

    def orientation_body(w: Permutation) -> str:
        g = arrangement.inversion_graph(w)
        fast = arrangement.count_acyclic_orientations(g)
        slow = arrangement.count_acyclic_orientations_by_enumeration(g)
        return "" if fast == slow else f"deletion-contraction {fast} vs enumeration {slow}"

    def rook_body(w: Permutation) -> str:
        board = rook.southwest_diagram(w).complement()
        fast = rook.count_rook_placements(board)
        slow = rook.count_rook_placements_by_backtracking(board)
        if fast != slow:
            return f"permanent {fast} vs backtracking {slow}"
        if fast != rook.rook_count(w):
            return "rook_count disagrees with complement board count"
        return ""

    def weak_body(w: Permutation) -> str:
        fast = orders.weak_interval(w)
        slow = orders.weak_interval_by_filter(w)
        if fast.size != slow.size or fast.poincare != slow.poincare:
            return f"bfs {fast.size} vs filter {slow.size}"
        return ""

    def region_body(w: Permutation) -> str:
        re_count = arrangement.regions(w).size
        ao = arrangement.count_acyclic_orientations(arrangement.inversion_graph(w))
        return "" if re_count == ao else f"regions {re_count} vs orientations {ao}"

    run("bruhat_dominance_vs_chain_closure", 5, bruhat_body)
    run("orientations_deletion_contraction_vs_enumeration", 5, orientation_body)
    run("rook_permanent_vs_backtracking", 6, rook_body)
    run("weak_bfs_vs_filter", 6, weak_body)
    run("regions_vs_acyclic_orientations", 6, region_body)
    return results
