"""Exhaustive scans of the classes C(n, m) of connected simple graphs.

Enumeration produces one canonically labeled representative per isomorphism
class (via complements when the class is dense); the scan then derives every
member's Whitney polynomial, count table, and flags, and certifies the
Whitney/Tutte maxima by polynomial division.
"""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from functools import partial
from math import comb
from multiprocessing import Pool

from .counts import (
    NTable,
    lambda_k,
    mu_vector,
    ntable_from_whitney,
    t_k,
)
from .errors import BudgetError
from .graphs import (
    SimpleGraph,
    canonical_form,
    canonical_relabel,
    to_graph6,
)
from .order import compare_tutte_polys, compare_whitney_polys
from .poly import BivarPoly
from .tutte import whitney

ENUM_MAX_VERTICES = 9
WORKERS_ENV_VAR = "RELPOLY_WORKERS"


@dataclass(frozen=True)
class ClassSpec:
    """The class C(n, m); nonempty exactly when n-1 <= m <= n(n-1)/2."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if not self.n - 1 <= self.m <= self.n * (self.n - 1) // 2:
            raise ValueError(
                f"C({self.n}, {self.m}) is empty: need {self.n - 1} <= m <= "
                f"{self.n * (self.n - 1) // 2}"
            )


def _graphs_with_edges(n: int, m: int) -> list[SimpleGraph]:
    """One canonical representative per isomorphism class of graphs on n
    labeled vertices with exactly m edges (connected or not)."""
    current: dict[bytes, SimpleGraph] = {
        canonical_form(SimpleGraph(n, ())): SimpleGraph(n, ())
    }
    for _ in range(m):
        nxt: dict[bytes, SimpleGraph] = {}
        for g in current.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    h = g.with_edge(u, v)
                    cert = canonical_form(h)
                    if cert not in nxt:
                        nxt[cert] = canonical_relabel(h)
        current = nxt
    return [current[cert] for cert in sorted(current)]


def enumerate_class(spec: ClassSpec) -> list[SimpleGraph]:
    """All members of C(n, m) up to isomorphism, canonically labeled and
    sorted by certificate.  Dense classes are enumerated via complements."""
    if spec.n > ENUM_MAX_VERTICES:
        raise BudgetError(
            f"class enumeration capped at n <= {ENUM_MAX_VERTICES}, got n = {spec.n}"
        )
    total = spec.n * (spec.n - 1) // 2
    if spec.m > total // 2:
        reps = [g.complement() for g in _graphs_with_edges(spec.n, total - spec.m)]
    else:
        reps = _graphs_with_edges(spec.n, spec.m)
    keyed = [
        (canonical_form(g), g) for g in reps if g.is_connected()
    ]
    return [canonical_relabel(g) for _, g in sorted(keyed, key=lambda kg: kg[0])]


def labeled_connected_count(n: int, m: int) -> int:
    """Number of labeled connected graphs on n vertices with m edges,
    by the component-of-vertex-1 decomposition (independent of enumeration)."""

    def total(k: int, j: int) -> int:
        return comb(comb(k, 2), j)

    conn: dict[tuple[int, int], int] = {}
    for k in range(1, n + 1):
        for j in range(0, comb(k, 2) + 1):
            acc = total(k, j)
            for size in range(1, k):
                for j1 in range(0, min(j, comb(size, 2)) + 1):
                    c = conn.get((size, j1), 0)
                    if c:
                        acc -= comb(k - 1, size - 1) * c * total(k - size, j - j1)
            conn[(k, j)] = acc
    return conn.get((n, m), 0)


# ---------------------------------------------------------------------------
# Per-member computation (worker-friendly: module-level, picklable results).
# ---------------------------------------------------------------------------

_WORKER_MEMO: dict = {}


@dataclass(frozen=True)
class MemberData:
    graph: SimpleGraph
    graph6: str
    whitney: BivarPoly
    table: NTable
    mu: tuple[int, ...]
    t_list: tuple[int, ...]
    lambda_list: tuple[int | None, ...]


def _member_data(g: SimpleGraph, memo_cap: int | None = None) -> MemberData:
    w = whitney(g, memo=_WORKER_MEMO, memo_cap=memo_cap)
    table = ntable_from_whitney(w, g.n, g.m)
    return MemberData(
        graph=g,
        graph6=to_graph6(g),
        whitney=w,
        table=table,
        mu=mu_vector(table).values,
        t_list=tuple(t_k(table, k) for k in range(1, g.n + 1)),
        lambda_list=tuple(lambda_k(table, k) for k in range(1, g.n + 1)),
    )


@dataclass
class ScanConfig:
    workers: int | None = None  # None: $RELPOLY_WORKERS, else 1
    prefilter: bool = True  # restrict division certificates to table-maxima
    limit: int | None = None  # smoke mode: scan only the first N members
    memo_cap: int | None = None

    def resolved_workers(self) -> int:
        if self.workers is not None:
            return max(1, self.workers)
        env = os.environ.get(WORKERS_ENV_VAR)
        return max(1, int(env)) if env else 1


@dataclass(frozen=True)
class MemberReport:
    graph6: str
    strong: bool
    zero_element: bool
    whitney_max: bool
    tutte_max: bool
    t_optimal: bool
    k_umrg_by_domination: tuple[bool, ...]
    t1: int
    lambda1: int | None
    mu: tuple[int, ...]
    t_list: tuple[int, ...]
    lambda_list: tuple[int | None, ...]
    table_digest: str

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "strong": self.strong,
            "zero_element": self.zero_element,
            "whitney_max": self.whitney_max,
            "tutte_max": self.tutte_max,
            "t_optimal": self.t_optimal,
            "k_umrg_by_domination": list(self.k_umrg_by_domination),
            "t1": str(self.t1),
            "lambda1": self.lambda1,
            "mu": [str(v) for v in self.mu],
            "t_list": [str(v) for v in self.t_list],
            "lambda_list": list(self.lambda_list),
            "table_digest": self.table_digest,
        }


@dataclass(frozen=True)
class ClassReport:
    spec: ClassSpec
    partial: bool
    members: tuple[MemberReport, ...]
    summary: dict
    theorem2_check: bool

    def to_json_dict(self) -> dict:
        return {
            "spec": {"n": self.spec.n, "m": self.spec.m},
            "partial": self.partial,
            "members": [r.to_json_dict() for r in self.members],
            "summary": self.summary,
            "theorem2_check": self.theorem2_check,
        }

    def to_csv_rows(self) -> list[str]:
        rows = ["graph6,strong,zero_element,whitney_max,tutte_max,t_optimal,t1,lambda1"]
        for r in self.members:
            rows.append(
                ",".join(
                    [
                        r.graph6,
                        str(int(r.strong)),
                        str(int(r.zero_element)),
                        str(int(r.whitney_max)),
                        str(int(r.tutte_max)),
                        str(int(r.t_optimal)),
                        str(r.t1),
                        "" if r.lambda1 is None else str(r.lambda1),
                    ]
                )
            )
        return rows


def _table_digest(table: NTable) -> str:
    blob = json.dumps(table.to_json_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def scan(spec: ClassSpec, config: ScanConfig | None = None) -> ClassReport:
    """Classify every member of C(n, m): strong / 0-element / Whitney-maximum /
    Tutte-maximum / t-optimal, with division certificates for the maxima."""
    cfg = config or ScanConfig()
    members = enumerate_class(spec)
    truncated = cfg.limit is not None and cfg.limit < len(members)
    if truncated:
        members = members[: cfg.limit]
    if not members:
        raise BudgetError(f"scan of C({spec.n}, {spec.m}) produced no members")

    workers = cfg.resolved_workers()
    worker_fn = partial(_member_data, memo_cap=cfg.memo_cap)
    if workers > 1 and len(members) > 1:
        with Pool(workers) as pool:
            data = pool.map(worker_fn, members, chunksize=8)
    else:
        data = [worker_fn(g) for g in members]

    count = len(data)
    n, m = spec.n, spec.m

    # classwise maxima of N_i^(k) decide strong and per-k domination flags
    maxima = [
        [max(d.table.prefix[i][k] for d in data) for k in range(n + 1)]
        for i in range(m + 1)
    ]
    strong = []
    k_umrg = []
    for d in data:
        pref = d.table.prefix
        per_k = tuple(
            all(pref[i][k] == maxima[i][k] for i in range(m + 1))
            for k in range(1, n + 1)
        )
        k_umrg.append(per_k)
        strong.append(all(per_k))

    mu_min = min(d.mu for d in data)
    zero = [d.mu == mu_min for d in data]
    t1_max = max(d.t_list[0] for d in data)
    t_opt = [d.t_list[0] == t1_max for d in data]

    whitney_candidates = (
        [i for i in range(count) if strong[i]] if cfg.prefilter else range(count)
    )
    whitney_max = [False] * count
    for i in whitney_candidates:
        whitney_max[i] = all(
            compare_whitney_polys(data[i].whitney, d.whitney).ok() for d in data
        )

    tutte_candidates = (
        [i for i in range(count) if whitney_max[i]] if cfg.prefilter else range(count)
    )
    tutte_max = [False] * count
    for i in tutte_candidates:
        tutte_max[i] = all(
            compare_tutte_polys(data[i].whitney, d.whitney).ok() for d in data
        )

    reports = tuple(
        MemberReport(
            graph6=d.graph6,
            strong=strong[i],
            zero_element=zero[i],
            whitney_max=whitney_max[i],
            tutte_max=tutte_max[i],
            t_optimal=t_opt[i],
            k_umrg_by_domination=k_umrg[i],
            t1=d.t_list[0],
            lambda1=d.lambda_list[0],
            mu=d.mu,
            t_list=d.t_list,
            lambda_list=d.lambda_list,
            table_digest=_table_digest(d.table),
        )
        for i, d in enumerate(data)
    )
    summary = {
        "class_size": count,
        "strong": sum(strong),
        "zero_element": sum(zero),
        "whitney_max": sum(whitney_max),
        "tutte_max": sum(tutte_max),
        "t_optimal": sum(t_opt),
    }
    return ClassReport(
        spec=spec,
        partial=truncated,
        members=reports,
        summary=summary,
        theorem2_check=strong == whitney_max,
    )


@dataclass(frozen=True)
class Section4Result:
    ok: bool
    vacuous: bool
    failures: tuple[str, ...] = ()


def verify_section4(report: ClassReport) -> Section4Result:
    """Check the invariant-maxima consequences on a fully scanned class:
    every Whitney-maximum member attains the class maxima of lambda^(k) and
    t_k for all k, is a mu-lex minimum, and every member sharing its N^(1)
    row (equivalently its mu-vector) is a 0-element too."""
    members = report.members
    wm = [r for r in members if r.whitney_max]
    if not wm:
        return Section4Result(ok=True, vacuous=True)
    n = report.spec.n
    failures = []
    t_max = [max(r.t_list[k] for r in members) for k in range(n)]
    lam_max = [
        max((r.lambda_list[k] for r in members if r.lambda_list[k] is not None), default=None)
        for k in range(n)
    ]
    for r in wm:
        for k in range(n):
            if r.t_list[k] != t_max[k]:
                failures.append(f"{r.graph6}: t_{k + 1} = {r.t_list[k]} < max {t_max[k]}")
            if lam_max[k] is not None and r.lambda_list[k] != lam_max[k]:
                failures.append(
                    f"{r.graph6}: lambda^({k + 1}) = {r.lambda_list[k]} < max {lam_max[k]}"
                )
        if not r.zero_element:
            failures.append(f"{r.graph6}: Whitney-maximum but not a mu-lex minimum")
    ref_mu = wm[0].mu
    for r in members:
        if r.mu == ref_mu and not r.zero_element:
            failures.append(f"{r.graph6}: shares the maximum N^(1) row but not flagged 0-element")
    return Section4Result(ok=not failures, vacuous=False, failures=tuple(failures))
