"""Graph types, connectivity, canonical labeling, and graph I/O.

Vertices are dense integer labels 0..n-1.  SimpleGraph stores sorted edge
pairs plus per-vertex adjacency bitmasks; MultiGraph adds multiplicities and
loops (deletion-contraction produces both even from simple inputs).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb

from .errors import BudgetError, GraphFormatError

CENSUS_MAX_EDGES = 26


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled simple graph: no loops, no parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        seen = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(mask.bit_count() for mask in self.adjacency))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges + ((u, v),))

    def complement(self) -> "SimpleGraph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return SimpleGraph(self.n, tuple(edges))

    def relabel(self, perm) -> "SimpleGraph":
        """Apply vertex map u -> perm[u]."""
        return SimpleGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        kappa, _ = components(self)
        return kappa <= 1


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph with loops: edge classes (u, v, multiplicity), u <= v."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for u, v, mult in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if mult < 1:
                raise ValueError(f"multiplicity {mult} < 1 on edge ({u}, {v})")
            key = (u, v) if u <= v else (v, u)
            merged[key] = merged.get(key, 0) + mult
        object.__setattr__(
            self, "edges", tuple((u, v, c) for (u, v), c in sorted(merged.items()))
        )

    @classmethod
    def from_simple(cls, g: SimpleGraph) -> "MultiGraph":
        return cls(g.n, tuple((u, v, 1) for u, v in g.edges))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "MultiGraph":
        return cls(n, tuple((u, v, 1) for u, v in pairs))

    @property
    def m(self) -> int:
        """Total edge count with multiplicity, loops included."""
        return sum(c for _, _, c in self.edges)

    def loop_counts(self) -> dict[int, int]:
        return {u: c for u, v, c in self.edges if u == v}

    def nonloop_edges(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((u, v, c) for u, v, c in self.edges if u != v)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v, _ in self.edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return tuple(adj)


Graph = SimpleGraph | MultiGraph


def components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Component count and a vertex -> component-id labeling."""
    n = g.n
    if n == 0:
        return 0, ()
    adj = g.adjacency
    labels = [-1] * n
    kappa = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        frontier = 1 << start
        seen = frontier
        while frontier:
            nxt = 0
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                v = bit.bit_length() - 1
                labels[v] = kappa
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        kappa += 1
    return kappa, tuple(labels)


def rank_corank(g: Graph) -> tuple[int, int]:
    """(rank, corank) = (n - kappa, m - n + kappa)."""
    kappa, _ = components(g)
    return g.n - kappa, g.m - g.n + kappa


# ---------------------------------------------------------------------------
# Edge-subset census: the inner loop of every brute-force oracle.
# ---------------------------------------------------------------------------

def edge_subset_census(g: SimpleGraph, max_edges: int = CENSUS_MAX_EDGES) -> list[list[int]]:
    """counts[i][kappa] over all 2^m edge subsets of g.

    Walks the include/exclude tree with a rollback union-find.  Once a partial
    subset is connected, every completion stays connected, so the remaining
    subtree is folded in with binomial coefficients; every subset is still
    accounted for exactly once.
    """
    n, m = g.n, g.m
    if m > max_edges:
        raise BudgetError(
            f"subset census over 2^{m} subsets exceeds the 2^{max_edges} budget"
        )
    counts = [[0] * (n + 1) for _ in range(m + 1)]
    if m == 0:
        if n >= 0:
            counts[0][n if n else 0] += 1
        return counts

    # spanning-structure edges first so the connected early-out fires sooner
    parent = list(range(n))

    def root(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    tree, rest = [], []
    for u, v in g.edges:
        ru, rv = root(u), root(v)
        if ru != rv:
            parent[ru] = rv
            tree.append((u, v))
        else:
            rest.append((u, v))
    order = tree + rest

    us = [e[0] for e in order]
    vs = [e[1] for e in order]
    parent = list(range(n))
    size = [1] * n
    binomials = [[comb(r, t) for t in range(r + 1)] for r in range(m + 1)]

    def rec(idx: int, i: int, kappa: int) -> None:
        if kappa == 1:
            row = binomials[m - idx]
            for t, ways in enumerate(row):
                counts[i + t][1] += ways
            return
        if idx == m:
            counts[i][kappa] += 1
            return
        rec(idx + 1, i, kappa)
        ru = us[idx]
        while parent[ru] != ru:
            ru = parent[ru]
        rv = vs[idx]
        while parent[rv] != rv:
            rv = parent[rv]
        if ru == rv:
            rec(idx + 1, i + 1, kappa)
        else:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            rec(idx + 1, i + 1, kappa - 1)
            parent[rv] = rv
            size[ru] -= size[rv]

    rec(0, 0, n)
    return counts


# ---------------------------------------------------------------------------
# Canonical labeling: color refinement + individualization search.
# ---------------------------------------------------------------------------

def _neighbor_lists(n, mult):
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), c in mult.items():
        nbrs[u].append((v, c))
        nbrs[v].append((u, c))
    return nbrs


def _refine(n, nbrs, colors):
    """Stable color refinement; returns dense colors sorted by invariant keys."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = sorted((colors[u], c) for u, c in nbrs[v])
            sigs.append((colors[v], tuple(row)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _cells_of(colors):
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _canon_search(n, mult, loops):
    """Minimal certificate encoding and one permutation achieving it.

    Returns (cert_bytes, position_to_vertex).  Certificates of isomorphic
    graphs are equal because refinement and cell choice use only invariants.
    """
    if n == 0:
        return bytes([0]), ()
    nbrs = _neighbor_lists(n, mult)
    init_keys = sorted(
        set((loops.get(v, 0), tuple(sorted(c for _, c in nbrs[v]))) for v in range(n))
    )
    rank = {k: i for i, k in enumerate(init_keys)}
    colors0 = [rank[(loops.get(v, 0), tuple(sorted(c for _, c in nbrs[v])))] for v in range(n)]
    colors0 = _refine(n, nbrs, colors0)

    # uniform complete multigraphs never split: any ordering is canonical
    if len(set(colors0)) == 1 and len(mult) == n * (n - 1) // 2:
        if len(set(mult.values())) <= 1 and len(set(loops.values()) | {0}) <= 1:
            order = tuple(range(n))
            return _encode(n, mult, loops, order), order

    best: list = [None, None]

    def encode_and_keep(colors):
        order = tuple(v for _, v in sorted((colors[v], v) for v in range(n)))
        cert = _encode(n, mult, loops, order)
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, order

    def search(colors):
        cells = _cells_of(colors)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            encode_and_keep(colors)
            return
        for v in target:
            branched = [2 * c + 1 for c in colors]
            branched[v] = 2 * colors[v]
            search(_refine(n, nbrs, branched))

    search(colors0)
    return best[0], best[1]


def _encode(n, mult, loops, order):
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    loop_row = [0] * n
    for v, c in loops.items():
        loop_row[pos[v]] = c
    tri = [0] * (n * (n - 1) // 2)
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = k
            k += 1
    for (u, v), c in mult.items():
        pu, pv = pos[u], pos[v]
        if pu > pv:
            pu, pv = pv, pu
        tri[idx[(pu, pv)]] = c
    return bytes([n]) + bytes(loop_row) + bytes(tri)


def _mult_and_loops(g: Graph):
    if isinstance(g, SimpleGraph):
        return {e: 1 for e in g.edges}, {}
    mult = {(u, v): c for u, v, c in g.edges if u != v}
    loops = g.loop_counts()
    return mult, loops


def canonical_form(g: Graph) -> bytes:
    """Certificate equal for two graphs exactly when they are isomorphic."""
    mult, loops = _mult_and_loops(g)
    cert, _ = _canon_search(g.n, mult, loops)
    return cert


def canonical_relabel(g: SimpleGraph) -> SimpleGraph:
    """The canonically labeled copy of g."""
    mult, loops = _mult_and_loops(g)
    _, order = _canon_search(g.n, mult, loops)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return g.relabel(pos)


def canonical_form_bruteforce(g: Graph) -> bytes:
    """Minimum encoding over all n! relabelings; test oracle for small n."""
    mult, loops = _mult_and_loops(g)
    return min(
        _encode(g.n, mult, loops, order)
        for order in itertools.permutations(range(g.n))
    )


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by refinement-constrained search."""
    n = g.n
    if n == 0:
        return 1
    mult, loops = _mult_and_loops(g)
    nbrs = _neighbor_lists(n, mult)
    init_keys = sorted(
        set((loops.get(v, 0), tuple(sorted(c for _, c in nbrs[v]))) for v in range(n))
    )
    rank = {k: i for i, k in enumerate(init_keys)}
    colors = [rank[(loops.get(v, 0), tuple(sorted(c for _, c in nbrs[v])))] for v in range(n)]
    colors = _refine(n, nbrs, colors)
    cells = _cells_of(colors)

    def ok(perm) -> bool:
        for (u, v), c in mult.items():
            pu, pv = perm[u], perm[v]
            key = (pu, pv) if pu < pv else (pv, pu)
            if mult.get(key, 0) != c:
                return False
        for v in range(n):
            if loops.get(v, 0) != loops.get(perm[v], 0):
                return False
        return True

    count = 0
    perm = [0] * n
    for assignment in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        for cell, images in zip(cells, assignment):
            for v, w in zip(cell, images):
                perm[v] = w
        if ok(perm):
            count += 1
    return count


# ---------------------------------------------------------------------------
# graph6 encoding (n <= 62: single-byte size, 6-bit packed upper triangle).
# ---------------------------------------------------------------------------

def to_graph6(g: SimpleGraph) -> str:
    if g.n > 62:
        raise GraphFormatError("graph6 output limited to n <= 62")
    out = [chr(63 + g.n)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r} at offset {off}")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphFormatError("multi-byte graph6 sizes (n > 62) not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated graph6 string: need {need} data bytes, got {len(body)} (offset {len(s)})"
        )
    if len(body) > need:
        raise GraphFormatError(
            f"trailing data in graph6 string at offset {1 + need}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return SimpleGraph(n, tuple(edges))


# ---------------------------------------------------------------------------
# Edge-list text format: header "n m", then m lines "u v".
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> SimpleGraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"bad header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"bad header {lines[0]!r}: expected integers") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, got {len(lines) - 1}")
    seen = set()
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex label out of range [0, {n})")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return SimpleGraph(n, tuple(edges))


# ---------------------------------------------------------------------------
# Built-in fixture graphs.
# ---------------------------------------------------------------------------

FIXTURE_MAX_VERTICES = 62


def fixture(name: str, *params: int) -> SimpleGraph:
    """Built-in graphs: cycle, path, complete, complete_bipartite,
    complete_minus_matching, figure1_G, figure1_H.  Sizes are capped at
    n = 62, matching the graph6 scope of the toolkit."""
    g = _build_fixture(name, params)
    if g.n > FIXTURE_MAX_VERTICES:
        raise GraphFormatError(
            f"fixture {name!r} with n = {g.n} exceeds the n = {FIXTURE_MAX_VERTICES} scope"
        )
    return g


def _build_fixture(name: str, params) -> SimpleGraph:
    if name == "cycle":
        (n,) = _need_params(name, params, 1)
        if n < 3:
            raise GraphFormatError("cycle needs n >= 3")
        return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if name == "path":
        (n,) = _need_params(name, params, 1)
        if n < 1:
            raise GraphFormatError("path needs n >= 1")
        return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))
    if name == "complete":
        (n,) = _need_params(name, params, 1)
        if n < 1:
            raise GraphFormatError("complete needs n >= 1")
        return SimpleGraph(n, tuple(itertools.combinations(range(n), 2)))
    if name == "complete_bipartite":
        a, b = _need_params(name, params, 2)
        if a < 1 or b < 1:
            raise GraphFormatError("complete_bipartite needs both sides >= 1")
        return SimpleGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    if name == "complete_minus_matching":
        n, k = _need_params(name, params, 2)
        if n < 1 or k < 0 or 2 * k > n:
            raise GraphFormatError("complete_minus_matching needs 0 <= 2k <= n")
        removed = {(2 * i, 2 * i + 1) for i in range(k)}
        edges = [e for e in itertools.combinations(range(n), 2) if e not in removed]
        return SimpleGraph(n, tuple(edges))
    if name == "figure1_G":
        _need_params(name, params, 0)
        base = [(i, 4 + j) for i in range(4) for j in range(4)]
        return SimpleGraph(8, tuple(base + [(0, 1), (2, 3)]))
    if name == "figure1_H":
        _need_params(name, params, 0)
        base = [(i, 4 + j) for i in range(4) for j in range(4)]
        return SimpleGraph(8, tuple(base + [(2, 3), (6, 7)]))
    raise GraphFormatError(f"unknown fixture {name!r}")


def _need_params(name, params, count):
    if len(params) != count:
        raise GraphFormatError(f"fixture {name!r} takes {count} parameter(s), got {len(params)}")
    return params
