"""Tutte and Whitney polynomials by two independent routes.

tutte_expansion sums over all 2^m spanning subgraphs; tutte_dc runs
deletion-contraction with an isomorphism-keyed memo.  The recursion
factors over biconnected blocks (bridges become single-edge blocks with
factor x) and short-circuits parallel classes and plain cycles.
"""
from __future__ import annotations

from .errors import BudgetError, DisconnectedGraphError
from .graphs import (
    MultiGraph,
    SimpleGraph,
    _canon_search,
    components,
    edge_subset_census,
)
from .poly import BivarPoly

EXPANSION_MAX_EDGES = 26

# core = (n, edges) with edges a sorted tuple of (u, v, mult), u < v, loopless


def _block_split(n, edges):
    """Biconnected components of a connected loopless core, renumbered.

    Parallel classes contribute two edge instances so the DFS sees the
    2-cycle they form; each block keeps the full class multiplicities.
    """
    adj = [[] for _ in range(n)]
    inst_class = []
    for cid, (u, v, c) in enumerate(edges):
        for _ in range(2 if c >= 2 else 1):
            iid = len(inst_class)
            inst_class.append(cid)
            adj[u].append((v, iid))
            adj[v].append((u, iid))

    disc = [-1] * n
    low = [0] * n
    estack: list[int] = []
    blocks: list[list[int]] = []
    timer = 0

    # iterative DFS: frames of (vertex, entering instance, adjacency cursor)
    disc[0] = low[0] = timer
    timer += 1
    frames = [(0, -1, iter(adj[0]))]
    while frames:
        u, parent_inst, it = frames[-1]
        advanced = False
        for w, iid in it:
            if iid == parent_inst:
                continue
            if disc[w] == -1:
                estack.append(iid)
                disc[w] = low[w] = timer
                timer += 1
                frames.append((w, iid, iter(adj[w])))
                advanced = True
                break
            if disc[w] < disc[u]:
                estack.append(iid)
                if disc[w] < low[u]:
                    low[u] = disc[w]
        if advanced:
            continue
        frames.pop()
        if frames:
            pu = frames[-1][0]
            if low[u] < low[pu]:
                low[pu] = low[u]
            if low[u] >= disc[pu]:
                entering = parent_inst
                blk = []
                while True:
                    e = estack.pop()
                    blk.append(e)
                    if e == entering:
                        break
                blocks.append(blk)

    cores = []
    for blk in blocks:
        cids = sorted({inst_class[e] for e in blk})
        verts = sorted({v for cid in cids for v in edges[cid][:2]})
        remap = {v: i for i, v in enumerate(verts)}
        blk_edges = tuple(
            (remap[edges[cid][0]], remap[edges[cid][1]], edges[cid][2]) for cid in cids
        )
        cores.append((len(verts), blk_edges))
    return cores


def _core_key(n, edges):
    cert, _ = _canon_search(n, {(u, v): c for u, v, c in edges}, {})
    return cert


def _dipole_poly(c):
    # c parallel edges on 2 vertices: x + y + y^2 + ... + y^{c-1}
    terms = {(1, 0): 1}
    for j in range(1, c):
        terms[(0, j)] = 1
    return BivarPoly(terms)


def _cycle_poly(length):
    # plain cycle: y + x + x^2 + ... + x^{length-1}
    terms = {(0, 1): 1}
    for i in range(1, length):
        terms[(i, 0)] = 1
    return BivarPoly(terms)


def _dc_block(core, memo, memo_cap):
    n, edges = core
    if len(edges) == 1:
        return _dipole_poly(edges[0][2])
    if len(edges) == n and all(c == 1 for _, _, c in edges):
        deg = [0] * n
        for u, v, _ in edges:
            deg[u] += 1
            deg[v] += 1
        if all(d == 2 for d in deg):
            return _cycle_poly(n)

    key = _core_key(n, edges)
    hit = memo.get(key)
    if hit is not None:
        return hit

    # pick a class of maximal multiplicity, smallest endpoint pair on ties
    best = max(range(len(edges)), key=lambda i: (edges[i][2], (-edges[i][0], -edges[i][1])))
    u, v, c = edges[best]

    deleted = edges[:best] + ((u, v, c - 1),) * (c > 1) + edges[best + 1 :]
    result = _dc_connected(n, deleted, memo, memo_cap)

    merged: dict[tuple[int, int], int] = {}
    for i, (a, b, cc) in enumerate(edges):
        if i == best:
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        key2 = (a2, b2) if a2 < b2 else (b2, a2)
        merged[key2] = merged.get(key2, 0) + cc
    verts = sorted({w for pair in merged for w in pair} | {u})
    remap = {w: i for i, w in enumerate(verts)}
    contracted = tuple(
        sorted((remap[a], remap[b], cc) for (a, b), cc in merged.items())
    )
    cpoly = _dc_connected(len(verts), contracted, memo, memo_cap)
    if c > 1:
        cpoly = cpoly.mul_monomial(0, c - 1)
    result = result + cpoly

    if memo_cap is None or len(memo) < memo_cap:
        memo[key] = result
    return result


def _dc_connected(n, edges, memo, memo_cap):
    if not edges:
        return BivarPoly.one()
    result = BivarPoly.one()
    for block in _block_split(n, edges):
        result = result * _dc_block(block, memo, memo_cap)
    return result


def tutte_dc(g: SimpleGraph | MultiGraph, memo=None, memo_cap=None) -> BivarPoly:
    """Tutte polynomial by deletion-contraction with iso-keyed memoization.

    The memo dict may be shared between calls (and workers); entries are a
    pure function of the canonical key, so concurrent reuse is safe.
    """
    mg = MultiGraph.from_simple(g) if isinstance(g, SimpleGraph) else g
    if memo is None:
        memo = {}
    loops = sum(mg.loop_counts().values())
    nonloop = mg.nonloop_edges()

    kappa, labels = components(mg)
    result = BivarPoly.one()
    for comp in range(kappa):
        verts = [v for v in range(mg.n) if labels[v] == comp]
        if len(verts) == 1:
            continue
        remap = {v: i for i, v in enumerate(verts)}
        edges = tuple(
            sorted((remap[u], remap[v], c) for u, v, c in nonloop if labels[u] == comp)
        )
        result = result * _dc_connected(len(verts), edges, memo, memo_cap)
    if loops:
        result = result.mul_monomial(0, loops)
    return result


def tutte_expansion(g: SimpleGraph) -> BivarPoly:
    """Tutte polynomial straight from the spanning-subgraph sum."""
    if g.m > EXPANSION_MAX_EDGES:
        raise BudgetError(
            f"subgraph expansion needs 2^{g.m} subsets; budget is 2^{EXPANSION_MAX_EDGES}"
        )
    counts = edge_subset_census(g, max_edges=EXPANSION_MAX_EDGES)
    kappa_g, _ = components(g)
    r_g = g.n - kappa_g
    xm1 = BivarPoly.x() - 1
    ym1 = BivarPoly.y() - 1
    xpow = [BivarPoly.one()]
    ypow = [BivarPoly.one()]
    total = BivarPoly.zero()
    for i, row in enumerate(counts):
        for kappa, cnt in enumerate(row):
            if not cnt:
                continue
            a = r_g - (g.n - kappa)
            b = i - g.n + kappa
            while len(xpow) <= a:
                xpow.append(xpow[-1] * xm1)
            while len(ypow) <= b:
                ypow.append(ypow[-1] * ym1)
            total = total + cnt * (xpow[a] * ypow[b])
    return total


def whitney_expansion(g: SimpleGraph) -> BivarPoly:
    """Whitney polynomial straight from the spanning-subgraph sum."""
    counts = edge_subset_census(g, max_edges=EXPANSION_MAX_EDGES)
    kappa_g, _ = components(g)
    terms: dict[tuple[int, int], int] = {}
    for i, row in enumerate(counts):
        for kappa, cnt in enumerate(row):
            if cnt:
                terms[(kappa - kappa_g, i - g.n + kappa)] = cnt
    return BivarPoly(terms)


def whitney(g: SimpleGraph | MultiGraph, memo=None, memo_cap=None) -> BivarPoly:
    """Whitney polynomial W(x, y) = T(x+1, y+1), via deletion-contraction."""
    return tutte_dc(g, memo=memo, memo_cap=memo_cap).shift_vars(1, 1)


def forest_gen(g: SimpleGraph, memo=None) -> list[int]:
    """[t_1, ..., t_n]: spanning-forest counts by number of trees."""
    _require_connected(g)
    slice_ = whitney(g, memo=memo).y_zero_slice()
    return [slice_[i] if i < len(slice_) else 0 for i in range(g.n)]


def tree_number(g: SimpleGraph, memo=None) -> int:
    """Spanning-tree count, read off the Whitney polynomial at (0, 0)."""
    _require_connected(g)
    return whitney(g, memo=memo).coeff(0, 0)


def tree_number_mtt(g: SimpleGraph) -> int:
    """Spanning-tree count by an exact Laplacian-minor determinant."""
    _require_connected(g)
    n = g.n
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _bareiss_det(minor)


def _bareiss_det(mat) -> int:
    """Fraction-free integer determinant (Bareiss elimination)."""
    m = [row[:] for row in mat]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _require_connected(g: SimpleGraph) -> None:
    kappa, _ = components(g)
    if kappa != 1:
        raise DisconnectedGraphError(f"graph has {kappa} components; need a connected graph")
