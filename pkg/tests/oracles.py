"""Independent brute-force oracles. Deliberately naive; small inputs only."""

from __future__ import annotations

import itertools

import networkx as nx


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


def brute_covers_exist(g, blocks):
    """Try every labelling of the non-terminal vertices with a block index or 'unused'."""
    h = nx_graph(g)
    terminals = set().union(*map(set, blocks)) if blocks else set()
    free = [v for v in range(g.n) if v not in terminals]
    m = len(blocks)
    for labels in itertools.product(range(m + 1), repeat=len(free)):
        parts = [set(b) for b in blocks]
        for v, lab in zip(free, labels):
            if lab < m:
                parts[lab].add(v)
        if all(len(p) <= 1 or nx.is_connected(h.subgraph(p)) for p in parts):
            return True
    return False


def brute_separating_vertices(g):
    h = nx_graph(g)
    out = set()
    for v in range(g.n):
        rest = h.copy()
        rest.remove_node(v)
        if rest.number_of_nodes() and not nx.is_connected(rest):
            out.add(v)
    return out


def brute_agile(g, X):
    """Every bipartition of X, by exhaustive labelling."""
    xs = sorted(X)
    for mask in range(2 ** len(xs)):
        X1 = {x for i, x in enumerate(xs) if mask >> i & 1}
        X2 = set(xs) - X1
        if not brute_covers_exist(g, [X1, X2]):
            return False
    return True


def brute_separations(g, k):
    """All (A, B) with A | B = V, |A & B| = k, both sides proper, no A-B edge outside the separator."""
    h = nx_graph(g)
    V = set(range(g.n))
    out = set()
    for sep in itertools.combinations(range(g.n), k):
        rest = sorted(V - set(sep))
        for labels in itertools.product((0, 1), repeat=len(rest)):
            A = set(sep) | {v for v, lab in zip(rest, labels) if lab == 0}
            B = set(sep) | {v for v, lab in zip(rest, labels) if lab == 1}
            if A == set(sep) or B == set(sep):
                continue
            if any((u in A - B and v in B - A) or (v in A - B and u in B - A) for u, v in h.edges()):
                continue
            out.add((frozenset(A), frozenset(B)))
    return out


def brute_m_connected(g, X, m):
    """Menger check through networkx local node connectivity with a super source and sink."""
    from networkx.algorithms.connectivity import local_node_connectivity

    xs = sorted(X)
    for s in range(1, m + 1):
        for X1 in itertools.combinations(xs, s):
            for X2 in itertools.combinations(xs, s):
                h = nx_graph(g)
                h.add_edges_from(("s", v) for v in X1)
                h.add_edges_from((v, "t") for v in X2)
                if local_node_connectivity(h, "s", "t") < s:
                    return False
    return True


def brute_minor(g, h):
    """Try every map V(g) -> V(h) + unused; branch sets must be connected and realise every edge of h."""
    G = nx_graph(g)
    H = nx_graph(h)
    k = h.n
    for labels in itertools.product(range(k + 1), repeat=g.n):
        branch = [[v for v in range(g.n) if labels[v] == i] for i in range(k)]
        if any(not b for b in branch):
            continue
        if not all(nx.is_connected(G.subgraph(b)) for b in branch):
            continue
        if all(any(G.has_edge(x, y) for x in branch[a] for y in branch[b]) for a, b in H.edges()):
            return True
    return False


def brute_cross(g, A, B):
    """Any cross between A and B, by enumerating simple paths with networkx."""
    h = nx_graph(g)
    A, B = set(A), set(B)
    firsts = []
    for a in A:
        for b in B:
            for p in nx.all_simple_paths(h, a, b):
                if not (set(p[1:-1]) & (A | B)):
                    firsts.append(tuple(p))
    for P1 in firsts:
        for P2 in firsts:
            if set(P1) & set(P2):
                continue
            on = set(P1) | set(P2)
            conn = []
            for i, p in enumerate(P1):
                for l, q in enumerate(P2):
                    rest = h.subgraph((set(h) - on) | {p, q})
                    for path in nx.all_simple_paths(rest, p, q):
                        conn.append((i, l, set(path)))
                    if h.has_edge(p, q):
                        conn.append((i, l, {p, q}))
            for i, l, s1 in conn:
                for j, m, s2 in conn:
                    if i < j and m < l and not (s1 & s2):
                        return True
    return False
