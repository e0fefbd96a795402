"""Test-only utilities: brute-force isomorphism and relabeling."""

from hyperspec import Hypergraph, make_hypergraph


def relabel(h: Hypergraph, perm: list[int]) -> Hypergraph:
    return make_hypergraph(h.k, [[perm[v] for v in e] for e in h.edges])


def brute_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Backtracking vertex bijection restricted to degree classes.

    Independent of the canonical-labeling machinery; usable up to n ~ 12.
    """
    if (h1.k, h1.n, h1.m) != (h2.k, h2.n, h2.m):
        return False
    if sorted(h1.degrees) != sorted(h2.degrees):
        return False
    target = set(h2.edges)
    deg1, deg2 = h1.degrees, h2.degrees
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def edges_consistent() -> bool:
        for e in h1.edges:
            if all(v in mapping for v in e):
                if tuple(sorted(mapping[v] for v in e)) not in target:
                    return False
        return True

    def place(v: int) -> bool:
        if v == h1.n:
            return True
        for w in range(h2.n):
            if w in used or deg1[v] != deg2[w]:
                continue
            mapping[v] = w
            used.add(w)
            if edges_consistent() and place(v + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return place(0)
