"""Independent oracles used to cross-check the library.

None of these call into the implementations they verify: the stable-matching
enumerator checks blocking pairs itself, the Nash oracle builds best-response
sets, and the path oracle walks every simple path.
"""

import itertools

import numpy as np


def enumerate_stable_pure(profile):
    """All stable matchings by direct enumeration (small profiles only).

    Returns a set of frozensets of (provider, consumer) pairs.
    """
    providers = list(profile.providers)
    consumers = list(profile.consumers)
    p_rank = {p: {c: i for i, c in enumerate(r)} for p, r in profile.provider_prefs.items()}
    c_rank = {c: {p: i for i, p in enumerate(r)} for c, r in profile.consumer_prefs.items()}
    n, m = len(providers), len(consumers)
    stable = set()
    if n <= m:
        arrangements = itertools.permutations(consumers, n)

        def pairs_of(arr):
            return tuple(zip(providers, arr))
    else:
        arrangements = itertools.permutations(providers, m)

        def pairs_of(arr):
            return tuple(zip(arr, consumers))

    for arr in arrangements:
        pairs = pairs_of(arr)
        matched_c = dict(pairs)
        matched_p = {c: p for p, c in pairs}
        blocked = False
        for p in providers:
            current_p = p_rank[p].get(matched_c.get(p), m)
            for c in consumers:
                if p_rank[p][c] >= current_p:
                    continue
                if c_rank[c][p] < c_rank[c].get(matched_p.get(c), n):
                    blocked = True
                    break
            if blocked:
                break
        if not blocked:
            stable.add(frozenset(pairs))
    return stable


def enumerate_stable_vectorized(profile):
    """Same contract as enumerate_stable_pure, vectorized for bulk checking."""
    providers = list(profile.providers)
    consumers = list(profile.consumers)
    n, m = len(providers), len(consumers)
    p_idx = {p: i for i, p in enumerate(providers)}
    c_idx = {c: j for j, c in enumerate(consumers)}
    rank_p = np.empty((n, m), dtype=np.int64)
    for p, ranking in profile.provider_prefs.items():
        for r, c in enumerate(ranking):
            rank_p[p_idx[p], c_idx[c]] = r
    rank_c = np.empty((m, n), dtype=np.int64)
    for c, ranking in profile.consumer_prefs.items():
        for r, p in enumerate(ranking):
            rank_c[c_idx[c], p_idx[p]] = r

    swapped = n > m
    if swapped:
        providers, consumers = consumers, providers
        rank_p, rank_c = rank_c, rank_p
        n, m = m, n
    # Now n <= m: arrangements assign each left agent a distinct right agent.
    arrs = np.array(list(itertools.permutations(range(m), n)), dtype=np.int64)
    k = arrs.shape[0]
    left_rank = rank_p[np.arange(n)[None, :], arrs]  # (k, n)
    right_rank = np.full((k, m), n, dtype=np.int64)  # unmatched ranks worst
    rows = np.repeat(np.arange(k), n)
    right_rank[rows, arrs.ravel()] = rank_c[arrs.ravel(), np.tile(np.arange(n), k)]
    wants_left = rank_p[None, :, :] < left_rank[:, :, None]  # (k, n, m)
    wants_right = rank_c.T[None, :, :] < right_rank[:, None, :]  # (k, n, m)
    blocked = (wants_left & wants_right).any(axis=(1, 2))
    stable = set()
    for arr in arrs[~blocked]:
        if swapped:
            pairs = frozenset((consumers[arr[i]], providers[i]) for i in range(n))
        else:
            pairs = frozenset((providers[i], consumers[arr[i]]) for i in range(n))
        stable.add(pairs)
    return stable


def nash_best_response(payoffs, actions):
    """Pure equilibria via best-response sets.

    ``payoffs[(a, b)] = (row utility, column utility)``.
    """
    br_row = {}
    for b in actions:
        best = max(payoffs[(a, b)][0] for a in actions)
        br_row[b] = {a for a in actions if payoffs[(a, b)][0] == best}
    br_col = {}
    for a in actions:
        best = max(payoffs[(a, b)][1] for b in actions)
        br_col[a] = {b for b in actions if payoffs[(a, b)][1] == best}
    return {
        (a, b)
        for a in actions
        for b in actions
        if a in br_row[b] and b in br_col[a]
    }


def cheapest_simple_path(edges, source, target):
    """Minimum-cost simple path by exhaustive DFS; ties prefer the smaller path.

    Returns (cost, path) or None when the target is unreachable.
    """
    adjacency = {}
    for src, dst, cost in edges:
        adjacency.setdefault(src, []).append((dst, cost))
    best = None

    def walk(node, visited, cost, path):
        nonlocal best
        if node == target:
            key = (cost, tuple(path))
            if best is None or key < best:
                best = key
            return
        for nbr, edge_cost in adjacency.get(node, ()):
            if nbr not in visited:
                visited.add(nbr)
                path.append(nbr)
                walk(nbr, visited, cost + edge_cost, path)
                path.pop()
                visited.remove(nbr)

    walk(source, {source}, 0.0, [source])
    if best is None:
        return None
    return best[0], list(best[1])
