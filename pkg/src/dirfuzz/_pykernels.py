"""Pure-Python hot loops.  ``_ckernels.pyx`` mirrors this module function for function."""

from collections import deque

BACKEND = "python"

D1, D2, D3 = 1, 2, 3


def image(row, bits):
    """Union of ``row[i]`` over the members ``i`` of bit-set ``bits``."""
    out = 0
    while bits:
        low = bits & -bits
        out |= row[low.bit_length() - 1]
        bits ^= low
    return out


def maxmin_step(vec, table_x):
    """One max-min composition step on rank-coded weight vectors."""
    out = [0] * len(vec)
    for c, v in enumerate(vec):
        if v:
            for b, r in table_x[c]:
                t = v if v < r else r
                if t > out[b]:
                    out[b] = t
    return out


def is_final(config, mode):
    first = config[0]
    if mode == D3:
        acc = first
        for c in config:
            acc &= c
        return acc != 0
    for c in config:
        if c != first:
            return False
    if mode == D2:
        return True
    return first != 0 and first & (first - 1) == 0


def explore(rows, initial, mode, cap, stop_at_final):
    """Breadth-first closure of configuration vectors from ``initial``.

    Returns ``(configs, table, parent, parent_letter, found, truncated)``.
    ``found`` is the index of the first final configuration in discovery
    order, or -1.  ``truncated`` is set when a ``cap + 1``-th configuration
    would be created; everything discovered so far is still returned.
    """
    m = len(rows)
    index = {initial: 0}
    configs = [initial]
    table = []
    parent = [-1]
    parent_letter = [-1]
    found = 0 if is_final(initial, mode) else -1
    if found == 0 and stop_at_final:
        return configs, table, parent, parent_letter, found, False
    memo = [{} for _ in range(m)]
    head = 0
    while head < len(configs):
        conf = configs[head]
        out = []
        for x in range(m):
            row, cache = rows[x], memo[x]
            nxt = []
            for c in conf:
                img = cache.get(c)
                if img is None:
                    img = cache[c] = image(row, c)
                nxt.append(img)
            nxt = tuple(nxt)
            j = index.get(nxt)
            if j is None:
                j = len(configs)
                if j >= cap:
                    table.append(out)
                    return configs, table, parent, parent_letter, found, True
                index[nxt] = j
                configs.append(nxt)
                parent.append(head)
                parent_letter.append(x)
                if found < 0 and is_final(nxt, mode):
                    found = j
                    if stop_at_final:
                        out.append(j)
                        table.append(out)
                        return configs, table, parent, parent_letter, found, False
            out.append(j)
        table.append(out)
        head += 1
    return configs, table, parent, parent_letter, found, False


def merge_worklist(inv, n):
    """Pairwise D3-merge propagation over the inverted transition table.

    ``inv[x][a]`` is the bit-set of states ``i`` with ``a`` reachable from
    ``i`` by ``x``.  Returns ``(rows, pops, order)``: ``rows[i]`` has bit
    ``j`` set (``j > i``) once ``(i, j)`` is known mergeable, and ``order``
    lists pairs in the order they were appended to the worklist.
    """
    m = len(inv)
    rows = [0] * n
    order = []
    queue = deque()

    def mark(pairs):
        for i, j in sorted(pairs):
            if not rows[i] >> j & 1:
                rows[i] |= 1 << j
                order.append((i, j))
                queue.append((i, j))

    for a in range(n):
        for x in range(m):
            members = _members(inv[x][a])
            if len(members) > 1:
                mark((i, j) for k, i in enumerate(members) for j in members[k + 1:])
    pops = 0
    while queue:
        a, b = queue.popleft()
        pops += 1
        for x in range(m):
            ia, ib = _members(inv[x][a]), _members(inv[x][b])
            mark({(min(i, j), max(i, j)) for i in ia for j in ib if i != j})
    return rows, pops, order


def _members(bits):
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out
