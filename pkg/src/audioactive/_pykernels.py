"""Pure-Python implementations of the automaton kernels.

Both backends share one calling convention. A machine is passed as
``(num_states, initial, final, transitions)`` where ``initial`` and ``final``
are sorted lists of state ids and ``transitions`` is a list of
``(src, isym, osym, dst)`` tuples using ``-1`` for an absent symbol.
"""

from collections import deque

EPS = -1

BACKEND = "python"


def determinize(num_states, initial, final, transitions, num_symbols):
    """Subset construction over the input side, with input-epsilon closure.

    Output symbols are ignored. Returns ``(n, final, transitions)`` of a
    partial DFA whose state 0 is the initial subset. States are numbered in
    breadth-first discovery order, exploring symbols by increasing index.
    """
    eps = [[] for _ in range(num_states)]
    moves = [[] for _ in range(num_states)]
    for src, isym, _osym, dst in transitions:
        if isym == EPS:
            eps[src].append(dst)
        else:
            moves[src].append((isym, dst))
    is_final = [False] * num_states
    for q in final:
        is_final[q] = True

    def closure(seed):
        seen = set(seed)
        stack = list(seed)
        while stack:
            q = stack.pop()
            for r in eps[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)

    start = closure(initial)
    ids = {start: 0}
    order = [start]
    out_final = []
    out_trans = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        sid = ids[subset]
        if any(is_final[q] for q in subset):
            out_final.append(sid)
        targets = [None] * num_symbols
        for q in subset:
            for sym, dst in moves[q]:
                bucket = targets[sym]
                if bucket is None:
                    targets[sym] = [dst]
                else:
                    bucket.append(dst)
        for sym in range(num_symbols):
            bucket = targets[sym]
            if bucket is None:
                continue
            nxt = closure(bucket)
            tid = ids.get(nxt)
            if tid is None:
                tid = len(order)
                ids[nxt] = tid
                order.append(nxt)
                queue.append(nxt)
            out_trans.append((sid, sym, EPS, tid))
    return len(order), out_final, out_trans


def compose(first, second):
    """Product construction running ``first`` then ``second``.

    Only pairs reachable from the initial pairs are built. Returns
    ``(n, initial, final, transitions)``.
    """
    n1, init1, fin1, trans1 = first
    n2, init2, fin2, trans2 = second
    out1 = [[] for _ in range(n1)]
    for src, isym, osym, dst in trans1:
        out1[src].append((isym, osym, dst))
    eps_in2 = [[] for _ in range(n2)]
    by_in2 = [{} for _ in range(n2)]
    for src, isym, osym, dst in trans2:
        if isym == EPS:
            eps_in2[src].append((osym, dst))
        else:
            by_in2[src].setdefault(isym, []).append((osym, dst))
    fin1 = set(fin1)
    fin2 = set(fin2)

    ids = {}
    queue = deque()
    initial = []
    for p in init1:
        for q in init2:
            if (p, q) not in ids:
                ids[(p, q)] = len(ids)
                queue.append((p, q))
                initial.append(ids[(p, q)])

    final = []
    trans = []

    def target(p, q):
        tid = ids.get((p, q))
        if tid is None:
            tid = len(ids)
            ids[(p, q)] = tid
            queue.append((p, q))
        return tid

    while queue:
        p, q = queue.popleft()
        sid = ids[(p, q)]
        if p in fin1 and q in fin2:
            final.append(sid)
        table2 = by_in2[q]
        for isym, mid, p2 in out1[p]:
            if mid == EPS:
                trans.append((sid, isym, EPS, target(p2, q)))
            else:
                for osym, q2 in table2.get(mid, ()):
                    trans.append((sid, isym, osym, target(p2, q2)))
        for osym, q2 in eps_in2[q]:
            trans.append((sid, EPS, osym, target(p, q2)))
    return len(ids), sorted(initial), sorted(final), trans


def trim(num_states, initial, final, transitions):
    """Keep states both reachable and co-reachable, renumbered in order.

    Returns ``(n, initial, final, transitions)``.
    """
    fwd = [[] for _ in range(num_states)]
    bwd = [[] for _ in range(num_states)]
    for src, _i, _o, dst in transitions:
        fwd[src].append(dst)
        bwd[dst].append(src)

    def reach(seed, adj):
        seen = [False] * num_states
        stack = list(seed)
        for q in stack:
            seen[q] = True
        while stack:
            for r in adj[stack.pop()]:
                if not seen[r]:
                    seen[r] = True
                    stack.append(r)
        return seen

    a = reach(initial, fwd)
    b = reach(final, bwd)
    renum = [-1] * num_states
    n = 0
    for q in range(num_states):
        if a[q] and b[q]:
            renum[q] = n
            n += 1
    trans = [
        (renum[s], i, o, renum[d])
        for s, i, o, d in transitions
        if renum[s] >= 0 and renum[d] >= 0
    ]
    return (
        n,
        [renum[q] for q in initial if renum[q] >= 0],
        [renum[q] for q in final if renum[q] >= 0],
        trans,
    )
