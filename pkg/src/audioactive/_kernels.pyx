# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled automaton kernels; same calling convention as ``_pykernels``."""

from libcpp.vector cimport vector
from libcpp.map cimport map as cmap
from libcpp.unordered_map cimport unordered_map
from libcpp.algorithm cimport sort
from cython.operator cimport dereference as deref

BACKEND = "cython"

cdef int EPS = -1


cdef void _closure(vector[int]& seed, vector[int]& eps_off, vector[int]& eps_dst,
                   vector[int]& stamp, int tag, vector[int]& out) noexcept:
    cdef vector[int] stack
    cdef int q, r, k
    out.clear()
    for q in seed:
        if stamp[q] != tag:
            stamp[q] = tag
            out.push_back(q)
            stack.push_back(q)
    while not stack.empty():
        q = stack.back()
        stack.pop_back()
        for k in range(eps_off[q], eps_off[q + 1]):
            r = eps_dst[k]
            if stamp[r] != tag:
                stamp[r] = tag
                out.push_back(r)
                stack.push_back(r)
    sort(out.begin(), out.end())


def determinize(int num_states, initial, final, transitions, int num_symbols):
    cdef int n = num_states
    cdef int nsym = num_symbols
    cdef int src, isym, osym, dst, q, s, k, sid, tid, tag = 0
    cdef vector[int] eps_off = vector[int](n + 1, 0)
    cdef vector[int] eps_dst
    cdef vector[int] mv_off = vector[int](n * nsym + 1, 0)
    cdef vector[int] mv_dst
    cdef vector[int] fill
    cdef vector[char] is_final = vector[char](n, 0)

    for src, isym, osym, dst in transitions:
        if isym == EPS:
            eps_off[src + 1] += 1
        else:
            mv_off[src * nsym + isym + 1] += 1
    for q in range(n):
        eps_off[q + 1] += eps_off[q]
    for k in range(n * nsym):
        mv_off[k + 1] += mv_off[k]
    eps_dst.resize(eps_off[n])
    mv_dst.resize(mv_off[n * nsym])
    fill.assign(eps_off.begin(), eps_off.end() - 1)
    cdef vector[int] fill2
    fill2.assign(mv_off.begin(), mv_off.end() - 1)
    for src, isym, osym, dst in transitions:
        if isym == EPS:
            eps_dst[fill[src]] = dst
            fill[src] += 1
        else:
            k = src * nsym + isym
            mv_dst[fill2[k]] = dst
            fill2[k] += 1
    for q in final:
        is_final[q] = 1

    cdef vector[int] stamp = vector[int](n, -1)
    cdef vector[int] seed
    cdef vector[int] cur
    cdef vector[vector[int]] subsets
    cdef cmap[vector[int], int] ids
    for q in initial:
        seed.push_back(q)
    _closure(seed, eps_off, eps_dst, stamp, tag, cur)
    tag += 1
    ids[cur] = 0
    subsets.push_back(cur)

    out_final = []
    out_trans = []
    cdef size_t head = 0
    cdef bint fin
    cdef vector[int] subset
    cdef cmap[vector[int], int].iterator it
    while head < subsets.size():
        subset = subsets[head]
        sid = <int>head
        head += 1
        fin = False
        for q in subset:
            if is_final[q]:
                fin = True
                break
        if fin:
            out_final.append(sid)
        for s in range(nsym):
            seed.clear()
            for q in subset:
                for k in range(mv_off[q * nsym + s], mv_off[q * nsym + s + 1]):
                    seed.push_back(mv_dst[k])
            if seed.empty():
                continue
            _closure(seed, eps_off, eps_dst, stamp, tag, cur)
            tag += 1
            it = ids.find(cur)
            if it == ids.end():
                tid = <int>subsets.size()
                ids[cur] = tid
                subsets.push_back(cur)
            else:
                tid = deref(it).second
            out_trans.append((sid, s, EPS, tid))
    return <int>subsets.size(), out_final, out_trans


cdef struct Edge:
    int isym
    int osym
    int dst


def compose(first, second):
    n1, init1, fin1, trans1 = first
    n2, init2, fin2, trans2 = second
    cdef int a = n1, b = n2
    cdef int src, isym, osym, dst, p, q, sid, tid
    cdef long long key
    cdef vector[vector[Edge]] out1 = vector[vector[Edge]](a)
    cdef vector[vector[Edge]] eps2 = vector[vector[Edge]](b)
    # second's non-epsilon moves, keyed by (state, input symbol)
    cdef unordered_map[long long, vector[Edge]] by_in2
    cdef Edge e
    for src, isym, osym, dst in trans1:
        e.isym = isym
        e.osym = osym
        e.dst = dst
        out1[src].push_back(e)
    for src, isym, osym, dst in trans2:
        e.isym = isym
        e.osym = osym
        e.dst = dst
        if isym == EPS:
            eps2[src].push_back(e)
        else:
            by_in2[<long long>src * 1000003 + isym].push_back(e)
    cdef vector[char] f1 = vector[char](a, 0)
    cdef vector[char] f2 = vector[char](b, 0)
    for q in fin1:
        f1[q] = 1
    for q in fin2:
        f2[q] = 1

    cdef unordered_map[long long, int] ids
    cdef vector[int] left
    cdef vector[int] right
    initial = []
    for p in init1:
        for q in init2:
            key = <long long>p * b + q
            if ids.find(key) == ids.end():
                ids[key] = <int>left.size()
                initial.append(<int>left.size())
                left.push_back(p)
                right.push_back(q)

    final = []
    trans = []
    cdef size_t head = 0
    cdef Edge e1, e2
    cdef unordered_map[long long, int].iterator it
    cdef unordered_map[long long, vector[Edge]].iterator it2
    while head < left.size():
        p = left[head]
        q = right[head]
        sid = <int>head
        head += 1
        if f1[p] and f2[q]:
            final.append(sid)
        for e1 in out1[p]:
            if e1.osym == EPS:
                key = <long long>e1.dst * b + q
                it = ids.find(key)
                if it == ids.end():
                    tid = <int>left.size()
                    ids[key] = tid
                    left.push_back(e1.dst)
                    right.push_back(q)
                else:
                    tid = deref(it).second
                trans.append((sid, e1.isym, EPS, tid))
            else:
                it2 = by_in2.find(<long long>q * 1000003 + e1.osym)
                if it2 == by_in2.end():
                    continue
                for e2 in deref(it2).second:
                    key = <long long>e1.dst * b + e2.dst
                    it = ids.find(key)
                    if it == ids.end():
                        tid = <int>left.size()
                        ids[key] = tid
                        left.push_back(e1.dst)
                        right.push_back(e2.dst)
                    else:
                        tid = deref(it).second
                    trans.append((sid, e1.isym, e2.osym, tid))
        for e2 in eps2[q]:
            key = <long long>p * b + e2.dst
            it = ids.find(key)
            if it == ids.end():
                tid = <int>left.size()
                ids[key] = tid
                left.push_back(p)
                right.push_back(e2.dst)
            else:
                tid = deref(it).second
            trans.append((sid, EPS, e2.osym, tid))
    return <int>left.size(), sorted(initial), sorted(final), trans


cdef void _reach(vector[int]& seed, vector[int]& off, vector[int]& adj, vector[char]& seen) noexcept:
    cdef vector[int] stack
    cdef int q, k
    for q in seed:
        if not seen[q]:
            seen[q] = 1
            stack.push_back(q)
    while not stack.empty():
        q = stack.back()
        stack.pop_back()
        for k in range(off[q], off[q + 1]):
            if not seen[adj[k]]:
                seen[adj[k]] = 1
                stack.push_back(adj[k])


def trim(int num_states, initial, final, transitions):
    cdef int n = num_states
    cdef int src, isym, osym, dst, q, m = 0
    cdef vector[int] foff = vector[int](n + 1, 0)
    cdef vector[int] boff = vector[int](n + 1, 0)
    cdef vector[int] fadj, badj, ffill, bfill, seed_i, seed_f
    for src, isym, osym, dst in transitions:
        foff[src + 1] += 1
        boff[dst + 1] += 1
    for q in range(n):
        foff[q + 1] += foff[q]
        boff[q + 1] += boff[q]
    fadj.resize(foff[n])
    badj.resize(boff[n])
    ffill.assign(foff.begin(), foff.end() - 1)
    bfill.assign(boff.begin(), boff.end() - 1)
    for src, isym, osym, dst in transitions:
        fadj[ffill[src]] = dst
        ffill[src] += 1
        badj[bfill[dst]] = src
        bfill[dst] += 1
    for q in initial:
        seed_i.push_back(q)
    for q in final:
        seed_f.push_back(q)
    cdef vector[char] a = vector[char](n, 0)
    cdef vector[char] b = vector[char](n, 0)
    _reach(seed_i, foff, fadj, a)
    _reach(seed_f, boff, badj, b)
    cdef vector[int] renum = vector[int](n, -1)
    for q in range(n):
        if a[q] and b[q]:
            renum[q] = m
            m += 1
    trans = []
    for src, isym, osym, dst in transitions:
        if renum[src] >= 0 and renum[dst] >= 0:
            trans.append((renum[src], isym, osym, renum[dst]))
    return (
        m,
        [renum[q] for q in initial if renum[q] >= 0],
        [renum[q] for q in final if renum[q] >= 0],
        trans,
    )
