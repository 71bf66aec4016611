# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of ``_pykernels`` for automata with at most 64 states.

Bit-sets are ``uint64_t``; configurations are deduplicated on their raw
bytes.  Results are converted back to the pure-Python shapes so callers
cannot tell the backends apart.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

BACKEND = "cython"
MAX_STATES = 64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline uint64_t _image(const uint64_t* row, uint64_t bits) noexcept nogil:
    cdef uint64_t out = 0
    while bits:
        out |= row[__builtin_ctzll(bits)]
        bits &= bits - 1
    return out


cdef inline bint _is_final(const uint64_t* conf, Py_ssize_t n, int mode) noexcept nogil:
    cdef uint64_t first = conf[0], acc = conf[0]
    cdef Py_ssize_t i
    if mode == 3:
        for i in range(1, n):
            acc &= conf[i]
        return acc != 0
    for i in range(1, n):
        if conf[i] != first:
            return False
    if mode == 2:
        return True
    return first != 0 and (first & (first - 1)) == 0


def image(row, bits):
    cdef Py_ssize_t i, n = len(row)
    cdef uint64_t b = bits, out = 0
    cdef uint64_t* r = <uint64_t*> malloc(n * sizeof(uint64_t))
    for i in range(n):
        r[i] = row[i]
    out = _image(r, b)
    free(r)
    return out


def maxmin_step(list vec, list table_x):
    cdef Py_ssize_t c, n = len(vec)
    cdef long v, r, t
    cdef list out = [0] * n
    cdef list row
    for c in range(n):
        v = vec[c]
        if v:
            row = table_x[c]
            for b, rr in row:
                r = rr
                t = v if v < r else r
                if t > <long> out[b]:
                    out[b] = t
    return out


def is_final(config, int mode):
    cdef Py_ssize_t i, n = len(config)
    cdef uint64_t* c = <uint64_t*> malloc(n * sizeof(uint64_t))
    for i in range(n):
        c[i] = config[i]
    res = _is_final(c, n, mode)
    free(c)
    return bool(res)


cdef tuple _as_tuple(bytes key, Py_ssize_t n):
    cdef const uint64_t* p = <const uint64_t*> PyBytes_AS_STRING(key)
    return tuple([p[i] for i in range(n)])


def explore(rows, initial, int mode, Py_ssize_t cap, bint stop_at_final):
    cdef Py_ssize_t m = len(rows), n = len(initial)
    cdef Py_ssize_t x, i, j, head
    cdef uint64_t* R = <uint64_t*> malloc(m * n * sizeof(uint64_t))
    cdef uint64_t* buf = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef const uint64_t* conf
    cdef bytes key, nxt
    cdef dict index
    cdef list keys, table, parent, parent_letter, out
    cdef Py_ssize_t found
    cdef bint truncated = False
    try:
        for x in range(m):
            for i in range(n):
                R[x * n + i] = rows[x][i]
        for i in range(n):
            buf[i] = initial[i]
        key = PyBytes_FromStringAndSize(<char*> buf, n * sizeof(uint64_t))
        index = {key: 0}
        keys = [key]
        table = []
        parent = [-1]
        parent_letter = [-1]
        found = 0 if _is_final(buf, n, mode) else -1
        if not (found == 0 and stop_at_final):
            head = 0
            while head < len(keys):
                key = keys[head]
                conf = <const uint64_t*> PyBytes_AS_STRING(key)
                out = []
                for x in range(m):
                    for i in range(n):
                        buf[i] = _image(R + x * n, conf[i])
                    nxt = PyBytes_FromStringAndSize(<char*> buf, n * sizeof(uint64_t))
                    jj = index.get(nxt)
                    if jj is None:
                        j = len(keys)
                        if j >= cap:
                            truncated = True
                            break
                        index[nxt] = j
                        keys.append(nxt)
                        parent.append(head)
                        parent_letter.append(x)
                        if found < 0 and _is_final(buf, n, mode):
                            found = j
                            if stop_at_final:
                                out.append(j)
                                break
                    else:
                        j = jj
                    out.append(j)
                table.append(out)
                if truncated or (found >= 0 and stop_at_final):
                    break
                head += 1
        configs = [_as_tuple(k, n) for k in keys]
        return configs, table, parent, parent_letter, found, truncated
    finally:
        free(R)
        free(buf)


def merge_worklist(inv, Py_ssize_t n):
    cdef Py_ssize_t m = len(inv)
    cdef Py_ssize_t a, b, x, i, j, head = 0, tail = 0, pops = 0
    cdef uint64_t* I = <uint64_t*> malloc(m * n * sizeof(uint64_t))
    cdef uint64_t* M = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef uint64_t* pending = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef Py_ssize_t cap = n * (n - 1) // 2 + 1
    cdef Py_ssize_t* qa = <Py_ssize_t*> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t* qb = <Py_ssize_t*> malloc(cap * sizeof(Py_ssize_t))
    cdef uint64_t ia, ib, s
    cdef list order = []
    try:
        for x in range(m):
            for a in range(n):
                I[x * n + a] = inv[x][a]
        for i in range(n):
            M[i] = 0
        for a in range(n):
            for x in range(m):
                s = I[x * n + a]
                if __builtin_popcountll(s) > 1:
                    for i in range(n):
                        if s >> i & 1:
                            pending[i] = s & ~((<uint64_t> 2 << i) - 1) if i < 63 else 0
                        else:
                            pending[i] = 0
                    tail = _flush(M, pending, n, qa, qb, tail, order)
        while head < tail:
            a = qa[head]
            b = qb[head]
            head += 1
            pops += 1
            for x in range(m):
                ia = I[x * n + a]
                ib = I[x * n + b]
                for i in range(n):
                    pending[i] = 0
                for i in range(n):
                    if ia >> i & 1:
                        for j in range(n):
                            if ib >> j & 1 and i != j:
                                if i < j:
                                    pending[i] |= (<uint64_t> 1) << j
                                else:
                                    pending[j] |= (<uint64_t> 1) << i
                tail = _flush(M, pending, n, qa, qb, tail, order)
        rows = [M[i] for i in range(n)]
        return rows, pops, order
    finally:
        free(I)
        free(M)
        free(pending)
        free(qa)
        free(qb)


cdef Py_ssize_t _flush(uint64_t* M, const uint64_t* pending, Py_ssize_t n,
                       Py_ssize_t* qa, Py_ssize_t* qb, Py_ssize_t tail, list order):
    # appends newly marked pairs in ascending (i, j) order
    cdef Py_ssize_t i, j
    cdef uint64_t fresh
    for i in range(n):
        fresh = pending[i] & ~M[i]
        if fresh:
            M[i] |= fresh
            for j in range(i + 1, n):
                if fresh >> j & 1:
                    qa[tail] = i
                    qb[tail] = j
                    tail += 1
                    order.append((i, j))
    return tail
