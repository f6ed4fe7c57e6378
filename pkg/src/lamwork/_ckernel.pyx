# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernel; same code format and results as _pykernel."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

cdef enum:
    LAM = -1
    APP = -2

cdef int REACHED = 0
cdef int FUEL_EXHAUSTED = 1
cdef int SPACE_EXHAUSTED = 2


cdef struct Buf:
    int* data
    Py_ssize_t len
    Py_ssize_t cap


cdef int reserve(Buf* b, Py_ssize_t n) except -1:
    cdef int* p
    if n <= b.cap:
        return 0
    if n < 2 * b.cap:
        n = 2 * b.cap
    p = <int*> realloc(b.data, n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    b.data = p
    b.cap = n
    return 0


cdef inline Py_ssize_t extent(int* c, Py_ssize_t i) nogil:
    cdef Py_ssize_t need = 1
    cdef int t
    while need:
        t = c[i]
        i += 1
        if t == APP:
            need += 1
        elif t != LAM:
            need -= 1
    return i


cdef Py_ssize_t head_redex(int* c) nogil:
    cdef Py_ssize_t i = 0, j
    while c[i] == LAM:
        i += 1
    j = i
    while c[j] == APP:
        j += 1
    if j > i and c[j] == LAM:
        return j - 1
    return -1


cdef Py_ssize_t leftmost_redex(int* c, Py_ssize_t n, Py_ssize_t start) nogil:
    cdef Py_ssize_t i
    if start < 0:
        start = 0
    for i in range(start, n - 1):
        if c[i] == APP and c[i + 1] == LAM:
            return i
    return -1


cdef Py_ssize_t contracted_length(int* c, Py_ssize_t n, Py_ssize_t r, int* stack) nogil:
    cdef Py_ssize_t bs = r + 2, be, ae, i, sp = 0, occ = 0
    cdef int t, d
    be = extent(c, bs)
    ae = extent(c, be)
    stack[sp] = 0
    sp += 1
    for i in range(bs, be):
        t = c[i]
        sp -= 1
        d = stack[sp]
        if t == APP:
            stack[sp] = d
            stack[sp + 1] = d
            sp += 2
        elif t == LAM:
            stack[sp] = d + 1
            sp += 1
        elif t == d:
            occ += 1
    return n - 2 - (ae - be) + occ * (ae - be - 1)


cdef Py_ssize_t contract(int* c, Py_ssize_t n, Py_ssize_t r, int* out, int* stack) nogil:
    """Write the contractum of the redex at ``r`` into ``out``; returns its length."""
    cdef Py_ssize_t bs = r + 2, be, ae, i, j, o, sp = 0, sp2
    cdef int t, d, e, u
    be = extent(c, bs)
    ae = extent(c, be)
    memcpy(out, c, r * sizeof(int))
    o = r
    stack[sp] = 0
    sp += 1
    for i in range(bs, be):
        t = c[i]
        sp -= 1
        d = stack[sp]
        if t == APP:
            stack[sp] = d
            stack[sp + 1] = d
            sp += 2
            out[o] = t
            o += 1
        elif t == LAM:
            stack[sp] = d + 1
            sp += 1
            out[o] = t
            o += 1
        elif t == d:
            if d == 0:
                memcpy(out + o, c + be, (ae - be) * sizeof(int))
                o += ae - be
            else:
                # shift the argument's loose indices by d, using stack space above sp
                sp2 = sp
                stack[sp2] = 0
                sp2 += 1
                for j in range(be, ae):
                    u = c[j]
                    sp2 -= 1
                    e = stack[sp2]
                    if u == APP:
                        stack[sp2] = e
                        stack[sp2 + 1] = e
                        sp2 += 2
                    elif u == LAM:
                        stack[sp2] = e + 1
                        sp2 += 1
                    elif u >= e:
                        u = u + d
                    out[o] = u
                    o += 1
        elif t > d:
            out[o] = t - 1
            o += 1
        else:
            out[o] = t
            o += 1
    memcpy(out + o, c + ae, (n - ae) * sizeof(int))
    return o + n - ae


cdef list to_list(Buf* b):
    cdef Py_ssize_t i
    return [b.data[i] for i in range(b.len)]


cdef tuple run(code, long fuel, Py_ssize_t max_nodes, Py_ssize_t trace_limit, bint head_only):
    cdef Buf cur, nxt, stk, tmp
    cdef Py_ssize_t n = len(code), i, r, newlen, start = 0
    cdef long steps = 0
    cdef int status
    cdef list trace = None
    cur.data = NULL; cur.len = 0; cur.cap = 0
    nxt.data = NULL; nxt.len = 0; nxt.cap = 0
    stk.data = NULL; stk.len = 0; stk.cap = 0
    try:
        reserve(&cur, n + 1)
        reserve(&nxt, n + 1)
        reserve(&stk, 2 * n + 4)
        for i in range(n):
            cur.data[i] = code[i]
        cur.len = n
        if trace_limit > 0:
            trace = [to_list(&cur)]
        while True:
            if head_only:
                r = head_redex(cur.data)
            else:
                r = leftmost_redex(cur.data, cur.len, start)
            if r < 0:
                status = REACHED
                break
            if steps >= fuel:
                status = FUEL_EXHAUSTED
                break
            newlen = contracted_length(cur.data, cur.len, r, stk.data)
            if newlen > max_nodes:
                status = SPACE_EXHAUSTED
                break
            reserve(&nxt, newlen + 1)
            reserve(&stk, cur.len + newlen + 4)
            nxt.len = contract(cur.data, cur.len, r, nxt.data, stk.data)
            tmp = cur
            cur = nxt
            nxt = tmp
            steps += 1
            start = r - 1
            if trace is not None and len(trace) <= trace_limit:
                trace.append(to_list(&cur))
        return status, to_list(&cur), steps, trace
    finally:
        free(cur.data)
        free(nxt.data)
        free(stk.data)


def head_reduce(code, long fuel, Py_ssize_t max_nodes, Py_ssize_t trace_limit=0):
    return run(code, fuel, max_nodes, trace_limit, True)


def normalize(code, long fuel, Py_ssize_t max_nodes, Py_ssize_t trace_limit=0):
    return run(code, fuel, max_nodes, trace_limit, False)


def contract_at(code, Py_ssize_t r):
    """Single contraction at ``r`` (exposed for cross-checking against _pykernel)."""
    cdef Buf cur, out, stk
    cdef Py_ssize_t n = len(code), i, newlen
    cur.data = NULL; cur.cap = 0
    out.data = NULL; out.cap = 0
    stk.data = NULL; stk.cap = 0
    try:
        reserve(&cur, n + 1)
        reserve(&stk, 2 * n + 4)
        for i in range(n):
            cur.data[i] = code[i]
        newlen = contracted_length(cur.data, n, r, stk.data)
        reserve(&out, newlen + 1)
        out.len = contract(cur.data, n, r, out.data, stk.data)
        return to_list(&out)
    finally:
        free(cur.data)
        free(out.data)
        free(stk.data)
