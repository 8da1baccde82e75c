# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernel; same contract as ``_kernel_py``."""

from heapq import heapify, heappop, heappush

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM

cdef extern from *:
    """
    typedef unsigned __int128 cc_u128;
    static inline unsigned long long cc_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long p) {
        return (unsigned long long)(((cc_u128)a * b) % p);
    }
    """
    unsigned long long cc_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long p)

ctypedef unsigned long long u64

IMPLEMENTATION = "cython"


class StepLimit(Exception):
    """Raised when a reduction exceeds its step allowance."""


cdef inline tuple _shift(tuple a, tuple b, Py_ssize_t n, int sign):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        if sign > 0:
            v = <long>a[i] + <long>b[i]
        else:
            v = <long>a[i] - <long>b[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline tuple _lcm(tuple a, tuple b, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef long x, y
    cdef object v
    for i in range(n):
        x = a[i]
        y = b[i]
        v = x if x > y else y
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline bint _divides(tuple a, tuple b, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


def divides(tuple a, tuple b):
    return _divides(a, b, len(a))


def reduce(f, list basis, neg_key, p, bint full=True, long long limit=-1, quot=None):
    cdef dict fd = dict(f)
    cdef list heap = [(neg_key(e), e) for e in fd]
    cdef dict rem = {}
    cdef long long steps = 0
    cdef Py_ssize_t n, idx, nb = len(basis)
    cdef tuple e, lead, shift, m, ge
    cdef list tail
    cdef object c, old, v, gc
    cdef bint modular = p != 0
    cdef u64 pp = p if modular else 0
    cdef u64 cu, t, ou
    heapify(heap)
    if not fd:
        return rem, 0
    n = len(next(iter(fd)))
    while heap:
        e = heappop(heap)[1]
        c = fd.pop(e, None)
        if c is None:
            continue
        lead = None
        for idx in range(nb):
            entry = basis[idx]
            if _divides(<tuple>entry[0], e, n):
                lead = <tuple>entry[0]
                tail = <list>entry[1]
                break
        if lead is None:
            rem[e] = c
            if not full:
                rem.update(fd)
                break
            continue
        steps += 1
        if steps == limit:
            raise StepLimit(steps)
        shift = _shift(e, lead, n, -1)
        if quot is not None:
            quot.append((idx, shift, c))
        if modular:
            cu = c
            for ge, gc in tail:
                m = _shift(ge, shift, n, 1)
                t = cc_mulmod(cu, <u64>gc, pp)
                old = fd.get(m)
                if old is None:
                    fd[m] = (pp - t) % pp
                    heappush(heap, (neg_key(m), m))
                else:
                    ou = old
                    ou = ou + pp - t
                    if ou >= pp:
                        ou -= pp
                    if ou:
                        fd[m] = ou
                    else:
                        del fd[m]
        else:
            for ge, gc in tail:
                m = _shift(ge, shift, n, 1)
                old = fd.get(m)
                if old is None:
                    fd[m] = -c * gc
                    heappush(heap, (neg_key(m), m))
                else:
                    v = old - c * gc
                    if v:
                        fd[m] = v
                    else:
                        del fd[m]
    return rem, steps


def spoly(tuple lead_f, list tail_f, tuple lead_g, list tail_g, p):
    cdef Py_ssize_t n = len(lead_f)
    cdef tuple lcm = _lcm(lead_f, lead_g, n)
    cdef tuple sf = _shift(lcm, lead_f, n, -1)
    cdef tuple sg = _shift(lcm, lead_g, n, -1)
    cdef dict out = {}
    cdef tuple e, m
    cdef object c, v
    for e, c in tail_f:
        out[_shift(e, sf, n, 1)] = c
    for e, c in tail_g:
        m = _shift(e, sg, n, 1)
        v = out.get(m, 0) - c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out
