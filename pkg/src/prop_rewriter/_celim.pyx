# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse fraction-free elimination on int64 entries.

Same contract as the pure-Python kernel.  Raises OverflowError when an
entry would leave the safe range; the caller then replays its rows in
the Python kernel.
"""
from libc.stdlib cimport malloc, realloc, free
from libc.stdint cimport int32_t, int64_t

cdef int64_t LIMIT = (<int64_t>1) << 31


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef class Echelon:
    cdef readonly Py_ssize_t ncols
    cdef readonly Py_ssize_t rank
    cdef int32_t* pivot_of
    cdef int32_t** rcols
    cdef int64_t** rvals
    cdef int32_t* rlen
    cdef Py_ssize_t cap
    cdef int32_t* bc[2]
    cdef int64_t* bv[2]

    backend = "cython"

    def __cinit__(self, Py_ssize_t ncols):
        cdef Py_ssize_t k
        self.ncols = ncols
        self.rank = 0
        self.cap = 0
        self.rcols = NULL
        self.rvals = NULL
        self.rlen = NULL
        self.pivot_of = <int32_t*>malloc(max(ncols, 1) * sizeof(int32_t))
        for k in range(2):
            self.bc[k] = <int32_t*>malloc(max(ncols, 1) * sizeof(int32_t))
            self.bv[k] = <int64_t*>malloc(max(ncols, 1) * sizeof(int64_t))
        if self.pivot_of == NULL or self.bc[0] == NULL or self.bc[1] == NULL \
                or self.bv[0] == NULL or self.bv[1] == NULL:
            raise MemoryError()
        for k in range(ncols):
            self.pivot_of[k] = -1

    def __dealloc__(self):
        cdef Py_ssize_t k
        for k in range(self.rank):
            free(self.rcols[k])
            free(self.rvals[k])
        free(self.rcols)
        free(self.rvals)
        free(self.rlen)
        free(self.pivot_of)
        for k in range(2):
            free(self.bc[k])
            free(self.bv[k])

    cdef Py_ssize_t _load(self, cols, vals) except -1:
        cdef Py_ssize_t n = len(cols), k
        cdef int64_t v
        cdef int32_t* c = self.bc[0]
        cdef int64_t* w = self.bv[0]
        if n > self.ncols:
            raise ValueError("row longer than the column count")
        for k in range(n):
            v = vals[k]
            if v >= LIMIT or v <= -LIMIT:
                raise OverflowError("entry too large for the compiled kernel")
            c[k] = cols[k]
            w[k] = v
            if c[k] < 0 or c[k] >= self.ncols:
                raise IndexError("column out of range")
        return n

    cdef Py_ssize_t _reduce(self, Py_ssize_t n, int* slot) except -2:
        """Reduce buffer ``slot``; returns the new length and slot."""
        cdef int s = slot[0]
        cdef int32_t* c
        cdef int64_t* w
        cdef int32_t* oc
        cdef int64_t* ow
        cdef int32_t* pc
        cdef int64_t* pv
        cdef Py_ssize_t i, j, lp, m, k
        cdef int32_t p
        cdef int64_t a, b, v, g
        while n > 0:
            c = self.bc[s]
            w = self.bv[s]
            p = self.pivot_of[c[0]]
            if p < 0:
                break
            pc = self.rcols[p]
            pv = self.rvals[p]
            lp = self.rlen[p]
            a = pv[0]
            b = w[0]
            oc = self.bc[1 - s]
            ow = self.bv[1 - s]
            i = 1
            j = 1
            m = 0
            while i < n and j < lp:
                if c[i] < pc[j]:
                    oc[m] = c[i]
                    ow[m] = a * w[i]
                    m += 1
                    i += 1
                elif pc[j] < c[i]:
                    oc[m] = pc[j]
                    ow[m] = -b * pv[j]
                    m += 1
                    j += 1
                else:
                    v = a * w[i] - b * pv[j]
                    if v != 0:
                        oc[m] = c[i]
                        ow[m] = v
                        m += 1
                    i += 1
                    j += 1
            while i < n:
                oc[m] = c[i]
                ow[m] = a * w[i]
                m += 1
                i += 1
            while j < lp:
                oc[m] = pc[j]
                ow[m] = -b * pv[j]
                m += 1
                j += 1
            s = 1 - s
            n = m
            if n == 0:
                break
            g = 0
            for k in range(n):
                g = _gcd(g, ow[k])
                if g == 1:
                    break
            if ow[0] < 0:
                g = -g
            for k in range(n):
                ow[k] //= g
                if ow[k] >= LIMIT or ow[k] <= -LIMIT:
                    raise OverflowError("entry too large for the compiled kernel")
        slot[0] = s
        return n

    def insert(self, cols, vals):
        cdef int s = 0
        cdef Py_ssize_t n = self._load(cols, vals), k
        cdef int64_t g = 0
        cdef int32_t* c
        cdef int64_t* w
        if n == 0:
            return False
        n = self._reduce(n, &s)
        if n == 0:
            return False
        c = self.bc[s]
        w = self.bv[s]
        for k in range(n):
            g = _gcd(g, w[k])
        if w[0] < 0:
            g = -g
        if self.rank == self.cap:
            self.cap = max(16, 2 * self.cap)
            self.rcols = <int32_t**>realloc(self.rcols, self.cap * sizeof(int32_t*))
            self.rvals = <int64_t**>realloc(self.rvals, self.cap * sizeof(int64_t*))
            self.rlen = <int32_t*>realloc(self.rlen, self.cap * sizeof(int32_t))
            if self.rcols == NULL or self.rvals == NULL or self.rlen == NULL:
                raise MemoryError()
        self.rcols[self.rank] = <int32_t*>malloc(n * sizeof(int32_t))
        self.rvals[self.rank] = <int64_t*>malloc(n * sizeof(int64_t))
        if self.rcols[self.rank] == NULL or self.rvals[self.rank] == NULL:
            raise MemoryError()
        for k in range(n):
            self.rcols[self.rank][k] = c[k]
            self.rvals[self.rank][k] = w[k] // g
        self.rlen[self.rank] = <int32_t>n
        self.pivot_of[c[0]] = <int32_t>self.rank
        self.rank += 1
        return True

    def contains(self, cols, vals):
        cdef int s = 0
        cdef Py_ssize_t n = self._load(cols, vals)
        if n == 0:
            return True
        return self._reduce(n, &s) == 0
