# cython: language_level=3, boundscheck=False
"""Compiled kernel: node arrays held as GMP rationals.

Same API as ``_pykernel``.  Values cross the Python boundary as
``fractions.Fraction``; all arithmetic inside ``compose`` and
``fixed_points`` runs on ``mpq_t`` without touching Python objects.
"""

from fractions import Fraction

from libc.stdlib cimport malloc, realloc, free

from .errors import ResourceError

BACKEND = "gmp"


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef struct __mpq_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    ctypedef __mpq_struct* mpq_ptr

    void mpq_init(mpq_ptr)
    void mpq_clear(mpq_ptr)
    void mpq_set(mpq_ptr, mpq_ptr)
    void mpq_set_si(mpq_ptr, long, unsigned long)
    int mpq_set_str(mpq_ptr, const char*, int)
    void mpq_add(mpq_ptr, mpq_ptr, mpq_ptr)
    void mpq_sub(mpq_ptr, mpq_ptr, mpq_ptr)
    void mpq_mul(mpq_ptr, mpq_ptr, mpq_ptr)
    void mpq_div(mpq_ptr, mpq_ptr, mpq_ptr)
    int mpq_cmp(mpq_ptr, mpq_ptr)
    int mpq_sgn(mpq_ptr)
    int mpq_equal(mpq_ptr, mpq_ptr)
    mpz_ptr mpq_numref(mpq_ptr)
    mpz_ptr mpq_denref(mpq_ptr)

    int mpz_fits_slong_p(mpz_ptr)
    long mpz_get_si(mpz_ptr)
    char* mpz_get_str(char*, int, mpz_ptr)
    size_t mpz_sizeinbase(mpz_ptr, int)


cdef long _SMALL = 1L << 62


def _coprime_factory():
    try:
        Fraction(1, 2, _normalize=False)
    except TypeError:
        maker = getattr(Fraction, "_from_coprime_ints", None)
        if maker is not None:
            return maker
        return Fraction
    return lambda n, d: Fraction(n, d, _normalize=False)


_make_fraction = _coprime_factory()


cdef object _z_to_int(mpz_ptr z):
    cdef size_t size
    cdef char* buf
    if mpz_fits_slong_p(z):
        return mpz_get_si(z)
    size = mpz_sizeinbase(z, 16) + 2
    buf = <char*>malloc(size)
    if buf == NULL:
        raise MemoryError()
    try:
        mpz_get_str(buf, 16, z)
        return int(buf.decode("ascii"), 16)
    finally:
        free(buf)


cdef object _to_fraction(mpq_ptr q):
    return _make_fraction(_z_to_int(mpq_numref(q)), _z_to_int(mpq_denref(q)))


cdef int _set_from(mpq_ptr dst, object value) except -1:
    cdef object num, den
    cdef bytes text
    if not isinstance(value, Fraction):
        value = Fraction(value)
    num = value.numerator
    den = value.denominator
    if -_SMALL < num < _SMALL and den < _SMALL:
        mpq_set_si(dst, <long>num, <unsigned long>den)
    else:
        text = (format(num, "x") + "/" + format(den, "x")).encode("ascii")
        if mpq_set_str(dst, text, 16) != 0:
            raise ValueError(f"cannot convert {value!r}")
    return 0


cdef class Nodes:
    cdef __mpq_struct* _xs
    cdef __mpq_struct* _ys
    cdef Py_ssize_t _n
    cdef Py_ssize_t _capacity

    def __cinit__(self):
        self._xs = NULL
        self._ys = NULL
        self._n = 0
        self._capacity = 0

    def __dealloc__(self):
        cdef Py_ssize_t i
        for i in range(self._n):
            mpq_clear(&self._xs[i])
            mpq_clear(&self._ys[i])
        free(self._xs)
        free(self._ys)

    cdef int _reserve(self, Py_ssize_t capacity) except -1:
        cdef __mpq_struct* nx
        cdef __mpq_struct* ny
        if capacity <= self._capacity:
            return 0
        # mpq structs hold heap pointers only, so relocating them is safe
        nx = <__mpq_struct*>realloc(self._xs, capacity * sizeof(__mpq_struct))
        if nx == NULL:
            raise MemoryError()
        self._xs = nx
        ny = <__mpq_struct*>realloc(self._ys, capacity * sizeof(__mpq_struct))
        if ny == NULL:
            raise MemoryError()
        self._ys = ny
        self._capacity = capacity
        return 0

    cdef int _append(self, mpq_ptr x, mpq_ptr y) except -1:
        if self._n == self._capacity:
            self._reserve(max(16, 2 * self._capacity))
        mpq_init(&self._xs[self._n])
        mpq_init(&self._ys[self._n])
        mpq_set(&self._xs[self._n], x)
        mpq_set(&self._ys[self._n], y)
        self._n += 1
        return 0

    @staticmethod
    def from_fractions(xs, ys):
        cdef Nodes out = Nodes.__new__(Nodes)
        cdef Py_ssize_t i, n = len(xs)
        if len(ys) != n:
            raise ValueError("xs and ys differ in length")
        out._reserve(max(n, 1))
        for i in range(n):
            mpq_init(&out._xs[i])
            mpq_init(&out._ys[i])
            out._n = i + 1
            _set_from(&out._xs[i], xs[i])
            _set_from(&out._ys[i], ys[i])
        return out

    def xs(self):
        return [_to_fraction(&self._xs[i]) for i in range(self._n)]

    def ys(self):
        return [_to_fraction(&self._ys[i]) for i in range(self._n)]

    def __len__(self):
        return self._n

    def compose(self, Nodes inner, Py_ssize_t cap):
        """Nodes of ``self ∘ inner`` with collinear neighbours merged."""
        cdef Nodes out = Nodes.__new__(Nodes)
        cdef Py_ssize_t m = self._n, k = inner._n
        cdef Py_ssize_t i, j, stop
        cdef __mpq_struct* slopes = NULL
        cdef __mpq_struct tmp[8]
        cdef int cmp
        if m == 1:
            out._reserve(k)
            for i in range(k):
                out._append(&inner._xs[i], &self._ys[0])
            return out
        for i in range(8):
            mpq_init(&tmp[i])
        slopes = <__mpq_struct*>malloc((m - 1) * sizeof(__mpq_struct))
        if slopes == NULL:
            raise MemoryError()
        for j in range(m - 1):
            mpq_init(&slopes[j])
            mpq_sub(&tmp[0], &self._ys[j + 1], &self._ys[j])
            mpq_sub(&tmp[1], &self._xs[j + 1], &self._xs[j])
            mpq_div(&slopes[j], &tmp[0], &tmp[1])
        try:
            out._reserve(2 * k)
            # tmp[2] holds the outer value at a node, tmp[3] the preimage abscissa
            self._value(&inner._ys[0], slopes, &tmp[2], &tmp[4])
            _push(out, &inner._xs[0], &tmp[2], tmp, cap)
            for i in range(k - 1):
                cmp = mpq_cmp(&inner._ys[i], &inner._ys[i + 1])
                if cmp != 0:
                    # tmp[5] = (xb - xa) / (yb - ya)
                    mpq_sub(&tmp[0], &inner._xs[i + 1], &inner._xs[i])
                    mpq_sub(&tmp[1], &inner._ys[i + 1], &inner._ys[i])
                    mpq_div(&tmp[5], &tmp[0], &tmp[1])
                if cmp < 0:
                    j = _bisect_right(self._xs, m, &inner._ys[i])
                    stop = _bisect_left(self._xs, m, &inner._ys[i + 1])
                    while j < stop:
                        mpq_sub(&tmp[0], &self._xs[j], &inner._ys[i])
                        mpq_mul(&tmp[1], &tmp[0], &tmp[5])
                        mpq_add(&tmp[3], &inner._xs[i], &tmp[1])
                        _push(out, &tmp[3], &self._ys[j], tmp, cap)
                        j += 1
                elif cmp > 0:
                    j = _bisect_left(self._xs, m, &inner._ys[i]) - 1
                    stop = _bisect_right(self._xs, m, &inner._ys[i + 1])
                    while j >= stop:
                        mpq_sub(&tmp[0], &self._xs[j], &inner._ys[i])
                        mpq_mul(&tmp[1], &tmp[0], &tmp[5])
                        mpq_add(&tmp[3], &inner._xs[i], &tmp[1])
                        _push(out, &tmp[3], &self._ys[j], tmp, cap)
                        j -= 1
                self._value(&inner._ys[i + 1], slopes, &tmp[2], &tmp[4])
                _push(out, &inner._xs[i + 1], &tmp[2], tmp, cap)
        finally:
            for j in range(m - 1):
                mpq_clear(&slopes[j])
            free(slopes)
            for i in range(8):
                mpq_clear(&tmp[i])
        return out

    cdef void _value(self, mpq_ptr y, __mpq_struct* slopes, mpq_ptr result, mpq_ptr scratch):
        cdef Py_ssize_t j = _bisect_right(self._xs, self._n, y) - 1
        if j > self._n - 2:
            j = self._n - 2
        if j < 0:
            j = 0
        mpq_sub(scratch, y, &self._xs[j])
        mpq_mul(result, scratch, &slopes[j])
        mpq_add(result, result, &self._ys[j])

    def fixed_points(self):
        """Solutions of ``y = x``: isolated points and diagonal segments."""
        cdef Py_ssize_t i, n = self._n
        cdef int sa, sb
        cdef __mpq_struct ha, hb, t0, t1, root
        cdef object diag_end = None
        points = []
        diagonals = []
        mpq_init(&ha)
        mpq_init(&hb)
        mpq_init(&t0)
        mpq_init(&t1)
        mpq_init(&root)
        try:
            mpq_sub(&hb, &self._ys[0], &self._xs[0])
            for i in range(n - 1):
                mpq_set(&ha, &hb)
                mpq_sub(&hb, &self._ys[i + 1], &self._xs[i + 1])
                sa = mpq_sgn(&ha)
                sb = mpq_sgn(&hb)
                if sa == 0:
                    if sb == 0:
                        if diag_end is not None and diag_end == i:
                            diagonals[-1] = (diagonals[-1][0], _to_fraction(&self._xs[i + 1]))
                        else:
                            diagonals.append((_to_fraction(&self._xs[i]), _to_fraction(&self._xs[i + 1])))
                        diag_end = i + 1
                    elif diag_end is None or diag_end != i:
                        x = _to_fraction(&self._xs[i])
                        if not points or points[-1] != x:
                            points.append(x)
                elif (sa < 0 and sb > 0) or (sa > 0 and sb < 0):
                    mpq_sub(&t0, &self._xs[i + 1], &self._xs[i])
                    mpq_mul(&t0, &t0, &ha)
                    mpq_sub(&t1, &ha, &hb)
                    mpq_div(&t0, &t0, &t1)
                    mpq_add(&root, &self._xs[i], &t0)
                    points.append(_to_fraction(&root))
            if mpq_sgn(&hb) == 0 and (diag_end is None or diag_end != n - 1):
                x = _to_fraction(&self._xs[n - 1])
                if not points or points[-1] != x:
                    points.append(x)
        finally:
            mpq_clear(&ha)
            mpq_clear(&hb)
            mpq_clear(&t0)
            mpq_clear(&t1)
            mpq_clear(&root)
        return points, diagonals


cdef Py_ssize_t _bisect_right(__mpq_struct* xs, Py_ssize_t n, mpq_ptr y):
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if mpq_cmp(y, &xs[mid]) < 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


cdef Py_ssize_t _bisect_left(__mpq_struct* xs, Py_ssize_t n, mpq_ptr y):
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if mpq_cmp(&xs[mid], y) < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef int _push(Nodes out, mpq_ptr x, mpq_ptr y, __mpq_struct* tmp, Py_ssize_t cap) except -1:
    # tmp[4], tmp[6], tmp[7] are scratch here; tmp[0..3] and tmp[5] belong to the caller
    cdef Py_ssize_t n = out._n
    if n >= 2:
        mpq_sub(&tmp[6], &out._ys[n - 1], &out._ys[n - 2])
        mpq_sub(&tmp[7], x, &out._xs[n - 1])
        mpq_mul(&tmp[6], &tmp[6], &tmp[7])
        mpq_sub(&tmp[7], y, &out._ys[n - 1])
        mpq_sub(&tmp[4], &out._xs[n - 1], &out._xs[n - 2])
        mpq_mul(&tmp[7], &tmp[7], &tmp[4])
        if mpq_equal(&tmp[6], &tmp[7]):
            mpq_set(&out._xs[n - 1], x)
            mpq_set(&out._ys[n - 1], y)
            return 0
    out._append(x, y)
    if out._n > cap:
        raise ResourceError(f"piece cap exceeded: more than {cap} nodes", out._n)
    return 0
