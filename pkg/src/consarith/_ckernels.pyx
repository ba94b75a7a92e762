# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on little-endian 32-bit limb arrays.

Same names, signatures and results as ``_pykernels``.  Values that fit in
64 bits take a scalar path; larger ones are converted to limb buffers and
processed with schoolbook arithmetic, one rule application per loop turn.
Where that loses to CPython's own big integers (very large square roots,
least factors beyond 63 bits) the Python kernel is called instead.
"""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset

BACKEND = "cython"

cdef extern from *:
    """
    typedef unsigned __int128 consarith_u128;
    """
    ctypedef unsigned long long u128 "consarith_u128"

cdef uint64_t U64_MAX = 0xFFFFFFFFFFFFFFFF


# ---------------------------------------------------------------- limbs

cdef struct Num:
    uint32_t* d
    Py_ssize_t n      # used limbs, d[n-1] != 0 unless the value is 0
    Py_ssize_t cap


cdef int num_alloc(Num* x, Py_ssize_t cap) except -1:
    if cap < 1:
        cap = 1
    x.d = <uint32_t*>calloc(cap, sizeof(uint32_t))
    if x.d == NULL:
        raise MemoryError()
    x.n = 0
    x.cap = cap
    return 0


cdef void num_free(Num* x):
    if x.d != NULL:
        free(x.d)
        x.d = NULL


cdef inline void num_trim(Num* x):
    while x.n > 0 and x.d[x.n - 1] == 0:
        x.n -= 1


cdef int num_from_int(Num* x, object v, Py_ssize_t extra) except -1:
    cdef Py_ssize_t nbytes = (v.bit_length() + 7) // 8
    cdef Py_ssize_t n = (nbytes + 3) // 4
    cdef bytes raw
    num_alloc(x, n + extra)
    if n:
        raw = v.to_bytes(n * 4, "little")
        memcpy(x.d, <char*>raw, n * 4)
    x.n = n
    num_trim(x)
    return 0


cdef object num_to_int(Num* x):
    if x.n == 0:
        return 0
    return int.from_bytes((<char*>x.d)[:x.n * 4], "little")


cdef inline int num_cmp(Num* a, Num* b):
    cdef Py_ssize_t i
    if a.n != b.n:
        return 1 if a.n > b.n else -1
    i = a.n - 1
    while i >= 0:
        if a.d[i] != b.d[i]:
            return 1 if a.d[i] > b.d[i] else -1
        i -= 1
    return 0


cdef inline void num_sub_inplace(Num* a, Num* b):
    # a -= b, requires a >= b
    cdef Py_ssize_t i
    cdef uint64_t borrow = 0, t
    for i in range(b.n):
        t = <uint64_t>a.d[i] - b.d[i] - borrow
        a.d[i] = <uint32_t>t
        borrow = (t >> 63) & 1
    i = b.n
    while borrow and i < a.n:
        t = <uint64_t>a.d[i] - borrow
        a.d[i] = <uint32_t>t
        borrow = (t >> 63) & 1
        i += 1
    num_trim(a)


cdef inline void num_copy(Num* dst, Num* src):
    # dst must have capacity for src
    memcpy(dst.d, src.d, src.n * sizeof(uint32_t))
    dst.n = src.n


cdef void num_mul(Num* out, Num* a, Num* b):
    # out = a*b, out distinct from a and b with capacity a.n + b.n
    cdef Py_ssize_t i, j
    cdef uint64_t carry, t
    cdef uint32_t ai
    memset(out.d, 0, (a.n + b.n) * sizeof(uint32_t))
    for i in range(a.n):
        ai = a.d[i]
        if ai == 0:
            continue
        carry = 0
        for j in range(b.n):
            t = <uint64_t>ai * b.d[j] + out.d[i + j] + carry
            out.d[i + j] = <uint32_t>t
            carry = t >> 32
        out.d[i + b.n] = <uint32_t>carry
    out.n = a.n + b.n
    num_trim(out)


cdef void num_add(Num* out, Num* a, Num* b):
    # out = a+b, capacity max(a.n, b.n) + 1; out may alias a
    cdef Py_ssize_t i, n = a.n if a.n > b.n else b.n
    cdef uint64_t carry = 0, t
    for i in range(n):
        t = carry
        if i < a.n:
            t += a.d[i]
        if i < b.n:
            t += b.d[i]
        out.d[i] = <uint32_t>t
        carry = t >> 32
    out.d[n] = <uint32_t>carry
    out.n = n + 1
    num_trim(out)


cdef inline int num_is_one(Num* a):
    return a.n == 1 and a.d[0] == 1


cdef inline Py_ssize_t num_bitlen(Num* a):
    cdef Py_ssize_t bits
    cdef uint32_t top
    if a.n == 0:
        return 0
    top = a.d[a.n - 1]
    bits = (a.n - 1) * 32
    while top:
        bits += 1
        top >>= 1
    return bits


cdef inline Py_ssize_t num_tz(Num* a):
    cdef Py_ssize_t i = 0, k = 0
    cdef uint32_t w
    while i < a.n and a.d[i] == 0:
        i += 1
    if i == a.n:
        return 0
    w = a.d[i]
    while not (w & 1):
        w >>= 1
        k += 1
    return i * 32 + k


cdef void num_shr(Num* a, Py_ssize_t k):
    # a >>= k in place
    cdef Py_ssize_t words = k // 32, bits = k % 32, i
    if words >= a.n:
        a.n = 0
        return
    if bits == 0:
        for i in range(a.n - words):
            a.d[i] = a.d[i + words]
    else:
        for i in range(a.n - words - 1):
            a.d[i] = (a.d[i + words] >> bits) | (a.d[i + words + 1] << (32 - bits))
        a.d[a.n - words - 1] = a.d[a.n - 1] >> bits
    a.n -= words
    num_trim(a)


cdef void num_set_pow2_or(Num* out, Num* acc, Py_ssize_t k):
    # out = acc | (1 << k), with acc < 2^k guaranteed by the caller
    cdef Py_ssize_t w = k // 32, i
    num_copy(out, acc)
    if out.n <= w:
        for i in range(out.n, w + 1):
            out.d[i] = 0
        out.n = w + 1
    out.d[w] |= (<uint32_t>1) << (k % 32)


# ------------------------------------------------------ plain arithmetic

def add(p, q):
    return p + q


def mul(p, q):
    # CPython's multiplication is already compiled and switches to Karatsuba
    # on large operands; a limb round trip would only add copying
    return p * q


def sub(p, q):
    return p - q


def cmp(p, q):
    return (p > q) - (p < q)


# ------------------------------------------------------------------ gcd

cdef uint64_t nat_gcd_u64(uint64_t n, uint64_t m):
    while n and m:
        if n < m:
            m -= n
        else:
            n -= m
    return n if m == 0 else m


def nat_gcd(n, m):
    cdef uint64_t a, b
    if n <= U64_MAX and m <= U64_MAX:
        a = n
        b = m
        return nat_gcd_u64(a, b)
    while n and m:
        if n < m:
            m -= n
        else:
            n -= m
    return n if m == 0 else m


cdef uint64_t stein_u64(uint64_t p, uint64_t q):
    cdef int shift = 0
    while True:
        if p == 1 or q == 1:
            return (<uint64_t>1) << shift
        if not (p & 1):
            if not (q & 1):
                p >>= 1
                q >>= 1
                shift += 1
            else:
                p >>= 1
        elif not (q & 1):
            q >>= 1
        elif p < q:
            q = (q - p) >> 1
        elif q < p:
            p = (p - q) >> 1
        else:
            return p << shift


cdef Py_ssize_t stein_limbs(Num* a, Num* b):
    # leaves the odd part of the gcd in a; returns the shared power of two.
    # Runs of digit-stripping rules are applied as one shift each.
    cdef Py_ssize_t shift = 0, ta, tb, k
    cdef int c
    while True:
        if num_is_one(a) or num_is_one(b):
            a.d[0] = 1
            a.n = 1
            return shift
        ta = num_tz(a)
        tb = num_tz(b)
        if ta and tb:
            k = ta if ta < tb else tb
            num_shr(a, k)
            num_shr(b, k)
            shift += k
        elif ta:
            num_shr(a, ta)
        elif tb:
            num_shr(b, tb)
        else:
            c = num_cmp(a, b)
            if c < 0:
                num_sub_inplace(b, a)
                num_shr(b, 1)
            elif c > 0:
                num_sub_inplace(a, b)
                num_shr(a, 1)
            else:
                return shift


def stein_gcd(p, q):
    cdef Num a, b
    cdef Py_ssize_t shift
    if p <= U64_MAX and q <= U64_MAX:
        return stein_u64(p, q)
    num_from_int(&a, p, 0)
    num_from_int(&b, q, 0)
    try:
        shift = stein_limbs(&a, &b)
        return num_to_int(&a) << shift
    finally:
        num_free(&a)
        num_free(&b)


cdef void floor_div_limbs(Num* out, Num* p, Num* q, Num* cand, Num* prod):
    # out = nu(r*q <= p, S(log p - log q)); scratch buffers cand and prod
    cdef Py_ssize_t k
    out.n = 0
    k = num_bitlen(p) - num_bitlen(q)
    while k >= 0:
        num_set_pow2_or(cand, out, k)
        num_mul(prod, cand, q)
        if num_cmp(prod, p) <= 0:
            num_copy(out, cand)
        k -= 1
    if out.n == 0:
        out.d[0] = 1
        out.n = 1


cdef uint64_t floor_div_u64(uint64_t p, uint64_t q):
    cdef int k
    cdef uint64_t acc = 0, cand
    k = 63
    while k >= 0 and not ((p >> k) & 1):
        k -= 1
    cdef int lp = k
    k = 63
    while k >= 0 and not ((q >> k) & 1):
        k -= 1
    k = lp - k
    while k >= 0:
        cand = acc | ((<uint64_t>1) << k)
        if <u128>cand * q <= p:
            acc = cand
        k -= 1
    return acc if acc else 1


def floor_div(p, q):
    cdef Num a, b, out, cand, prod
    if p <= U64_MAX:
        return floor_div_u64(p, q)
    num_from_int(&a, p, 0)
    num_from_int(&b, q, 0)
    try:
        num_alloc(&out, a.n + 1)
        num_alloc(&cand, a.n + 1)
        num_alloc(&prod, 2 * a.n + 2)
        floor_div_limbs(&out, &a, &b, &cand, &prod)
        return num_to_int(&out)
    finally:
        num_free(&a)
        num_free(&b)
        num_free(&out)
        num_free(&cand)
        num_free(&prod)


cdef uint64_t euclid_u64(uint64_t p, uint64_t q):
    cdef uint64_t m
    while True:
        if p < q:
            m = floor_div_u64(q, p) * p
            if q == m:
                return p
            q -= m
        elif q < p:
            m = floor_div_u64(p, q) * q
            if p == m:
                return q
            p -= m
        else:
            return q


def euclid_gcd(p, q):
    cdef Num a, b, k, cand, prod, m
    cdef Py_ssize_t cap
    cdef Num* big
    cdef Num* small
    cdef int c
    if p <= U64_MAX and q <= U64_MAX:
        return euclid_u64(p, q)
    num_from_int(&a, p, 0)
    num_from_int(&b, q, 0)
    cap = (a.n if a.n > b.n else b.n) + 2
    try:
        num_alloc(&k, cap)
        num_alloc(&cand, cap)
        num_alloc(&prod, 2 * cap)
        num_alloc(&m, 2 * cap)
        while True:
            c = num_cmp(&a, &b)
            if c == 0:
                return num_to_int(&b)
            if c < 0:
                small = &a
                big = &b
            else:
                small = &b
                big = &a
            floor_div_limbs(&k, big, small, &cand, &prod)
            num_mul(&m, &k, small)
            if num_cmp(big, &m) == 0:
                return num_to_int(small)
            num_sub_inplace(big, &m)
    finally:
        num_free(&a)
        num_free(&b)
        num_free(&k)
        num_free(&cand)
        num_free(&prod)
        num_free(&m)


# ---------------------------------------------------------- square roots

# Above these sizes (in bits, measured) every probe's schoolbook squaring
# loses to CPython's Karatsuba, and the Python kernels are used instead.
SQRT_LIMB_MAX_BITS = 6000
FAST_SQRT_LIMB_MAX_BITS = 2500

cdef uint64_t pos_sqrt_u64(uint64_t p):
    cdef int k = 63
    cdef uint64_t acc = 0, cand
    while not ((p >> k) & 1):
        k -= 1
    k //= 2
    while k >= 0:
        cand = acc | ((<uint64_t>1) << k)
        # cand < 2^32 here, so the square cannot overflow
        if cand * cand <= p:
            acc = cand
        k -= 1
    return acc if acc else 1


def pos_sqrt(p):
    cdef Num a, acc, cand, prod
    cdef Py_ssize_t k
    if p <= U64_MAX:
        return pos_sqrt_u64(p)
    if p.bit_length() > SQRT_LIMB_MAX_BITS:
        from consarith import _pykernels
        return _pykernels.pos_sqrt(p)
    num_from_int(&a, p, 0)
    try:
        num_alloc(&acc, a.n // 2 + 2)
        num_alloc(&cand, a.n // 2 + 2)
        num_alloc(&prod, a.n + 4)
        k = (num_bitlen(&a) - 1) // 2
        while k >= 0:
            num_set_pow2_or(&cand, &acc, k)
            num_mul(&prod, &cand, &cand)
            if num_cmp(&prod, &a) <= 0:
                num_copy(&acc, &cand)
            k -= 1
        return num_to_int(&acc)
    finally:
        num_free(&a)
        num_free(&acc)
        num_free(&cand)
        num_free(&prod)


cdef uint64_t fast_sqrt_u64(uint64_t p):
    cdef int top = 63, shift
    cdef uint64_t q = 1, s1
    while not ((p >> top) & 1):
        top -= 1
    top = (top // 2) * 2
    shift = top - 2
    while shift >= 0:
        s1 = (q << 1) | 1
        q = s1 if s1 * s1 <= (p >> shift) else q << 1
        shift -= 2
    return q


def fast_sqrt(p):
    cdef Num a, arg, q, s1, prod
    cdef Py_ssize_t top, shift
    if p <= U64_MAX:
        return fast_sqrt_u64(p)
    if p.bit_length() > FAST_SQRT_LIMB_MAX_BITS:
        from consarith import _pykernels
        return _pykernels.fast_sqrt(p)
    num_from_int(&a, p, 0)
    try:
        num_alloc(&arg, a.n + 1)
        num_alloc(&q, a.n // 2 + 2)
        num_alloc(&s1, a.n // 2 + 2)
        num_alloc(&prod, a.n + 4)
        q.d[0] = 1
        q.n = 1
        top = ((num_bitlen(&a) - 1) // 2) * 2
        shift = top - 2
        while shift >= 0:
            # s1 = S1 q; the argument is the input with `shift` digits removed
            num_add(&s1, &q, &q)
            s1.d[0] |= 1
            num_mul(&prod, &s1, &s1)
            num_copy(&arg, &a)
            num_shr(&arg, shift)
            if num_cmp(&prod, &arg) <= 0:
                num_copy(&q, &s1)
            else:
                num_add(&q, &q, &q)
            shift -= 2
        return num_to_int(&q)
    finally:
        num_free(&a)
        num_free(&arg)
        num_free(&q)
        num_free(&s1)
        num_free(&prod)


# ------------------------------------------------------------ divisors

cdef inline int divides_gt1_u64(uint64_t q, uint64_t p):
    return q > 1 and stein_u64(q, p) == q


def least_factor(p):
    cdef uint64_t v, bound, q
    if p > U64_MAX >> 1:
        from consarith import _pykernels
        return _pykernels.least_factor(p)
    v = p
    if v == 1:
        return 1
    if not (v & 1):
        return 2
    bound = pos_sqrt_u64(v)
    q = 2
    while q <= bound:
        if stein_u64(q, v) == q:
            return q
        q += 1
    return p


cdef int exb_rec(uint64_t b, uint64_t off, uint64_t p):
    # structural rules of the bounded quantifier; recursion depth is log(b)
    cdef uint64_t half
    while True:
        if b == 1:
            return divides_gt1_u64(off + 1, p)
        if b & 1:
            if divides_gt1_u64(off + b, p):
                return 1
            b -= 1
        else:
            half = b >> 1
            if exb_rec(half, off, p):
                return 1
            b = half
            off = off + half


def is_composed(p):
    if p > U64_MAX >> 1:
        from consarith import _pykernels
        return _pykernels.is_composed(p)
    return bool(exb_rec(pos_sqrt_u64(p), 0, p))
