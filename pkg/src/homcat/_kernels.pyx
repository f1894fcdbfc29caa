# cython: language_level=3
# cython: boundscheck=False
"""Compiled matrix kernels.

Same contract as _kernels_py: dense matrix multiply, Kronecker product
and matrix-vector application on flat row-major tuples of exact scalars.
The arithmetic stays in Python objects (rationals or ints); compilation
removes the interpreter loop overhead, which dominates at the small
dimensions used here.
"""


def mat_mul(a, Py_ssize_t ar, Py_ssize_t ac, b, Py_ssize_t br, Py_ssize_t bc,
            zero, modulus=None):
    cdef Py_ssize_t i, t, j, abase, obase, base, n
    cdef list out = [zero] * (ar * bc)
    cdef list b_idx = []
    cdef list b_val = []
    cdef list idx, val
    cdef object av, bv
    for t in range(br):
        base = t * bc
        idx = []
        val = []
        for j in range(bc):
            bv = b[base + j]
            if bv:
                idx.append(j)
                val.append(bv)
        b_idx.append(idx)
        b_val.append(val)
    for i in range(ar):
        abase = i * ac
        obase = i * bc
        for t in range(ac):
            av = a[abase + t]
            if not av:
                continue
            idx = <list> b_idx[t]
            val = <list> b_val[t]
            n = len(idx)
            for j in range(n):
                out[obase + <Py_ssize_t> idx[j]] = \
                    out[obase + <Py_ssize_t> idx[j]] + av * <object> val[j]
    if modulus is not None:
        for i in range(ar * bc):
            out[i] = out[i] % modulus
    return tuple(out)


def kron(a, Py_ssize_t ar, Py_ssize_t ac, b, Py_ssize_t br, Py_ssize_t bc,
         zero, modulus=None):
    cdef Py_ssize_t i, j, k, l, t, n, cols, abase, rbase, cbase
    cdef object av, bv, v
    cols = ac * bc
    cdef list out = [zero] * (ar * br * cols)
    cdef list bk = []
    cdef list bl = []
    cdef list bv_list = []
    for k in range(br):
        for l in range(bc):
            bv = b[k * bc + l]
            if bv:
                bk.append(k)
                bl.append(l)
                bv_list.append(bv)
    n = len(bk)
    for i in range(ar):
        abase = i * ac
        for j in range(ac):
            av = a[abase + j]
            if not av:
                continue
            rbase = i * br
            cbase = j * bc
            for t in range(n):
                v = av * <object> bv_list[t]
                if modulus is not None:
                    v = v % modulus
                out[(rbase + <Py_ssize_t> bk[t]) * cols
                    + cbase + <Py_ssize_t> bl[t]] = v
    return tuple(out)


def mat_vec(a, Py_ssize_t ar, Py_ssize_t ac, v, zero, modulus=None):
    cdef Py_ssize_t i, j, t, n, base
    cdef object av, vv, acc
    cdef list out = [zero] * ar
    cdef list vidx = []
    cdef list vval = []
    for j in range(ac):
        vv = v[j]
        if vv:
            vidx.append(j)
            vval.append(vv)
    n = len(vidx)
    for i in range(ar):
        base = i * ac
        acc = zero
        for t in range(n):
            av = a[base + <Py_ssize_t> vidx[t]]
            if av:
                acc = acc + av * <object> vval[t]
        out[i] = acc % modulus if modulus is not None else acc
    return tuple(out)
