"""Shared fixture builders and freezers used across the suite.

The frozen values in _frozen.py were produced by tests/oracles.py, an
independent dict-based evaluator that never imports the library. Tests
rebuild the same structures through the public API and compare against
those entries, so agreement means two independent routes computed the
same thing.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from hypothesis import settings  # noqa: E402

settings.register_profile("suite", max_examples=40, deadline=None,
                          derandomize=True)
settings.load_profile("suite")

from _frozen import FROZEN  # noqa: E402,F401

from homcat.exact_tensor import QQ, LinMap, identity  # noqa: E402
from homcat.hom_structures import HomBialgebra  # noqa: E402


def cube(entries, shape):
    """Structure-constant cube with int entries, zero elsewhere."""
    d0, d1, d2 = shape
    c = [[[0] * d2 for _ in range(d1)] for _ in range(d0)]
    for (i, j, k), v in entries.items():
        c[i][j][k] = v
    return c


def group_mul_cube(n, k=1):
    return cube({(i, j, ((i + j) * k) % n): 1
                 for i in range(n) for j in range(n)}, (n, n, n))


def group_comul_cube(n, k=1):
    return cube({(i, (i * k) % n, (i * k) % n): 1 for i in range(n)},
                (n, n, n))


def group_alpha_map(n, k=1, field=QQ):
    rows = [[field.one if r == (i * k) % n else field.zero
             for i in range(n)] for r in range(n)]
    return LinMap.from_rows(field, rows)


def z2_bialgebra(field=QQ):
    return HomBialgebra(field, group_mul_cube(2), group_comul_cube(2),
                        identity(2, field), identity(2, field))


# Q[x]/(x^2): e0 = 1, e1 = x; and the coalgebra with x primitive
DUAL_MUL = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
DUAL_COMUL = [[[1, 0], [0, 0]], [[0, 1], [1, 0]]]


def freeze_cube(field, c):
    return [[[field.scalar_to_str(field.coerce(v)) for v in row]
             for row in plane] for plane in c]


def freeze_matrix(m):
    return [[m.field.scalar_to_str(v) for v in row] for row in m.row_lists()]


def freeze_violations(violations):
    """Library violations in the oracle's frozen tuple format."""
    return [(v.axiom, v.index,
             [(ix, str(c)) for ix, c in v.lhs],
             [(ix, str(c)) for ix, c in v.rhs]) for v in violations]


def sparse_columns(m, src_dims, dst_dims):
    """Frozen swap-map format: input tuple -> sorted [(output tuple, str)]."""
    def unflat(flat, dims):
        out = []
        for d in reversed(dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))

    ncols = 1
    for d in src_dims:
        ncols *= d
    table = {}
    for col in range(ncols):
        ent = []
        for r, c in enumerate(m.column(col)):
            if c != m.field.zero:
                ent.append((unflat(r, dst_dims), str(c)))
        table[unflat(col, src_dims)] = ent
    return table
