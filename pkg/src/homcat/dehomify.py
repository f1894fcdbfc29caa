"""Strip twist maps from braided structures into classical coherence data.

Given a family of invertible component maps, one per module, the two
builders assemble a classical associativity constraint and a classical
quasi-braiding on the underlying spaces:

  b(U, V, W)    = kron(Theta_U^-1, kron(id_V, Theta_W))
  c(U, V)       = kron(Phi_V^-1, Phi_U^-1) composed with a supplied swap
                  shaped map d: U (x) V -> V (x) U

Component maps of composite objects are always derived as Kronecker
products of the atomic components, never accepted as independent input;
that turns the multiplicativity hypotheses into construction facts. The
checks then confirm Mac Lane pentagon and hexagon coherence exactly, and
the cross check ties the builders to the Yetter-Drinfeld rebracketing and
quasi-braiding (axiom ids eq3333c and eq9999d, see docs/formats.md).
"""

from __future__ import annotations

from .exact_tensor import LinMap, identity, kron
from .hom_structures import DEFAULT_VIOLATION_CAP, CheckReport, compare_maps
from .yetter_drinfeld import (
    _cached_inverse, _require_valid, b_yd, quasi_braiding_yd, yd_associator,
)


def build_b(theta_u, theta_w, dims):
    """Associativity constraint component for the triple with the given dims."""
    du, dv, dw = dims
    if theta_u.rows != du or theta_u.cols != du:
        raise ValueError("theta_u must be square of the first dim")
    if theta_w.rows != dw or theta_w.cols != dw:
        raise ValueError("theta_w must be square of the third dim")
    try:
        inv = _cached_inverse(theta_u)
    except ValueError:
        raise ValueError("build_b needs invertible theta_u") from None
    return kron(inv, kron(identity(dv, theta_u.field), theta_w))


def build_c(phi_u, phi_v, d):
    """Quasi-braiding component from a swap-shaped map d: U (x) V -> V (x) U."""
    du, dv = phi_u.rows, phi_v.rows
    if phi_u.cols != du or phi_v.cols != dv:
        raise ValueError("component maps must be square")
    if d.cols != du * dv or d.rows != dv * du:
        raise ValueError("d must map U (x) V to V (x) U")
    try:
        iu = _cached_inverse(phi_u)
        iv = _cached_inverse(phi_v)
    except ValueError:
        raise ValueError("build_c needs invertible component maps") from None
    return kron(iv, iu).compose(d)


class ConstraintFamily:
    """Named component maps plus derived coherence maps.

    Atomic modules are registered by label with one square component map
    (the Theta of an associator family, the Phi of a braiding family).
    Composite objects are tuples of objects; their components and dims
    come from kron, never from user input. Braiding sources d are stored
    per ordered object pair and validated against the object dims.
    """

    def __init__(self, field):
        self.field = field
        self._components = {}
        self._pair_maps = {}

    def add_module(self, label, component):
        if not isinstance(label, str):
            raise ValueError("atomic module labels must be strings")
        if component.rows != component.cols:
            raise ValueError("component map must be square")
        if component.field != self.field:
            raise ValueError("component field mismatch")
        self._components[label] = component
        return self

    def dim(self, obj):
        return self.component(obj).rows

    def component(self, obj):
        """Component map of a label or of a tuple of objects."""
        if isinstance(obj, tuple):
            parts = [self.component(o) for o in obj]
            acc = parts[0]
            for p in parts[1:]:
                acc = kron(acc, p)
            return acc
        try:
            return self._components[obj]
        except KeyError:
            raise ValueError(f"missing family entry: {obj!r}") from None

    def add_pair_map(self, u, v, d):
        du, dv = self.dim(u), self.dim(v)
        if d.cols != du * dv or d.rows != dv * du:
            raise ValueError("pair map must swap the two object spaces")
        if d.field != self.field:
            raise ValueError("pair map field mismatch")
        self._pair_maps[(u, v)] = d
        return self

    def pair_map(self, u, v):
        try:
            return self._pair_maps[(u, v)]
        except KeyError:
            raise ValueError(f"missing family entry: pair {(u, v)!r}") from None

    def assoc(self, u, v, w):
        return build_b(self.component(u), self.component(w),
                       (self.dim(u), self.dim(v), self.dim(w)))

    def braid(self, u, v):
        return build_c(self.component(u), self.component(v),
                       self.pair_map(u, v))


def check_pentagon(b_family, U, V, W, X, cap=DEFAULT_VIOLATION_CAP):
    """Mac Lane pentagon for the derived associativity constraint."""
    du, dv = b_family.dim(U), b_family.dim(V)
    dw, dx = b_family.dim(W), b_family.dim(X)
    field = b_family.field
    lhs = kron(identity(du, field), b_family.assoc(V, W, X)).compose(
        b_family.assoc(U, (V, W), X)).compose(
        kron(b_family.assoc(U, V, W), identity(dx, field)))
    rhs = b_family.assoc(U, V, (W, X)).compose(b_family.assoc((U, V), W, X))
    ok, vs = compare_maps("pentagon", lhs, rhs,
                          (du, dv, dw, dx), (du, dv, dw, dx), cap)
    return CheckReport({"pentagon": ok}, vs, cap)


def check_hexagons(b_family, c_family, U, V, W, cap=DEFAULT_VIOLATION_CAP):
    """Both classical hexagons for the derived (b, c) pair.

    hex1: b(V,W,U) c(U, V(x)W) b(U,V,W) = (id (x) c(U,W)) b(V,U,W) (c(U,V) (x) id)
    hex2: the mirror with inverse associators:
          b(W,U,V)^-1 c(U(x)V, W) b(U,V,W)^-1
          = (c(U,W) (x) id) b(U,W,V)^-1 (id (x) c(V,W))
    """
    du, dv, dw = b_family.dim(U), b_family.dim(V), b_family.dim(W)
    field = b_family.field
    idu = identity(du, field)
    idv = identity(dv, field)
    idw = identity(dw, field)
    status, violations = {}, []

    lhs1 = b_family.assoc(V, W, U).compose(
        c_family.braid(U, (V, W))).compose(b_family.assoc(U, V, W))
    rhs1 = kron(idv, c_family.braid(U, W)).compose(
        b_family.assoc(V, U, W)).compose(kron(c_family.braid(U, V), idw))
    ok, vs = compare_maps("hex1", lhs1, rhs1,
                          (du, dv, dw), (dv, dw, du), cap)
    status["hex1"] = ok
    violations.extend(vs)

    lhs2 = b_family.assoc(W, U, V).inverse().compose(
        c_family.braid((U, V), W)).compose(b_family.assoc(U, V, W).inverse())
    rhs2 = kron(c_family.braid(U, W), idv).compose(
        b_family.assoc(U, W, V).inverse()).compose(
        kron(idu, c_family.braid(V, W)))
    ok, vs = compare_maps("hex2", lhs2, rhs2,
                          (du, dv, dw), (dw, du, dv), cap)
    status["hex2"] = ok
    violations.extend(vs)
    return CheckReport(status, violations, cap)


def cross_check_yd(H, M, N, P=None, cap=DEFAULT_VIOLATION_CAP):
    """Do the builders reproduce the Yetter-Drinfeld coherence maps.

    eq3333c: build_b on the structure maps equals the rebracketing
    morphism of (M, N, P); P defaults to N. eq9999d: build_c on the
    structure maps over the B-map equals the quasi-braiding of (M, N).
    """
    if P is None:
        P = N
    _require_valid(H, M, "cross_check_yd")
    _require_valid(H, N, "cross_check_yd")
    _require_valid(H, P, "cross_check_yd")
    for lab, mod in (("M", M), ("N", N), ("P", P)):
        if not mod.alpha.is_invertible():
            raise ValueError(f"cross_check_yd needs invertible structure "
                             f"map on {lab}")
    status, violations = {}, []
    lhs = build_b(M.alpha, P.alpha, (M.dim, N.dim, P.dim))
    rhs = yd_associator(M, N, P)
    ok, vs = compare_maps("eq3333c", lhs, rhs,
                          (M.dim, N.dim, P.dim), (M.dim, N.dim, P.dim), cap)
    status["eq3333c"] = ok
    violations.extend(vs)
    lhs = build_c(M.alpha, N.alpha, b_yd(H, M, N))
    rhs = quasi_braiding_yd(H, M, N)
    ok, vs = compare_maps("eq9999d", lhs, rhs,
                          (M.dim, N.dim), (N.dim, M.dim), cap)
    status["eq9999d"] = ok
    violations.extend(vs)
    return CheckReport(status, violations, cap)
