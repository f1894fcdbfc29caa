"""Left modules and comodules over hom-structures.

A module action is one matrix (columns indexed by the flattened pair
(algebra basis h, module basis m), rows by the module basis), a coaction is
one matrix the other way around. Tensor modules, the two action-twisting
endofunctors and the structure-map-as-morphism checks all reduce to matrix
assembly from these plus the structure-constant cubes.

Identity vocabulary (formulas in docs/formats.md):
  eq8  alphaM(h.m) = alphaH(h).alphaM(m)
  eq9  alphaH(h).(h'.m) = (h h').alphaM(m)
  comodul1  (psiC (x) psiM) coact = coact psiM
  comodul2  (comul (x) psiM) coact = (psiC (x) coact) coact
  module-morphism-twist / module-morphism-action
  comodule-morphism-twist / comodule-morphism-coaction
  phi-natural  f alphaM = alphaN f for a supplied morphism f
  associator-instance  equality of the two bracketing actions on U,V,W
  compmodulealgebra  alphaH(psiH(h)).(a a') = sum (h1.a)(h2.a')
"""

from __future__ import annotations

from .exact_tensor import LinMap, identity, kron, zero_map
from .hom_structures import (
    DEFAULT_VIOLATION_CAP, CheckReport, HomBialgebra, compare_maps,
)


class HModule:
    """dim-dimensional space with action (h (x) m -> h.m) and structure map."""

    __slots__ = ("field", "dim", "hdim", "action", "alpha")

    def __init__(self, field, action, alpha):
        if alpha.field != field or action.field != field:
            raise ValueError("module maps must share the module field")
        if alpha.rows != alpha.cols:
            raise ValueError("alpha must be square")
        dim = alpha.rows
        if action.rows != dim:
            raise ValueError("action rows must equal module dim")
        if dim == 0 or action.cols % dim:
            raise ValueError("action cols must be dimH * dim")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "hdim", action.cols // dim)
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "alpha", alpha)

    def __setattr__(self, name, value):
        raise AttributeError("HModule is immutable")

    def action_columns(self):
        """Sparse action columns: cols[h][m] = [(target index, coeff), ...]."""
        out = []
        for h in range(self.hdim):
            row = []
            for m in range(self.dim):
                col = self.action.column(h * self.dim + m)
                row.append([(k, v) for k, v in enumerate(col) if v])
            out.append(row)
        return out


class HComodule:
    """dim-dimensional space with coaction (m -> sum m_(-1) (x) m_(0))."""

    __slots__ = ("field", "dim", "cdim", "coaction", "psi")

    def __init__(self, field, coaction, psi):
        if psi.field != field or coaction.field != field:
            raise ValueError("comodule maps must share the comodule field")
        if psi.rows != psi.cols:
            raise ValueError("psi must be square")
        dim = psi.rows
        if coaction.cols != dim:
            raise ValueError("coaction cols must equal comodule dim")
        if dim == 0 or coaction.rows % dim:
            raise ValueError("coaction rows must be dimC * dim")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "cdim", coaction.rows // dim)
        object.__setattr__(self, "coaction", coaction)
        object.__setattr__(self, "psi", psi)

    def __setattr__(self, name, value):
        raise AttributeError("HComodule is immutable")


def module_from_cube(field, cube, alpha):
    """Action cube a[h][m][k]: h.e_m = sum_k a[h][m][k] e_k."""
    hdim = len(cube)
    dim = alpha.rows
    flat = [field.zero] * (dim * hdim * dim)
    cols = hdim * dim
    for h in range(hdim):
        if len(cube[h]) != dim:
            raise ValueError("action cube module axis mismatch")
        for m in range(dim):
            if len(cube[h][m]) != dim:
                raise ValueError("action cube target axis mismatch")
            c = h * dim + m
            for k, v in enumerate(cube[h][m]):
                v = field.coerce(v)
                if v:
                    flat[k * cols + c] = v
    return HModule(field, LinMap._wrap(field, dim, cols, tuple(flat)), alpha)


def comodule_from_cube(field, cube, psi):
    """Coaction cube c[m][j][k]: coact(e_m) = sum c[m][j][k] e_j (x) e_k."""
    dim = psi.rows
    if len(cube) != dim:
        raise ValueError("coaction cube module axis mismatch")
    cdim = len(cube[0]) if dim else 0
    flat = [field.zero] * (cdim * dim * dim)
    for m in range(dim):
        if len(cube[m]) != cdim:
            raise ValueError("coaction cube coalgebra axis mismatch")
        for j in range(cdim):
            if len(cube[m][j]) != dim:
                raise ValueError("coaction cube target axis mismatch")
            for k, v in enumerate(cube[m][j]):
                v = field.coerce(v)
                if v:
                    flat[(j * dim + k) * dim + m] = v
    return HComodule(field, LinMap._wrap(field, cdim * dim, dim, tuple(flat)), psi)


def action_cube(M):
    """Inverse of module_from_cube: nested lists a[h][m][k]."""
    return [[[M.action.entry(k, h * M.dim + m) for k in range(M.dim)]
             for m in range(M.dim)] for h in range(M.hdim)]


def coaction_cube(M):
    """Inverse of comodule_from_cube: nested lists c[m][j][k]."""
    return [[[M.coaction.entry(j * M.dim + k, m) for k in range(M.dim)]
             for j in range(M.cdim)] for m in range(M.dim)]


def regular_module(A):
    """A acting on itself by its own multiplication."""
    return HModule(A.field, A.mul_linmap, A.alpha)


def zero_module(field, hdim, alpha):
    """Zero action; any structure map is allowed (both module laws vanish)."""
    dim = alpha.rows
    return HModule(field, zero_map(dim, hdim * dim, field), alpha)


def regular_comodule(C):
    """C coacting on itself by its own comultiplication."""
    return HComodule(C.field, C.comul_linmap, C.psi)


def conjugate_module(M, g):
    """Transport the module structure along an invertible map g.

    The result (g action (id (x) g^-1), g alpha g^-1) satisfies exactly the
    identities M does, which makes it a cheap source of non-monomial valid
    fixtures.
    """
    if g.rows != M.dim or g.cols != M.dim:
        raise ValueError("conjugating map must be square of the module dim")
    gi = g.inverse()
    act = g.compose(M.action).compose(kron(identity(M.hdim, M.field), gi))
    return HModule(M.field, act, g.compose(M.alpha).compose(gi))


def _require_same_field(a, b, what):
    if a.field != b.field:
        raise ValueError(f"field mismatch in {what}")


def check_module(H, M, cap=DEFAULT_VIOLATION_CAP):
    """eq8 on all pairs, eq9 on all triples, for H a hom-(bi)algebra."""
    _require_same_field(H, M, "check_module")
    if M.hdim != H.dim:
        raise ValueError("module action algebra slot does not match H.dim")
    n, dm = H.dim, M.dim
    act = M.action
    checks = [
        ("eq8", M.alpha.compose(act),
         act.compose(kron(H.alpha, M.alpha)), (n, dm), (dm,)),
        ("eq9", act.compose(kron(H.alpha, act)),
         act.compose(kron(H.mul_linmap, M.alpha)), (n, n, dm), (dm,)),
    ]
    status = {}
    violations = []
    for axiom, lhs, rhs, s, d in checks:
        ok, vs = compare_maps(axiom, lhs, rhs, s, d, cap)
        status[axiom] = ok
        violations.extend(vs)
    return CheckReport(status, violations, cap)


def check_comodule(C, M, cap=DEFAULT_VIOLATION_CAP):
    """comodul1 and comodul2 on every basis element of M."""
    _require_same_field(C, M, "check_comodule")
    if M.cdim != C.dim:
        raise ValueError("coaction coalgebra slot does not match C.dim")
    n, dm = C.dim, M.dim
    co = M.coaction
    checks = [
        ("comodul1", kron(C.psi, M.psi).compose(co),
         co.compose(M.psi), (dm,), (n, dm)),
        ("comodul2", kron(C.comul_linmap, M.psi).compose(co),
         kron(C.psi, co).compose(co), (dm,), (n, n, dm)),
    ]
    status = {}
    violations = []
    for axiom, lhs, rhs, s, d in checks:
        ok, vs = compare_maps(axiom, lhs, rhs, s, d, cap)
        status[axiom] = ok
        violations.extend(vs)
    return CheckReport(status, violations, cap)


def tensor_module(H, M, N):
    """Diagonal action through the coproduct: h.(u (x) v) = sum (h1.u) (x) (h2.v)."""
    if not isinstance(H, HomBialgebra):
        raise ValueError("tensor_module needs a hom-bialgebra for its coproduct")
    _require_same_field(H, M, "tensor_module")
    _require_same_field(H, N, "tensor_module")
    if M.hdim != H.dim or N.hdim != H.dim:
        raise ValueError("module algebra slots do not match H.dim")
    field = H.field
    p = field.modulus
    n, dm, dn = H.dim, M.dim, N.dim
    dmn = dm * dn
    cols = n * dmn
    mcols = M.action_columns()
    ncols = N.action_columns()
    flat = [field.zero] * (dmn * cols)
    for h in range(n):
        pairs = [(h1, h2, v)
                 for h1 in range(n) for h2 in range(n)
                 if (v := H.comul[h][h1][h2])]
        if not pairs:
            continue
        for u in range(dm):
            for w in range(dn):
                c = (h * dm + u) * dn + w
                for h1, h2, v in pairs:
                    for a, mv in mcols[h1][u]:
                        coef = v * mv
                        for b, nv in ncols[h2][w]:
                            r = a * dn + b
                            acc = flat[r * cols + c] + coef * nv
                            flat[r * cols + c] = acc % p if p is not None else acc
    action = LinMap._wrap(field, dmn, cols, tuple(flat))
    return HModule(field, action, kron(M.alpha, N.alpha))


def twist_module(H, M, which):
    """Precompose the algebra slot of the action: 'F' uses psi, 'G' uses alpha."""
    _require_same_field(H, M, "twist_module")
    if M.hdim != H.dim:
        raise ValueError("module algebra slot does not match H.dim")
    if which == "F":
        tw = H.psi
    elif which == "G":
        tw = H.alpha
    else:
        raise ValueError(f"which must be 'F' or 'G', got {which!r}")
    act = M.action.compose(kron(tw, identity(M.dim, M.field)))
    return HModule(M.field, act, M.alpha)


def check_module_morphism(f, H, M, N, cap=DEFAULT_VIOLATION_CAP):
    """Is f: M -> N compatible with both structure maps and both actions."""
    if f.cols != M.dim or f.rows != N.dim:
        raise ValueError("morphism shape does not match modules")
    if M.hdim != N.hdim:
        raise ValueError("modules live over algebras of different dims")
    n, dm, dn = M.hdim, M.dim, N.dim
    checks = [
        ("module-morphism-twist", f.compose(M.alpha), N.alpha.compose(f),
         (dm,), (dn,)),
        ("module-morphism-action", f.compose(M.action),
         N.action.compose(kron(identity(n, M.field), f)), (n, dm), (dn,)),
    ]
    status = {}
    violations = []
    for axiom, lhs, rhs, s, d in checks:
        ok, vs = compare_maps(axiom, lhs, rhs, s, d, cap)
        status[axiom] = ok
        violations.extend(vs)
    return CheckReport(status, violations, cap)


def check_comodule_morphism(f, C, M, N, cap=DEFAULT_VIOLATION_CAP):
    """Is f: M -> N compatible with structure maps and both coactions."""
    if f.cols != M.dim or f.rows != N.dim:
        raise ValueError("morphism shape does not match comodules")
    if M.cdim != N.cdim:
        raise ValueError("comodules live over coalgebras of different dims")
    n, dm, dn = M.cdim, M.dim, N.dim
    checks = [
        ("comodule-morphism-twist", f.compose(M.psi), N.psi.compose(f),
         (dm,), (dn,)),
        ("comodule-morphism-coaction",
         kron(identity(n, M.field), f).compose(M.coaction),
         N.coaction.compose(f), (dm,), (n, dn)),
    ]
    status = {}
    violations = []
    for axiom, lhs, rhs, s, d in checks:
        ok, vs = compare_maps(axiom, lhs, rhs, s, d, cap)
        status[axiom] = ok
        violations.extend(vs)
    return CheckReport(status, violations, cap)


def phi_check(H, M, f=None, N=None, cap=DEFAULT_VIOLATION_CAP):
    """The module structure map as a morphism into the alpha-twisted module.

    Checks that alphaM : M -> G(M) is a module morphism (its action half is
    eq8 restated). If a morphism f: M -> N is supplied, also checks the
    naturality square f alphaM = alphaN f under id phi-natural.
    """
    rep = check_module_morphism(M.alpha, H, M, twist_module(H, M, "G"), cap)
    if f is None:
        return rep
    if N is None:
        N = M
    ok, vs = compare_maps("phi-natural", f.compose(M.alpha),
                          N.alpha.compose(f), (M.dim,), (N.dim,), cap)
    extra = CheckReport({"phi-natural": ok}, vs, cap)
    return CheckReport.merge(rep, extra, cap=cap)


def check_associator_instance(H, U, V, W, cap=DEFAULT_VIOLATION_CAP):
    """Equality of the two bracketed tensor actions on U, V, W.

    With left-to-right flattening the rebracketing map is the identity, so
    the morphism condition collapses to equality between the action of
    (U (x) V) (x) F(W) and the action of F(U) (x) (V (x) W). This is the
    module-level face of the twisted coassociativity law eq5.
    """
    left = tensor_module(H, tensor_module(H, U, V), twist_module(H, W, "F"))
    right = tensor_module(H, twist_module(H, U, "F"), tensor_module(H, V, W))
    n = H.dim
    dims = (U.dim, V.dim, W.dim)
    ok, vs = compare_maps("associator-instance", left.action, right.action,
                          (n,) + dims, dims, cap)
    return CheckReport({"associator-instance": ok}, vs, cap)


def check_module_hom_algebra(H, A, act_module, cap=DEFAULT_VIOLATION_CAP):
    """Action compatibility with a product on the module.

    Requires the module structure map to literally equal A.alpha, then
    checks alphaH(psiH(h)).(a a') = sum (h1.a)(h2.a') on all triples
    (id compmodulealgebra).
    """
    _require_same_field(H, A, "check_module_hom_algebra")
    if act_module.dim != A.dim:
        raise ValueError("module carrier must be the algebra itself")
    if act_module.alpha != A.alpha:
        raise ValueError("module structure map must equal the algebra twist map")
    n, da = H.dim, A.dim
    lhs = act_module.action.compose(
        kron(H.alpha.compose(H.psi), A.mul_linmap))
    tens = tensor_module(H, act_module, act_module)
    rhs = A.mul_linmap.compose(tens.action)
    ok, vs = compare_maps("compmodulealgebra", lhs, rhs, (n, da, da), (da,), cap)
    return CheckReport({"compmodulealgebra": ok}, vs, cap)
