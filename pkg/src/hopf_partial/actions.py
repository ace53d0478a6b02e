"""Partial module algebras, smash products, globalization and Morita data.

A partial module algebra is a unital algebra carrying a symmetric partial
action of the Hopf algebra.  Its globalization is computed concretely as
the standard dilation of the underlying module equipped with the
convolution product; the comparison maps between the partial smash
product and the smash product of the globalization are then plain
matrices whose claimed properties (mutually inverse, multiplicative,
bimodule stability, surjective Morita maps) are all checked exactly.
"""

from dataclasses import dataclass

from .dilation import _factor_through, dilate_morphism, standard_dilation
from .hopf import HopfAlgebraData
from .linalg import (Mat, ShapeError, Subspace, block_diag, column_space,
                     frac, hstack, kron, rank, solve, solve_matrix, unit_vec,
                     vec_add, vec_scale)
from .partial import (ModuleMorphism, PartialModule, check_partial_rep,
                      is_global, regular_module, tensor_with_global)
from .reports import ValidationError, ValidationReport


def _freeze3(data):
    return tuple(tuple(tuple(frac(x) for x in row) for row in plane)
                 for plane in data)


def alg_prod(mult, u, v):
    """Product of coefficient vectors in an algebra given by constants."""
    dim = len(mult)
    out = [frac(0)] * dim
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            c = a * b
            row = mult[i][j]
            for k in range(dim):
                if row[k] != 0:
                    out[k] += c * row[k]
    return tuple(out)


def _associativity_witness(mult):
    dim = len(mult)
    for i in range(dim):
        for j in range(dim):
            ij = mult[i][j]
            for k in range(dim):
                if alg_prod(mult, ij, unit_vec(dim, k)) \
                        != alg_prod(mult, unit_vec(dim, i), mult[j][k]):
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class PartialModuleAlgebra:
    """Unital algebra with structure constants plus a partial Hopf action."""

    hopf: HopfAlgebraData
    dim: int
    alg_mult: tuple
    alg_unit: tuple
    action: tuple

    @staticmethod
    def build(hopf, alg_mult, alg_unit, action):
        alg_mult = _freeze3(alg_mult)
        alg_unit = tuple(frac(x) for x in alg_unit)
        action = tuple(a if isinstance(a, Mat) else Mat(a) for a in action)
        dim = len(alg_unit)
        if len(alg_mult) != dim or len(action) != hopf.dim:
            raise ShapeError("inconsistent algebra data")
        if any(a.rows != dim or a.cols != dim for a in action):
            raise ShapeError("action matrix size mismatch")
        return PartialModuleAlgebra(hopf, dim, alg_mult, alg_unit, action)

    def prod(self, u, v):
        return alg_prod(self.alg_mult, u, v)

    def as_module(self) -> PartialModule:
        return PartialModule(self.hopf, self.dim, self.action)

    def act(self, i, u):
        return self.action[i].apply(u)


@dataclass(frozen=True)
class GlobalModuleAlgebra:
    """A (possibly non-unital) algebra with a global action by algebra maps."""

    hopf: HopfAlgebraData
    dim: int
    alg_mult: tuple
    action: tuple
    unital: bool
    alg_unit: tuple = None

    def prod(self, u, v):
        return alg_prod(self.alg_mult, u, v)

    def as_module(self) -> PartialModule:
        return PartialModule(self.hopf, self.dim, self.action)


@dataclass(frozen=True)
class SmashAlgebra:
    """An algebra living on a subspace of B (x) H, by structure constants.

    ``ambient`` records the defining subspace of the tensor space,
    ``h_embedding`` the images of the elements 1 # e_i, and ``module`` the
    partial module structure (left multiplication by those elements for
    the partial smash, the diagonal action for the global one).
    """

    hopf: HopfAlgebraData
    factor_dim: int
    ambient: Subspace
    dim: int
    mult: tuple
    unit: tuple
    h_embedding: tuple
    module: PartialModule

    def prod(self, u, v):
        return alg_prod(self.mult, u, v)


def check_partial_action(b: PartialModuleAlgebra) -> ValidationReport:
    """All four partial action axioms over basis triples, plus the module law.

    PA1: the unit of H acts as the identity; PA2: multiplicativity through
    the coproduct; PA3 and PA3' are the two symmetric composition rules.
    """
    h = b.hopf
    d = h.dim
    mod = b.as_module()
    report = ValidationReport("partial module algebra")
    report.record("algebra associativity", *_flag(_associativity_witness(b.alg_mult)))
    unit_ok = all(b.prod(b.alg_unit, unit_vec(b.dim, j)) == unit_vec(b.dim, j)
                  and b.prod(unit_vec(b.dim, j), b.alg_unit) == unit_vec(b.dim, j)
                  for j in range(b.dim))
    report.record("algebra unit", unit_ok)
    report.record("PA1", mod.pi_vec(h.unit) == Mat.identity(b.dim))

    witness = next(((i, a, c) for i in range(d)
                    for a in range(b.dim) for c in range(b.dim)
                    if not _pa2_holds(b, i, a, c)), None)
    report.record("PA2", *_flag(witness))

    w3 = next(((i, k, j) for i in range(d) for k in range(d)
               for j in range(b.dim)
               if not _pa3_holds(b, mod, i, k, j, primed=False)), None)
    report.record("PA3", *_flag(w3))
    w3p = next(((i, k, j) for i in range(d) for k in range(d)
                for j in range(b.dim)
                if not _pa3_holds(b, mod, i, k, j, primed=True)), None)
    report.record("PA3'", *_flag(w3p))

    mod_report = check_partial_rep(mod)
    report.record("underlying partial module", mod_report.ok,
                  None if mod_report.ok else [c.name for c in mod_report.failures()])
    return report


def _flag(witness):
    return witness is None, witness


def _pa2_holds(b, i, a, c):
    lhs = b.action[i].apply(b.alg_mult[a][c])
    rhs = (frac(0),) * b.dim
    for p, q, cf in b.hopf.comult_pairs(i):
        term = b.prod(b.action[p].col(a), b.action[q].col(c))
        rhs = vec_add(rhs, vec_scale(term, cf))
    return lhs == rhs


def _pa3_holds(b, mod, i, k, j, primed):
    lhs = b.action[i].apply(b.action[k].col(j))
    rhs = (frac(0),) * b.dim
    for p, q, cf in b.hopf.comult_pairs(i):
        if primed:
            mixed = mod.pi_vec(b.hopf.mult_vec(p, k)).col(j)
            term = b.prod(mixed, b.act(q, b.alg_unit))
        else:
            mixed = mod.pi_vec(b.hopf.mult_vec(q, k)).col(j)
            term = b.prod(b.act(p, b.alg_unit), mixed)
        rhs = vec_add(rhs, vec_scale(term, cf))
    return lhs == rhs


def check_global_action(b: PartialModuleAlgebra) -> ValidationReport:
    """Global module algebra axioms: multiplicative action, PA2, h.1 = eps(h)1."""
    report = ValidationReport("global module algebra")
    mod = b.as_module()
    report.record("action multiplicative",
                  check_partial_rep(mod).ok and is_global(mod))
    witness = next(((i, a, c) for i in range(b.hopf.dim)
                    for a in range(b.dim) for c in range(b.dim)
                    if not _pa2_holds(b, i, a, c)), None)
    report.record("action through the coproduct", *_flag(witness))
    report.record("unit scaled by counit",
                  all(b.act(i, b.alg_unit) == vec_scale(b.alg_unit, b.hopf.counit[i])
                      for i in range(b.hopf.dim)))
    return report


def induced_partial_algebra(b_global: PartialModuleAlgebra, e) -> PartialModuleAlgebra:
    """Cut a global module algebra down to eB along a central idempotent.

    The compression a -> e(h . a) of the global action is the motivating
    example of a symmetric partial action; its axioms are re-checked on
    the produced instance.
    """
    glob = check_global_action(b_global)
    if not glob.ok:
        raise ValidationError(glob)
    e = tuple(frac(x) for x in e)
    if b_global.prod(e, e) != e:
        raise ValidationError("e is not idempotent")
    if any(b_global.prod(e, unit_vec(b_global.dim, j))
           != b_global.prod(unit_vec(b_global.dim, j), e)
           for j in range(b_global.dim)):
        raise ValidationError("e is not central")

    left_e = Mat.from_cols([b_global.prod(e, unit_vec(b_global.dim, j))
                            for j in range(b_global.dim)], b_global.dim)
    space = column_space(left_e)
    incl = space.basis.transpose()
    sub_dim = space.dim
    if sub_dim == 0:
        return PartialModuleAlgebra.build(
            b_global.hopf, [], [], [Mat.zeros(0, 0)] * b_global.hopf.dim)

    def coords(v):
        c = solve(incl, v)
        if c is None:
            raise ValidationError("eB is not closed as expected")
        return c

    mult = [[coords(b_global.prod(incl.col(i), incl.col(j)))
             for j in range(sub_dim)] for i in range(sub_dim)]
    unit = coords(e)
    action = [solve_matrix(incl, left_e * b_global.action[i] * incl)
              for i in range(b_global.hopf.dim)]
    out = PartialModuleAlgebra.build(b_global.hopf, mult, unit, action)
    rep = check_partial_action(out)
    if not rep.ok:
        raise ValidationError(rep)
    return out


def direct_product(algebras) -> PartialModuleAlgebra:
    """Componentwise product of partial module algebras over the same H."""
    algebras = list(algebras)
    h = algebras[0].hopf
    if any(a.hopf != h for a in algebras):
        raise ValueError("different Hopf algebras")
    dim = sum(a.dim for a in algebras)
    mult = [[[frac(0)] * dim for _ in range(dim)] for _ in range(dim)]
    unit = []
    offset = 0
    for a in algebras:
        for i in range(a.dim):
            for j in range(a.dim):
                for k in range(a.dim):
                    mult[offset + i][offset + j][offset + k] = a.alg_mult[i][j][k]
        unit.extend(a.alg_unit)
        offset += a.dim
    action = [block_diag([a.action[i] for a in algebras]) for i in range(h.dim)]
    return PartialModuleAlgebra.build(h, mult, unit, action)


# -- the partial smash product ------------------------------------------------

def _smash_projector(b: PartialModuleAlgebra) -> Mat:
    """The idempotent b (x) h -> b (h_(1) . 1) (x) h_(2) on B (x) H."""
    h = b.hopf
    m, d = b.dim, h.dim
    cols = []
    for bi in range(m):
        for hi in range(d):
            out = [frac(0)] * (m * d)
            for p, q, cf in h.comult_pairs(hi):
                vec_b = b.prod(unit_vec(m, bi), b.act(p, b.alg_unit))
                for r, cb in enumerate(vec_b):
                    if cb != 0:
                        out[r * d + q] += cf * cb
            cols.append(out)
    return Mat.from_cols(cols, m * d)


def _smash_ambient_product(b: PartialModuleAlgebra, u, v):
    """(a (x) h)(c (x) k) = a (h_(1) . c) (x) h_(2) k, extended bilinearly."""
    h = b.hopf
    m, d = b.dim, h.dim
    out = [frac(0)] * (m * d)
    for iu, cu in enumerate(u):
        if cu == 0:
            continue
        bi, hi = divmod(iu, d)
        for iv, cv in enumerate(v):
            if cv == 0:
                continue
            ci, ki = divmod(iv, d)
            for p, q, cf in h.comult_pairs(hi):
                left = b.prod(unit_vec(m, bi), b.act(p, unit_vec(m, ci)))
                tail = h.mult_vec(q, ki)
                w = cu * cv * cf
                for r, cb in enumerate(left):
                    if cb == 0:
                        continue
                    for s, ch in enumerate(tail):
                        if ch != 0:
                            out[r * d + s] += w * cb * ch
    return tuple(out)


def _tensor_vec(u, v):
    """Coordinates of u (x) v, first factor major."""
    out = []
    for a in u:
        for c in v:
            out.append(a * c)
    return tuple(out)


def partial_smash(b: PartialModuleAlgebra) -> SmashAlgebra:
    """The unital algebra on the image of the smash idempotent inside B (x) H.

    Also installs the canonical partial module structure given by left
    multiplication with the elements 1 # e_i and checks it satisfies the
    five partial representation identities.
    """
    h = b.hopf
    m, d = b.dim, h.dim
    pr = _smash_projector(b)
    if pr * pr != pr:
        raise ValidationError("smash projector is not idempotent; "
                              "input is not a valid partial action")
    sub = column_space(pr)
    r = sub.dim
    basis = sub.vectors()

    def coords(v):
        if not sub.contains(v):
            raise ValidationError("smash product left its defining subspace")
        return sub.coords(v)

    mult = [[coords(_smash_ambient_product(b, basis[i], basis[j]))
             for j in range(r)] for i in range(r)]
    unit = coords(pr.apply(_tensor_vec(b.alg_unit, h.unit)))
    for j in range(r):
        if (alg_prod(mult, unit, unit_vec(r, j)) != unit_vec(r, j)
                or alg_prod(mult, unit_vec(r, j), unit) != unit_vec(r, j)):
            raise ValidationError("1 # 1 is not a two-sided unit")
    witness = _associativity_witness(mult)
    if witness is not None:
        raise ValidationError(f"smash product is not associative at {witness}")

    ones = []
    pis = []
    for i in range(d):
        ci = coords(pr.apply(_tensor_vec(b.alg_unit, unit_vec(d, i))))
        ones.append(ci)
        pis.append(Mat.from_cols([alg_prod(mult, ci, unit_vec(r, j))
                                  for j in range(r)], r))
    module = PartialModule(h, r, tuple(pis))
    rep = check_partial_rep(module)
    if not rep.ok:
        raise ValidationError(rep)
    return SmashAlgebra(h, b.dim, sub, r, _freeze3(mult), unit,
                        tuple(ones), module)


# -- globalization ------------------------------------------------------------

def _convolution(b: PartialModuleAlgebra, u, v):
    """(f * g)(e_k) = sum f(e_k(1)) g(e_k(2)) on B^d coordinates."""
    h = b.hopf
    m, d = b.dim, h.dim
    out = [frac(0)] * (d * m)
    for k in range(d):
        acc = (frac(0),) * m
        for p, q, cf in h.comult_pairs(k):
            fp = tuple(u[p * m + t] for t in range(m))
            gq = tuple(v[q * m + t] for t in range(m))
            acc = vec_add(acc, vec_scale(b.prod(fp, gq), cf))
        for t in range(m):
            out[k * m + t] = acc[t]
    return tuple(out)


def _find_unit(mult):
    """Solve for a two-sided unit of an algebra given by constants, if any."""
    dim = len(mult)
    if dim == 0:
        return None
    rows = []
    rhs = []
    for i in range(dim):
        for k in range(dim):
            rows.append([mult[s][i][k] for s in range(dim)])
            rhs.append(1 if k == i else 0)
        for k in range(dim):
            rows.append([mult[i][s][k] for s in range(dim)])
            rhs.append(1 if k == i else 0)
    return solve(Mat(rows), rhs)


def globalize(b: PartialModuleAlgebra):
    """Enveloping action: the standard dilation with the convolution product.

    Returns (Bbar, phi, report) where Bbar is an idempotent, possibly
    non-unital global module algebra on the dilation of the underlying
    module, and phi embeds B multiplicatively as an ideal; the restriction
    of the global action along phi recovers the partial action exactly.
    """
    rep = check_partial_action(b)
    if not rep.ok:
        raise ValidationError(rep)
    h = b.hopf
    m, d = b.dim, h.dim
    std = standard_dilation(b.as_module())
    mod = std.projected.module
    mb = mod.dim
    incl = std.ambient_inclusion

    report = ValidationReport("globalization")

    def coords(v):
        c = solve(incl, v)
        if c is None:
            raise ValidationError("convolution leaves the dilation subspace")
        return c

    basis_ambient = [incl.col(j) for j in range(mb)]
    mult = [[coords(_convolution(b, basis_ambient[i], basis_ambient[j]))
             for j in range(mb)] for i in range(mb)]

    unit_coords = _find_unit(mult)
    gb = GlobalModuleAlgebra(h, mb, _freeze3(mult), mod.pi,
                             unital=unit_coords is not None,
                             alg_unit=unit_coords)

    phi = std.theta
    report.record("phi multiplicative",
                  all(phi.apply(b.alg_mult[i][j])
                      == alg_prod(mult, phi.col(i), phi.col(j))
                      for i in range(m) for j in range(m)))

    phi_image = column_space(phi)
    report.record("phi(B) is a two-sided ideal",
                  all(phi_image.contains(alg_prod(mult, unit_vec(mb, k), phi.col(j)))
                      and phi_image.contains(alg_prod(mult, phi.col(j), unit_vec(mb, k)))
                      for k in range(mb) for j in range(m)))

    products = Subspace.from_vectors(
        mb, [mult[i][j] for i in range(mb) for j in range(mb)])
    report.record("Bbar is idempotent", products.dim == mb)

    action_ok = all(
        mod.pi[i].apply(mult[a][c]) == _coproduct_product(b, mod, mult, i, a, c)
        for i in range(d) for a in range(mb) for c in range(mb))
    report.record("action by algebra maps", action_ok)

    t = std.projected.t
    report.record("restricted action equals the partial action",
                  all(phi * b.action[i] == t * mod.pi[i] * phi for i in range(d)))

    witness_ok = True
    phi_unit = phi.apply(b.alg_unit)
    for i in range(d):
        for j in range(m):
            rhs = mod.pi[i].apply(phi.col(j))
            lhs = (frac(0),) * mb
            for p, q, cf in h.comult_pairs(i):
                lhs = vec_add(lhs, vec_scale(
                    alg_prod(mult, mod.pi[p].apply(phi.col(j)),
                             mod.pi[q].apply(phi_unit)), cf))
            if lhs != rhs:
                witness_ok = False
    report.record("idempotency witness identity", witness_ok)

    if not report.ok:
        raise ValidationError(report)
    return gb, phi, report


def _coproduct_product(b, mod, mult, i, a, c):
    rhs = (frac(0),) * mod.dim
    for p, q, cf in b.hopf.comult_pairs(i):
        rhs = vec_add(rhs, vec_scale(
            alg_prod(mult, mod.pi[p].col(a), mod.pi[q].col(c)), cf))
    return rhs


def global_smash(gb: GlobalModuleAlgebra) -> SmashAlgebra:
    """Smash product Bbar # H on the full tensor space Bbar (x) H.

    The product is (f # h)(g # k) = f * (h_(1) . g) # h_(2) k; the module
    field carries the diagonal H-action under which Bbar # H is just
    Bbar (x) H.
    """
    h = gb.hopf
    mb, d = gb.dim, h.dim
    dim = mb * d

    def prod_basis(iu, iv):
        fi, hi = divmod(iu, d)
        gi, ki = divmod(iv, d)
        out = [frac(0)] * dim
        for p, q, cf in h.comult_pairs(hi):
            left = gb.prod(unit_vec(mb, fi), gb.action[p].col(gi))
            tail = h.mult_vec(q, ki)
            for r, cb in enumerate(left):
                if cb == 0:
                    continue
                for s, ch in enumerate(tail):
                    if ch != 0:
                        out[r * d + s] += cf * cb * ch
        return tuple(out)

    mult = [[prod_basis(i, j) for j in range(dim)] for i in range(dim)]
    witness = _associativity_witness(mult)
    if witness is not None:
        raise ValidationError(f"global smash product not associative at {witness}")

    unit = None
    ones = ()
    if gb.unital:
        ones = tuple(_tensor_vec(gb.alg_unit, unit_vec(d, i)) for i in range(d))
        unit = _tensor_vec(gb.alg_unit, h.unit)
        if any(alg_prod(mult, unit, unit_vec(dim, j)) != unit_vec(dim, j)
               or alg_prod(mult, unit_vec(dim, j), unit) != unit_vec(dim, j)
               for j in range(dim)):
            raise ValidationError("1 # 1 is not a unit although Bbar is unital")

    reg = regular_module(h)
    diag = []
    for i in range(d):
        acc = Mat.zeros(dim, dim)
        for p, q, cf in h.comult_pairs(i):
            acc = acc + kron(gb.action[p], reg.pi[q]).scale(cf)
        diag.append(acc)
    module = PartialModule(h, dim, tuple(diag))
    return SmashAlgebra(h, mb, Subspace.full(dim), dim, _freeze3(mult),
                        unit, ones, module)


# -- the comparison of the two smash products ----------------------------------

def zeta_xi(b: PartialModuleAlgebra):
    """The mutually inverse maps between over(B (x) H) and Bbar (x) H.

    zeta sends a translate of an embedded tensor to the translated
    embedding with the leftover Hopf leg multiplied in; xi inverts it with
    an antipode twist.  Both are built by decomposing along translates and
    verified to be well defined, mutually inverse and H-linear.  The
    dilation of the partial smash product is then split off Bbar # H as a
    direct summand.
    """
    h = b.hopf
    m, d = b.dim, h.dim
    mod_b = b.as_module()
    std_b = standard_dilation(mod_b)
    mbar = std_b.projected.module
    mb = mbar.dim
    reg = regular_module(h)
    bh = tensor_with_global(mod_b, reg)
    std_bh = standard_dilation(bh)
    over = std_bh.projected.module
    dim_bt = mb * d

    report = ValidationReport("smash dilation comparison")

    # columns of the source decompositions, indexed by (i, source basis)
    dec_over = hstack([over.pi[i] * std_bh.theta for i in range(d)])
    phi_b_cols = [std_b.theta.col(v) for v in range(m)]

    zeta_cols = []
    for i in range(d):
        for v in range(m):
            for j in range(d):
                out = [frac(0)] * dim_bt
                for p, q, cf in h.comult_pairs(i):
                    y = mbar.pi[p].apply(phi_b_cols[v])
                    z = h.mult_vec(q, j)
                    for rr, cy in enumerate(y):
                        if cy == 0:
                            continue
                        for s, cz in enumerate(z):
                            if cz != 0:
                                out[rr * d + s] += cf * cy * cz
                zeta_cols.append(tuple(out))
    zeta = _factor_through(dec_over, Mat.from_cols(zeta_cols, dim_bt))

    dec_bt_cols = []
    xi_target_cols = []
    for i in range(d):
        for v in range(m):
            for j in range(d):
                dec_bt_cols.append(_tensor_vec(mbar.pi[i].apply(phi_b_cols[v]),
                                               unit_vec(d, j)))
                acc = (frac(0),) * over.dim
                for p, q, cf in h.comult_pairs(i):
                    tail = h.el_mult(h.antipode.col(q), unit_vec(d, j))
                    src = [frac(0)] * (m * d)
                    for s, ch in enumerate(tail):
                        if ch != 0:
                            src[v * d + s] += ch
                    acc = vec_add(acc, vec_scale(
                        over.pi[p].apply(std_bh.theta.apply(src)), cf))
                xi_target_cols.append(acc)
    xi = _factor_through(Mat.from_cols(dec_bt_cols, dim_bt),
                         Mat.from_cols(xi_target_cols, over.dim))

    inverse_ok = (zeta * xi == Mat.identity(dim_bt)
                  and xi * zeta == Mat.identity(over.dim))
    report.record("zeta and xi are mutually inverse", inverse_ok)
    report.record("dimensions agree", over.dim == dim_bt)

    # Bbar (x) H with the diagonal action; zeta must intertwine
    diag = []
    for i in range(d):
        acc = Mat.zeros(dim_bt, dim_bt)
        for p, q, cf in h.comult_pairs(i):
            acc = acc + kron(mbar.pi[p], reg.pi[q]).scale(cf)
        diag.append(acc)
    report.record("zeta is H-linear",
                  all(zeta * over.pi[i] == diag[i] * zeta for i in range(d)))

    # the partial smash product is a direct summand of B (x) H
    sm = partial_smash(b)
    pr = _smash_projector(b)
    report.record("smash idempotent commutes with the action",
                  all(pr * bh.pi[i] == bh.pi[i] * pr for i in range(d)))

    incl_sm = sm.ambient.basis.transpose()
    iota = ModuleMorphism.build(sm.module, bh, incl_sm)
    rho = ModuleMorphism.build(bh, sm.module, solve_matrix(incl_sm, pr))
    iota_bar = dilate_morphism(iota)
    rho_bar = dilate_morphism(rho)
    split_in = zeta * iota_bar
    split_out = rho_bar * xi
    over_sm_dim = standard_dilation(sm.module).projected.module.dim
    report.record("split injection into Bbar # H",
                  split_out * split_in == Mat.identity(over_sm_dim)
                  and rank(split_in) == over_sm_dim)
    if not report.ok:
        raise ValidationError(report)
    return zeta, xi, report


def morita_context(b: PartialModuleAlgebra):
    """The bimodules P, Q inside Bbar # H and the two Morita multiplications.

    P is the image of B (x) H under phi (x) id, Q the span of the twisted
    translates; stability under the appropriate one-sided multiplications
    and surjectivity of both Morita maps are checked by exact rank
    computations on the shipped instance.
    """
    h = b.hopf
    m, d = b.dim, h.dim
    gb, phi, _ = globalize(b)
    sm = partial_smash(b)
    bs = global_smash(gb)
    mb = gb.dim
    dim_bt = bs.dim

    report = ValidationReport("morita context")

    incl_sm = sm.ambient.basis.transpose()
    phi_amb = kron(phi, Mat.identity(d))
    phi_sm = phi_amb * incl_sm

    report.record(
        "Phi multiplicative",
        all(phi_sm.apply(sm.mult[i][j])
            == bs.prod(phi_sm.col(i), phi_sm.col(j))
            for i in range(sm.dim) for j in range(sm.dim)))

    phi_unit = phi.apply(b.alg_unit)
    three_ok = True
    for a in range(m):
        for hi in range(d):
            e1 = [frac(0)] * dim_bt
            e2 = [frac(0)] * dim_bt
            e3 = [frac(0)] * dim_bt
            for p, q, cf in h.comult_pairs(hi):
                v1 = phi.apply(b.prod(unit_vec(m, a), b.act(p, b.alg_unit)))
                _accum(e1, v1, unit_vec(d, q), cf, d)
                v2 = gb.prod(phi.col(a), gb.action[p].apply(phi_unit))
                _accum(e2, v2, unit_vec(d, q), cf, d)
                for p2, q2, cf2 in h.comult_pairs(q):
                    v3 = gb.prod(phi.apply(b.prod(unit_vec(m, a),
                                                  b.act(p, b.alg_unit))),
                                 gb.action[p2].apply(phi_unit))
                    _accum(e3, v3, unit_vec(d, q2), cf * cf2, d)
            if not (tuple(e1) == tuple(e2) == tuple(e3)):
                three_ok = False
    report.record("three expressions for Phi(b # h) agree", three_ok)

    # the evaluated form of the same identity, block by block in B^d
    incl_bbar = standard_dilation(b.as_module()).ambient_inclusion
    b_module = b.as_module()
    section_ok = True
    for a in range(m):
        for hi in range(d):
            w = (frac(0),) * mb
            for p, q, cf in h.comult_pairs(hi):
                w = vec_add(w, vec_scale(
                    gb.prod(phi.apply(b.prod(unit_vec(m, a), b.act(p, b.alg_unit))),
                            gb.action[q].apply(phi_unit)), cf))
            ambient = incl_bbar.apply(w)
            for k in range(d):
                block = tuple(ambient[k * m: (k + 1) * m])
                rhs = (frac(0),) * m
                for r, s, cf in h.comult_pairs(k):
                    mixed = b_module.pi_vec(h.mult_vec(s, hi))
                    rhs = vec_add(rhs, vec_scale(
                        b.prod(b.action[r].col(a), mixed.apply(b.alg_unit)), cf))
                if block != rhs:
                    section_ok = False
    report.record("evaluated smash identity", section_ok)

    p_space = column_space(phi_amb)
    q_vecs = []
    for i in range(d):
        for v in range(m):
            out = [frac(0)] * dim_bt
            for p, q, cf in h.comult_pairs(i):
                _accum(out, gb.action[p].apply(phi.col(v)), unit_vec(d, q), cf, d)
            q_vecs.append(tuple(out))
    q_space = Subspace.from_vectors(dim_bt, q_vecs)

    phi_sm_image = column_space(phi_sm)
    report.record(
        "P stable under Phi(B#H) on the left and Bbar#H on the right",
        all(p_space.contains(bs.prod(phi_sm.col(u), pv))
            for u in range(sm.dim) for pv in p_space.vectors())
        and all(p_space.contains(bs.prod(pv, unit_vec(dim_bt, s)))
                for pv in p_space.vectors() for s in range(dim_bt)))
    report.record(
        "Q stable under Bbar#H on the left and Phi(B#H) on the right",
        all(q_space.contains(bs.prod(unit_vec(dim_bt, s), qv))
            for qv in q_space.vectors() for s in range(dim_bt))
        and all(q_space.contains(bs.prod(qv, phi_sm.col(u)))
                for qv in q_space.vectors() for u in range(sm.dim)))

    tau_image = Subspace.from_vectors(
        dim_bt, [bs.prod(pv, qv) for pv in p_space.vectors()
                 for qv in q_space.vectors()])
    report.record("tau lands in Phi(B#H)",
                  phi_sm_image.contains_subspace(tau_image))
    report.record("tau surjective onto Phi(B#H)", tau_image == phi_sm_image)

    mu_image = Subspace.from_vectors(
        dim_bt, [bs.prod(qv, pv) for qv in q_space.vectors()
                 for pv in p_space.vectors()])
    report.record("mu surjective onto Bbar#H", mu_image.dim == dim_bt)
    return p_space, q_space, report


def _accum(out, bvec, hvec, cf, d):
    for r, cb in enumerate(bvec):
        if cb == 0:
            continue
        for s, ch in enumerate(hvec):
            if ch != 0:
                out[r * d + s] += cf * cb * ch
