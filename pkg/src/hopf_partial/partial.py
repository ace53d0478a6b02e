"""Partial modules over a Hopf algebra, as families of matrices.

A partial module is a space M together with one matrix per Hopf basis
element; the matrix family must satisfy the five partial-representation
identities, which weaken "pi is an algebra map" (the global case).  All
Sweedler indices are expanded through the comultiplication structure
constants, so every axiom is a finite exact matrix identity over basis
pairs.

Alongside the axiom checker this module computes the lattice of global
behaviour inside a partial module: the global core (largest global
submodule), the global shadow (largest global quotient), purity, morphism
spaces, image algebras, tensor constructions and the two worked
classifications (dual C2 and the four-dimensional Sweedler algebra).
"""

from dataclasses import dataclass

from .hopf import HopfAlgebraData, dual_group_algebra, sweedler_h4
from .linalg import (Mat, ShapeError, Subspace, block_diag, column_space,
                     frac, inverse, kernel_basis, kron, left_mult_operator,
                     mat_to_vec, quotient_map, quotient_section,
                     restrict_operator, right_mult_operator, span_closure,
                     unit_vec, vec_to_mat, vstack)
from .reports import ValidationError, ValidationReport


@dataclass(frozen=True)
class PartialModule:
    """A space with one matrix per Hopf basis element (pi[i] = pi(e_i))."""

    hopf: HopfAlgebraData
    dim: int
    pi: tuple

    def __post_init__(self):
        if len(self.pi) != self.hopf.dim:
            raise ShapeError("need one matrix per Hopf basis element")
        for p in self.pi:
            if p.rows != self.dim or p.cols != self.dim:
                raise ShapeError("action matrix size does not match module dim")

    @staticmethod
    def build(hopf, mats):
        return PartialModule(hopf, mats[0].rows if mats else 0,
                             tuple(m if isinstance(m, Mat) else Mat(m) for m in mats))

    def pi_vec(self, coeffs):
        """pi of a general Hopf element given by its coefficient vector."""
        out = Mat.zeros(self.dim, self.dim)
        for i, c in enumerate(coeffs):
            if c != 0:
                out = out + self.pi[i].scale(c)
        return out

    def pi_antipode(self, i):
        """pi(S(e_i))."""
        return self.pi_vec(self.hopf.antipode.col(i))

    def pi_product(self, i, j):
        """pi(e_i e_j)."""
        return self.pi_vec(self.hopf.mult_vec(i, j))


def epsilon_op(m: PartialModule, i) -> Mat:
    """The operator of eps_{e_i} = pi(e_i (1)) pi(S(e_i (2)))."""
    out = Mat.zeros(m.dim, m.dim)
    for a, b, c in m.hopf.comult_pairs(i):
        out = out + (m.pi[a] * m.pi_antipode(b)).scale(c)
    return out


def epsilon_tilde_op(m: PartialModule, i) -> Mat:
    """The twin operator pi(S(e_i (1))) pi(e_i (2))."""
    out = Mat.zeros(m.dim, m.dim)
    for a, b, c in m.hopf.comult_pairs(i):
        out = out + (m.pi_antipode(a) * m.pi[b]).scale(c)
    return out


def check_partial_rep(m: PartialModule) -> ValidationReport:
    """Evaluate PR1-PR5 for every basis pair, with a witness pair on failure."""
    h = m.hopf
    d = h.dim
    n = m.dim
    report = ValidationReport("partial representation")
    piS = [m.pi_antipode(b) for b in range(d)]
    report.record("PR1 unit", m.pi_vec(h.unit) == Mat.identity(n))

    def first_failure(deviation):
        for i in range(d):
            for j in range(d):
                if not deviation(i, j).is_zero():
                    return (i, j)
        return None

    def pr2(i, j):
        acc = Mat.zeros(n, n)
        for a, b, c in h.comult_pairs(j):
            acc = acc + ((m.pi[i] * m.pi[a] - m.pi_product(i, a)) * piS[b]).scale(c)
        return acc

    def pr3(i, j):
        acc = Mat.zeros(n, n)
        for a, b, c in h.comult_pairs(i):
            tail = m.pi_vec(h.el_mult(h.antipode.col(b), unit_vec(d, j)))
            acc = acc + (m.pi[a] * (piS[b] * m.pi[j] - tail)).scale(c)
        return acc

    def pr4(i, j):
        acc = Mat.zeros(n, n)
        for a, b, c in h.comult_pairs(j):
            head = m.pi_vec(h.el_mult(unit_vec(d, i), h.antipode.col(a)))
            acc = acc + ((m.pi[i] * piS[a] - head) * m.pi[b]).scale(c)
        return acc

    def pr5(i, j):
        acc = Mat.zeros(n, n)
        for a, b, c in h.comult_pairs(i):
            acc = acc + (piS[a] * (m.pi[b] * m.pi[j] - m.pi_product(b, j))).scale(c)
        return acc

    for name, fn in (("PR2", pr2), ("PR3", pr3), ("PR4", pr4), ("PR5", pr5)):
        w = first_failure(fn)
        report.record(name, w is None, w)
    return report


def _require(cond, msg):
    if not cond:
        raise ValidationError(msg)


def is_algebra_map(m: PartialModule) -> bool:
    """Direct globality test: pi respects unit and products of basis elements."""
    if m.pi_vec(m.hopf.unit) != Mat.identity(m.dim):
        return False
    d = m.hopf.dim
    return all(m.pi[i] * m.pi[j] == m.pi_product(i, j)
               for i in range(d) for j in range(d))


def is_global(m: PartialModule) -> bool:
    """True when pi(h_(1)) pi(S(h_(2))) = eps(h) id for every basis element.

    When that holds, pi is an algebra map; this consequence is re-checked
    rather than trusted.
    """
    n = m.dim
    ident = Mat.identity(n)
    for i in range(m.hopf.dim):
        if epsilon_op(m, i) != ident.scale(m.hopf.counit[i]):
            return False
    for i in range(m.hopf.dim):
        for j in range(m.hopf.dim):
            _require(m.pi[i] * m.pi[j] == m.pi_product(i, j),
                     "epsilon condition holds but pi is not multiplicative; "
                     "input is not a valid partial module")
    return True


def _deviation_mats(m: PartialModule):
    """The operators pi(e_i) pi(e_j) - pi(e_i e_j) for all basis pairs."""
    d = m.hopf.dim
    return [m.pi[i] * m.pi[j] - m.pi_product(i, j)
            for i in range(d) for j in range(d)]


def global_core(m: PartialModule) -> Subspace:
    """Largest global submodule: {v : pi(e_i) pi(e_j) v = pi(e_i e_j) v}."""
    devs = [mat for mat in _deviation_mats(m) if not mat.is_zero()]
    if not devs:
        return Subspace.full(m.dim)
    core = kernel_basis(vstack(devs))
    sub, _ = restrict_to_invariant(m, core)
    _require(is_global(sub), "core restriction is not global; invalid input")
    return core


def global_shadow(m: PartialModule):
    """Largest global quotient with the induced action and its projection."""
    n = m.dim
    rel = Subspace.zero(n)
    for mat in _deviation_mats(m):
        rel = rel.add(column_space(mat))
    rel = span_closure(rel, m.pi)
    q, qdim = quotient_map(n, rel)
    section = quotient_section(n, rel)
    pis = []
    for p in m.pi:
        induced = q * p * section
        _require(induced * q == q * p, "relation span is not action-stable")
        pis.append(induced)
    shadow = PartialModule(m.hopf, qdim, tuple(pis))
    _require(check_partial_rep(shadow).ok, "shadow fails the partial axioms")
    _require(is_global(shadow), "shadow action is not global")
    return shadow, q


def is_pure(m: PartialModule) -> bool:
    """No nonzero global submodule."""
    return global_core(m).dim == 0


def restrict_to_invariant(m: PartialModule, sub: Subspace):
    """Module induced on an action-invariant subspace, plus the inclusion."""
    incl = sub.basis.transpose()
    pis = tuple(restrict_operator(p, incl) for p in m.pi)
    return PartialModule(m.hopf, sub.dim, pis), incl


def hom_space(m: PartialModule, n: PartialModule):
    """Basis of the intertwiner space {f : f pi_m(e_i) = pi_n(e_i) f}."""
    if m.hopf != n.hopf:
        raise ValueError("modules live over different Hopf algebras")
    s, t = m.dim, n.dim
    if s == 0 or t == 0:
        return []
    blocks = [kron(Mat.identity(t), m.pi[i].transpose()) - kron(n.pi[i], Mat.identity(s))
              for i in range(m.hopf.dim)]
    ker = kernel_basis(vstack(blocks))
    return [vec_to_mat(v, t, s) for v in ker.vectors()]


@dataclass(frozen=True)
class ModuleMorphism:
    source: PartialModule
    target: PartialModule
    mat: Mat

    @staticmethod
    def build(source, target, mat):
        if source.hopf != target.hopf:
            raise ValueError("modules live over different Hopf algebras")
        if mat.rows != target.dim or mat.cols != source.dim:
            raise ShapeError("morphism matrix shape mismatch")
        for i in range(source.hopf.dim):
            _require(mat * source.pi[i] == target.pi[i] * mat,
                     f"matrix does not intertwine the actions at index {i}")
        return ModuleMorphism(source, target, mat)


def is_module_iso(f: Mat, m: PartialModule, n: PartialModule) -> bool:
    if f.rows != n.dim or f.cols != m.dim or m.dim != n.dim:
        return False
    if any(f * m.pi[i] != n.pi[i] * f for i in range(m.hopf.dim)):
        return False
    try:
        inverse(f)
    except ValueError:
        return False
    return True


def direct_sum(ms, hopf=None) -> PartialModule:
    ms = list(ms)
    if not ms:
        if hopf is None:
            raise ValueError("empty sum needs an explicit Hopf algebra")
        return PartialModule(hopf, 0, tuple(Mat.zeros(0, 0) for _ in range(hopf.dim)))
    h = ms[0].hopf
    if any(m.hopf != h for m in ms):
        raise ValueError("summands live over different Hopf algebras")
    pis = tuple(block_diag([m.pi[i] for m in ms]) for i in range(h.dim))
    return PartialModule(h, sum(m.dim for m in ms), pis)


def image_algebra(m: PartialModule) -> Subspace:
    """Span of all words in {pi(e_i)}, as a subspace of the matrix space.

    This is the image of the universal algebra of partial representations
    inside End(M), computed by saturating under left multiplication.
    """
    n = m.dim
    seed = Subspace.from_vectors(n * n, [mat_to_vec(Mat.identity(n))]
                                 + [mat_to_vec(p) for p in m.pi])
    ops = [left_mult_operator(p) for p in m.pi]
    return span_closure(seed, ops)


def base_subalgebra(m: PartialModule) -> Subspace:
    """Multiplicative span of the epsilon operators together with the identity."""
    n = m.dim
    eps = [epsilon_op(m, i) for i in range(m.hopf.dim)]
    seed = Subspace.from_vectors(n * n, [mat_to_vec(Mat.identity(n))]
                                 + [mat_to_vec(e) for e in eps])
    ops = [left_mult_operator(e) for e in eps]
    return span_closure(seed, ops)


def base_subalgebra_commutes(m: PartialModule) -> bool:
    eps = [epsilon_op(m, i) for i in range(m.hopf.dim)]
    return all(a * b == b * a for a in eps for b in eps)


def tensor_with_global(m: PartialModule, n: PartialModule) -> PartialModule:
    """Diagonal action on M (x) N for a global N; stays partial."""
    _require(is_global(n), "second tensor factor must be global")
    h = m.hopf
    if n.hopf != h:
        raise ValueError("modules live over different Hopf algebras")
    pis = []
    for i in range(h.dim):
        acc = Mat.zeros(m.dim * n.dim, m.dim * n.dim)
        for a, b, c in h.comult_pairs(i):
            acc = acc + kron(m.pi[a], n.pi[b]).scale(c)
        pis.append(acc)
    out = PartialModule(h, m.dim * n.dim, tuple(pis))
    _require(check_partial_rep(out).ok, "tensor with a global module fails PR")
    return out


def _balanced_word_pairs(m: PartialModule, n: PartialModule):
    """Span of (right word action on M, left word action on N) pairs.

    Words run over the generators of the base subalgebra; the right action
    on the first factor uses the twin epsilon operators, so appending a
    generator composes on the left there and on the right on N.
    """
    dm, dn = m.dim, n.dim
    amb = dm * dm + dn * dn
    tm = [epsilon_tilde_op(m, i) for i in range(m.hopf.dim)]
    en = [epsilon_op(n, i) for i in range(n.hopf.dim)]
    seed_vecs = [mat_to_vec(Mat.identity(dm)) + mat_to_vec(Mat.identity(dn))]
    for a, b in zip(tm, en):
        seed_vecs.append(mat_to_vec(a) + mat_to_vec(b))
    ops = [block_diag([left_mult_operator(a), right_mult_operator(b)])
           for a, b in zip(tm, en)]
    closed = span_closure(Subspace.from_vectors(amb, seed_vecs), ops)
    pairs = []
    for v in closed.vectors():
        pairs.append((vec_to_mat(v[: dm * dm], dm, dm),
                      vec_to_mat(v[dm * dm:], dn, dn)))
    return pairs


def tensor_over_base(m: PartialModule, n: PartialModule) -> PartialModule:
    """Tensor product over the base subalgebra, with the diagonal action.

    The relation span {a.v (x) w - v (x) a.w} is closed under the whole
    generated base algebra, then checked to be stable under the diagonal
    action; failure signals inconsistent input.
    """
    h = m.hopf
    if n.hopf != h:
        raise ValueError("modules live over different Hopf algebras")
    _require(check_partial_rep(m).ok and check_partial_rep(n).ok,
             "tensor factors must be valid partial modules")
    nm = m.dim * n.dim
    rel = Subspace.zero(nm)
    for p, q in _balanced_word_pairs(m, n):
        r = kron(p, Mat.identity(n.dim)) - kron(Mat.identity(m.dim), q)
        rel = rel.add(column_space(r))
    diag = []
    for i in range(h.dim):
        acc = Mat.zeros(nm, nm)
        for a, b, c in h.comult_pairs(i):
            acc = acc + kron(m.pi[a], n.pi[b]).scale(c)
        diag.append(acc)
    for i, op in enumerate(diag):
        _require(all(rel.contains(op.apply(v)) for v in rel.vectors()),
                 f"relation span is not stable under the diagonal action "
                 f"(basis index {i})")
    q_map, qdim = quotient_map(nm, rel)
    section = quotient_section(nm, rel)
    pis = []
    for op in diag:
        induced = q_map * op * section
        _require(induced * q_map == q_map * op, "induced action ill-defined")
        pis.append(induced)
    out = PartialModule(h, qdim, tuple(pis))
    _require(check_partial_rep(out).ok, "balanced tensor fails the partial axioms")
    return out


# -- the two worked classifications ------------------------------------------

def _eigenbasis_columns(op: Mat, eigenvalue):
    space = kernel_basis(op - Mat.identity(op.rows).scale(eigenvalue))
    return space, space.vectors()


def classify_dual_c2(m: PartialModule):
    """Eigenspace decomposition of a partial module over the dual of C2.

    Returns ((n0, n1, n_half), change_of_basis) where the basis puts
    pi(p_0) into the diagonal block form diag(1, .., 0, .., 1/2, ..).
    """
    if m.hopf != dual_group_algebra([[0, 1], [1, 0]]):
        raise ValueError("module is not over the dual C2 Hopf algebra")
    t = m.pi[0]
    ident = Mat.identity(m.dim)
    _require((t * (t - ident) * (t.scale(2) - ident)).is_zero(),
             "pi(p0) does not satisfy t(t-1)(2t-1) = 0")
    _, v0 = _eigenbasis_columns(t, 1)
    _, v1 = _eigenbasis_columns(t, 0)
    _, vh = _eigenbasis_columns(t, frac("1/2"))
    dims = (len(v0), len(v1), len(vh))
    _require(sum(dims) == m.dim, "eigenspaces do not fill the module")
    cb = Mat.from_cols(v0 + v1 + vh, m.dim)
    diag = block_diag([Mat.identity(dims[0]),
                       Mat.zeros(dims[1], dims[1]),
                       Mat.identity(dims[2]).scale(frac("1/2"))])
    _require(inverse(cb) * t * cb == diag, "change of basis failed to diagonalize")
    return dims, cb


def classify_sweedler(m: PartialModule):
    """Split a partial Sweedler module into its global and pure parts.

    Returns (global_part, pure_part, c, d): the subspaces U = ker([g]^2 - 1)
    and W = ker[g], plus the matrices of [x] and [y] on W.  The block
    relations of the classification are asserted along the way.
    """
    if m.hopf != sweedler_h4():
        raise ValueError("module is not over the Sweedler Hopf algebra")
    g, x, y = m.pi[1], m.pi[2], m.pi[3]
    _require(g * g * g == g, "[g]^3 = [g] fails; not a valid partial module")
    u_space = kernel_basis(g * g - Mat.identity(m.dim))
    w_space = kernel_basis(g)
    _require(u_space.dim + w_space.dim == m.dim, "0/±1 eigenspaces do not split")

    w_incl = w_space.basis.transpose()
    try:
        c = restrict_operator(x, w_incl)
        d = restrict_operator(y, w_incl)
        g_on_w = restrict_operator(g, w_incl)
    except ValueError:
        raise ValidationError("ker[g] is not stable under [x], [y]")
    _require(g_on_w.is_zero(), "[g] does not vanish on its kernel block")
    _require(c * d == d * c, "cd = dc fails on the pure part")
    _require(c * c == d * d, "c^2 = d^2 fails on the pure part")

    if u_space.dim:
        u_incl = u_space.basis.transpose()
        try:
            g_u = restrict_operator(g, u_incl)
            x_u = restrict_operator(x, u_incl)
            y_u = restrict_operator(y, u_incl)
        except ValueError:
            raise ValidationError("global part is not action-stable")
        _require((x_u * x_u).is_zero(), "ab = ba = 0 fails on the global part")
        _require(y_u == g_u * x_u, "[y] != [g][x] on the global part")
        u_module = PartialModule(m.hopf, u_space.dim,
                                 (Mat.identity(u_space.dim), g_u, x_u, y_u))
        _require(check_partial_rep(u_module).ok and is_global(u_module),
                 "restriction to the ±1 eigenspaces is not global")
    return u_space, w_space, c, d


def w_n_module(n: int, hopf=None) -> PartialModule:
    """The pure tower module: [g] = 0 and [x] = [y] = the lower shift."""
    if n < 1:
        raise ValueError("n must be at least 1")
    h = hopf if hopf is not None else sweedler_h4()
    if h != sweedler_h4():
        raise ValueError("W_n lives over the Sweedler Hopf algebra")
    shift = Mat([[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)])
    mod = PartialModule(h, n, (Mat.identity(n), Mat.zeros(n, n), shift, shift))
    _require(check_partial_rep(mod).ok, "W_n construction failed the axioms")
    return mod


def regular_module(h: HopfAlgebraData) -> PartialModule:
    """H acting on itself by left multiplication (a global module)."""
    pis = tuple(Mat.from_cols([h.mult_vec(i, j) for j in range(h.dim)], h.dim)
                for i in range(h.dim))
    return PartialModule(h, h.dim, pis)


def trivial_module(h: HopfAlgebraData) -> PartialModule:
    """The one-dimensional module where h acts by its counit."""
    return PartialModule(h, 1, tuple(Mat([[c]]) for c in h.counit))


def submodule_closure(m: PartialModule, vector) -> Subspace:
    """Smallest action-invariant subspace containing the given vector."""
    return span_closure(Subspace.from_vectors(m.dim, [vector]), m.pi)


def submodule_scan(m: PartialModule, vectors):
    """Distinct submodules generated by the sample vectors, closed as a lattice.

    Sums and intersections of invariant subspaces are invariant, so the
    returned family is closed under both; it always contains 0 and the
    closure of every sample.
    """
    found = {Subspace.zero(m.dim)}
    for v in vectors:
        found.add(submodule_closure(m, v))
    while True:
        fresh = set()
        pool = list(found)
        for i, a in enumerate(pool):
            for b in pool[i + 1:]:
                s = a.add(b)
                if s not in found:
                    fresh.add(s)
                t = a.intersect(b)
                if t not in found:
                    fresh.add(t)
        if not fresh:
            return sorted(found, key=lambda s: (s.dim, s.basis.entries))
        found |= fresh
