"""Projections on global modules and the restriction functor.

A projection T on a global module is compatible with the action when it
commutes with every twisted conjugate T_h = pi(h_(1)) T pi(S(h_(2))).
Pairs (module, T) satisfying this commutation restrict to partial modules
on the image of T; that restriction is the bridge between global and
partial representation theory and is inverted by the dilation machinery.
"""

from dataclasses import dataclass

from .linalg import (Mat, Subspace, column_space, kernel_basis, kron,
                     pivot_columns, quotient_map, quotient_section,
                     restrict_operator, solve_matrix, span_closure,
                     vec_to_mat, vstack)
from .partial import PartialModule, check_partial_rep, is_algebra_map
from .reports import ValidationError, ValidationReport


def _twisted(module: PartialModule, t: Mat, i: int, tilde: bool) -> Mat:
    h = module.hopf
    out = Mat.zeros(module.dim, module.dim)
    for a, b, c in h.comult_pairs(i):
        if tilde:
            term = module.pi_antipode(a) * t * module.pi[b]
        else:
            term = module.pi[a] * t * module.pi_antipode(b)
        out = out + term.scale(c)
    return out


@dataclass(frozen=True)
class ProjectedModule:
    """A global module with an idempotent satisfying the commutation condition.

    Construction validates everything eagerly: invalid pairs cannot exist
    as values, so downstream operations may rely on the invariants.
    """

    module: PartialModule
    t: Mat

    @staticmethod
    def build(module: PartialModule, t: Mat):
        if t.rows != module.dim or t.cols != module.dim:
            raise ValueError("projection size does not match the module")
        if not is_algebra_map(module):
            raise ValidationError("underlying module must be global")
        ok, witness = check_c_condition(module, t)
        if not ok:
            raise ValidationError(f"commutation condition fails at basis index {witness}")
        return ProjectedModule(module, t)


def adjoint_op(p: ProjectedModule, i: int) -> Mat:
    """T_{e_i} = pi(e_i (1)) t pi(S(e_i (2)))."""
    return _twisted(p.module, p.t, i, tilde=False)


def tilde_op(p: ProjectedModule, i: int) -> Mat:
    """The S-twisted twin pi(S(e_i (1))) t pi(e_i (2))."""
    return _twisted(p.module, p.t, i, tilde=True)


def check_c_condition(module: PartialModule, t: Mat):
    """Does the idempotent t commute with all its twisted conjugates?

    Returns (bool, witness basis index).  Raises if t is not idempotent.
    """
    if t * t != t:
        raise ValidationError("candidate projection is not idempotent")
    for i in range(module.hopf.dim):
        ti = _twisted(module, t, i, tilde=False)
        if ti * t != t * ti:
            return False, i
    return True, None


def check_equivalence_lemma(p, t=None) -> ValidationReport:
    """Evaluate the three equivalent commutation conditions independently.

    (i)  T_h T = T T_h for all basis h;
    (ii) T~_h T = T T~_h for all basis h;
    (iii) T_h T~_k = T~_k T_h for all basis pairs.

    Accepts a ProjectedModule or a raw (module, idempotent) pair, so that
    failing candidates can be examined too.
    """
    if isinstance(p, ProjectedModule):
        module, t = p.module, p.t
    else:
        module = p
    if t * t != t:
        raise ValidationError("candidate projection is not idempotent")
    d = module.hopf.dim
    adj = [_twisted(module, t, i, tilde=False) for i in range(d)]
    tld = [_twisted(module, t, i, tilde=True) for i in range(d)]
    report = ValidationReport("equivalence lemma")
    w1 = next((i for i in range(d) if adj[i] * t != t * adj[i]), None)
    report.record("(i) c-condition", w1 is None, w1)
    w2 = next((i for i in range(d) if tld[i] * t != t * tld[i]), None)
    report.record("(ii) twisted c-condition", w2 is None, w2)
    w3 = next(((i, j) for i in range(d) for j in range(d)
               if adj[i] * tld[j] != tld[j] * adj[i]), None)
    report.record("(iii) pairwise commutation", w3 is None, w3)
    agree = (w1 is None) == (w2 is None) == (w3 is None)
    report.record("conditions agree", agree)
    return report


def image_basis(t: Mat) -> Mat:
    """Columns of t at the pivot positions of its column space."""
    return Mat.from_cols([t.col(j) for j in pivot_columns(t)], t.rows)


def restrict(p: ProjectedModule):
    """The partial module on im t with pi(h) = t pi_N(h), plus the inclusion.

    The restricted matrices are written in the pivot-column basis of im t;
    the inclusion matrix records the embedding into the ambient module.
    """
    incl = image_basis(p.t)
    pis = []
    for i in range(p.module.hopf.dim):
        moved = p.t * p.module.pi[i] * incl
        coords = solve_matrix(incl, moved)
        if coords is None:
            raise ValidationError("t pi(h) does not map im t into itself")
        pis.append(coords)
    out = PartialModule(p.module.hopf, incl.cols, tuple(pis))
    rep = check_partial_rep(out)
    if not rep.ok:
        raise ValidationError(rep)
    return out, incl


def _annihilated_submodule(module: PartialModule, t: Mat) -> Subspace:
    """{x : t pi(h) x = 0 for all h}, the largest submodule killed by t."""
    stacked = vstack([t * p for p in module.pi])
    ker = kernel_basis(stacked)
    for p in module.pi:
        for v in ker.vectors():
            if not ker.contains(p.apply(v)):
                raise ValidationError("annihilated space is not action-stable; "
                                      "module is not global")
    return ker


def minimalize(p: ProjectedModule) -> ProjectedModule:
    """Shrink (N, T) to an isomorphic proper and minimal pair.

    First the module is replaced by the action closure of im t, then any
    leftover submodule annihilated by t is quotiented away.  Both steps
    leave the restriction untouched.
    """
    closure = span_closure(column_space(p.t), p.module.pi)
    incl = closure.basis.transpose()
    pis = tuple(restrict_operator(q, incl) for q in p.module.pi)
    t = restrict_operator(p.t, incl)
    module = PartialModule(p.module.hopf, closure.dim, pis)

    killed = _annihilated_submodule(module, t)
    if killed.dim:
        q, qdim = quotient_map(module.dim, killed)
        section = quotient_section(module.dim, killed)
        new_pis = []
        for mat in pis:
            induced = q * mat * section
            if induced * q != q * mat:
                raise ValidationError("quotient action ill-defined")
            new_pis.append(induced)
        t_new = q * t * section
        if t_new * q != q * t:
            raise ValidationError("projection does not descend to the quotient")
        module = PartialModule(p.module.hopf, qdim, tuple(new_pis))
        t = t_new
    out = ProjectedModule.build(module, t)
    if _annihilated_submodule(module, t).dim != 0:
        raise ValidationError("minimalization left a t-killed submodule")
    return out


def is_minimal(p: ProjectedModule) -> bool:
    return _annihilated_submodule(p.module, p.t).dim == 0


def is_proper(p: ProjectedModule) -> bool:
    return span_closure(column_space(p.t), p.module.pi).dim == p.module.dim


def projected_morphism_space(p: ProjectedModule, q: ProjectedModule):
    """Morphisms (M,T) -> (N,S): maps f on the images with f(T(h.m)) = S(h.f(m)).

    Computed straight from the defining equation using the ambient data, so
    it is an independent route to the intertwiner space of the restrictions.
    """
    if p.module.hopf != q.module.hopf:
        raise ValueError("different Hopf algebras")
    incl_p = image_basis(p.t)
    incl_q = image_basis(q.t)
    d = p.module.hopf.dim
    s, t_dim = incl_p.cols, incl_q.cols
    if s == 0 or t_dim == 0:
        return []
    # matrices of m -> T(h.m) on im T and y -> S(h.y) on im S
    a = [solve_matrix(incl_p, p.t * p.module.pi[i] * incl_p) for i in range(d)]
    b = [solve_matrix(incl_q, q.t * q.module.pi[i] * incl_q) for i in range(d)]
    blocks = [kron(Mat.identity(t_dim), a[i].transpose()) - kron(b[i], Mat.identity(s))
              for i in range(d)]
    ker = kernel_basis(vstack(blocks))
    return [vec_to_mat(v, t_dim, s) for v in ker.vectors()]
