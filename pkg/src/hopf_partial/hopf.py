"""Finite-dimensional Hopf algebras given by structure constants.

A Hopf algebra of dimension d is stored as plain arrays:

* ``mult[i][j][k]``   -- coefficient of e_k in e_i * e_j
* ``unit``            -- coefficient vector of 1
* ``comult[i][j][k]`` -- coefficient of e_j (x) e_k in Delta(e_i);
                         index j is the first tensor leg, k the second
* ``counit``          -- values of the counit on the basis
* ``antipode``        -- matrix of S in the column convention

Every axiom is a finite exact tensor-contraction identity, checked by
``validate_hopf``.  Constructors always validate their output and compute
the inverse antipode; construction fails if S is singular.
"""

from dataclasses import dataclass, field

from .linalg import (Mat, ShapeError, frac, inverse, unit_vec, vec_add,
                     vec_scale)
from .reports import ValidationError, ValidationReport


def _freeze3(data):
    return tuple(tuple(tuple(frac(x) for x in row) for row in plane)
                 for plane in data)


@dataclass(frozen=True)
class HopfAlgebraData:
    dim: int
    mult: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: Mat
    antipode_inv: Mat
    # presentation only: two algebras are the same Hopf data irrespective
    # of how their basis elements are named
    labels: tuple = field(default=None, compare=False)

    @staticmethod
    def build(dim, mult, unit, comult, counit, antipode, antipode_inv=None,
              labels=None, validate=True):
        mult = _freeze3(mult)
        comult = _freeze3(comult)
        unit = tuple(frac(x) for x in unit)
        counit = tuple(frac(x) for x in counit)
        if not isinstance(antipode, Mat):
            antipode = Mat(antipode)
        shapes_ok = (len(mult) == dim and all(len(p) == dim and all(len(r) == dim for r in p) for p in mult)
                     and len(comult) == dim and all(len(p) == dim and all(len(r) == dim for r in p) for p in comult)
                     and len(unit) == dim and len(counit) == dim
                     and antipode.rows == dim and antipode.cols == dim)
        if not shapes_ok:
            raise ShapeError("inconsistent structure constant dimensions")
        if antipode_inv is None:
            try:
                antipode_inv = inverse(antipode)
            except ValueError:
                raise ValidationError("antipode is singular; an invertible "
                                      "antipode is required")
        elif not isinstance(antipode_inv, Mat):
            antipode_inv = Mat(antipode_inv)
        h = HopfAlgebraData(dim, mult, unit, comult, counit, antipode,
                            antipode_inv, tuple(labels) if labels else None)
        if validate:
            report = validate_hopf(h)
            if not report.ok:
                raise ValidationError(report)
        return h

    # -- elementwise algebra/coalgebra helpers ------------------------------

    def mult_vec(self, i, j):
        """Coefficient vector of e_i * e_j."""
        return self.mult[i][j]

    def el_mult(self, u, v):
        """Product of two coefficient vectors."""
        out = [frac(0)] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                c = a * b
                row = self.mult[i][j]
                for k in range(self.dim):
                    if row[k] != 0:
                        out[k] += c * row[k]
        return tuple(out)

    def comult_pairs(self, i):
        """Nonzero Sweedler terms of Delta(e_i) as (first, second, coeff)."""
        return [(j, k, c)
                for j, row in enumerate(self.comult[i])
                for k, c in enumerate(row) if c != 0]

    def counit_el(self, u):
        return sum((a * e for a, e in zip(u, self.counit)), frac(0))

    def antipode_el(self, u):
        return self.antipode.apply(u)

    def is_cocommutative(self):
        return all(self.comult[i][j][k] == self.comult[i][k][j]
                   for i in range(self.dim)
                   for j in range(self.dim)
                   for k in range(self.dim))

    def label(self, i):
        return self.labels[i] if self.labels else f"e{i}"


def validate_hopf(h: HopfAlgebraData) -> ValidationReport:
    """Check every Hopf axiom, reporting a witness index tuple on failure."""
    d = h.dim
    report = ValidationReport("hopf axioms")

    witness = None
    for i in range(d):
        for j in range(d):
            for l in range(d):
                left = h.el_mult(h.mult_vec(i, j), unit_vec(d, l))
                right = h.el_mult(unit_vec(d, i), h.mult_vec(j, l))
                if left != right:
                    witness = (i, j, l)
                    break
            if witness:
                break
        if witness:
            break
    report.record("associativity", witness is None, witness)

    witness = next((j for j in range(d)
                    if h.el_mult(h.unit, unit_vec(d, j)) != unit_vec(d, j)
                    or h.el_mult(unit_vec(d, j), h.unit) != unit_vec(d, j)), None)
    report.record("unit", witness is None, witness)

    witness = None
    for i in range(d):
        left = {}
        for p, c, cpc in h.comult_pairs(i):
            for a, b, cab in h.comult_pairs(p):
                key = (a, b, c)
                left[key] = left.get(key, frac(0)) + cpc * cab
        right = {}
        for a, p, cap in h.comult_pairs(i):
            for b, c, cbc in h.comult_pairs(p):
                key = (a, b, c)
                right[key] = right.get(key, frac(0)) + cap * cbc
        left = {k: v for k, v in left.items() if v != 0}
        right = {k: v for k, v in right.items() if v != 0}
        if left != right:
            witness = (i,)
            break
    report.record("coassociativity", witness is None, witness)

    witness = None
    for i in range(d):
        left_leg = [frac(0)] * d
        right_leg = [frac(0)] * d
        for j, k, c in h.comult_pairs(i):
            left_leg[k] += c * h.counit[j]
            right_leg[j] += c * h.counit[k]
        if tuple(left_leg) != unit_vec(d, i) or tuple(right_leg) != unit_vec(d, i):
            witness = (i,)
            break
    report.record("counit", witness is None, witness)

    witness = None
    if h.counit_el(h.unit) != 1:
        witness = ("counit of unit",)
    delta_unit = {}
    for i, c in enumerate(h.unit):
        if c == 0:
            continue
        for j, k, cc in h.comult_pairs(i):
            delta_unit[(j, k)] = delta_unit.get((j, k), frac(0)) + c * cc
    expected = {(j, k): h.unit[j] * h.unit[k]
                for j in range(d) for k in range(d) if h.unit[j] * h.unit[k] != 0}
    if witness is None and {k: v for k, v in delta_unit.items() if v != 0} != expected:
        witness = ("comult of unit",)
    if witness is None:
        for i in range(d):
            for j in range(d):
                prod = h.mult_vec(i, j)
                if h.counit_el(prod) != h.counit[i] * h.counit[j]:
                    witness = (i, j, "counit multiplicative")
                    break
                left = {}
                for k, c in enumerate(prod):
                    if c == 0:
                        continue
                    for a, b, cc in h.comult_pairs(k):
                        left[(a, b)] = left.get((a, b), frac(0)) + c * cc
                right = {}
                for p, q, cpq in h.comult_pairs(i):
                    for r, s, crs in h.comult_pairs(j):
                        pr = h.mult_vec(p, r)
                        qs = h.mult_vec(q, s)
                        for a in range(d):
                            if pr[a] == 0:
                                continue
                            for b in range(d):
                                if qs[b] == 0:
                                    continue
                                key = (a, b)
                                right[key] = right.get(key, frac(0)) + cpq * crs * pr[a] * qs[b]
                left = {k: v for k, v in left.items() if v != 0}
                right = {k: v for k, v in right.items() if v != 0}
                if left != right:
                    witness = (i, j, "comult multiplicative")
                    break
            if witness:
                break
    report.record("bialgebra", witness is None, witness)

    witness = None
    for i in range(d):
        left = [frac(0)] * d
        right = [frac(0)] * d
        for j, k, c in h.comult_pairs(i):
            s_first = h.antipode.col(j)
            left = vec_add(left, vec_scale(h.el_mult(s_first, unit_vec(d, k)), c))
            s_second = h.antipode.col(k)
            right = vec_add(right, vec_scale(h.el_mult(unit_vec(d, j), s_second), c))
        target = vec_scale(h.unit, h.counit[i])
        if tuple(left) != target or tuple(right) != target:
            witness = (i,)
            break
    report.record("antipode", witness is None, witness)

    ident = Mat.identity(d)
    inv_ok = (h.antipode * h.antipode_inv == ident
              and h.antipode_inv * h.antipode == ident)
    report.record("antipode invertible", inv_ok)
    return report


# -- group machinery ---------------------------------------------------------

def check_group_table(table):
    """Validate a Cayley table: identity at index 0, associative, inverses."""
    d = len(table)
    if any(len(row) != d for row in table):
        raise ShapeError("Cayley table is not square")
    if any(not (0 <= x < d) for row in table for x in row):
        raise ValidationError("Cayley table entries out of range")
    if any(table[0][j] != j for j in range(d)) or any(table[i][0] != i for i in range(d)):
        raise ValidationError("index 0 is not a two-sided identity")
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ValidationError(f"table is not associative at {(i, j, k)}")
    inv = [None] * d
    for i in range(d):
        js = [j for j in range(d) if table[i][j] == 0 and table[j][i] == 0]
        if not js:
            raise ValidationError(f"element {i} has no inverse")
        inv[i] = js[0]
    return inv


def group_algebra(cayley_table, labels=None) -> HopfAlgebraData:
    """Group algebra kG: grouplike basis u_g, S(u_g) = u_{g inverse}."""
    inv = check_group_table(cayley_table)
    d = len(cayley_table)
    mult = [[[1 if cayley_table[i][j] == k else 0 for k in range(d)]
             for j in range(d)] for i in range(d)]
    comult = [[[1 if i == j == k else 0 for k in range(d)]
               for j in range(d)] for i in range(d)]
    unit = unit_vec(d, 0)
    counit = [1] * d
    antipode = Mat([[1 if i == inv[j] else 0 for j in range(d)] for i in range(d)])
    return HopfAlgebraData.build(d, mult, unit, comult, counit, antipode,
                                 labels=labels or [f"u{g}" for g in range(d)])


def dual_group_algebra(cayley_table, labels=None) -> HopfAlgebraData:
    """Dual kG*: orthogonal idempotents p_g, Delta(p_g) = sum p_h (x) p_{h^-1 g}."""
    inv = check_group_table(cayley_table)
    d = len(cayley_table)
    mult = [[[1 if i == j == k else 0 for k in range(d)]
             for j in range(d)] for i in range(d)]
    unit = [1] * d
    comult = [[[1 if cayley_table[j][k] == g else 0 for k in range(d)]
               for j in range(d)] for g in range(d)]
    counit = [1 if g == 0 else 0 for g in range(d)]
    antipode = Mat([[1 if i == inv[j] else 0 for j in range(d)] for i in range(d)])
    return HopfAlgebraData.build(d, mult, unit, comult, counit, antipode,
                                 labels=labels or [f"p{g}" for g in range(d)])


def sweedler_h4() -> HopfAlgebraData:
    """The four-dimensional Sweedler Hopf algebra, basis order (1, g, x, y).

    Relations: g^2 = 1, x^2 = 0, gx = y = -xg; Delta(g) = g(x)g,
    Delta(x) = g(x)x + x(x)1, S(g) = g, S(x) = -y, S(y) = x.
    """
    d = 4
    I, G, X, Y = 0, 1, 2, 3
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]

    def set_prod(a, b, vec):
        for k, c in vec:
            mult[a][b][k] = c

    for a in range(d):
        set_prod(I, a, [(a, 1)])
        if a != I:
            set_prod(a, I, [(a, 1)])
    set_prod(G, G, [(I, 1)])
    set_prod(G, X, [(Y, 1)])
    set_prod(G, Y, [(X, 1)])
    set_prod(X, G, [(Y, -1)])
    set_prod(X, X, [])
    set_prod(X, Y, [])
    set_prod(Y, G, [(X, -1)])
    set_prod(Y, X, [])
    set_prod(Y, Y, [])

    comult = [[[0] * d for _ in range(d)] for _ in range(d)]
    comult[I][I][I] = 1
    comult[G][G][G] = 1
    comult[X][G][X] = 1
    comult[X][X][I] = 1
    comult[Y][I][Y] = 1
    comult[Y][Y][G] = 1

    unit = unit_vec(d, I)
    counit = [1, 1, 0, 0]
    antipode = Mat([[1, 0, 0, 0],
                    [0, 1, 0, 0],
                    [0, 0, 0, 1],
                    [0, 0, -1, 0]])
    return HopfAlgebraData.build(d, mult, unit, comult, counit, antipode,
                                 labels=("1", "g", "x", "y"))


def cop(h: HopfAlgebraData) -> HopfAlgebraData:
    """Same algebra with the opposite comultiplication; S and S^-1 swap."""
    comult = [[[h.comult[i][k][j] for k in range(h.dim)] for j in range(h.dim)]
              for i in range(h.dim)]
    return HopfAlgebraData.build(h.dim, h.mult, h.unit, comult, h.counit,
                                 h.antipode_inv, h.antipode, labels=h.labels)


def hopf_morphism_report(src: HopfAlgebraData, dst: HopfAlgebraData,
                         f: Mat) -> ValidationReport:
    """Check that f intertwines every structure map of src and dst."""
    if f.rows != dst.dim or f.cols != src.dim:
        raise ShapeError("morphism matrix shape mismatch")
    report = ValidationReport("hopf morphism")
    report.record("unit", f.apply(src.unit) == dst.unit)

    witness = next(((i, j) for i in range(src.dim) for j in range(src.dim)
                    if f.apply(src.mult_vec(i, j))
                    != dst.el_mult(f.col(i), f.col(j))), None)
    report.record("multiplicative", witness is None, witness)

    witness = None
    for i in range(src.dim):
        left = {}
        for j, k, c in src.comult_pairs(i):
            fj, fk = f.col(j), f.col(k)
            for a in range(dst.dim):
                if fj[a] == 0:
                    continue
                for b in range(dst.dim):
                    if fk[b] == 0:
                        continue
                    left[(a, b)] = left.get((a, b), frac(0)) + c * fj[a] * fk[b]
        right = {}
        fi = f.col(i)
        for cidx, cc in enumerate(fi):
            if cc == 0:
                continue
            for a, b, cab in dst.comult_pairs(cidx):
                right[(a, b)] = right.get((a, b), frac(0)) + cc * cab
        left = {k: v for k, v in left.items() if v != 0}
        right = {k: v for k, v in right.items() if v != 0}
        if left != right:
            witness = (i,)
            break
    report.record("comultiplicative", witness is None, witness)

    report.record("counit", all(dst.counit_el(f.col(i)) == src.counit[i]
                                for i in range(src.dim)))
    report.record("antipode", f * src.antipode == dst.antipode * f)
    return report


# -- builtin algebras for the CLI and the test suite -------------------------

def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def klein_table():
    return [[i ^ j for j in range(4)] for i in range(4)]


def s3_table():
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[x]] for x in range(3))
    return [[index[compose(p, q)] for q in perms] for p in perms]


BUILTIN_NAMES = ("kC2", "kC2-dual", "kC3", "kS3", "kC2xC2-dual", "sweedler")


def builtin(name: str) -> HopfAlgebraData:
    """Look up one of the named builtin Hopf algebras."""
    if name == "kC2":
        return group_algebra(cyclic_table(2))
    if name == "kC2-dual":
        return dual_group_algebra(cyclic_table(2))
    if name == "kC3":
        return group_algebra(cyclic_table(3))
    if name == "kS3":
        return group_algebra(s3_table())
    if name == "kC2xC2-dual":
        return dual_group_algebra(klein_table())
    if name == "sweedler":
        return sweedler_h4()
    raise KeyError(f"unknown builtin Hopf algebra {name!r}; "
                   f"choose from {', '.join(BUILTIN_NAMES)}")
