"""Isotypic decomposition of the automorphism action on H_1 over Q.

Everything here works with the full list of group-element matrices (not
just generators): Maschke averaging over the group is what certifies
splittings and commutant dimensions exactly, with no numerical linear
algebra anywhere.

The decomposition runs in one of two modes.

* Abelian groups with rational spectra: simultaneous eigenspaces, refined
  one generator at a time.  Each surviving eigentuple labels one isotypic
  component (a character with multiplicity).
* General case: split into irreducibles by (a) spinning seed vectors into
  invariant subspaces, and when spinning certifies nothing, (b) sampling
  the commutant End_G(W) through the averaging projection of matrix units
  and splitting along kernels of irreducible factors of minimal
  polynomials; complements come from an averaged projector (Maschke).
  Irreducibles are then grouped into isotypic classes by exhibiting an
  invertible intertwiner, and each class's division algebra is read off
  the dimension of End_G of one copy (1, 2, 4 -> R, C, H).

A component is *tautological* when it contains a class with nonzero
holonomy (for the surfaces of interest this is the plane spanned by the
horizontal and vertical core-curve sums, where the derivative cocycle
itself lives).  The remaining components bound the hidden part of the
monodromy: a real-type component with multiplicity n contributes at most
sp(n, R), of dimension n(n+1)/2, to the symplectic Zariski closure, hence
``myz_upper_bound`` returns sum n_i (n_i + 1) / 2 over non-tautological
components together with a product name like "Sp(2,R)^3".
"""

import random

from .errors import (DecompositionIncomplete, IrrationalEigenvalue,
                     NonCommutingGenerators, NotIrreducible,
                     UnsupportedAlgebraType)
from .linalg import (F, Span, columns_of, det, eigenspace, express_in,
                     frac_mat, identity, is_scalar, kernel, mat_eq, mat_inv,
                     mat_mul, mat_vec, min_poly, poly_eval_mat,
                     poly_factors_q, rational_eigenvalues, restrict)


class Rep:
    """A finite set of invertible rational matrices acting on Q^dim,
    normally the image of a full finite group."""

    def __init__(self, mats, hol_of=None):
        self.mats = [frac_mat(m) for m in mats]
        self.dim = len(self.mats[0]) if self.mats else 0
        self._hol = hol_of

    def hol_of(self, vec):
        if self._hol is None:
            return None
        return self._hol(vec)


def _mats_of(rep):
    if hasattr(rep, 'mats'):
        return [frac_mat(m) for m in rep.mats], rep.dim
    mats = [frac_mat(m) for m in rep]
    return mats, len(mats[0])


def _hol_of(rep):
    return getattr(rep, 'hol_of', None)


def commute(A, B):
    return mat_eq(mat_mul(frac_mat(A), frac_mat(B)),
                  mat_mul(frac_mat(B), frac_mat(A)))


# -------------------------------------------------------------- primitives

def simultaneous_eigenspaces(rep):
    """Common eigenspace refinement for pairwise-commuting matrices with
    rational spectra.  Returns a list of (eigenvalue tuple, basis).

    Raises NonCommutingGenerators or IrrationalEigenvalue.
    """
    gens, dim = _mats_of(rep)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not commute(gens[i], gens[j]):
                raise NonCommutingGenerators(
                    'simultaneous eigenspaces need commuting matrices')
    spaces = [((), identity(dim))]
    for g in gens:
        nxt = []
        for tup, basis in spaces:
            R = restrict(frac_mat(g), columns_of(basis))
            lams = rational_eigenvalues(R)
            found = 0
            for lam in lams:
                ker = eigenspace(R, lam)
                if not ker:
                    continue
                sub = [[sum(k[i] * basis[i][j] for i in range(len(basis)))
                        for j in range(dim)] for k in ker]
                nxt.append((tup + (lam,), sub))
                found += len(ker)
            if found != len(basis):
                raise IrrationalEigenvalue(
                    'matrix is not diagonalizable over Q on a refined block')
        spaces = nxt
    return [(tup, b) for tup, b in spaces if b]


def spin_invariant_subspace(rep, seed):
    """Smallest invariant subspace containing the seed vector (a basis in
    reduced echelon form)."""
    gens, dim = _mats_of(rep)
    s = Span(dim)
    s.add(seed)
    queue = [list(map(F, seed))]
    while queue:
        v = queue.pop(0)
        for g in gens:
            w = mat_vec(g, v)
            if s.add(w):
                queue.append(w)
    return [row[:] for row in s.rows]


def intertwiner_space(rep_a, rep_b):
    """All X with A_i X = X B_i for the paired matrix lists; a basis of the
    space of (da x db) matrices."""
    mats_a, da = _mats_of(rep_a)
    mats_b, db = _mats_of(rep_b)
    assert len(mats_a) == len(mats_b), 'intertwiner needs paired elements'
    eqs = []
    for A, B in zip(mats_a, mats_b):
        for i in range(da):
            for j in range(db):
                row = [F(0)] * (da * db)
                for k in range(da):
                    row[k * db + j] += A[i][k]
                for k in range(db):
                    row[i * db + k] -= B[k][j]
                eqs.append(row)
    ker = kernel(eqs) if eqs else []
    return [[[v[i * db + j] for j in range(db)] for i in range(da)]
            for v in ker]


def invertible_element(mats):
    """An invertible element of the span of the given square matrices, or
    None; tries the basis first, then small deterministic combinations."""
    if not mats or len(mats[0]) != len(mats[0][0]):
        return None
    for X in mats:
        if det(X) != 0:
            return X
    rng = random.Random(271828)
    for _ in range(64):
        coef = [F(rng.randint(-5, 5)) for _ in mats]
        X = [[sum(c * m[i][j] for c, m in zip(coef, mats))
              for j in range(len(mats[0][0]))] for i in range(len(mats[0]))]
        if det(X) != 0:
            return X
    return None


def pseudo_seeds(dim, count=32, seed=314159):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append([F(rng.randint(-9, 9), rng.randint(1, 4))
                    for _ in range(dim)])
    return out


def averaged_commutant_samples(group_mats):
    """Elements of End_G (same coordinates as the input) via the averaging
    projection applied to the matrix units E_ab; the inputs must be the
    matrices of ALL group elements."""
    k = len(group_mats[0])
    invs = [mat_inv(g) for g in group_mats]
    n_g = len(group_mats)
    for a in range(k):
        for b in range(k):
            acc = [[F(0)] * k for _ in range(k)]
            for g, gi in zip(group_mats, invs):
                for i in range(k):
                    gia = g[i][a]
                    if gia == 0:
                        continue
                    row = acc[i]
                    gib = gi[b]
                    for j in range(k):
                        row[j] += gia * gib[j]
            yield [[x / n_g for x in row] for row in acc]


def _split_from_commutant_element(P, W, dim):
    """A proper invariant subspace of span(W) (ambient coordinates) cut out
    by a non-scalar commutant element P (W-coordinates), or None when P
    generates a field."""
    k = len(P)
    mp = min_poly(P)
    facs = poly_factors_q(mp)
    if len(facs) == 1 and len(mp) == len(facs[0]):
        return None
    q = facs[0]
    K = kernel(poly_eval_mat(q, P))
    if not K or len(K) == k:
        return None
    return [[sum(c[i] * W[i][j] for i in range(k)) for j in range(dim)]
            for c in K]


def try_split(all_mats, basis, dim):
    """A proper invariant subspace of span(basis), or None only when the
    restriction is certified irreducible; all_mats must be the full group
    element list."""
    amb = len(basis)
    if amb == 1:
        return None
    best = None
    seeds = [list(b) for b in basis]
    for coef in pseudo_seeds(amb):
        seeds.append([sum(c * b[j] for c, b in zip(coef, basis))
                      for j in range(dim)])
    for seed in seeds:
        if all(x == 0 for x in seed):
            continue
        V = spin_invariant_subspace(all_mats, seed)
        if len(V) < amb:
            if best is None or len(V) < len(best):
                best = V
            if len(best) == 1:
                return best
    if best is not None:
        return best
    # decisive pass: the averaged commutant either splits the block or
    # certifies that End_G is a division algebra (irreducibility)
    Rg = [restrict(frac_mat(g), columns_of(basis)) for g in all_mats]
    nonscalar = []
    for P in averaged_commutant_samples(Rg):
        if is_scalar(P):
            continue
        V = _split_from_commutant_element(P, basis, dim)
        if V is not None:
            return V
        nonscalar.append(P)
    for i in range(len(nonscalar)):
        for j in range(len(nonscalar)):
            P = mat_mul(nonscalar[i], nonscalar[j])
            if is_scalar(P):
                continue
            V = _split_from_commutant_element(P, basis, dim)
            if V is not None:
                return V
    return None


def maschke_complement(all_mats, W, V, dim):
    """Invariant complement of V inside W (bases in ambient coordinates),
    via the group-averaged projector."""
    k, m = len(W), len(V)
    Wcols = columns_of(W)
    Vin = [express_in(W, v, dim) for v in V]
    Rs = [restrict(frac_mat(g), Wcols) for g in all_mats]
    sp = Span(k)
    order = []
    for v in Vin:
        sp.add(v)
        order.append(list(map(F, v)))
    std = []
    for i in range(k):
        e = [F(1) if j == i else F(0) for j in range(k)]
        if sp.add(e):
            std.append(e)
    B = order + std
    Bm = columns_of(B)
    Bi = mat_inv(Bm)
    P0 = mat_mul(Bm, mat_mul([[F(1) if (i == j and i < m) else F(0)
                               for j in range(k)] for i in range(k)], Bi))
    n_g = len(Rs)
    Pav = [[F(0)] * k for _ in range(k)]
    for R in Rs:
        Tm = mat_mul(R, mat_mul(P0, mat_inv(R)))
        for i in range(k):
            for j in range(k):
                Pav[i][j] += Tm[i][j]
    Pav = [[x / n_g for x in row] for row in Pav]
    compl = kernel(Pav)
    out = [[sum(c[i] * W[i][j] for i in range(k)) for j in range(dim)]
           for c in compl]
    assert len(out) == k - m, 'averaged projector has wrong corank'
    return out


def split_irreducibles(all_mats, dim):
    """Decompose Q^dim into irreducible invariant subspaces (bases in
    ambient coordinates), sorted by dimension then lexicographically."""
    pending = [identity(dim)]
    irr = []
    while pending:
        W = pending.pop(0)
        V = try_split(all_mats, W, dim)
        if V is None:
            irr.append(W)
        else:
            U = maschke_complement(all_mats, W, V, dim)
            pending.append(V)
            pending.append(U)
    irr.sort(key=lambda b: (len(b), [[str(x) for x in r] for r in b]))
    return irr


def restriction(mats, basis):
    cols = columns_of(basis)
    return [restrict(frac_mat(g), cols) for g in mats]


def group_closure(mats, cap=20000):
    """Multiplicative closure of a finite list of invertible matrices.

    The averaging arguments below need every group element, but callers
    often hold only generators; for a finite group the semigroup closure
    under right multiplication is the group itself.  Raises NotIrreducible
    (the caller's contract is a finite group representation) when the
    closure exceeds ``cap`` elements.
    """
    gens = [frac_mat(m) for m in mats]
    key = lambda m: tuple(tuple(row) for row in m)
    seen = {key(m): m for m in gens}
    queue = list(seen.values())
    while queue:
        a = queue.pop()
        for b in gens:
            c = mat_mul(a, b)
            k = key(c)
            if k not in seen:
                if len(seen) >= cap:
                    raise NotIrreducible(
                        'matrix list does not close into a finite group '
                        f'within {cap} elements')
                seen[k] = c
                queue.append(c)
    return list(seen.values())


def division_algebra_type(rep):
    """('R'|'C'|'H', centralizer dimension) of an irreducible; raises
    NotIrreducible when a proper invariant subspace shows up (or End_G has
    a dimension no division algebra over R attains on a Q-irreducible).
    The input may list only generators; the group closure is formed first.
    """
    mats, d = _mats_of(rep)
    mats = group_closure(mats)
    if d > 1:
        found = try_split(mats, identity(d), d)
        if found is not None:
            raise NotIrreducible('a proper invariant subspace exists')
    cd = len(intertwiner_space(mats, mats))
    tags = {1: 'R', 2: 'C', 4: 'H'}
    if cd not in tags:
        raise NotIrreducible(f'centralizer dimension {cd} is not 1, 2, or 4')
    return tags[cd], cd


def commutant_dim_averaged(rep):
    """dim End_G via the averaging projection over all group elements."""
    mats, n = _mats_of(rep)
    sp = Span(n * n)
    for P in averaged_commutant_samples(mats):
        sp.add([P[i][j] for i in range(n) for j in range(n)])
    return sp.rank


# ------------------------------------------------------------- components

class IsotypicComponent:
    """One isotypic block: ``multiplicity`` copies of an ``irr_dim``-
    dimensional irreducible with division algebra ``tag``."""

    __slots__ = ('basis', 'multiplicity', 'irr_dim', 'tag', 'cent_dim',
                 'commutant_dim', 'tautological', 'eigentuple')

    def __init__(self, basis, multiplicity, irr_dim, tag, cent_dim,
                 commutant_dim, tautological=None, eigentuple=None):
        self.basis = basis
        self.multiplicity = multiplicity
        self.irr_dim = irr_dim
        self.tag = tag
        self.cent_dim = cent_dim
        self.commutant_dim = commutant_dim
        self.tautological = tautological
        self.eigentuple = eigentuple

    @property
    def dim(self):
        return self.multiplicity * self.irr_dim

    def __repr__(self):
        taut = ', tautological' if self.tautological else ''
        return (f'IsotypicComponent(dim={self.dim}={self.multiplicity}x'
                f'{self.irr_dim}, tag={self.tag}{taut})')


class IsotypicReport:
    """Full decomposition: components, mode, and cross-orthogonality."""

    def __init__(self, components, dim, abelian_mode, omega_orthogonal=None):
        self.components = components
        self.dim = dim
        self.abelian_mode = abelian_mode
        self.omega_orthogonal = omega_orthogonal

    @property
    def tautological_components(self):
        return [c for c in self.components if c.tautological]

    @property
    def hidden_components(self):
        return [c for c in self.components if not c.tautological]

    def __repr__(self):
        return (f'IsotypicReport(dim={self.dim}, '
                f'components={self.components!r})')


def _pairing(u, Om, v):
    return sum(F(u[i]) * sum(F(Om[i][j]) * F(v[j]) for j in range(len(v)))
               for i in range(len(u)))


def isotypic_decomposition(rep, omega=None):
    """Isotypic decomposition of the full group action.

    ``rep`` must carry the matrices of every group element.  When the
    intersection form ``omega`` (same coordinates) is given, the report
    also records whether distinct components are pairwise orthogonal.

    Raises DecompositionIncomplete (with the partial report attached) if
    the component dimensions fail to add up to the ambient dimension.
    """
    all_mats, dim = _mats_of(rep)
    holfn = _hol_of(rep)
    abelian = all(commute(a, b) for i, a in enumerate(all_mats)
                  for b in all_mats[i + 1:])
    comps = None
    abelian_mode = False
    if abelian:
        try:
            eig = simultaneous_eigenspaces(all_mats)
            comps = [IsotypicComponent(basis, len(basis), 1, 'R', 1,
                                       len(basis) ** 2, eigentuple=tup)
                     for tup, basis in eig]
            abelian_mode = True
        except IrrationalEigenvalue:
            comps = None
    if comps is None:
        irr = split_irreducibles(all_mats, dim)
        reps = [restriction(all_mats, b) for b in irr]
        classes = []
        for i, r in enumerate(reps):
            placed = False
            for cl in classes:
                X = intertwiner_space(reps[cl[0]], r)
                if X and invertible_element(X) is not None:
                    cl.append(i)
                    placed = True
                    break
            if not placed:
                classes.append([i])
        comps = []
        for cl in classes:
            basis = [row for i in cl for row in irr[i]]
            tag, cd = division_algebra_type(reps[cl[0]])
            comps.append(IsotypicComponent(basis, len(cl), len(irr[cl[0]]),
                                           tag, cd, len(cl) ** 2 * cd))
    for c in comps:
        if holfn is not None:
            c.tautological = any(holfn(v) != (0, 0) for v in c.basis)
    omega_orth = None
    if omega is not None:
        omega_orth = all(
            _pairing(u, omega, v) == 0
            for i, a in enumerate(comps) for b in comps[i + 1:]
            for u in a.basis for v in b.basis)
    report = IsotypicReport(comps, dim, abelian_mode,
                            omega_orthogonal=omega_orth)
    total = sum(c.dim for c in comps)
    if total != dim:
        raise DecompositionIncomplete(
            f'components cover dimension {total} of {dim}', partial=report)
    return report


def myz_upper_bound(report):
    """(dimension bound, group name) for the Zariski closure of the
    monodromy on the non-tautological part: each real-type component of
    multiplicity n contributes a factor Sp(n,R) of dimension n(n+1)/2.
    """
    total = 0
    factors = []
    for c in report.components:
        if c.tautological is None:
            raise UnsupportedAlgebraType(
                'components carry no holonomy flags; decompose a rep with '
                'holonomy data')
        if c.tautological:
            continue
        if c.tag != 'R':
            raise UnsupportedAlgebraType(
                f'division algebra {c.tag} has no certified bound here')
        n = c.multiplicity
        assert n % 2 == 0, 'real-type multiplicity must be even'
        total += n * (n + 1) // 2
        factors.append(f'Sp({n},R)')
    if not factors:
        return 0, 'trivial'
    from collections import Counter
    cnt = Counter(factors)
    if len(cnt) == 1:
        nm, k = next(iter(cnt.items()))
        name = nm if k == 1 else f'{nm}^{k}'
    else:
        name = ' x '.join(sorted(factors))
    return total, name
