"""Certified bounds for the Zariski closure of the hidden monodromy.

The derivative cocycle splits H_1 into the tautological plane and its
symplectic complement (the zero-holonomy subspace).  On the complement the
affine group acts through a subgroup of the symplectic group of the
restricted intersection form, and the isotypic decomposition of the
automorphism action caps its Zariski closure: each non-tautological
real-type component of multiplicity n contributes at most Sp(n,R), of
dimension n(n+1)/2 (the ``myz_upper_bound`` of the rep-decomposition
module).

The matching lower bound is a Lie-algebra rank certificate:

* hunt for unipotent elements among short words in the monodromy
  generators (Schreier generators of the Veech group acting on the
  zero-holonomy frame, together with the automorphism action) --
  ``find_unipotents``;
* take logarithms (exact nilpotent series) as Lie-algebra seeds;
* close the seeds under conjugation by monodromy words of bounded length
  and under Lie brackets -- ``conjugation_span`` -- and measure the linear
  rank of the span.

Since every conjugate and bracket of monodromy logarithms lies in the Lie
algebra of the closure, span rank == upper bound certifies the closure
exactly; the verdict records both bounds and the witnesses.  All steps are
exact rational arithmetic, so a certificate is a proof, not an estimate.
"""

from fractions import Fraction

from .errors import NotCertified, NotUnipotent
from .homology import surface_basis
from .isotypic import isotypic_decomposition, myz_upper_bound
from .linalg import (F, Span, frac_mat, identity, mat_eq, mat_inv, mat_mul,
                     transpose)

__all__ = ['is_unipotent', 'unipotent_log', 'unipotent_exp',
           'find_unipotents', 'LieSpan', 'conjugation_span',
           'Verdict', 'zariski_verdict']


def is_unipotent(M):
    """Exact unipotence test: trace pre-filter, then nilpotency of M - I."""
    d = len(M)
    if sum(M[i][i] for i in range(d)) != d:
        return False
    N = [[F(M[i][j]) - (1 if i == j else 0) for j in range(d)]
         for i in range(d)]
    P = N
    for _ in range(d):
        if all(x == 0 for row in P for x in row):
            return True
        P = mat_mul(P, N)
    return all(x == 0 for row in P for x in row)


def unipotent_log(M):
    """log(M) = sum (-1)^(k+1) (M - I)^k / k, exact, for unipotent M."""
    d = len(M)
    N = [[F(M[i][j]) - (1 if i == j else 0) for j in range(d)]
         for i in range(d)]
    L = [[F(0)] * d for _ in range(d)]
    P = [row[:] for row in N]
    k = 1
    while any(any(x != 0 for x in row) for row in P):
        for i in range(d):
            for j in range(d):
                L[i][j] += Fraction((-1) ** (k + 1), k) * P[i][j]
        P = mat_mul(P, N)
        k += 1
        if k > d + 1:
            raise NotUnipotent('matrix has non-nilpotent M - I')
    return L


def unipotent_exp(L):
    """exp(L) = sum L^k / k! for nilpotent L, exact."""
    d = len(L)
    L = frac_mat(L)
    out = identity(d)
    P = identity(d)
    k = 1
    while True:
        P = mat_mul(P, L)
        if all(x == 0 for row in P for x in row):
            return out
        if k > d + 1:
            raise NotUnipotent('matrix is not nilpotent')
        for i in range(d):
            for j in range(d):
                out[i][j] += P[i][j] / _fact(k)
        k += 1


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _as_pairs(gens):
    """Normalize generators to (label, matrix) pairs; accepts AffineElement
    objects (zero-holonomy restriction) and raw pairs."""
    out = []
    for g in gens:
        if hasattr(g, 'matrix_zero'):
            out.append((g.word, frac_mat(g.matrix_zero)))
        else:
            label, m = g
            out.append((str(label), frac_mat(m)))
    return out


def find_unipotents(gens, max_word_len):
    """Breadth-first search for unipotent products of at most max_word_len
    generators (inverses included); returns (word, matrix) pairs in
    discovery order."""
    pairs = _as_pairs(gens)
    d = len(pairs[0][1])
    alpha = []
    for w, g in pairs:
        alpha.append((w, g))
        gi = mat_inv(g)
        if not mat_eq(gi, g):
            alpha.append((w + '^-1', gi))
    I = identity(d)
    visited = {tuple(tuple(r) for r in I)}
    frontier = [('', I)]
    found = []
    for _ in range(max_word_len):
        nxt = []
        for w0, m0 in frontier:
            for wa, ga in alpha:
                m = mat_mul(ga, m0)
                key = tuple(tuple(r) for r in m)
                if key in visited:
                    continue
                visited.add(key)
                w = (wa + ' ' + w0).strip()
                nxt.append((w, m))
                if is_unipotent(m):
                    found.append((w, m))
        frontier = nxt
    return found


class LieSpan:
    """Span of Lie-algebra elements with witnesses.

    elements   list of matrices, a basis of the span in discovery order;
    witnesses  parallel descriptions ("seed[0]", "phi[w](seed[1])",
               "[a,b]");
    dimension  the rank;
    depth      conjugator word length actually explored.
    """

    def __init__(self, elements, witnesses, dimension, depth):
        self.elements = elements
        self.witnesses = witnesses
        self.dimension = dimension
        self.depth = depth

    def __repr__(self):
        return f'LieSpan(dimension={self.dimension}, depth={self.depth})'


def _vec(M):
    return [x for row in M for x in row]


def _check_infinitesimally_symplectic(M, omega0):
    MT = transpose(frac_mat(M))
    A = mat_mul(MT, frac_mat(omega0))
    B = mat_mul(frac_mat(omega0), frac_mat(M))
    return all(A[i][j] + B[i][j] == 0
               for i in range(len(M)) for j in range(len(M)))


def conjugation_span(gens, seeds, max_word_len, upper=None, bracket=True,
                     omega0=None):
    """Close the seed matrices under conjugation by words of length at most
    max_word_len in the generators (and inverses), then under Lie brackets;
    return the LieSpan.

    ``upper`` short-circuits the search once the rank reaches it.  When
    ``omega0`` is given, every element added to the span is checked to be
    infinitesimally symplectic for it (X^T Omega + Omega X = 0), which is a
    strong internal consistency test of the whole pipeline.
    """
    pairs = _as_pairs(gens)
    seeds = [frac_mat(s) for s in seeds]
    d = len(seeds[0])
    sp = Span(d * d)
    elements = []
    witnesses = []

    def add(wit, M):
        if omega0 is not None:
            assert _check_infinitesimally_symplectic(M, omega0), \
                f'element {wit} is not in sp(Omega)'
        if sp.add(_vec(M)):
            elements.append(M)
            witnesses.append(wit)
            return True
        return False

    for k, s in enumerate(seeds):
        add(f'seed[{k}]', s)
    alpha = []
    for w, g in pairs:
        gi = mat_inv(g)
        alpha.append((w, g, gi))
        if not mat_eq(gi, g):
            alpha.append((w + '^-1', gi, g))
    I = identity(d)
    visited = {tuple(tuple(r) for r in I)}
    frontier = [('', I, I)]
    depth = 0
    while depth < max_word_len and (upper is None or sp.rank < upper):
        depth += 1
        nxt = []
        for w0, m0, m0i in frontier:
            for wa, ga, gai in alpha:
                m = mat_mul(ga, m0)
                key = tuple(tuple(r) for r in m)
                if key in visited:
                    continue
                visited.add(key)
                mi = mat_mul(m0i, gai)
                w = (wa + ' ' + w0).strip()
                nxt.append((w, m, mi))
                for k, s in enumerate(seeds):
                    add(f'phi[{w}](seed[{k}])', mat_mul(m, mat_mul(s, mi)))
                if upper is not None and sp.rank >= upper:
                    break
            if upper is not None and sp.rank >= upper:
                break
        frontier = nxt
    if bracket and (upper is None or sp.rank < upper):
        changed = True
        while changed and (upper is None or sp.rank < upper):
            changed = False
            cur = list(zip(witnesses, elements))
            for i in range(len(cur)):
                for j in range(i + 1, len(cur)):
                    A, B = cur[i][1], cur[j][1]
                    Br = [[sum(A[r][k] * B[k][c] - B[r][k] * A[k][c]
                               for k in range(d)) for c in range(d)]
                          for r in range(d)]
                    if add(f'[{cur[i][0]},{cur[j][0]}]', Br):
                        changed = True
                        if upper is not None and sp.rank >= upper:
                            break
                if upper is not None and sp.rank >= upper:
                    break
    return LieSpan(elements, witnesses, sp.rank, depth)


class Verdict:
    """Certified sandwich for the Zariski closure of the hidden monodromy."""

    __slots__ = ('lower_dim', 'upper_dim', 'group_name', 'certified',
                 'depth', 'unipotent_len', 'n_orbit', 'n_generators')

    def __init__(self, lower_dim, upper_dim, group_name, certified,
                 depth=0, unipotent_len=0, n_orbit=0, n_generators=0):
        self.lower_dim = lower_dim
        self.upper_dim = upper_dim
        self.group_name = group_name
        self.certified = certified
        self.depth = depth
        self.unipotent_len = unipotent_len
        self.n_orbit = n_orbit
        self.n_generators = n_generators

    def __repr__(self):
        return (f'Verdict(lower={self.lower_dim}, upper={self.upper_dim}, '
                f'group={self.group_name!r}, certified={self.certified})')


def _monodromy_pairs(o, basis, orbit_cap, graph=None):
    """(label, zero-holonomy matrix) generators: Schreier affine elements
    first (deduplicated), then the automorphism action."""
    from .affine import monodromy_generators
    from .autgroup import automorphisms, hom_rep
    from .orbits import orbit

    if graph is None:
        graph = orbit(o, cap=orbit_cap)
    gens = []
    seen = set()
    for el in monodromy_generators(o, basis=basis, graph=graph):
        m = frac_mat(el.matrix_zero)
        key = tuple(tuple(r) for r in m)
        if key not in seen:
            seen.add(key)
            gens.append((el.word, m))
    group = automorphisms(o)
    rep = hom_rep(o, basis, group=group)
    for k, full in enumerate(rep.mats):
        m = frac_mat(basis.restrict_zero(full))
        key = tuple(tuple(r) for r in m)
        if key not in seen:
            seen.add(key)
            gens.append((f'aut[{k}]', m))
    return gens, graph, rep


def zariski_verdict(o, max_word_len=8, orbit_cap=10**6, basis=None,
                    unipotent_len_cap=3):
    """Sandwich the Zariski closure of the monodromy on the zero-holonomy
    part: isotypic upper bound, Lie-algebra span lower bound.

    Returns a certified Verdict or raises NotCertified with the best
    verdict attached.
    """
    from .autgroup import automorphisms, hom_rep
    from .homology import HomologyBasis
    from .perms import genus

    if genus(o) == 1:
        # the zero-holonomy part is trivial; nothing hidden to bound
        return Verdict(0, 0, 'trivial', True)
    if basis is None:
        from .errors import UnknownName
        try:
            basis = surface_basis(o, 'paper')
        except UnknownName:
            basis = surface_basis(o, 'auto')

    rep = hom_rep(o, basis)
    report = isotypic_decomposition(rep, omega=basis.omega())
    taut_dim = sum(c.dim for c in report.tautological_components)
    if taut_dim != 2:
        raise NotCertified(
            f'tautological part has dimension {taut_dim}, not 2; the '
            'isotypic upper bound does not apply to the zero-holonomy part',
            verdict=Verdict(0, 0, 'unknown', False))
    upper, name = myz_upper_bound(report)
    if upper == 0:
        return Verdict(0, 0, 'trivial', True)

    omega0 = basis.omega_zero()
    gens, graph, _ = _monodromy_pairs(o, basis, orbit_cap)
    best = Verdict(0, upper, name, False, n_orbit=len(graph.nodes),
                   n_generators=len(gens))
    for L in range(1, unipotent_len_cap + 1):
        unis = find_unipotents(gens, L)
        seeds = []
        seen = set()
        for w, m in unis:
            lg = unipotent_log(m)
            key = tuple(tuple(r) for r in lg)
            if key not in seen:
                seen.add(key)
                seeds.append(lg)
        if not seeds:
            continue
        span = conjugation_span(gens, seeds[:4], max_word_len, upper=upper,
                                omega0=omega0)
        if span.dimension > best.lower_dim:
            best = Verdict(span.dimension, upper, name,
                           span.dimension == upper, depth=span.depth,
                           unipotent_len=L, n_orbit=len(graph.nodes),
                           n_generators=len(gens))
        if best.certified:
            return best
    raise NotCertified(
        f'lower bound {best.lower_dim} did not reach the upper bound '
        f'{best.upper_dim} within word length {max_word_len} and unipotent '
        f'length {unipotent_len_cap}', verdict=best)
