"""Exact linear algebra over Q.

Every object downstream of the gluing permutations — homology classes,
representation matrices, intersection forms, Lie-algebra elements — is
rational, so every question that matters here (rank, membership, spectra,
invariant factors) has an exact yes/no answer.  This module keeps the tool
set deliberately small and dependency-free: matrices are plain lists of
`fractions.Fraction` rows, vectors are plain lists.

Contents:

* row-echelon machinery: ``rref``, ``kernel``, ``express_in``, and ``Span``
  (an incrementally grown subspace with pivot bookkeeping, the workhorse of
  all rank certificates);
* integer Smith normal form with unimodular transforms, ``smith``, used to
  cut torsion-free integral bases out of boundary and face matrices;
* characteristic polynomial by the Faddeev–LeVerrier recurrence and exact
  rational eigenvalues via the rational-root theorem on the
  cleared-denominator form;
* minimal polynomials and their irreducible factors over Q (factoring is
  delegated to sympy, the one external dependency).

Matrices act on column vectors: columns of a matrix are the images of the
basis vectors.
"""

from fractions import Fraction
from math import gcd

from .errors import NotInSpan

F = Fraction


def frac_mat(M):
    return [[F(x) for x in row] for row in M]


def identity(n):
    return [[F(1) if i == j else F(0) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(M, v):
    return [sum(F(M[i][j]) * F(v[j]) for j in range(len(v)))
            for i in range(len(M))]


def mat_eq(A, B):
    return (len(A) == len(B) and all(len(ra) == len(rb) for ra, rb in zip(A, B))
            and all(F(a) == F(b) for ra, rb in zip(A, B) for a, b in zip(ra, rb)))


def mat_inv(A):
    """Exact inverse via Gauss-Jordan; raises ZeroDivisionError-free on
    singular input by StopIteration -> ValueError."""
    n = len(A)
    M = [[F(x) for x in row] + [F(1) if i == j else F(0) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ValueError('matrix is singular')
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def mat_inv_int(A):
    """Inverse of a unimodular integer matrix, returned with int entries."""
    B = mat_inv(A)
    out = [[int(x) for x in row] for row in B]
    assert all(F(out[i][j]) == B[i][j] for i in range(len(A))
               for j in range(len(A))), 'matrix not unimodular'
    return out


def det(M):
    M = [row[:] for row in frac_mat(M)]
    n = len(M)
    d = F(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return F(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def rref(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(map(F, r)) for r in rows]
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == m:
            break
    return [rows[i] for i in range(r)], piv


def mat_rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def span_rank(mats):
    """Rank of a family of matrices, vectorized row-major."""
    return mat_rank([[x for row in m for x in row] for m in mats])


def kernel(M):
    """Basis of the right kernel of M (list of vectors)."""
    m = len(M)
    n = len(M[0]) if m else 0
    rows, piv = rref(M)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fc in free:
        v = [F(0)] * n
        v[fc] = F(1)
        for row, p in zip(rows, piv):
            v[p] = -row[fc]
        basis.append(v)
    return basis


class Span:
    """Incrementally grown subspace of Q^dim with exact rank tracking.

    Rows are kept in reduced echelon form with sorted pivots, so membership
    tests are a single reduction pass.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rows = []
        self.piv = []

    def add(self, vec):
        """Reduce vec against the rows; insert if independent. True iff grown."""
        v = list(map(F, vec))
        for row, p in zip(self.rows, self.piv):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        v = [x / v[p] for x in v]
        idx = next((i for i, q in enumerate(self.piv) if q > p), len(self.piv))
        self.rows.insert(idx, v)
        self.piv.insert(idx, p)
        for i in range(len(self.rows)):
            if i == idx:
                continue
            f = self.rows[i][p]
            if f != 0:
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], v)]
        return True

    def contains(self, vec):
        v = list(map(F, vec))
        for row, p in zip(self.rows, self.piv):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    @property
    def rank(self):
        return len(self.rows)


def span_of(vectors, dim):
    s = Span(dim)
    for v in vectors:
        s.add(v)
    return s


def same_span(A, B, dim):
    sa, sb = span_of(A, dim), span_of(B, dim)
    return sa.rank == sb.rank and all(sa.contains(v) for v in B)


def express_in(basis, vec, dim):
    """Coordinates of vec in the given (independent) basis.

    Raises NotInSpan when vec is outside the span.
    """
    k = len(basis)
    A = [[F(basis[i][j]) for i in range(k)] for j in range(dim)]
    b = list(map(F, vec))
    rows = [A[i] + [b[i]] for i in range(dim)]
    red, piv = rref(rows)
    x = [F(0)] * k
    for row, p in zip(red, piv):
        if p == k:
            raise NotInSpan('vector not in the span of the basis')
        x[p] = row[k]
    return x


def solve_columns(A, B):
    """Solve A X = B column by column where A has full column rank on its
    span; raises NotInSpan if some column of B is outside the column span
    of A.  A is d x k (k <= d), B is d x m; X is k x m."""
    d, k = len(A), len(A[0])
    m = len(B[0])
    aug = [[F(A[i][j]) for j in range(k)] + [F(B[i][j]) for j in range(m)]
           for i in range(d)]
    red, piv = rref(aug)
    if any(p >= k for p in piv):
        raise NotInSpan('right-hand side outside the column span')
    if len(piv) != k:
        raise ValueError('matrix does not have full column rank')
    X = [[F(0)] * m for _ in range(k)]
    for row, p in zip(red, piv):
        for j in range(m):
            X[p][j] = row[k + j]
    return X


def restrict(A, W):
    """Matrix of A on the column span of W (columns = subspace basis).

    Exact: asserts that the columns of W are independent and that A maps
    their span into itself.
    """
    d = len(W)
    k = len(W[0])
    R = mat_mul(A, W)
    aug = [[F(W[i][j]) for j in range(k)] + [F(R[i][j]) for j in range(k)]
           for i in range(d)]
    piv = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, d) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(d):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    assert r == k, 'subspace basis not independent'
    for i in range(r, d):
        assert all(x == 0 for x in aug[i][k:]), 'subspace not invariant'
    return [[aug[i][k + j] for j in range(k)] for i in range(r)]


def columns_of(vectors):
    """Stack row-vectors as the columns of a matrix (dim x k)."""
    return [list(col) for col in zip(*vectors)]


# ----------------------------------------------------------------- integers

def smith(A):
    """Integer Smith-style diagonalization U*A*W = D (no divisibility
    chain); U, W unimodular.  Returns (U, D, W, rank)."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    W = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in W:
            row[i], row[j] = row[j], row[i]

    def addrow(i, j, c):
        D[i] = [a + c * b for a, b in zip(D[i], D[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def addcol(i, j, c):
        for row in D:
            row[i] += c * row[j]
        for row in W:
            row[i] += c * row[j]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (piv is None
                                or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    addrow(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            for j in range(t + 1, n):
                if D[t][j]:
                    addcol(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
            if any(D[t][j] for j in range(t + 1, n)):
                continue
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            break
        t += 1
    rank = sum(1 for i in range(min(m, n)) if D[i][i])
    return U, D, W, rank


# ------------------------------------------------------------------ spectra

def charpoly(A):
    """Faddeev–LeVerrier: descending coefficients [1, c1, ..., cn] of
    x^n + c1 x^(n-1) + ... + cn."""
    n = len(A)
    A = frac_mat(A)
    Mprev = [[F(0)] * n for _ in range(n)]
    c = [F(1)]
    for k in range(1, n + 1):
        Mk = mat_mul(A, Mprev)
        for i in range(n):
            Mk[i][i] += c[k - 1]
        AMk = mat_mul(A, Mk)
        ck = -F(sum(AMk[i][i] for i in range(n)), k)
        c.append(ck)
        Mprev = Mk
    return c


def rational_eigenvalues(A):
    """All rational eigenvalues of a rational square matrix, exact, sorted.

    Clears denominators of the characteristic polynomial and runs the
    rational-root search p/q with p | a_n, q | a_0.
    """
    c = charpoly(A)
    den = 1
    for ci in c:
        den = den * ci.denominator // gcd(den, ci.denominator)
    ic = [int(ci * den) for ci in c]

    def peval(x):
        acc = F(0)
        for co in ic:
            acc = acc * x + co
        return acc

    a0 = ic[0]
    roots = set()
    k = len(ic) - 1
    while ic[k] == 0 and k > 0:
        roots.add(F(0))
        k -= 1
    if k == 0:
        return sorted(roots)
    an = ic[k]

    def divisors(m):
        m = abs(m)
        ds = set()
        d = 1
        while d * d <= m:
            if m % d == 0:
                ds.add(d)
                ds.add(m // d)
            d += 1
        return ds

    for p in divisors(an):
        for q in divisors(a0):
            for s in (1, -1):
                r = F(s * p, q)
                if peval(r) == 0:
                    roots.add(r)
    return sorted(roots)


def eigenspace(A, lam):
    n = len(A)
    M = [[F(A[i][j]) - (lam if i == j else 0) for j in range(n)]
         for i in range(n)]
    return kernel(M)


def min_poly(M):
    """Minimal polynomial coefficients [c0, c1, ..., 1] (ascending), exact."""
    k = len(M)
    M = frac_mat(M)
    powers = [identity(k)]
    sp = Span(k * k)
    sp.add([powers[0][i][j] for i in range(k) for j in range(k)])
    while True:
        nxt = mat_mul(M, powers[-1])
        vec = [nxt[i][j] for i in range(k) for j in range(k)]
        if not sp.add(vec):
            basis = [[p[i][j] for i in range(k) for j in range(k)]
                     for p in powers]
            coeffs = express_in(basis, vec, k * k)
            return [-c for c in coeffs] + [F(1)]
        powers.append(nxt)


def poly_factors_q(coeffs):
    """Distinct irreducible factors over Q of a polynomial given by
    ascending rational coefficients, each returned ascending."""
    import sympy
    x = sympy.Symbol('x')
    p = sum(sympy.Rational(c.numerator, c.denominator) * x**i
            for i, c in enumerate(coeffs))
    _, facs = sympy.Poly(p, x).factor_list()
    out = []
    for fac, _mult in facs:
        fc = fac.all_coeffs()[::-1]
        out.append([F(int(sympy.numer(c)), int(sympy.denom(c))) for c in fc])
    return out


def poly_eval_mat(coeffs, M):
    """Evaluate a polynomial (ascending coefficients) at a square matrix."""
    k = len(M)
    acc = [[F(0)] * k for _ in range(k)]
    for c in reversed(coeffs):
        acc = mat_mul(frac_mat(M), acc)
        for i in range(k):
            acc[i][i] += c
    return acc


def is_scalar(M):
    d = M[0][0]
    return all(M[i][j] == (d if i == j else 0)
               for i in range(len(M)) for j in range(len(M)))
