"""Integral homology of the square complex, curves, and intersection form.

The square decomposition of an origami has one 2-cell per square, edges
h_i (bottom edge of square i, running toward sigma_h(i)) and v_i (left
edge, running toward sigma_v(i)), and one vertex per cycle of the
commutator v h v^-1 h^-1.  H_1 of the closed surface is the cycle space
modulo face boundaries; a torsion-free integral basis is carved out with
two Smith normal forms (one for the boundary map to get the cycle space,
one for the face relations inside it).

The algebraic intersection form is computed combinatorially from the
rotation system: around every vertex the four darts of each square corner
succeed one another in a fixed counterclockwise order, and the pairing of
two cycles is a sum of corner-crossing counts read off prefix sums of one
cycle's dart coefficients along each rotation cycle.  The resulting global
sign convention is the one fixed by the octahedral surface's intersection
table, and is used consistently everywhere (symplectic bases, Lie-algebra
bounds).

Straight curves: ``straight_curve(o, s, (a, b))`` follows the geodesic of
primitive slope b/a out of the bottom-left corner of square s, recording
|a| horizontal then |b| vertical unit steps per period until it closes up.

``SurfaceBasis`` packages a homology basis made of named curves, the
change-of-basis matrices, holonomies, and a chosen spanning set of
zero-holonomy combinations; ``paper_basis`` instantiates the fixed frames
for the catalog surfaces (transporting square labels along a relabeling
when the given surface is an isomorphic copy), while ``auto_basis`` uses
the computed integral basis directly and works for every origami.
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd

from . import perms
from .errors import NonCycleInput, NotInSpan, UnknownName
from .linalg import (F, columns_of, express_in, kernel, mat_inv, mat_inv_int,
                     mat_mul, restrict, smith)
from .perms import Origami, canonical_form, inverse, vertex_cycles

Holonomy = namedtuple('Holonomy', ['hx', 'hy'])


class HomologyBasis:
    """Torsion-free integral basis of H_1 with exact coordinates.

    Chains are length-2n vectors: entry i is the coefficient of h_i,
    entry n+i of v_i.
    """

    def __init__(self, o):
        if not isinstance(o, Origami):
            o = Origami(o[0], o[1])
        h, v = o.h, o.v
        n = o.n
        self.o = o
        self.n = n
        vcycs = vertex_cycles(o)
        self.vcycs = vcycs
        vert_of = [0] * n
        for k, c in enumerate(vcycs):
            for s in c:
                vert_of[s] = k
        self.vert_of = vert_of
        V = len(vcycs)

        boundary = [[0] * (2 * n) for _ in range(V)]
        for i in range(n):
            boundary[vert_of[h[i]]][i] += 1
            boundary[vert_of[i]][i] -= 1
            boundary[vert_of[v[i]]][n + i] += 1
            boundary[vert_of[i]][n + i] -= 1
        self.boundary = boundary

        faces = [[0] * n for _ in range(2 * n)]
        for i in range(n):
            faces[i][i] += 1            # +h_i
            faces[n + h[i]][i] += 1     # +v_{sigma_h(i)}
            faces[v[i]][i] -= 1         # -h_{sigma_v(i)}
            faces[n + i][i] -= 1        # -v_i
        self.faces = faces

        U1, D1, W1, r1 = smith(boundary)
        self.W1 = W1
        self.W1inv = mat_inv_int(W1)
        self.r1 = r1
        z = 2 * n - r1
        self.z = z

        # face boundaries written in cycle-space coordinates
        Y = [[0] * n for _ in range(z)]
        for j in range(n):
            col = [faces[e][j] for e in range(2 * n)]
            y = [sum(self.W1inv[i][e] * col[e] for e in range(2 * n))
                 for i in range(2 * n)]
            assert all(y[i] == 0 for i in range(r1)), 'face relation not a cycle'
            for i in range(z):
                Y[i][j] = y[r1 + i]
        U2, D2, W2, r2 = smith(Y)
        assert all(abs(D2[i][i]) == 1 for i in range(r2)), 'torsion in homology'
        self.U2 = U2
        self.r2 = r2
        U2inv = mat_inv_int(U2)
        self.dim = z - r2
        assert self.dim == 2 * perms.genus(o), 'homology dimension mismatch'

        K = [[W1[e][r1 + i] for i in range(z)] for e in range(2 * n)]
        self.basis_chains = [
            [sum(K[e][i] * U2inv[i][r2 + j] for i in range(z))
             for e in range(2 * n)]
            for j in range(self.dim)
        ]

        # rotation system darts 4s+k: k = 0 outgoing h_s, 1 outgoing v_s,
        # 2 incoming h (from sigma_h^-1 s), 3 incoming v; counterclockwise
        # successor around the vertex at the bottom-left corner.
        hinv, vinv = inverse(h), inverse(v)
        succ = [0] * (4 * n)
        for s in range(n):
            succ[4 * s + 0] = 4 * s + 1
            succ[4 * s + 1] = 4 * hinv[s] + 2
            succ[4 * s + 2] = 4 * h[vinv[s]] + 3
            succ[4 * s + 3] = 4 * v[s] + 0
        rot = []
        seen = [False] * (4 * n)
        for d0 in range(4 * n):
            if not seen[d0]:
                cyc, d = [d0], succ[d0]
                seen[d0] = True
                while d != d0:
                    cyc.append(d)
                    seen[d] = True
                    d = succ[d]
                rot.append(cyc)
        assert len(rot) == V, 'rotation cycles != vertices'
        self.rot = rot

    # -- chains --

    def zero_chain(self):
        return [F(0)] * (2 * self.n)

    def d1(self, c):
        V = len(self.vcycs)
        out = [F(0)] * V
        for e in range(2 * self.n):
            if c[e]:
                for vrow in range(V):
                    if self.boundary[vrow][e]:
                        out[vrow] += self.boundary[vrow][e] * c[e]
        return out

    def is_cycle(self, c):
        return all(x == 0 for x in self.d1(c))

    def express(self, c):
        """Coordinates of the class of the cycle c in the quotient basis."""
        if not self.is_cycle(c):
            raise NonCycleInput('chain has nonzero boundary')
        y = [sum(self.W1inv[i][e] * c[e] for e in range(2 * self.n))
             for i in range(2 * self.n)]
        x = y[self.r1:]
        t = [sum(self.U2[i][j] * x[j] for j in range(self.z))
             for i in range(self.z)]
        return t[self.r2:]

    def holonomy(self, c):
        return Holonomy(sum(c[:self.n]), sum(c[self.n:]))

    # -- intersection --

    def iota(self, c, d):
        """Signed coefficient of chain c on dart d."""
        s, k = divmod(d, 4)
        if k == 0:
            return c[s]
        if k == 1:
            return c[self.n + s]
        if k == 2:
            return -c[s]
        return -c[self.n + s]

    def intersection(self, a, b):
        """Algebraic intersection number of the cycles a and b."""
        if not (self.is_cycle(a) and self.is_cycle(b)):
            raise NonCycleInput('intersection needs two cycles')
        total = F(0)
        for cyc in self.rot:
            m = len(cyc)
            G = [F(0)] * (m + 1)
            for j, d in enumerate(cyc):
                G[j + 1] = G[j] + self.iota(b, d)
            assert G[m] == 0, 'cycle fails to balance at a vertex'
            for j, d in enumerate(cyc):
                s, k = divmod(d, 4)
                c = a[s] if k in (0, 2) else a[self.n + s]
                if c == 0:
                    continue
                if k in (0, 1):      # tail of the edge: outgoing when c > 0
                    total -= c * (G[j + 1] if c > 0 else G[j])
                else:                # head of the edge: incoming when c > 0
                    total += c * (G[j] if c > 0 else G[j + 1])
        return total


def build_homology(o):
    return HomologyBasis(o)


def straight_curve(o, start, direction):
    """Closed straight curve out of square ``start`` (1-based) with
    primitive direction (a, b): per period, |a| horizontal unit steps then
    |b| vertical ones, until the path returns to its starting square."""
    h, v = o.h, o.v
    n = o.n
    a, b = direction
    g = gcd(abs(a), abs(b))
    if g == 0:
        raise ValueError('direction (0, 0) has no curve')
    a //= g
    b //= g
    s0 = start - 1
    if not 0 <= s0 < n:
        raise ValueError(f'start square {start} out of range 1..{n}')
    hinv, vinv = inverse(h), inverse(v)
    c = [F(0)] * (2 * n)
    s = s0
    while True:
        for _ in range(abs(a)):
            if a > 0:
                c[s] += 1
                s = h[s]
            else:
                s = hinv[s]
                c[s] -= 1
        for _ in range(abs(b)):
            if b > 0:
                c[n + s] += 1
                s = v[s]
            else:
                s = vinv[s]
                c[n + s] -= 1
        if s == s0:
            return c


def holonomy(c):
    n = len(c) // 2
    return Holonomy(sum(c[:n]), sum(c[n:]))


def zero_holonomy_basis(hb):
    """Integral spanning set of the zero-holonomy subspace of H_1,
    returned as chains (dimension 2g - 2)."""
    cols = [hb.holonomy(c) for c in hb.basis_chains]
    M = [[F(cols[j][0]) for j in range(hb.dim)],
         [F(cols[j][1]) for j in range(hb.dim)]]
    combos = kernel(M)
    out = []
    for combo in combos:
        den = 1
        for x in combo:
            den = den * x.denominator // gcd(den, x.denominator)
        chain = [sum(int(combo[j] * den) * hb.basis_chains[j][e]
                     for j in range(hb.dim))
                 for e in range(2 * hb.n)]
        out.append(chain)
    assert len(out) == hb.dim - 2
    return out


def intersection_form(hb, basis):
    """Matrix of the intersection pairing over the given list of cycles."""
    return [[hb.intersection(a, b) for b in basis] for a in basis]


def express_in_basis(c, basis, hb):
    """Coordinates of the cycle c in a list of cycles spanning (at least)
    its class; raises NotInSpan when the class is outside the span."""
    coords = hb.express(c)
    cols = [hb.express(b) for b in basis]
    return express_in(cols, coords, hb.dim)


class SurfaceBasis:
    """A named curve basis of H_1 plus a zero-holonomy frame.

    curves        list of 2g chains whose classes form a basis;
    names         curve names, parallel to ``curves``;
    zero_combos   coordinate vectors (in curve coordinates) spanning the
                  zero-holonomy subspace, dimension 2g - 2;
    zero_names    names for those combinations.

    ``chain_map_in_curves`` turns a chain-level map C_1 -> C_1 into its
    matrix on H_1 in curve coordinates (columns are images of the basis
    curves); ``restrict_zero`` further restricts such a matrix to the
    zero-holonomy subspace in the ``zero_combos`` frame.
    """

    def __init__(self, hb, curves, names, zero_combos, zero_names):
        self.hb = hb
        self.curves = curves
        self.names = list(names)
        d = hb.dim
        assert len(curves) == d, 'curve count != homology dimension'
        cols = [hb.express(c) for c in curves]
        self.CB = [[F(cols[j][i]) for j in range(d)] for i in range(d)]
        self.CBinv = mat_inv(self.CB)
        self.zero_combos = [[F(x) for x in z] for z in zero_combos]
        self.zero_names = list(zero_names)
        self.hol_cols = [hb.holonomy(c) for c in curves]
        for z in self.zero_combos:
            assert self.hol_of(z) == (0, 0), 'zero-holonomy combo has holonomy'

    @property
    def dim(self):
        return self.hb.dim

    def express(self, chain):
        """Curve coordinates of a cycle's class."""
        e = self.hb.express(chain)
        return [sum(self.CBinv[i][j] * e[j] for j in range(len(e)))
                for i in range(len(e))]

    def hol_of(self, vec):
        hx = sum(F(v) * c.hx for v, c in zip(vec, self.hol_cols))
        hy = sum(F(v) * c.hy for v, c in zip(vec, self.hol_cols))
        return Holonomy(hx, hy)

    def chain_map_in_curves(self, M):
        """Matrix on H_1 (curve coordinates) of a chain map M (2n x 2n)."""
        cols = []
        for c in self.curves:
            img = [sum(M[r][e] * c[e] for e in range(2 * self.hb.n))
                   for r in range(2 * self.hb.n)]
            cols.append(self.express(img))
        d = self.hb.dim
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def restrict_zero(self, A):
        """Matrix of A (curve coordinates) on the zero-holonomy frame."""
        return restrict(A, columns_of(self.zero_combos))

    def omega(self):
        """Intersection form over the curve basis."""
        return intersection_form(self.hb, self.curves)

    def omega_zero(self):
        """Intersection form over the zero-holonomy frame."""
        Z = self.zero_combos
        Om = self.omega()
        ZO = mat_mul([[F(x) for x in z] for z in Z], Om)
        return mat_mul(ZO, columns_of(Z))


def _e(i, j, val=1):
    v = [F(0)] * j
    v[i] = F(val)
    return v


def _combo(dim, terms):
    v = [F(0)] * dim
    for i, val in terms:
        v[i] += F(val)
    return v


# Fixed curve frames for the catalog surfaces: starting squares are the
# printed (1-based) ones, directions are primitive vectors; the
# zero-holonomy combinations are differences of parallel curves (and for
# the 24-square cube's diagonals, a correction by horizontal/vertical
# curves weighted to kill the holonomy).
_PAPER_SPECS = {
    'torus': {
        'curves': [(1, (1, 0), 'h_1'), (1, (0, 1), 'v_1')],
        'zero': [],
    },
    'octahedron-O': {
        'curves': ([(s, (1, 0), f'sigma_{s}') for s in (1, 4, 7, 10)]
                   + [(s, (0, 1), f'zeta_{s}') for s in (1, 2, 3, 6)]),
        'zero': ([(f'Sigma_{s}', [(i, 1), (3, -1)])
                  for i, s in enumerate((1, 4, 7))]
                 + [(f'Z_{s}', [(4, 1), (4 + i, -1)])
                    for i, s in ((1, 2), (2, 3), (3, 6))]),
    },
    'cube-C': {
        'curves': ([(s, (1, 0), f'sigma_{s}') for s in (1, 2, 3, 5, 8, 9)]
                   + [(s, (0, 1), f'zeta_{s}') for s in (1, 2, 3, 4, 5, 8)]
                   + [(s, (1, 1), f'eta_{s}') for s in (1, 2, 3, 4, 6, 8)]),
        'zero': ([(f'Sigma_{s}', [(i, 1), (5, -1)])
                  for i, s in enumerate((1, 2, 3, 5, 8))]
                 + [(f'Z_{s}', [(6 + i, 1), (11, -1)])
                    for i, s in enumerate((1, 2, 3, 4, 5))]
                 + [(f'H_{s}', [(12 + i, 1), (5, -2), (11, F(-4, 3))])
                    for i, s in enumerate((1, 2, 3, 4, 6, 8))]),
    },
    'mutetrahedron-M': {
        'curves': ([(s, (1, 1), f'sigma_{s}') for s in (1, 3, 4, 6, 8)]
                   + [(s, (-2, 1), f'zeta_{s}') for s in (1, 3, 4, 6, 8)]),
        'zero': ([(f'Sigma_{s}', [(i, 1), (4, -1)])
                  for i, s in enumerate((1, 3, 4, 6))]
                 + [(f'Z_{s}', [(5 + i, 1), (9, -1)])
                    for i, s in enumerate((1, 3, 4, 6))]),
    },
}


def _identify_catalog(o):
    """Return (name, relabel old->catalog) if o is isomorphic to a catalog
    surface with a fixed frame, else (None, None)."""
    K, phi_o = canonical_form(o)
    for name in _PAPER_SPECS:
        cat = perms.catalog(name)
        if cat.n != o.n:
            continue
        Kc, phi_c = canonical_form(cat)
        if Kc == K:
            phi_c_inv = inverse(phi_c)
            iota = tuple(phi_c_inv[phi_o[x]] for x in range(o.n))
            return name, iota
    return None, None


def paper_basis(o, hb=None):
    """The fixed curve frame of a catalog surface (or an isomorphic copy,
    with starting squares transported along the relabeling).

    Raises UnknownName for surfaces without a fixed frame; ``auto_basis``
    covers those.
    """
    name, iota = _identify_catalog(o)
    if name is None:
        raise UnknownName(
            'no fixed curve frame for this surface; use the automatic basis')
    if hb is None:
        hb = HomologyBasis(o)
    iota_inv = inverse(iota)
    spec = _PAPER_SPECS[name]
    curves, names = [], []
    for s, d, nm in spec['curves']:
        curves.append(straight_curve(o, iota_inv[s - 1] + 1, d))
        names.append(nm)
    dim = len(curves)
    zero_combos = [_combo(dim, terms) for _, terms in spec['zero']]
    zero_names = [nm for nm, _ in spec['zero']]
    return SurfaceBasis(hb, curves, names, zero_combos, zero_names)


def auto_basis(o, hb=None):
    """Curve frame from the computed integral basis (works everywhere)."""
    if hb is None:
        hb = HomologyBasis(o)
    curves = hb.basis_chains
    names = [f'e_{i + 1}' for i in range(hb.dim)]
    zero_chains = zero_holonomy_basis(hb)
    zero_combos = [express_in_basis(z, curves, hb) for z in zero_chains]
    zero_names = [f'z_{i + 1}' for i in range(len(zero_combos))]
    return SurfaceBasis(hb, curves, names, zero_combos, zero_names)


def surface_basis(o, kind='paper', hb=None):
    """Dispatch: 'paper' falls back to nothing (strict), 'auto' always
    works."""
    if kind == 'paper':
        return paper_basis(o, hb=hb)
    if kind == 'auto':
        return auto_basis(o, hb=hb)
    raise UnknownName(f'unknown basis kind {kind!r}')
