"""Translation automorphisms and their action on homology.

An automorphism of an origami is a relabeling of the squares commuting with
both gluing permutations (a deck transformation of the translation
structure).  The group is computed by propagation: choosing the image t of
square 1 forces the image of every other square along h- and v-edges, so
there is at most one automorphism per value of t and the whole group is
found in O(n^2).

An automorphism phi acts on 1-chains by permuting edges (h_i -> h_phi(i),
v_i -> v_phi(i)); ``aut_action`` pushes that chain map to a matrix on H_1
in the coordinates of a chosen curve frame.  ``hom_rep`` packages the whole
group's matrices (the homology representation) for the isotypic machinery,
which needs every element, not just generators, for averaging arguments.
"""

from .errors import NotAnAutomorphism
from .linalg import frac_mat
from .perms import Origami, compose, cycles_of

try:
    from math import lcm
except ImportError:  # pragma: no cover
    from math import gcd

    def lcm(a, b):
        return a * b // gcd(a, b)


def automorphisms(o):
    """All relabelings commuting with (sigma_h, sigma_v), as an AutGroup."""
    h, v = o.h, o.v
    n = o.n
    elements = []
    for t in range(n):
        phi = [None] * n
        phi[0] = t
        stack, ok = [0], True
        while stack and ok:
            x = stack.pop()
            for g in (h, v):
                y, im = g[x], g[phi[x]]
                if phi[y] is None:
                    phi[y] = im
                    stack.append(y)
                elif phi[y] != im:
                    ok = False
                    break
        if ok and all(a is not None for a in phi):
            elements.append(tuple(phi))
    return AutGroup(elements, n)


def _closure(gens, n):
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(g, a)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def _perm_order(p):
    out = 1
    for c in cycles_of(p):
        out = lcm(out, len(c))
    return out


def _label_structure(elements, abelian):
    order = len(elements)
    if order == 1:
        return 'trivial'
    orders = sorted(_perm_order(p) for p in elements)
    if abelian:
        exponent = max(orders)
        if exponent == 2:
            k = order.bit_length() - 1
            return f'(Z/2Z)^{k}' if k > 1 else 'Z/2Z'
        if exponent == order:
            return f'Z/{order}Z'
        return f'abelian of order {order}'
    counts = {d: orders.count(d) for d in set(orders)}
    if order == 12 and counts == {1: 1, 2: 3, 3: 8}:
        return 'A4'
    if order == 24 and counts == {1: 1, 2: 9, 3: 8, 4: 6}:
        return 'S4'
    if order == 6 and counts == {1: 1, 2: 3, 3: 2}:
        return 'S3'
    if order == 8 and counts == {1: 1, 2: 5, 4: 2}:
        return 'D4'
    if order == 8 and counts == {1: 1, 2: 1, 4: 6}:
        return 'Q8'
    return f'nonabelian of order {order}'


class AutGroup:
    """The automorphism group: all elements, a greedy generating set, and a
    coarse structure label."""

    def __init__(self, elements, n):
        self.n = n
        self.elements = sorted(elements)
        self.order = len(self.elements)
        self.abelian = all(compose(a, b) == compose(b, a)
                           for i, a in enumerate(self.elements)
                           for b in self.elements[i + 1:])
        identity = tuple(range(n))
        gens = []
        covered = {identity}
        for e in self.elements:
            if e in covered:
                continue
            gens.append(e)
            covered = _closure(gens, n)
            if len(covered) == self.order:
                break
        self.generators = gens
        self.structure = _label_structure(self.elements, self.abelian)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    def __repr__(self):
        return (f'AutGroup(order={self.order}, structure={self.structure!r})')


def perm_chain_matrix(psi, n):
    """Chain map of the square relabeling psi: h_i -> h_psi(i),
    v_i -> v_psi(i)."""
    M = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        M[psi[i]][i] = 1
        M[n + psi[i]][n + i] = 1
    return M


def _check_automorphism(o, phi):
    phi = tuple(phi)
    if sorted(phi) != list(range(o.n)):
        raise NotAnAutomorphism('relabeling is not a bijection on the squares')
    for g in (o.h, o.v):
        if compose(phi, g) != compose(g, phi):
            raise NotAnAutomorphism(
                'relabeling does not commute with the gluing permutations')
    return phi


def aut_action(o, phi, basis):
    """Matrix of the automorphism phi on H_1 in the given curve frame."""
    if not isinstance(o, Origami):
        o = Origami(o[0], o[1])
    phi = _check_automorphism(o, phi)
    return basis.chain_map_in_curves(perm_chain_matrix(phi, o.n))


class HomRep:
    """Homology representation of the full automorphism group.

    mats[i] is the matrix of group.elements[i] in the frame's curve
    coordinates; hol_of maps a coordinate vector to its holonomy (used to
    tell the tautological plane apart from the genuinely hidden part).
    """

    def __init__(self, group, basis, mats):
        self.group = group
        self.basis = basis
        self.mats = mats
        self.dim = basis.dim

    def hol_of(self, vec):
        return self.basis.hol_of(vec)

    def gen_mats(self):
        index = {e: i for i, e in enumerate(self.group.elements)}
        return [self.mats[index[g]] for g in self.group.generators]


def hom_rep(o, basis, group=None):
    """The full automorphism group acting on H_1 in curve coordinates."""
    if group is None:
        group = automorphisms(o)
    mats = [frac_mat(aut_action(o, phi, basis)) for phi in group.elements]
    return HomRep(group, basis, mats)
