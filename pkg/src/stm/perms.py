"""Square-tiled surfaces as permutation pairs.

A square-tiled surface (origami) on squares {1, ..., n} is a pair of
permutations (sigma_h, sigma_v): sigma_h(i) is the square to the right of
square i, sigma_v(i) the square above it.  The surface is connected iff the
pair acts transitively.  Everything else in the package is computed from
this pair.

Conventions, fixed once and used everywhere:

* squares are 1-based in all user-facing input/output and 0-based
  internally (an ``Origami`` stores 0-based tuples);
* permutations compose right-to-left: ``compose(f, g)`` is the map
  i -> f(g(i)), so g acts first;
* the canonical form of a surface is the lexicographically least relabeling
  reachable by breadth-first search from each base square, exploring the
  horizontal neighbor before the vertical one.  Two surfaces are isomorphic
  (as labeled-square geometries) iff their canonical forms are equal.

The cone points are read off a corner complex: each square contributes four
corners, edge gluings identify corners in quadruples around each vertex, and
a vertex whose class has 4(k+1) corners is a zero of order k (cone angle
2*pi*(k+1)).  The genus follows from the Euler characteristic of the square
decomposition (n vertices-worth of faces, 2n edges, V vertices).
"""

import json

from .errors import Disconnected, NotABijection, UnknownName

# ------------------------------------------------------------ permutations

def parse_cycles(s, n):
    """Parse 1-based cycle notation like "(1,2,3)(4,5)" into a 0-based
    one-line tuple of length n."""
    p = list(range(n))
    s = s.replace(' ', '')
    if s in ('', 'id', '()'):
        return tuple(p)
    for cyc in s.strip('()').split(')('):
        xs = [int(t) - 1 for t in cyc.split(',')]
        for a in xs:
            if not 0 <= a < n:
                raise NotABijection(f'symbol {a + 1} out of range 1..{n}')
        for a, b in zip(xs, xs[1:] + xs[:1]):
            p[a] = b
    if sorted(p) != list(range(n)):
        raise NotABijection(f'cycles {s!r} overlap: image is not a bijection')
    return tuple(p)


def compose(f, g):
    """(f*g)(i) = f(g(i)) -- g applied first."""
    return tuple(f[g[i]] for i in range(len(f)))


def inverse(p):
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)


def cycles_of(p):
    n, seen, out = len(p), [False] * len(p), []
    for i in range(n):
        if not seen[i]:
            c, j = [i], p[i]
            seen[i] = True
            while j != i:
                c.append(j)
                seen[j] = True
                j = p[j]
            out.append(tuple(c))
    return out


def cycle_string(p):
    cs = [c for c in cycles_of(p) if len(c) > 1]
    return ''.join('(' + ','.join(str(x + 1) for x in c) + ')'
                   for c in cs) or 'id'


def _as_perm(spec, n):
    """Normalize a permutation spec to a 0-based tuple of length n.

    Accepted: 0-based tuple/list already of length n is NOT assumed --
    sequences of ints are read as 1-based one-line notation; strings and
    lists of lists are 1-based cycle notation.
    """
    if isinstance(spec, str):
        return parse_cycles(spec, n)
    if isinstance(spec, (list, tuple)):
        if spec and all(isinstance(c, (list, tuple)) for c in spec):
            return parse_cycles(
                ''.join('(' + ','.join(str(x) for x in c) + ')'
                        for c in spec), n)
        vals = [int(x) for x in spec]
        if len(vals) != n:
            raise NotABijection(
                f'one-line notation has length {len(vals)}, expected {n}')
        if sorted(vals) != list(range(1, n + 1)):
            raise NotABijection('one-line notation is not a bijection on '
                                f'1..{n}')
        return tuple(v - 1 for v in vals)
    raise NotABijection(f'cannot read a permutation from {spec!r}')


def _infer_n(spec):
    if isinstance(spec, str):
        toks = spec.replace('(', ' ').replace(')', ' ').replace(',', ' ')
        vals = [int(t) for t in toks.split()] or [1]
        return max(vals)
    if isinstance(spec, (list, tuple)):
        if spec and all(isinstance(c, (list, tuple)) for c in spec):
            return max((max(c) for c in spec if c), default=1)
        return len(spec)
    raise NotABijection(f'cannot read a permutation from {spec!r}')


class Origami:
    """Immutable connected square-tiled surface: 0-based tuples (h, v)."""

    __slots__ = ('n', 'h', 'v')

    def __init__(self, h, v):
        object.__setattr__(self, 'n', len(h))
        object.__setattr__(self, 'h', tuple(h))
        object.__setattr__(self, 'v', tuple(v))

    def __setattr__(self, *a):
        raise AttributeError('Origami is immutable')

    def pair(self):
        return (self.h, self.v)

    def __eq__(self, other):
        return (isinstance(other, Origami) and self.h == other.h
                and self.v == other.v)

    def __hash__(self):
        return hash((self.h, self.v))

    def __repr__(self):
        return (f'Origami(n={self.n}, h={cycle_string(self.h)}, '
                f'v={cycle_string(self.v)})')

    def to_json_obj(self):
        return {
            'n': self.n,
            'sigma_h': {'cycles': [[x + 1 for x in c]
                                   for c in cycles_of(self.h) if len(c) > 1]},
            'sigma_v': {'cycles': [[x + 1 for x in c]
                                   for c in cycles_of(self.v) if len(c) > 1]},
        }


def _check_connected(h, v):
    n = len(h)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        x = stack.pop()
        for y in (h[x], v[x], inverse(h)[x], inverse(v)[x]):
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    if count != n:
        raise Disconnected(
            f'the pair acts with {count}-square orbit of square 1, '
            f'not transitively on all {n}')


def make_origami(sigma_h, sigma_v, n=None):
    """Build a connected origami from two permutation specs (1-based
    one-line sequences, cycle strings, or lists of cycles)."""
    if n is None:
        n = max(_infer_n(sigma_h), _infer_n(sigma_v))
    h = _as_perm(sigma_h, n)
    v = _as_perm(sigma_v, n)
    _check_connected(h, v)
    return Origami(h, v)


def origami_from_json(obj):
    """Read the canonical JSON shape:
    {"n": N, "sigma_h": {"cycles": [[...], ...]} | {"one_line": [...]},
     "sigma_v": ...}."""
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    try:
        n = int(obj['n'])
        hs, vs = obj['sigma_h'], obj['sigma_v']
    except (KeyError, TypeError) as e:
        raise NotABijection(f'malformed origami object: missing {e}') from e

    def read(spec):
        if 'cycles' in spec:
            return _as_perm([list(c) for c in spec['cycles']] or [[1]], n)
        if 'one_line' in spec:
            return _as_perm(list(spec['one_line']), n)
        raise NotABijection('permutation object needs "cycles" or "one_line"')

    h, v = read(hs), read(vs)
    _check_connected(h, v)
    return Origami(h, v)


# --------------------------------------------------------- canonical form

def canonical_form(o):
    """Lex-least BFS relabeling.  Returns (canonical Origami, relabeling)
    where relabeling is the 0-based tuple phi with phi[old] = new."""
    h, v = o.h, o.v
    n = o.n
    best, bestmap = None, None
    for s in range(n):
        new = {s: 0}
        order = [s]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for g in (h, v):
                y = g[x]
                if y not in new:
                    new[y] = len(new)
                    order.append(y)
        h2, v2 = [0] * n, [0] * n
        for x in range(n):
            h2[new[x]] = new[h[x]]
            v2[new[x]] = new[v[x]]
        cand = (tuple(h2), tuple(v2))
        if best is None or cand < best:
            best, bestmap = cand, new
    phi = tuple(bestmap[x] for x in range(n))
    return Origami(best[0], best[1]), phi


# -------------------------------------------------- letter actions on pairs

def _act_T(p):
    h, v = p
    return (h, compose(v, inverse(h)))


def _act_Tinv(p):
    h, v = p
    return (h, compose(v, h))


def _act_S(p):
    h, v = p
    return (compose(h, inverse(v)), v)


def _act_Sinv(p):
    h, v = p
    return (compose(h, v), v)


LETTER_ACTION = {'T': _act_T, 't': _act_Tinv, 'S': _act_S, 's': _act_Sinv}


def act_word_on_pair(word, pair):
    """Raw action of a word in T, t, S, s on an (h, v) pair; the rightmost
    letter acts first."""
    for letter in reversed(word):
        pair = LETTER_ACTION[letter](pair)
    return pair


# ----------------------------------------------------- vertices and genus

def vertex_cycles(o):
    """Cycles of the commutator v h v^-1 h^-1; one cycle per vertex."""
    K = compose(compose(o.v, o.h), compose(inverse(o.v), inverse(o.h)))
    return cycles_of(K)


def corner_complex(o):
    """Vertex classes of the corner complex.

    Corner c of square i is the integer 4*i + c with c in
    {0: top-left, 1: top-right, 2: bottom-left, 3: bottom-right}.
    Returns a list of corner classes (sorted tuples); every class has size
    divisible by 4 and a class of size 4(k+1) is a cone point of order k.
    """
    TL, TR, BL, BR = 0, 1, 2, 3
    n = o.n
    parent = list(range(4 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in range(n):
        union(4 * i + TL, 4 * o.v[i] + BL)
        union(4 * i + TR, 4 * o.v[i] + BR)
        union(4 * i + BR, 4 * o.h[i] + BL)
        union(4 * i + TR, 4 * o.h[i] + TL)
    classes = {}
    for x in range(4 * n):
        classes.setdefault(find(x), []).append(x)
    out = sorted(tuple(sorted(c)) for c in classes.values())
    for c in out:
        assert len(c) % 4 == 0, 'corner class size not divisible by 4'
    return out


def singularity_profile(o):
    """Sorted orders of the cone points (regular vertices omitted)."""
    ks = [len(c) // 4 - 1 for c in corner_complex(o)]
    return sorted(k for k in ks if k > 0)


def genus(o):
    V = len(corner_complex(o))
    return (2 - (V - o.n)) // 2


# ----------------------------------------------------------------- catalog

_CATALOG_SPECS = {
    'torus': ('(1)', '(1)', 1),
    'octahedron-O': ('(1,2,3)(4,5,6)(7,8,9)(10,11,12)',
                     '(1,4,7)(2,9,11)(3,10,5)(6,12,8)', 12),
    'cube-C1': ('(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)'
                '(17,18,19,20)(21,22,23,24)',
                '(1,9,14,22)(2,20,13,7)(3,24,16,11)(4,5,15,18)'
                '(6,10,17,21)(8,23,19,12)', 24),
    'mutetrahedron-M': ('(1,2,3,4,5,6)(7,8,9,10,11,12)(13,14,15,16,17,18)'
                        '(19,20,21,22,23,24)',
                        '(1,7,13,11,3,21)(2,20,14,12,18,22)(4,10,16,8,6,24)'
                        '(5,23,17,9,15,19)', 24),
}

CATALOG_NAMES = ('torus', 'octahedron-O', 'cube-C1', 'cube-C',
                 'mutetrahedron-M')


def catalog(name):
    """Named surfaces used throughout the test corpus.

    ``cube-C`` is the image of ``cube-C1`` under the word TSS (so its
    numbering is inherited from cube-C1 by the raw letter action, not
    canonicalized).
    """
    if name == 'cube-C':
        c1 = catalog('cube-C1')
        h, v = act_word_on_pair('TSS', c1.pair())
        return Origami(h, v)
    if name not in _CATALOG_SPECS:
        raise UnknownName(
            f'unknown catalog name {name!r}; known: {", ".join(CATALOG_NAMES)}')
    hs, vs, n = _CATALOG_SPECS[name]
    return Origami(parse_cycles(hs, n), parse_cycles(vs, n))
