"""SL(2,Z)-orbit of a square-tiled surface and its Veech group.

SL(2,Z) acts on origami pairs through the two parabolic generators

    T = [[1, 1], [0, 1]]  :  (h, v) -> (h, v h^-1)
    S = [[1, 0], [1, 1]]  :  (h, v) -> (h v^-1, v),

together with their inverses, written as the four letters T, t, S, s.  A
word acts with its rightmost letter first, and the matrix of a word is the
product of letter matrices in string order, so ``act_word`` and
``word_matrix`` are compatible actions/antihomomorphisms in the usual
mapping-class bookkeeping.

The orbit of a surface under the letter action on canonical forms is a
finite graph; the Veech group (the stabilizer of the surface, equivalently
of its canonical form) is generated by the Schreier words read off a
spanning tree of that graph.  Deciding whether two word-generated subgroups
of SL(2,Z) coincide is done honestly, by Todd--Coxeter coset enumeration
against the finite presentation SL(2,Z) = < x, y | x^4, x^2 y^-3 > with
T = x^-1 y and S = x y^-1: two subgroups of the same finite index whose
join has that index too must be equal.
"""

from fractions import Fraction

from .errors import OrbitTooLarge, WordDoesNotStabilize
from .perms import LETTER_ACTION, Origami, canonical_form

MAT2 = {'T': [[1, 1], [0, 1]], 't': [[1, -1], [0, 1]],
        'S': [[1, 0], [1, 1]], 's': [[1, 0], [-1, 1]]}

_FLIP = {'T': 't', 't': 'T', 'S': 's', 's': 'S'}


def word_matrix(word):
    """Product of letter matrices in string order."""
    M = [[1, 0], [0, 1]]
    for letter in word:
        a = MAT2[letter]
        M = [[M[0][0] * a[0][0] + M[0][1] * a[1][0],
              M[0][0] * a[0][1] + M[0][1] * a[1][1]],
             [M[1][0] * a[0][0] + M[1][1] * a[1][0],
              M[1][0] * a[0][1] + M[1][1] * a[1][1]]]
    return M


def inv_word(word):
    """Formal inverse: reverse the string and flip each letter's case."""
    return ''.join(_FLIP[letter] for letter in reversed(word))


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1] == _FLIP[letter]:
            out.pop()
        else:
            out.append(letter)
    return ''.join(out)


class GroupWord:
    """A word in the letters T, t, S, s together with its SL(2,Z) matrix."""

    __slots__ = ('letters', 'matrix')

    def __init__(self, letters):
        self.letters = letters
        self.matrix = word_matrix(letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f'GroupWord({self.letters!r})'

    def __str__(self):
        return self.letters


def act_word(word, o):
    """Raw action of a word on an origami (labels preserved)."""
    h, v = o.pair()
    for letter in reversed(word):
        h, v = LETTER_ACTION[letter]((h, v))
    return Origami(h, v)


def apply_letter(o, letter):
    """One letter, then canonicalize.  Returns (canonical image, relabeling)
    where the relabeling phi maps the labels of the raw image (= labels of
    o) to the canonical representative: phi[old] = new."""
    h, v = LETTER_ACTION[letter](o.pair())
    return canonical_form(Origami(h, v))


class OrbitGraph:
    """BFS orbit of the canonical form under the four letters.

    Attributes:
      nodes      list of canonical Origami, nodes[0] = canonical form of the
                 input (the base point);
      index      dict canonical Origami -> node index;
      edges      dict (i, letter) -> (j, relabeling) for all four letters at
                 every node; the relabeling maps labels of the raw letter
                 image of nodes[i] to nodes[j];
      tree_words list, tree_words[i] is a word carrying the base to node i
                 (empty at the base; these are spanning-tree words);
      base_relabel  relabeling from the input surface to nodes[0].
    """

    def __init__(self, nodes, index, edges, tree_words, base_relabel):
        self.nodes = nodes
        self.index = index
        self.edges = edges
        self.tree_words = tree_words
        self.base_relabel = base_relabel

    def __len__(self):
        return len(self.nodes)


def orbit(o, cap=10**6):
    """Breadth-first SL(2,Z)-orbit of canonical forms.

    Raises OrbitTooLarge when more than ``cap`` nodes appear.
    """
    base, base_relabel = canonical_form(o)
    nodes = [base]
    index = {base: 0}
    tree_words = ['']
    edges = {}
    frontier = 0
    while frontier < len(nodes):
        i = frontier
        frontier += 1
        for letter in 'TtSs':
            img, relabel = apply_letter(nodes[i], letter)
            j = index.get(img)
            if j is None:
                j = len(nodes)
                if j >= cap:
                    raise OrbitTooLarge(
                        f'orbit exceeded the cap of {cap} surfaces')
                nodes.append(img)
                index[img] = j
                tree_words.append(letter + tree_words[i])
            edges[(i, letter)] = (j, relabel)
    return OrbitGraph(nodes, index, edges, tree_words, base_relabel)


def veech_generators(graph):
    """Schreier generators of the Veech group from the orbit graph.

    For the edge i --letter--> j the stabilizing word is
    inv(u_j) + letter + u_i where u_i are the spanning-tree words; tree
    edges give trivial words and are skipped, and a word whose formal
    inverse was already collected is skipped as redundant.
    """
    words = []
    have = set()
    for i in range(len(graph.nodes)):
        u_i = graph.tree_words[i]
        for letter in 'TtSs':
            j, _ = graph.edges[(i, letter)]
            w = free_reduce(inv_word(graph.tree_words[j]) + letter + u_i)
            if not w or w in have:
                continue
            if inv_word(w) in have:
                continue
            have.add(w)
            words.append(w)
    return [GroupWord(w) for w in words]


def _as_letters(words):
    out = []
    for w in words:
        out.append(w.letters if isinstance(w, GroupWord) else str(w))
    return out


def _check_stabilizes(word, graph):
    img, _ = canonical_form(act_word(word, graph.nodes[0]))
    if img != graph.nodes[0]:
        raise WordDoesNotStabilize(
            f'word {word!r} moves the surface within its orbit')


def subgroup_equals(words_a, words_b, graph):
    """Exact equality test for the subgroups of SL(2,Z) generated by two
    word lists, both of which must stabilize the base surface of ``graph``.

    Uses Todd--Coxeter coset enumeration against the finite presentation of
    SL(2,Z): subgroups A and B agree iff [SL(2,Z):A] = [SL(2,Z):B] =
    [SL(2,Z):<A, B>], all three indices being finite here because both
    groups contain a finite-index Veech group.
    """
    from sympy.combinatorics.fp_groups import FpGroup
    from sympy.combinatorics.free_groups import free_group

    wa, wb = _as_letters(words_a), _as_letters(words_b)
    for w in wa + wb:
        _check_stabilizes(w, graph)

    F, x, y = free_group('x y')
    G = FpGroup(F, [x**4, x**2 * y**-3])
    img = {'T': x**-1 * y, 'S': x * y**-1}
    img['t'] = img['T'] ** -1
    img['s'] = img['S'] ** -1

    def to_g(word):
        el = G.free_group.identity
        for letter in word:
            el = el * img[letter]
        return el

    def index(words):
        return G.coset_enumeration([to_g(w) for w in words],
                                   max_cosets=100000).n

    ia = index(wa)
    ib = index(wb)
    if ia != ib:
        return False
    return index(wa + wb) == ia


def matrix_to_word(M):
    """A word in the letters T, t, S, s whose matrix equals M in SL(2,Z).

    Euclidean reduction on the first column, a (TsT)^2 = -Id fix-up when
    needed, then clearing the upper-right entry.
    """
    a, b, c, d = M[0][0], M[0][1], M[1][0], M[1][1]
    if a * d - b * c != 1:
        raise ValueError('matrix is not in SL(2,Z)')
    work = [[a, b], [c, d]]
    left = []

    def lmul(A):
        w = work
        return [[A[0][0] * w[0][0] + A[0][1] * w[1][0],
                 A[0][0] * w[0][1] + A[0][1] * w[1][1]],
                [A[1][0] * w[0][0] + A[1][1] * w[1][0],
                 A[1][0] * w[0][1] + A[1][1] * w[1][1]]]

    while work[1][0] != 0:
        a, c = work[0][0], work[1][0]
        if a == 0:
            work = lmul([[0, 1], [-1, 0]])
            left += ['T', 's', 'T']
        elif abs(a) >= abs(c):
            q = round(Fraction(a, c))
            work = lmul([[1, -q], [0, 1]])
            left += ['t' if q > 0 else 'T'] * abs(q)
        else:
            q = round(Fraction(c, a))
            work = lmul([[1, 0], [-q, 1]])
            left += ['s' if q > 0 else 'S'] * abs(q)
    if work[0][0] == -1:
        for letter in 'TsTTsT':
            work = lmul(MAT2[letter])
            left += [letter]
    b = work[0][1]
    if b:
        work = lmul([[1, -b], [0, 1]])
        left += ['t' if b > 0 else 'T'] * abs(b)
    assert work == [[1, 0], [0, 1]], work
    word = ''.join(_FLIP[letter] for letter in left)
    assert word_matrix(word) == M
    return word
