"""Affine diffeomorphisms and their action on homology.

A word w in the letters T, t, S, s that stabilizes a surface X (its
SL(2,Z)-image is isomorphic to X) determines an affine diffeomorphism of X
with derivative word_matrix(w), well defined up to composition with a
translation automorphism.  Its homology action is assembled in two stages:

* the letter chain maps: shearing by T sends the square decomposition of X
  to that of TX, taking h_i to h_i and v_i to the staircase h_i + v_{h(i)}
  (and analogously for the other three letters); composing these along the
  word gives a chain map C_1(X) -> C_1(wX);
* a relabeling isomorphism wX -> X closing the loop.  The relabeling is
  chosen deterministically as phi_0^-1 . phi_w, where phi_0 and phi_w are
  the canonical-form relabelings of X and wX (both land on the same
  canonical surface whenever w stabilizes X).

Because of the automorphism ambiguity, any two implementations' matrices
for the same word agree only up to the homology action of Aut(X); exact
comparisons should quotient by that finite set.

``monodromy_generators`` returns affine elements for a full Schreier
generating set of the Veech group: their zero-holonomy restrictions,
together with Aut(X), generate the monodromy group whose Zariski closure
the ``zariski`` module bounds.
"""

from .autgroup import perm_chain_matrix
from .errors import WordDoesNotStabilize
from .homology import surface_basis
from .linalg import mat_mul
from .orbits import GroupWord, act_word, orbit, veech_generators, word_matrix
from .parallel import pmap
from .perms import LETTER_ACTION, canonical_form, inverse


def letter_chain_map(o, letter):
    """2n x 2n integer chain map C_1(o) -> C_1(letter . o); columns indexed
    by source edges (h_i at i, v_i at n+i)."""
    h, v = o.h, o.v
    n = o.n
    hinv, vinv = inverse(h), inverse(v)
    M = [[0] * (2 * n) for _ in range(2 * n)]
    if letter == 'T':          # h_i -> h_i ; v_i -> h_i + v_{h(i)}
        for i in range(n):
            M[i][i] += 1
            M[i][n + i] += 1
            M[n + h[i]][n + i] += 1
    elif letter == 't':        # h_i -> h_i ; v_i -> v_{h^-1(i)} - h_{h^-1(i)}
        for i in range(n):
            M[i][i] += 1
            j = hinv[i]
            M[n + j][n + i] += 1
            M[j][n + i] -= 1
    elif letter == 'S':        # v_i -> v_i ; h_i -> v_i + h_{v(i)}
        for i in range(n):
            M[n + i][n + i] += 1
            M[n + i][i] += 1
            M[v[i]][i] += 1
    elif letter == 's':        # v_i -> v_i ; h_i -> h_{v^-1(i)} - v_{v^-1(i)}
        for i in range(n):
            M[n + i][n + i] += 1
            j = vinv[i]
            M[j][i] += 1
            M[n + j][i] -= 1
    else:
        raise ValueError(f'unknown letter {letter!r}')
    return M


class AffineElement:
    """An affine diffeomorphism given by a stabilizing word.

    word         the letters (str);
    derivative   its SL(2,Z) matrix;
    relabeling   the square relabeling wX -> X that was used to close up;
    matrix_full  homology action on the full curve frame;
    matrix_zero  its restriction to the zero-holonomy frame.
    """

    __slots__ = ('word', 'derivative', 'relabeling', 'matrix_full',
                 'matrix_zero')

    def __init__(self, word, derivative, relabeling, matrix_full, matrix_zero):
        self.word = word
        self.derivative = derivative
        self.relabeling = relabeling
        self.matrix_full = matrix_full
        self.matrix_zero = matrix_zero

    def __repr__(self):
        return f'AffineElement({self.word!r})'


def affine_action(o, word, basis):
    """Homology action of the affine element with derivative word ``word``.

    Raises WordDoesNotStabilize if the word moves the surface in its
    SL(2,Z)-orbit.
    """
    word = word.letters if isinstance(word, GroupWord) else str(word)
    n = o.n
    canon0, phi0 = canonical_form(o)
    pair = o.pair()
    F = [[int(i == j) for j in range(2 * n)] for i in range(2 * n)]
    from .perms import Origami
    for letter in reversed(word):
        F = mat_mul(letter_chain_map(Origami(pair[0], pair[1]), letter), F)
        pair = LETTER_ACTION[letter](pair)
    img = Origami(pair[0], pair[1])
    canon_w, phi_w = canonical_form(img)
    if canon_w != canon0:
        raise WordDoesNotStabilize(
            f'word {word!r} moves the surface within its orbit')
    phi0_inv = inverse(phi0)
    psi = tuple(phi0_inv[phi_w[x]] for x in range(n))
    chain_map = mat_mul(perm_chain_matrix(psi, n), F)
    full = basis.chain_map_in_curves(chain_map)
    zero = basis.restrict_zero(full)
    return AffineElement(word, word_matrix(word), psi, full, zero)


def monodromy_generators(o, basis=None, orbit_cap=10**6, graph=None):
    """Affine elements for a Schreier generating set of the Veech group."""
    if graph is None:
        graph = orbit(o, cap=orbit_cap)
    if basis is None:
        basis = surface_basis(o, 'auto')
    words = veech_generators(graph)
    return pmap(lambda w: affine_action(o, w, basis), words)
