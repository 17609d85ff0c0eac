"""Trace maps between ranks and the cyclic-to-symmetric quotients.

``MatrixExtension`` packages the odd symplectic space of matrix-valued
letters (letter, row, col), the inflation map M that tensors a cyclic
word with the trace of a product of elementary matrices (and sends nu
to N nu), and the restriction map R to the top-left corner.

``sigma`` is the quotient from cyclic words to polynomials: a word
flattens to the product of its letters, nu goes to 1, and the map is
extended multiplicatively over symmetric products.  ``sigma_K`` is the
weighted variant recording the genus/boundary weight h^{2i+j+n-1} for a
monomial gamma^i nu^j with n word factors (so the bare nu monomial has
weight h^0: it is a single empty word).
"""

from .ainfinity import matrix_name
from .element import COMMUTATIVE, CYCLIC, Element
from .scalar import Scalar
from .space import GradedSymplecticSpace
from .words import Monomial


class MatrixExtension:
    """The decorated space V (x) Mat_N with its inflation/restriction maps."""

    def __init__(self, base: GradedSymplecticSpace, size: int):
        if size < 1:
            raise ValueError("matrix size must be at least 1")
        self.base = base
        self.size = size
        n = base.dim
        letters = []
        degrees = []
        scales = []
        for i in range(n):
            for p in range(size):
                for q in range(size):
                    letters.append(matrix_name(base.letters[i], p, q))
                    degrees.append(base.degrees[i])
                    scales.append(base.dual_scales[i])
        dim = n * size * size
        pairing = [[Scalar(0)] * dim for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                entry = base.pairing[i][j]
                if not entry:
                    continue
                for p in range(size):
                    for q in range(size):
                        pairing[self.encode(i, p, q)][self.encode(j, q, p)] = entry
        self.space = GradedSymplecticSpace(
            tuple(letters), tuple(degrees), tuple(map(tuple, pairing)),
            dual_scales=tuple(scales),
        )

    def encode(self, letter: int, row: int, col: int) -> int:
        return (letter * self.size + row) * self.size + col

    def decode(self, index: int) -> tuple[int, int, int]:
        letter, rest = divmod(index, self.size * self.size)
        row, col = divmod(rest, self.size)
        return letter, row, col

    # -- the inflation map M ------------------------------------------

    def inflate_word(self, word) -> Element:
        """Sum over matrix decorations weighted by the trace of the
        product: letter t gets indices (p_t, p_{t+1}), cyclically."""
        size = self.size
        out = Element.zero(self.space, CYCLIC)
        chains = [(p,) for p in range(size)]
        for _ in range(len(word) - 1):
            chains = [chain + (p,) for chain in chains for p in range(size)]
        for chain in chains:
            decorated = tuple(
                self.encode(letter, chain[t], chain[(t + 1) % len(word)])
                for t, letter in enumerate(word)
            )
            out._accumulate(0, 0, (decorated,), Scalar(1))
        return out

    def inflate(self, element: Element) -> Element:
        """The map M on S(NCHam): multiplicative over factors, nu -> N nu."""
        if element.space != self.base:
            raise ValueError("element does not live over the base space")
        if element.flavor != CYCLIC:
            raise ValueError("M is defined on cyclic-side elements")
        out = Element.zero(self.space, CYCLIC)
        for monomial, coeff in element.terms.items():
            piece = Element(
                self.space,
                CYCLIC,
                {Monomial(monomial.gamma, monomial.nu, ()): coeff
                 * Scalar(self.size) ** monomial.nu},
            )
            for word in monomial.words:
                piece = piece.sym_product(self.inflate_word(word))
            out = out + piece
        return out

    # -- the restriction map R ----------------------------------------

    def restrict(self, element: Element) -> Element:
        """Corner restriction: keep letters decorated (0,0), linear over
        nu and gamma."""
        if element.space != self.space:
            raise ValueError("element does not live over the matrix space")
        if element.flavor != CYCLIC:
            raise ValueError("R is defined on cyclic-side elements")
        out = Element.zero(self.base, CYCLIC)
        for monomial, coeff in element.terms.items():
            words = []
            dead = False
            for word in monomial.words:
                stripped = []
                for index in word:
                    letter, row, col = self.decode(index)
                    if row or col:
                        dead = True
                        break
                    stripped.append(letter)
                if dead:
                    break
                words.append(stripped)
            if not dead:
                out._accumulate(monomial.gamma, monomial.nu, words, coeff)
        return out


def sigma(element: Element) -> Element:
    """Quotient to the commutative side: flatten words, nu -> 1."""
    if element.flavor != CYCLIC:
        raise ValueError("sigma takes cyclic-side elements")
    out = Element.zero(element.space, COMMUTATIVE)
    for monomial, coeff in element.terms.items():
        if monomial.gamma:
            raise ValueError("sigma is not defined on genus-weighted monomials")
        letters = [letter for word in monomial.words for letter in word]
        out._accumulate(0, 0, [[l] for l in letters], coeff)
    return out


def sigma_K(element: Element) -> dict[int, Element]:
    """Weighted quotient: returns {h-power: commutative element}.

    A monomial gamma^i nu^j w_1...w_n carries weight h^{2i+j+n-1}; the
    empty symmetric product (i = j = n = 0) is outside the domain.
    """
    if element.flavor != CYCLIC:
        raise ValueError("sigma_K takes cyclic-side elements")
    graded: dict[int, Element] = {}
    for monomial, coeff in element.terms.items():
        n = len(monomial.words)
        if monomial.nu + n == 0:
            raise ValueError("sigma_K needs at least one word or nu factor")
        weight = 2 * monomial.gamma + monomial.nu + n - 1
        letters = [letter for word in monomial.words for letter in word]
        bucket = graded.setdefault(weight, Element.zero(element.space, COMMUTATIVE))
        bucket._accumulate(0, 0, [[l] for l in letters], coeff)
    return {power: el for power, el in graded.items() if not el.is_zero()}
