"""The odd bracket, cobracket, differentials and BV Laplacian.

All operators share one sign discipline: a formula produces raw letter
sequences together with the Koszul sign of the rearrangement that
brought the contracted letters to the front, and canonicalization (in
the element layer) supplies every remaining sign.  The conventions are
pinned operationally by the two-dimensional algebra of the GUE engine:
{x,xi} = 1 = {xi,x}, {(x),(xi)} = nu, cobracket(x xi) = nu^2 and the
regression table of moment polynomials.

Word-level contractions bring the paired letters to the front of their
words; the residual signs are

    bracket:    rot(u,i) . rot(v,j) . (-1)^{|b_j| |u - a_i|}
    cobracket:  rot(w,i) . (-1)^{|a_j| |arc between i and j|}

and the Leibniz/derivation extensions to products of words move whole
factors with (-1)^{parity.parity} transport signs.
"""

from .element import COMMUTATIVE, CYCLIC, Element
from .scalar import Scalar
from .words import Monomial, word_parity


def _rotation_signs(space, word):
    """sign[i] = Koszul sign rotating word so position i comes first."""
    total = word_parity(space, word)
    signs = [1] * len(word)
    sign = 1
    for i in range(1, len(word)):
        p = space.parity(word[i - 1])
        if p and (total - p) % 2:
            sign = -sign
        signs[i] = sign
    return signs


def _prefix_parities(space, word):
    """prefix[i] = parity of letters strictly before position i."""
    out = [0] * (len(word) + 1)
    for i, letter in enumerate(word):
        out[i + 1] = (out[i] + space.parity(letter)) % 2
    return out


def bracket_words(space, u, v):
    """Raw bracket of two cyclic words: list of (coeff, spliced letters).

    Pairs letter a_i of u with letter b_j of v through the inverse form
    and splices the remaining arcs into one cyclic word.
    """
    inv = space.inverse
    rot_u = _rotation_signs(space, u)
    rot_v = _rotation_signs(space, v)
    parity_u = word_parity(space, u)
    out = []
    for i, a in enumerate(u):
        rest_parity = (parity_u - space.parity(a)) % 2
        for j, b in enumerate(v):
            coeff = inv[a][b]
            if not coeff:
                continue
            sign = rot_u[i] * rot_v[j]
            if rest_parity and space.parity(b):
                sign = -sign
            splice = u[i + 1 :] + u[:i] + v[j + 1 :] + v[:j]
            out.append((sign * coeff, splice))
    return out


def cobracket_word(space, word):
    """Raw cobracket of one cyclic word: list of (coeff, arc1, arc2)."""
    inv = space.inverse
    rot = _rotation_signs(space, word)
    prefix = _prefix_parities(space, word)
    out = []
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            coeff = inv[word[i]][word[j]]
            if not coeff:
                continue
            sign = rot[i]
            arc1_parity = (prefix[j] - prefix[i + 1]) % 2
            if arc1_parity and space.parity(word[j]):
                sign = -sign
            arc1 = word[i + 1 : j]
            arc2 = word[j + 1 :] + word[:i]
            out.append((sign * coeff, arc1, arc2))
    return out


def _word_parities(space, monomial):
    return [word_parity(space, w) for w in monomial.words]


def _monomial_without(monomial, drop):
    words = tuple(w for t, w in enumerate(monomial.words) if t not in drop)
    return words


class OperatorContext:
    """Shared read-only state: the space, its inverse form and an optional
    internal differential given on letters (letter -> [(coeff, letter)])."""

    def __init__(self, space, letter_diff=None):
        self.space = space
        if letter_diff is not None:
            letter_diff = {
                letter: tuple((Scalar(c), target) for c, target in images)
                for letter, images in letter_diff.items()
            }
        self.letter_diff = letter_diff

    def _require(self, element, flavor):
        if element.space != self.space:
            raise ValueError("element lives over a different space than this context")
        if element.flavor != flavor:
            raise ValueError(f"operation requires {flavor}-flavor elements")

    # -- cyclic side ----------------------------------------------------

    def nc_bracket(self, left: Element, right: Element) -> Element:
        """Odd Lie bracket on S(NCHam(V)), Leibniz-extended over factors."""
        self._require(left, CYCLIC)
        self._require(right, CYCLIC)
        space = self.space
        out = Element.zero(space, CYCLIC)
        for m1, c1 in left.terms.items():
            pars1 = _word_parities(space, m1)
            total1 = sum(pars1) % 2
            for m2, c2 in right.terms.items():
                pars2 = _word_parities(space, m2)
                base = c1 * c2
                pre1 = 0
                for i, w1 in enumerate(m1.words):
                    pre2 = 0
                    for j, w2 in enumerate(m2.words):
                        sign = 1
                        if pars1[i] and pre1 % 2:
                            sign = -sign
                        if pars2[j] and (total1 + pars1[i] + pre2) % 2:
                            sign = -sign
                        pairs = bracket_words(space, w1, w2)
                        if pairs:
                            rest = (
                                _monomial_without(m1, {i})
                                + _monomial_without(m2, {j})
                            )
                            for coeff, splice in pairs:
                                out._accumulate(
                                    m1.gamma + m2.gamma,
                                    m1.nu + m2.nu,
                                    (splice,) + rest,
                                    sign * coeff * base,
                                )
                        pre2 += pars2[j]
                    pre1 += pars1[i]
        return out

    def nc_cobracket(self, element: Element) -> Element:
        """Cobracket, extended to products of words as an odd derivation."""
        self._require(element, CYCLIC)
        space = self.space
        out = Element.zero(space, CYCLIC)
        for monomial, coeff in element.terms.items():
            pars = _word_parities(space, monomial)
            prefix = 0
            for i, word in enumerate(monomial.words):
                # odd derivation past the prefix; the two arcs stay in place
                sign = -1 if prefix % 2 else 1
                before = monomial.words[:i]
                after = monomial.words[i + 1 :]
                for c, arc1, arc2 in cobracket_word(space, word):
                    out._accumulate(
                        monomial.gamma,
                        monomial.nu,
                        before + (arc1, arc2) + after,
                        sign * c * coeff,
                    )
                prefix += pars[i]
        return out

    def ce_delta(self, element: Element) -> Element:
        """Chevalley-Eilenberg differential: bracket each pair of factors."""
        self._require(element, CYCLIC)
        space = self.space
        out = Element.zero(space, CYCLIC)
        for monomial, coeff in element.terms.items():
            pars = _word_parities(space, monomial)
            prefix = [0]
            for p in pars:
                prefix.append(prefix[-1] + p)
            for i in range(len(monomial.words)):
                for j in range(i + 1, len(monomial.words)):
                    sign = 1
                    if pars[i] and prefix[i] % 2:
                        sign = -sign
                    if pars[j] and (prefix[j] + pars[i]) % 2:
                        sign = -sign
                    rest = _monomial_without(monomial, {i, j})
                    for c, splice in bracket_words(space, monomial.words[i], monomial.words[j]):
                        out._accumulate(
                            monomial.gamma,
                            monomial.nu,
                            (splice,) + rest,
                            sign * c * coeff,
                        )
        return out

    def delta_K(self, element: Element) -> Element:
        """The combined differential: cobracket plus genus-weighted delta."""
        grad = self.nc_cobracket(element)
        for monomial, coeff in self.ce_delta(element).terms.items():
            bumped = Monomial(monomial.gamma + 1, monomial.nu, monomial.words)
            new = grad.terms.get(bumped, Scalar(0)) + coeff
            if new:
                grad.terms[bumped] = new
            else:
                grad.terms.pop(bumped, None)
        return grad

    # -- commutative side ------------------------------------------------

    def com_poisson(self, left: Element, right: Element) -> Element:
        """Odd Poisson bracket on polynomials, a biderivation on letters."""
        self._require(left, COMMUTATIVE)
        self._require(right, COMMUTATIVE)
        space = self.space
        inv = space.inverse
        out = Element.zero(space, COMMUTATIVE)
        for m1, c1 in left.terms.items():
            letters1 = [w[0] for w in m1.words]
            pars1 = [space.parity(l) for l in letters1]
            total1 = sum(pars1) % 2
            for m2, c2 in right.terms.items():
                letters2 = [w[0] for w in m2.words]
                pars2 = [space.parity(l) for l in letters2]
                base = c1 * c2
                pre1 = 0
                for i, a in enumerate(letters1):
                    pre2 = 0
                    for j, b in enumerate(letters2):
                        coeff = inv[a][b]
                        if coeff:
                            sign = 1
                            if pars1[i] and pre1 % 2:
                                sign = -sign
                            if pars2[j] and (total1 + pars1[i] + pre2) % 2:
                                sign = -sign
                            rest = (
                                _monomial_without(m1, {i})
                                + _monomial_without(m2, {j})
                            )
                            out._accumulate(0, 0, rest, sign * coeff * base)
                        pre2 += pars2[j]
                    pre1 += pars1[i]
        return out

    def bv_laplacian(self, element: Element) -> Element:
        """Second-order BV operator: contract all letter pairs with the
        inverse form; vanishes on constants and linear terms."""
        self._require(element, COMMUTATIVE)
        space = self.space
        inv = space.inverse
        out = Element.zero(space, COMMUTATIVE)
        for monomial, coeff in element.terms.items():
            letters = [w[0] for w in monomial.words]
            pars = [space.parity(l) for l in letters]
            prefix = [0]
            for p in pars:
                prefix.append(prefix[-1] + p)
            for i in range(len(letters)):
                for j in range(i + 1, len(letters)):
                    c = inv[letters[i]][letters[j]]
                    if not c:
                        continue
                    sign = 1
                    if pars[i] and prefix[i] % 2:
                        sign = -sign
                    if pars[j] and (prefix[j] + pars[i]) % 2:
                        sign = -sign
                    rest = _monomial_without(monomial, {i, j})
                    out._accumulate(0, 0, rest, sign * c * coeff)
        return out

    # -- internal differential and Maurer-Cartan defect -------------------

    def internal_differential(self, element: Element) -> Element:
        """Degree +1 derivation induced by the declared letter differential.

        Works on both flavors: words of letters and polynomials extend
        the same way."""
        if self.letter_diff is None:
            raise ValueError("this context has no declared internal differential")
        if element.space != self.space:
            raise ValueError("element lives over a different space than this context")
        space = self.space
        out = Element.zero(element.space, element.flavor)
        for monomial, coeff in element.terms.items():
            pars = _word_parities(space, monomial)
            word_prefix = 0
            for i, word in enumerate(monomial.words):
                outer = -1 if word_prefix % 2 else 1
                letter_prefix = _prefix_parities(space, word)
                for pos, letter in enumerate(word):
                    images = self.letter_diff.get(letter)
                    if not images:
                        continue
                    sign = -outer if letter_prefix[pos] % 2 else outer
                    for c, target in images:
                        new_word = word[:pos] + (target,) + word[pos + 1 :]
                        new_words = (
                            monomial.words[:i] + (new_word,) + monomial.words[i + 1 :]
                        )
                        out._accumulate(
                            monomial.gamma, monomial.nu, new_words, sign * c * coeff
                        )
                word_prefix += pars[i]
        return out

    def bracket(self, left: Element, right: Element) -> Element:
        """Flavor-appropriate odd bracket."""
        if left.flavor == CYCLIC:
            return self.nc_bracket(left, right)
        return self.com_poisson(left, right)

    def mc_defect(self, element: Element) -> Element:
        """Maurer-Cartan defect d(x) + (1/2){x,x}; zero iff x solves the
        master equation at this level.  d is the declared internal
        differential when present, zero otherwise."""
        half_sq = self.bracket(element, element).scale(Scalar(1, 2))
        if self.letter_diff is None:
            return half_sq
        return self.internal_differential(element) + half_sq
