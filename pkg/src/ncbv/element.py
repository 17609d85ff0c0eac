"""Formal linear combinations of monomials over an odd symplectic space.

An Element is a finite map from canonical monomials to nonzero scalars,
tagged with the space it lives over and a flavor:

* ``CYCLIC`` -- elements of S(NCHam(V)): products of cyclic words with
  gamma/nu powers;
* ``COMMUTATIVE`` -- polynomials in the letters (the symmetric algebra
  on V*), represented as products of single-letter words with
  gamma = nu = 0.

Both flavors share the same canonicalization, addition and graded
product; the operators module enforces which operations make sense on
which flavor.
"""

from .scalar import Scalar, format_scalar, parse_scalar
from .words import Monomial, canonicalize_monomial, monomial_degree

CYCLIC = "cyclic"
COMMUTATIVE = "commutative"


class Element:
    __slots__ = ("space", "flavor", "terms")

    def __init__(self, space, flavor, terms=None):
        if flavor not in (CYCLIC, COMMUTATIVE):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.space = space
        self.flavor = flavor
        self.terms: dict[Monomial, Scalar] = {}
        if terms:
            for monomial, coeff in terms.items():
                if coeff:
                    self._check_monomial(monomial)
                    self.terms[monomial] = Scalar(coeff)

    def _check_monomial(self, monomial: Monomial) -> None:
        if self.flavor == COMMUTATIVE:
            if monomial.gamma or monomial.nu:
                raise ValueError("commutative-flavor monomials carry no gamma/nu powers")
            if any(len(word) != 1 for word in monomial.words):
                raise ValueError("commutative-flavor monomials are products of letters")

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, space, flavor=CYCLIC) -> "Element":
        return cls(space, flavor)

    @classmethod
    def from_terms(cls, space, flavor, raw_terms) -> "Element":
        """Build from ``(gamma, nu, raw_words, coeff)`` items, canonicalizing."""
        out = cls(space, flavor)
        for gamma, nu, raw_words, coeff in raw_terms:
            out._accumulate(gamma, nu, raw_words, Scalar(coeff))
        return out

    @classmethod
    def unit(cls, space, flavor=CYCLIC) -> "Element":
        return cls(space, flavor, {Monomial(0, 0, ()): Scalar(1)})

    @classmethod
    def cyclic_word(cls, space, letters, coeff=1) -> "Element":
        """The class of one raw cyclic word (canonicalized, possibly zero).

        ``letters`` is a sequence of letter names or indices; a bare
        string denotes a single letter.
        """
        if isinstance(letters, str):
            letters = [letters]
        names = [space.index(l) if isinstance(l, str) else l for l in letters]
        return cls.from_terms(space, CYCLIC, [(0, 0, [names], coeff)])

    @classmethod
    def nu_power(cls, space, power=1, coeff=1) -> "Element":
        return cls(space, CYCLIC, {Monomial(0, power, ()): Scalar(coeff)})

    @classmethod
    def poly_letters(cls, space, letters, coeff=1) -> "Element":
        """Commutative monomial from a sequence of letters."""
        if isinstance(letters, str):
            letters = [letters]
        names = [space.index(l) if isinstance(l, str) else l for l in letters]
        return cls.from_terms(space, COMMUTATIVE, [(0, 0, [[n] for n in names], coeff)])

    def _accumulate(self, gamma, nu, raw_words, coeff) -> None:
        if not coeff:
            return
        canon = canonicalize_monomial(self.space, gamma, nu, raw_words)
        if canon is None:
            return
        monomial, sign = canon
        self._check_monomial(monomial)
        new = self.terms.get(monomial, Scalar(0)) + sign * coeff
        if new:
            self.terms[monomial] = new
        else:
            self.terms.pop(monomial, None)

    # -- linear structure ---------------------------------------------

    def _require_same(self, other: "Element") -> None:
        if self.space != other.space:
            raise ValueError("elements live over different spaces")
        if self.flavor != other.flavor:
            raise ValueError("elements have different flavors")

    def __add__(self, other: "Element") -> "Element":
        self._require_same(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            new = terms.get(monomial, Scalar(0)) + coeff
            if new:
                terms[monomial] = new
            else:
                terms.pop(monomial, None)
        return Element(self.space, self.flavor, terms)

    def __neg__(self) -> "Element":
        return Element(self.space, self.flavor, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, coeff) -> "Element":
        coeff = Scalar(coeff)
        if not coeff:
            return Element.zero(self.space, self.flavor)
        return Element(self.space, self.flavor, {m: coeff * c for m, c in self.terms.items()})

    def __rmul__(self, coeff) -> "Element":
        return self.scale(coeff)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.sym_product(other)
        return self.scale(other)

    def sym_product(self, other: "Element") -> "Element":
        """Graded-commutative product, Koszul signs via renormalization."""
        self._require_same(other)
        out = Element(self.space, self.flavor)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out._accumulate(
                    m1.gamma + m2.gamma, m1.nu + m2.nu, m1.words + m2.words, c1 * c2
                )
        return out

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.space == other.space
            and self.flavor == other.flavor
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("Elements are not hashable")

    def parity(self):
        """Parity if homogeneous, else None."""
        parities = {monomial_degree(self.space, m) % 2 for m in self.terms}
        if not parities:
            return 0
        if len(parities) == 1:
            return parities.pop()
        return None

    def parity_part(self, parity: int) -> "Element":
        return Element(
            self.space,
            self.flavor,
            {m: c for m, c in self.terms.items() if monomial_degree(self.space, m) % 2 == parity},
        )

    def map_terms(self, func) -> "Element":
        """Sum ``func(monomial, coeff) -> Element`` over all terms."""
        out = Element.zero(self.space, self.flavor)
        for monomial, coeff in self.terms.items():
            part = func(monomial, coeff)
            if part is not None:
                out = out + part
        return out

    # -- display and serialization --------------------------------------

    def _format_monomial(self, monomial: Monomial) -> str:
        pieces = []
        if monomial.gamma:
            pieces.append("g" if monomial.gamma == 1 else f"g^{monomial.gamma}")
        if monomial.nu:
            pieces.append("v" if monomial.nu == 1 else f"v^{monomial.nu}")
        for word in monomial.words:
            pieces.append("(" + " ".join(self.space.letters[l] for l in word) + ")")
        return "".join(pieces) if pieces else "1"

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for monomial in sorted(self.terms):
            coeff = self.terms[monomial]
            bits.append(f"{format_scalar(coeff)}*{self._format_monomial(monomial)}")
        return " + ".join(bits)

    def to_json(self) -> list:
        out = []
        for monomial in sorted(self.terms):
            out.append(
                {
                    "gamma": monomial.gamma,
                    "nu": monomial.nu,
                    "words": [[self.space.letters[l] for l in word] for word in monomial.words],
                    "coeff": format_scalar(self.terms[monomial]),
                }
            )
        return out

    @classmethod
    def from_json(cls, space, flavor, data) -> "Element":
        raw = []
        for item in data:
            words = [[space.index(name) for name in word] for word in item["words"]]
            raw.append((item.get("gamma", 0), item.get("nu", 0), words, parse_scalar(item["coeff"])))
        return cls.from_terms(space, flavor, raw)
