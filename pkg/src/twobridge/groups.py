"""Words, presentations, and normal forms for the two surgery pieces.

G1 = < a, b : a^2 = b^(2*b1+1) > is a torus-knot group: the center is
generated by h = a^2 = b^(2*b1+1) and the quotient is the free product
Z/2 * Z/(2*b1+1), so elements have a unique form (alternating word in
the quotient, central exponent of h).

G2 = < x, y, z : x^-1 y x = y^-1, y = z^b2 >.  Eliminating y and setting
z_i = x^-i z x^i, the kernel of the x-exponent map is
K = < ..., z_-1, z_0, z_1, ... : z_i^b2 = z_(i+1)^(-b2) >, in which
w0 = z_0^beta (beta = |b2|) is central with z_i^beta = w0^((-1)^i) and
K / <w0> is the free product of copies of Z/beta.  Elements of G2 get
the unique form (x-exponent, reduced syllable word z_i^r with
1 <= r < beta and adjacent indices distinct, central exponent of w0).
"""

from dataclasses import dataclass

from .cfrac import TwoBridgeParams
from .errors import ParseError


class Word:
    """A freely reduced word over named generators.

    Stored as a tuple of (generator, exponent) syllables with nonzero
    exponents and distinct adjacent generators.  Words multiply with *,
    invert with .inverse(), and power with **.
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        self.syllables = _reduce(syllables)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse whitespace-separated tokens like "b^-1 a a"."""
        syllables = []
        for token in text.split():
            name, caret, exp = token.partition("^")
            if not name or name.startswith("^"):
                raise ParseError("bad word token %r" % token)
            if caret:
                try:
                    e = int(exp)
                except ValueError:
                    raise ParseError("bad exponent in token %r" % token) from None
            else:
                e = 1
            if not name.isalnum():
                raise ParseError("bad generator name %r" % token)
            syllables.append((name, e))
        return cls(syllables)

    def __str__(self):
        return " ".join(g if e == 1 else "%s^%d" % (g, e)
                        for g, e in self.syllables) or "1"

    def __repr__(self):
        return "Word(%r)" % (str(self),)

    def __mul__(self, other):
        return Word(self.syllables + other.syllables)

    def inverse(self):
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self, g: "Word") -> "Word":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def letters(self):
        """Yield (generator, +-1) one letter at a time."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def generators(self):
        return {g for g, _ in self.syllables}

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def is_identity(self):
        return not self.syllables


def _reduce(syllables):
    stack = []
    for g, e in syllables:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            g0, e0 = stack.pop()
            if e0 + e != 0:
                stack.append((g0, e0 + e))
        else:
            stack.append((g, e))
    return tuple(stack)


def free_reduce(w: Word) -> Word:
    """Words reduce on construction; exposed for direct use on syllables."""
    return w if isinstance(w, Word) else Word(w)


W = Word.parse


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def as_dict(self):
        return {"generators": list(self.generators),
                "relators": [str(r) for r in self.relators]}


@dataclass(frozen=True)
class GluingMap:
    """The peripheral identification: the Z^2 bases (mu, h) on the G1
    side and (y, z x^2) on the G2 side correspond coordinatewise."""
    mu: Word
    h: Word
    mu_image: Word
    h_image: Word

    def apply(self, r: int, s: int) -> Word:
        """Image y^r (z x^2)^s of mu^r h^s."""
        return self.mu_image ** r * self.h_image ** s


def presentations(params: TwoBridgeParams):
    """(P1, P2, PM, gluing) for the knot's surgery pieces."""
    b1, b2 = params.b1, params.b2
    p1 = Presentation(("a", "b"),
                      (W("a a b^%d" % (-(2 * b1 + 1))),))
    p2 = Presentation(("x", "y", "z"),
                      (W("x^-1 y x y"), W("y z^%d" % (-b2))))
    mu = W("b^%d a" % (-b1))
    h = W("a a")
    pm = Presentation(
        ("x", "y", "z", "a", "b"),
        (W("x^-1 y x y"), W("y z^%d" % (-b2)), W("a a b^%d" % (-(2 * b1 + 1))),
         mu * W("y^-1"), h * W("x^-2 z^-1")))
    glue = GluingMap(mu=mu, h=h, mu_image=W("y"), h_image=W("z x x"))
    return p1, p2, pm, glue


def peripheral_word(params: TwoBridgeParams, side: str, r: int, s: int) -> Word:
    """mu^r h^s (side "g1") or y^r (z x^2)^s (side "g2")."""
    if side == "g1":
        mu = W("b^%d a" % (-params.b1))
        return mu ** r * W("a a") ** s
    if side == "g2":
        return W("y") ** r * W("z x x") ** s
    raise ParseError("side must be g1 or g2, got %r" % side)


# ---------------------------------------------------------------- G1


@dataclass(frozen=True)
class G1Element:
    """Unique form (delta, central): delta is the alternating word in
    Z/2 * Z/(2*b1+1) written with letters ('a', 1) and ('b', j) for
    1 <= j <= 2*b1, and central is the exponent of h = a^2."""
    delta: tuple
    central: int

    def is_identity(self):
        return not self.delta and self.central == 0


def g1_normal_form(params: TwoBridgeParams, w: Word) -> G1Element:
    """Total normal form for G1; two words are equal in G1 iff their
    normal forms coincide."""
    n = 2 * params.b1 + 1
    bad = w.generators() - {"a", "b"}
    if bad:
        raise ParseError("G1 words use generators a, b only, got %s" % bad)
    stack = []
    central = 0
    for g, e in w.letters():
        if g == "a":
            # a = s(abar), a^-1 = s(abar) h^-1
            if e < 0:
                central -= 1
            if stack and stack[-1][0] == "a":
                stack.pop()
                central += 1
            else:
                stack.append(("a", 1))
        else:
            # b = s(bbar), b^-1 = s(bbar^(n-1)) h^-1
            j = 1 if e > 0 else n - 1
            if e < 0:
                central -= 1
            if stack and stack[-1][0] == "b":
                total = stack.pop()[1] + j
                central += total // n
                if total % n:
                    stack.append(("b", total % n))
            else:
                stack.append(("b", j))
    return G1Element(delta=tuple(stack), central=central)


def g1_element_word(elem: G1Element) -> Word:
    """A word representing the element: the section letters followed by
    h^central = a^(2*central)."""
    return Word(tuple(elem.delta) + (("a", 2 * elem.central),))


# ---------------------------------------------------------------- G2


@dataclass(frozen=True)
class G2Element:
    """Unique form (xpow, tail, central): xpow is the x-exponent, tail
    is the reduced syllable word ((i, r), ...) over the kernel
    generators z_i with 1 <= r < beta and adjacent indices distinct,
    and central is the exponent of w0 = z_0^beta."""
    xpow: int
    tail: tuple
    central: int

    def is_identity(self):
        return self.xpow == 0 and not self.tail and self.central == 0


def g2_normal_form(params: TwoBridgeParams, w: Word) -> G2Element:
    """Total normal form for G2; equality in G2 iff forms coincide."""
    b2 = params.b2
    beta = abs(b2)
    bad = w.generators() - {"x", "y", "z"}
    if bad:
        raise ParseError("G2 words use generators x, y, z only, got %s" % bad)
    # eliminate y -> z^b2, then record each z-letter with the x-exponent
    # sum strictly to its right: w = x^xpow * prod z_(T_j)^(e_j)
    letters = []
    for g, e in w.letters():
        if g == "y":
            letters.extend([("z", (1 if b2 > 0 else -1) * e)] * beta)
        else:
            letters.append((g, e))
    xpow = sum(e for g, e in letters if g == "x")
    suffix = 0
    kernel_letters = []  # (index, +-1), left to right
    for g, e in reversed(letters):
        if g == "x":
            suffix += e
        else:
            kernel_letters.append((suffix, e))
    kernel_letters.reverse()
    # normalize in K: z_i^beta = w0^((-1)^i), syllable exponents in 1..beta-1
    stack = []
    central = 0
    for i, e in kernel_letters:
        sign_i = -1 if i % 2 else 1
        if e > 0:
            r = 1
        else:
            r = beta - 1
            central -= sign_i
        if stack and stack[-1][0] == i:
            total = stack.pop()[1] + r
            central += sign_i * (total // beta)
            if total % beta:
                stack.append((i, total % beta))
        else:
            stack.append((i, r))
    return G2Element(xpow=xpow, tail=tuple(stack), central=central)


def g2_element_word(params: TwoBridgeParams, elem: G2Element) -> Word:
    """A word over {x, z} representing the element:
    x^xpow * prod x^-i z^r x^i * z^(beta*central)."""
    beta = abs(params.b2)
    syllables = [("x", elem.xpow)]
    for i, r in elem.tail:
        syllables += [("x", -i), ("z", r), ("x", i)]
    syllables.append(("z", beta * elem.central))
    return Word(tuple(syllables))
