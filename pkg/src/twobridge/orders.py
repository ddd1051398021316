"""Total positive-cone oracles for the two surgery-piece groups.

G1 = <a, b | a^2 = b^(2*b1+1)> is ordered dynamically: the quotient by the
center is realized as the rotation subgroup of a Hecke-type triangle group
acting on the boundary circle, the action is lifted to the universal cover
with exact winding bookkeeping, and a word's sign is the direction it moves
the first test point it does not fix.  The test sequence starts at the
boundary fixed point of the lifted meridian image, which the construction
checks exactly.

G2 = <x, y, z | x^-1 y x y, y z^-b2> is ordered by a three-layer
lexicographic tower:

* layer 1: sign of the x-exponent homomorphism pi;
* layer 2: on ker pi, sign of the weight t sending z_i = x^-i z x^i to
  (-1)^i (well defined on the kernel relations);
* layer 3: on ker t, which is free, the Magnus power-series order (first
  nonzero coefficient in graded-lexicographic order) after rewriting in an
  explicit Schreier basis; the truncation degree doubles until decided.

Both oracles are total and exact.  Conjugated and reversed variants of the
base orders form the normal families used by the certification harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cfrac import TwoBridgeParams
from .errors import ConstructionFailed, InternalCheckFailed, ParseError
from .groups import G2Element, Word, g1_normal_form, g2_normal_form
from .lifted import (LiftedMoebius, LiftedPoint, ProjectivePoint,
                     boundary_zero, infinity, order_n_rotation,
                     order_two_rotation)
from .numberfield import NumberField, real_cyclotomic_field


class Sign(Enum):
    POSITIVE = 1
    IDENTITY = 0
    NEGATIVE = -1

    @property
    def label(self) -> str:
        return self.name.capitalize()

    def flipped(self) -> "Sign":
        return Sign(-self.value)


def _sign_of_int(k: int) -> Sign:
    return Sign.POSITIVE if k > 0 else (Sign.NEGATIVE if k < 0 else
                                        Sign.IDENTITY)


# --------------------------------------------------------------------------
# the two orders on the peripheral lattice


class Z2Order(Enum):
    PLUS_FIRST = "PlusFirst"
    MINUS_FIRST = "MinusFirst"


def z2_is_positive(order: Z2Order, vec: tuple[int, int]) -> Sign:
    """Sign of the lattice vector (r, s): the second coordinate dominates;
    ties at s == 0 break by r, with direction set by the variant."""
    r, s = vec
    if s:
        return _sign_of_int(s)
    if r == 0:
        return Sign.IDENTITY
    if order is Z2Order.PLUS_FIRST:
        return _sign_of_int(r)
    return _sign_of_int(-r)


# --------------------------------------------------------------------------
# G1: exact lifted circle action


class G1Realization:
    """Exact lifted generators for G1 over Q(2 cos(pi/n)), n = 2*b1 + 1.

    a maps to the half turn S, b to the square of the order-n rotation R
    (squaring is an automorphism of the cyclic factor since n is odd, so the
    quotient representation stays faithful).  Lifts are chosen so that the
    central element h = a^2 = b^n lifts to the deck translation T1^(2*b1-1);
    at b1 = 1 this is T1 itself.  All identities are checked exactly at
    construction, as is the fixed point of the lifted meridian image.
    """

    __slots__ = ("b1", "n", "field", "a_lift", "b_lift", "h_lift", "mu_lift",
                 "test_points", "_gen_lifts")

    def __init__(self, b1: int, field: NumberField | None = None):
        if b1 < 1:
            raise ValueError("b1 must be >= 1, got %r" % (b1,))
        self.b1 = b1
        self.n = n = 2 * b1 + 1
        self.field = f = field if field is not None else \
            real_cyclotomic_field(n)
        s = order_two_rotation(f)
        r = order_n_rotation(f)
        if not (r ** n).is_identity():
            raise ConstructionFailed(
                "order-n rotation has wrong order for n=%d" % n)
        lifted_s = LiftedMoebius.lift0(s)
        t1 = LiftedMoebius.translation(f, 1)
        if lifted_s * lifted_s != t1:
            raise ConstructionFailed("lifted half turn squared is not T1")
        self.a_lift = lifted_s * LiftedMoebius.translation(f, b1 - 1)
        self.b_lift = LiftedMoebius.lift0(r ** 2)
        self.h_lift = LiftedMoebius.translation(f, 2 * b1 - 1)
        if self.a_lift * self.a_lift != self.h_lift:
            raise ConstructionFailed("a~^2 != T1^(2*b1-1)")
        if self.b_lift ** n != self.h_lift:
            raise ConstructionFailed("b~^(2*b1+1) != T1^(2*b1-1)")
        # meridian mu = b^-b1 a
        self.mu_lift = (self.b_lift ** (-b1)) * self.a_lift
        tr = self.mu_lift.matrix.trace()
        if not (tr * tr - 4).is_zero():
            raise ConstructionFailed("meridian image is not parabolic")
        if self.mu_lift.matrix.is_identity():
            raise ConstructionFailed("meridian image is trivial")
        p0 = LiftedPoint(0, boundary_zero(f))
        if self.mu_lift.apply(p0) != p0:
            raise ConstructionFailed(
                "lifted meridian does not fix its boundary fixed point")
        self.test_points = (
            p0,
            LiftedPoint(0, ProjectivePoint(f.one, f.one)),
            LiftedPoint(0, ProjectivePoint(-f.one, f.one)),
            LiftedPoint(0, infinity(f)),
        )
        a_inv = self.a_lift.inverse()
        b_inv = self.b_lift.inverse()
        self._gen_lifts = {"a": (self.a_lift, a_inv),
                           "b": (self.b_lift, b_inv)}

    def lifted(self, w: Word) -> LiftedMoebius:
        """The lifted transformation represented by a word over {a, b}."""
        acc = LiftedMoebius.translation(self.field, 0)
        for gen, e in w.letters():
            pair = self._gen_lifts.get(gen)
            if pair is None:
                raise ParseError(
                    "G1 words use generators a, b only, got %r" % gen)
            acc = acc * (pair[0] if e > 0 else pair[1])
        return acc

    def decide(self, g: LiftedMoebius) -> tuple[Sign, dict]:
        """Sign of a lifted element by its first moved test point."""
        for idx, p in enumerate(self.test_points):
            c = g.apply(p)._cmp(p)
            if c:
                return (Sign.POSITIVE if c > 0 else Sign.NEGATIVE,
                        {"decided_by": "test-point", "test_point": idx})
        return Sign.IDENTITY, {"decided_by": "identity"}


_G1_CACHE: dict[int, G1Realization] = {}


def g1_realization(params: TwoBridgeParams,
                   _field: NumberField | None = None) -> G1Realization:
    """Cached exact realization for the torus-knot piece of a knot."""
    if _field is not None:
        return G1Realization(params.b1, _field)
    if params.b1 not in _G1_CACHE:
        _G1_CACHE[params.b1] = G1Realization(params.b1)
    return _G1_CACHE[params.b1]


def g1_sign_trace(params: TwoBridgeParams, w: Word,
                  _realization: G1Realization | None = None) \
        -> tuple[Sign, dict]:
    real = _realization if _realization is not None else \
        g1_realization(params)
    trivial = g1_normal_form(params, w).is_identity()
    sign, trace = real.decide(real.lifted(w))
    if (sign is Sign.IDENTITY) != trivial:
        raise InternalCheckFailed(
            "lifted action and normal form disagree about "
            "the identity for %s" % w)
    trace["group"] = "g1"
    return sign, trace


def g1_is_positive(params: TwoBridgeParams, w: Word) -> Sign:
    return g1_sign_trace(params, w)[0]


# --------------------------------------------------------------------------
# G2: layered algebraic order


def _t_weight(beta: int, elem: G2Element) -> int:
    """Weight on ker pi: z_i has weight (-1)^i, the central block beta."""
    total = beta * elem.central
    for i, r in elem.tail:
        total += -r if i % 2 else r
    return total


def _schreier_letters(beta: int, tail) -> list[tuple[tuple[int, int, int],
                                                     int]]:
    """Rewrite a weight-zero kernel element as a freely reduced word in a
    Schreier basis of the free kernel.

    The element is given by its syllables prod z_(i_j)^(r_j) (image in the
    free product of order-beta cyclic groups).  Coset bookkeeping walks the
    transversal exponent T; letters at index 0 are transversal moves and
    emit nothing.  One basis letter per index is then eliminated through
    the order relation, leaving letters in a free basis, tagged by sortable
    tokens (|i|, i, T).
    """
    raw = []
    cursor = 0
    for i, r in tail:
        eps = -1 if i % 2 else 1
        for _ in range(r):
            if i != 0:
                raw.append((cursor, i, eps))
            cursor = (cursor + eps) % beta
    if cursor != 0:
        raise InternalCheckFailed(
            "kernel rewrite ended in a nonzero coset: weight was not zero")
    out = []
    for cos, i, eps in raw:
        t_star = (-eps) % beta
        if cos != t_star:
            out.append(((abs(i), i, cos), 1))
            continue
        for k in range(beta - 1, 0, -1):
            out.append(((abs(i), i, (t_star + k * eps) % beta), -1))
    reduced: list = []
    for tok, e in out:
        if reduced and reduced[-1][0] == tok and reduced[-1][1] == -e:
            reduced.pop()
        else:
            reduced.append((tok, e))
    return reduced


def _magnus_first_sign(letters, degree: int) -> int:
    """First nonzero coefficient (graded-lex) of the Magnus expansion,
    truncated at the given total degree; 0 if undecided at this degree."""
    poly = {(): 1}
    for tok, e in letters:
        if e > 0:
            factor = {(): 1, (tok,): 1}
        else:
            factor = {(tok,) * k: (-1) ** k for k in range(degree + 1)}
        nxt: dict = {}
        for m1, c1 in poly.items():
            room = degree - len(m1)
            for m2, c2 in factor.items():
                if len(m2) > room:
                    continue
                key = m1 + m2
                val = nxt.get(key, 0) + c1 * c2
                if val:
                    nxt[key] = val
                elif key in nxt:
                    del nxt[key]
        poly = nxt
    best = None
    for mono, coeff in poly.items():
        if mono and coeff:
            key = (len(mono), mono)
            if best is None or key < best[0]:
                best = (key, coeff)
    if best is None:
        return 0
    return 1 if best[1] > 0 else -1


_MAGNUS_DEGREE_CAP = 64


def g2_sign_trace(params: TwoBridgeParams, w: Word) -> tuple[Sign, dict]:
    beta = abs(params.b2)
    nf = g2_normal_form(params, w)
    if nf.xpow:
        return _sign_of_int(nf.xpow), {
            "group": "g2", "decided_by": "layer-1-pi", "pi": nf.xpow}
    t = _t_weight(beta, nf)
    if t:
        return _sign_of_int(t), {
            "group": "g2", "decided_by": "layer-2-t", "t": t}
    if nf.is_identity():
        return Sign.IDENTITY, {"group": "g2", "decided_by": "identity"}
    letters = _schreier_letters(beta, nf.tail)
    if not letters:
        raise InternalCheckFailed(
            "nontrivial kernel element rewrote to the empty word")
    degree = 2
    while degree <= _MAGNUS_DEGREE_CAP:
        s = _magnus_first_sign(letters, degree)
        if s:
            return _sign_of_int(s), {
                "group": "g2", "decided_by": "layer-3-magnus",
                "truncation_degree": degree}
        degree *= 2
    raise InternalCheckFailed(
        "Magnus oracle undecided at degree %d: bug, the element is a "
        "nontrivial element of a free group" % _MAGNUS_DEGREE_CAP)


def g2_is_positive(params: TwoBridgeParams, w: Word) -> Sign:
    return g2_sign_trace(params, w)[0]


# --------------------------------------------------------------------------
# oracle objects and order families


class ConeOracle:
    """Total sign oracle for one piece group ("g1" or "g2")."""

    def __init__(self, params: TwoBridgeParams, group: str):
        if group not in ("g1", "g2"):
            raise ValueError("group must be 'g1' or 'g2', got %r" % (group,))
        self.params = params
        self.group = group
        self._realization = g1_realization(params) if group == "g1" else None

    @property
    def generators(self) -> tuple[str, ...]:
        return ("a", "b") if self.group == "g1" else ("x", "y", "z")

    def sign_trace(self, w: Word) -> tuple[Sign, dict]:
        if self.group == "g1":
            return g1_sign_trace(self.params, w, self._realization)
        return g2_sign_trace(self.params, w)

    def is_positive(self, w: Word) -> Sign:
        return self.sign_trace(w)[0]

    def word_is_identity(self, w: Word) -> bool:
        """Normal-form equality oracle (independent of the sign decision
        for g1; the same total normal form for g2)."""
        if self.group == "g1":
            return g1_normal_form(self.params, w).is_identity()
        return g2_normal_form(self.params, w).is_identity()


@dataclass(frozen=True)
class OrderFamilySpec:
    """A member of the normal family generated by a base cone: the cone is
    conjugated by ``conjugator`` (w positive iff base sign of c w c^-1 is
    Positive) and optionally reversed (Negative instead).

    With the convention used here, the member with conjugator c is the
    base order conjugated by c^-1 in the usual action g(P) = g P g^-1.
    """

    oracle_id: str  # "g1" | "g2"
    conjugator: Word
    reversed: bool = False


def family_is_positive(oracle: ConeOracle, spec: OrderFamilySpec,
                       w: Word) -> Sign:
    if spec.oracle_id != oracle.group:
        raise ValueError("family spec for %r applied to oracle %r"
                         % (spec.oracle_id, oracle.group))
    sign = oracle.is_positive(spec.conjugator * w * spec.conjugator.inverse())
    return sign.flipped() if spec.reversed else sign
