"""Artin group elements for finite type, as fractions Delta^(-2k) * p.

Delta squared is central in every finite type, so a single denominator
exponent k plus a positive word p represents any element, and rev and tau
act componentwise.  Construction always normalizes (k = 0 or Delta^2 does
not left-divide p), which makes the representative unique by monoid
cancellativity: equality is then just k == k' plus monoid equality of the
positive parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import monoid, weyl
from .coxeter import CoxeterMatrix, is_finite_type
from .errors import InfiniteTypeError, InvalidWordError
from .monoid import PositiveWord


@lru_cache(maxsize=None)
def _system(matrix: CoxeterMatrix):
    """Per-matrix tables: Delta word, Delta^2 word, g -> g\\Delta^2, tau."""
    if not is_finite_type(matrix):
        raise InfiniteTypeError("group elements require a finite-type matrix")
    d = monoid.ambient_delta(matrix)
    d2 = PositiveWord(matrix, d.letters * 2)
    neg = {}
    for g in matrix.generators:
        q = monoid.divides_left(PositiveWord(matrix, (g,)), d2)
        if q is None:
            raise InfiniteTypeError("internal: every generator divides Delta^2")
        neg[g] = q.letters
    tau_perm = monoid.compute_tau_perm(matrix)
    return d.letters, d2.letters, neg, tau_perm


@dataclass(frozen=True)
class GroupElement:
    """Normalized fraction; build through make/from_word, not directly."""

    matrix: CoxeterMatrix
    k: int
    p: tuple[int, ...]

    def key(self):
        """Hashable complete invariant: (k, normal form of p)."""
        cached = getattr(self, "_key", None)
        if cached is None:
            cached = (self.k, monoid.normal_form(PositiveWord(self.matrix, self.p)))
            object.__setattr__(self, "_key", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return eq(self, other)

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other):
        return mult(self, other)

    def __repr__(self):
        w = to_signed_word(self)
        body = " ".join(str(x) for x in w) if w else "e"
        return f"[{body}]"


def make(matrix: CoxeterMatrix, k: int, p) -> GroupElement:
    """Normalize and wrap: strip Delta^2 from the left of p while k > 0."""
    d2 = PositiveWord(matrix, _system(matrix)[1])
    if k < 0:
        raise InvalidWordError("denominator exponent must be >= 0")
    cur = PositiveWord(matrix, tuple(p))
    while k > 0:
        q = monoid.divides_left(d2, cur)
        if q is None:
            break
        cur = q
        k -= 1
    return GroupElement(matrix, k, cur.letters)


def identity(matrix: CoxeterMatrix) -> GroupElement:
    return make(matrix, 0, ())


def from_positive(w: PositiveWord) -> GroupElement:
    return make(w.matrix, 0, w.letters)


def from_word(matrix: CoxeterMatrix, word) -> GroupElement:
    """Signed word to group element.

    Each inverse letter g^-1 becomes Delta^(-2) * (g\\Delta^2); the
    denominators commute to the front because Delta^2 is central.
    """
    neg = _system(matrix)[2]
    k = 0
    p: list[int] = []
    for x in matrix.check_word(word):
        if x > 0:
            p.append(x)
        else:
            p.extend(neg[-x])
            k += 1
    return make(matrix, k, tuple(p))


def delta_element(matrix: CoxeterMatrix) -> GroupElement:
    return make(matrix, 0, _system(matrix)[0])


def _check_same(a: GroupElement, b: GroupElement):
    if a.matrix != b.matrix:
        raise InvalidWordError("operands live over different matrices")


def eq(a: GroupElement, b: GroupElement) -> bool:
    """Equality via the unique normalized representative.

    Normalization makes (k, [p]) unique: if Delta^(-2k) p = Delta^(-2k') p'
    with k >= k', centrality gives p = Delta^(2(k-k')) p', so k > k' would
    contradict p being Delta^2-free on the left.  Cross-multiplying and
    comparing in the monoid gives the same verdict (property-tested).
    """
    _check_same(a, b)
    return a.k == b.k and monoid.equals(
        PositiveWord(a.matrix, a.p), PositiveWord(b.matrix, b.p)
    )


def mult(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same(a, b)
    return make(a.matrix, a.k + b.k, a.p + b.p)


def inv(a: GroupElement) -> GroupElement:
    """Least m with p left-dividing Delta^(2m) gives p^-1 = (p\\Delta^2m) Delta^(-2m).

    m never exceeds ceil(len(p)/2): a word of length L divides Delta^L
    letter by letter, hence Delta^(2m) once 2m >= L.
    """
    mat = a.matrix
    d2 = _system(mat)[1]
    p = PositiveWord(mat, a.p)
    target = PositiveWord(mat, ())
    for m in range(len(a.p) // 2 + 2):
        q = monoid.divides_left(p, target)
        if q is not None:
            if a.k >= m:
                return make(mat, 0, d2 * (a.k - m) + q.letters)
            return make(mat, m - a.k, q.letters)
        target = PositiveWord(mat, target.letters + d2)
    raise InvalidWordError("internal: p must divide a power of Delta^2")


def rev(a: GroupElement) -> GroupElement:
    """Anti-automorphism: reverse p; the denominator is rev-fixed since
    Delta is palindromic and Delta^2 central."""
    return make(a.matrix, a.k, a.p[::-1])


def tau(a: GroupElement) -> GroupElement:
    """Conjugation by Delta, computed letterwise on p."""
    perm = _system(a.matrix)[3]
    return make(a.matrix, a.k, tuple(perm[x - 1] for x in a.p))


def is_pure(a: GroupElement) -> bool:
    """True iff the image in the Coxeter group is trivial.

    The denominator never matters: Delta^2 maps to the square of the
    longest element, which is the identity.
    """
    rep = weyl.build_root_system(a.matrix)
    return weyl.is_identity(weyl.image(rep, a.p))


def is_palindrome(a: GroupElement) -> bool:
    return eq(a, rev(a))


def to_signed_word(a: GroupElement) -> tuple[int, ...]:
    """One signed word representing the element: 2k copies of Delta^-1,
    then p."""
    d = _system(a.matrix)[0]
    dinv = tuple(-x for x in reversed(d))
    return dinv * (2 * a.k) + a.p


def w_image(a: GroupElement) -> weyl.WElement:
    """Image of the element in the Coxeter group."""
    rep = weyl.build_root_system(a.matrix)
    return weyl.image(rep, a.p)
