"""Positive words and the Artin monoid word problem.

Everything here works for an arbitrary Coxeter matrix (finite labels or
not); only the fundamental elements need finite-type parabolics.  The
basic decision procedure is generator left-extraction: a recursive
rewriting scheme that either exhibits w = s * w'' or certifies that the
generator s is not a left divisor of w.  Equality, divisibility, starting
sets, least common multiples and the normal form are all built on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .coxeter import INF, CoxeterMatrix, _alt, is_finite_type
from .errors import (
    BudgetExceededError,
    DeltaUndefinedError,
    InfiniteTypeError,
    InvalidWordError,
)


@dataclass(frozen=True)
class PositiveWord:
    """A word in the monoid generators, tied to its Coxeter matrix."""

    matrix: CoxeterMatrix
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not isinstance(x, int) or not 1 <= x <= self.matrix.rank:
                raise InvalidWordError(
                    f"letter {x!r} out of range for rank {self.matrix.rank}"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "PositiveWord") -> "PositiveWord":
        if self.matrix != other.matrix:
            raise InvalidWordError("cannot concatenate words over different matrices")
        return PositiveWord(self.matrix, self.letters + other.letters)

    def __repr__(self):
        body = " ".join(str(x) for x in self.letters) if self.letters else "e"
        return f"<{body}>"


def word(matrix: CoxeterMatrix, letters) -> PositiveWord:
    return PositiveWord(matrix, tuple(letters))


def rev(w: PositiveWord) -> PositiveWord:
    """Reverse the reading of the word; an anti-automorphism."""
    return PositiveWord(w.matrix, w.letters[::-1])


def blocking_left_index(w: PositiveWord, position: int) -> int:
    """Count letters strictly left of `position` (1-indexed) that do not
    commute with the letter there (label >= 3, including inf)."""
    if not 1 <= position <= len(w.letters):
        raise InvalidWordError(f"position {position} out of range")
    s = w.letters[position - 1]
    return sum(1 for t in w.letters[: position - 1] if w.matrix.m(t, s) >= 3)


@dataclass
class TraceFrame:
    """One recursive extraction call: suffix length and pivot measures."""

    parent: int | None
    length: int
    pivot_blis: list[int] = field(default_factory=list)


@dataclass
class ExtractionTrace:
    """Instrumentation for extraction runs.

    rewrites holds (kind, start, end) with absolute half-open offsets into
    the original word; frames record the recursion tree with the blocking
    left-index measured at each braid pivot.
    """

    steps: int = 0
    rewrites: list[tuple[str, int, int]] = field(default_factory=list)
    frames: list[TraceFrame] = field(default_factory=list)

    def open_frame(self, parent: int | None, length: int) -> int:
        self.frames.append(TraceFrame(parent, length))
        return len(self.frames) - 1

    def record(self, kind: str, start: int, end: int):
        self.steps += 1
        self.rewrites.append((kind, start, end))


def _bli_raw(mat: CoxeterMatrix, w: list[int], i: int) -> int:
    s = w[i]
    return sum(1 for t in w[:i] if mat.m(t, s) >= 3)


def _extract(mat: CoxeterMatrix, source: list[int], s: int,
             trace: ExtractionTrace | None = None, offset: int = 0,
             parent: int | None = None) -> list[int] | None:
    """Left-extraction core: return w'' with source = s * w'', or None.

    Deterministic strategy: track the leftmost occurrence of s (relations
    never create or destroy occurrences of a letter, so absence is final).
    Commute it past label-2 neighbors; at a label-m >= 3 blocker t, first
    recursively extract the alternating continuation t, s, t, ... (m - 2
    letters) from the suffix, then fire the full relation w_m(t,s) ->
    w_m(s,t), which moves the tracked occurrence one step left.  A label
    inf blocker is a dead end: no relation can ever move s past it, and
    the tracked occurrence is the leftmost, so s cannot surface.
    """
    if s not in source:
        return None
    w = list(source)
    frame = trace.open_frame(parent, len(w)) if trace is not None else None
    i = w.index(s)
    while i > 0:
        t = w[i - 1]
        m = mat.m(s, t)
        if m == 2:
            w[i - 1], w[i] = s, t
            i -= 1
            if trace is not None:
                trace.record("swap", offset + i, offset + i + 2)
        elif m == INF:
            return None
        else:
            if trace is not None:
                trace.frames[frame].pivot_blis.append(_bli_raw(mat, w, i))
            for j in range(m - 2):
                c = t if j % 2 == 0 else s
                pos = i + 1 + j
                tail = _extract(mat, w[pos:], c, trace, offset + pos, frame)
                if tail is None:
                    return None
                w[pos:] = [c] + tail
            w[i - 1 : i - 1 + m] = list(_alt(s, t, m))
            i -= 1
            if trace is not None:
                trace.record("braid", offset + i, offset + i + m)
    return w[1:]


def left_extract(w: PositiveWord, s: int,
                 trace: ExtractionTrace | None = None) -> PositiveWord | None:
    """If s left-divides w, return some w'' with w = s * w''; else None."""
    if not 1 <= s <= w.matrix.rank:
        raise InvalidWordError(f"generator {s} out of range")
    out = _extract(w.matrix, list(w.letters), s, trace)
    return None if out is None else PositiveWord(w.matrix, tuple(out))


def starting_set(w: PositiveWord) -> tuple[int, ...]:
    """Generators that left-divide w, sorted."""
    mat, letters = w.matrix, list(w.letters)
    return tuple(
        s for s in sorted(set(letters)) if _extract(mat, letters, s) is not None
    )


def finishing_set(w: PositiveWord) -> tuple[int, ...]:
    """Generators that right-divide w: the starting set of rev(w)."""
    return starting_set(rev(w))


def _check_same_matrix(u: PositiveWord, v: PositiveWord):
    if u.matrix != v.matrix:
        raise InvalidWordError("operands live over different matrices")


def divides_left(u: PositiveWord, v: PositiveWord) -> PositiveWord | None:
    """Quotient u\\v with v = u * (u\\v) in the monoid, or None.

    Extracts the letters of u from v one at a time; sound because each
    successful extraction is an equality in the monoid, complete because
    extraction decides one-generator divisibility.
    """
    _check_same_matrix(u, v)
    if len(u.letters) > len(v.letters):
        return None
    cur = list(v.letters)
    for s in u.letters:
        nxt = _extract(u.matrix, cur, s)
        if nxt is None:
            return None
        cur = nxt
    return PositiveWord(u.matrix, tuple(cur))


def equals(u: PositiveWord, v: PositiveWord) -> bool:
    """Monoid equality: length check, then consume u's letters from v."""
    _check_same_matrix(u, v)
    if len(u.letters) != len(v.letters):
        return False
    return divides_left(u, v) is not None


def right_lcm(u: PositiveWord, v: PositiveWord,
              budget: int | None = None) -> PositiveWord | None:
    """Least common right multiple of u and v, or None if provably absent.

    Computed by signed-word reversing: rewrite -a +b into the complement
    pair until the sequence is positives-then-negatives.  Hitting a pair
    with label inf proves no common multiple exists (None).  budget bounds
    the length of the returned multiple; blowing past it (or the internal
    step cap) raises BudgetExceededError, which proves nothing.
    """
    _check_same_matrix(u, v)
    if budget is None:
        budget = 2 * (len(u.letters) + len(v.letters)) * u.matrix.rank
        budget = max(budget, len(u.letters), len(v.letters), 4)
    elif budget < max(len(u.letters), len(v.letters)):
        raise ValueError("budget must be at least max(len(u), len(v))")
    mat = u.matrix
    seq: list[int] = [-x for x in reversed(u.letters)] + list(v.letters)
    max_letters = 4 * budget + len(seq) + 16
    step_cap = 64 * budget + 4096
    steps = 0
    i = 0
    while True:
        while i < len(seq) - 1 and not (seq[i] < 0 < seq[i + 1]):
            i += 1
        if i >= len(seq) - 1:
            break
        a, b = -seq[i], seq[i + 1]
        if a == b:
            del seq[i : i + 2]
        else:
            m = mat.m(a, b)
            if m == INF:
                return None
            seq[i : i + 2] = [x for x in _alt(b, a, m - 1)] + [
                -x for x in reversed(_alt(a, b, m - 1))
            ]
        i = max(i - 1, 0)
        steps += 1
        if len(seq) > max_letters or steps > step_cap:
            raise BudgetExceededError(
                f"word reversing exceeded its budget ({budget}) on "
                f"lengths {len(u.letters)}, {len(v.letters)}"
            )
    positives = [x for x in seq if x > 0]
    lcm_letters = u.letters + tuple(positives)
    if len(lcm_letters) > budget:
        raise BudgetExceededError(
            f"common multiple of length {len(lcm_letters)} exceeds budget {budget}"
        )
    return PositiveWord(mat, lcm_letters)


@lru_cache(maxsize=None)
def _delta_cached(matrix: CoxeterMatrix, subset: tuple[int, ...]):
    return _delta_compute(matrix, subset, None)


def _delta_compute(matrix, subset, budget):
    d = PositiveWord(matrix, (subset[0],))
    for s in subset[1:]:
        try:
            d = right_lcm(d, PositiveWord(matrix, (s,)), budget=budget)
        except BudgetExceededError:
            return None
        if d is None:
            return None
    return d


def delta(matrix: CoxeterMatrix, subset, budget: int | None = None) -> PositiveWord | None:
    """Fundamental element Delta_I: iterated right lcm of the generators.

    Returns None when the parabolic admits no fundamental element (a pair
    with label inf, or lcm growth past the budget; both mean the parabolic
    is not of finite type).  The empty subset yields the empty word.
    Results for the default budget are memoized per (matrix, subset).
    """
    idx = tuple(sorted(set(subset)))
    for s in idx:
        if not 1 <= s <= matrix.rank:
            raise InvalidWordError(f"generator {s} out of range")
    if not idx:
        return PositiveWord(matrix, ())
    if budget is None:
        return _delta_cached(matrix, idx)
    return _delta_compute(matrix, idx, budget)


def ambient_delta(matrix: CoxeterMatrix) -> PositiveWord:
    """Delta over all generators; raises for infinite type."""
    d = delta(matrix, matrix.generators)
    if d is None or not is_finite_type(matrix):
        raise DeltaUndefinedError(
            "the full generator set has no fundamental element (not finite type)"
        )
    return d


def normal_form(w: PositiveWord) -> tuple[tuple[int, ...], ...]:
    """Sequence of starting sets peeled off by their fundamental elements.

    w = Delta_{I_1} w_1, I_1 = S(w), then recurse on w_1.  Two positive
    words are equal in the monoid iff their sequences agree, so the
    sequence is a complete, hashable invariant.  Total for any matrix:
    whenever two generators left-divide w they admit a common multiple
    (namely w), so Delta_{S(w)} always exists and divides w.
    """
    out = []
    cur = w
    while cur.letters:
        heads = starting_set(cur)
        d = delta(cur.matrix, heads)
        if d is None:
            raise DeltaUndefinedError(
                "internal: Delta over a starting set must exist"
            )
        q = divides_left(d, cur)
        if q is None:
            raise DeltaUndefinedError(
                "internal: Delta over the starting set must divide the word"
            )
        out.append(heads)
        cur = q
    return tuple(out)


@lru_cache(maxsize=None)
def compute_tau_perm(matrix: CoxeterMatrix) -> tuple[int, ...]:
    """The permutation tau with s * Delta = Delta * tau(s); finite type only.

    Entry i-1 holds tau(i).  Found by dividing Delta out of s * Delta; the
    quotient has length 1 by centrality of Delta squared.
    """
    if not is_finite_type(matrix):
        raise InfiniteTypeError("tau needs a finite-type matrix")
    d = ambient_delta(matrix)
    perm = []
    for s in matrix.generators:
        q = divides_left(d, PositiveWord(matrix, (s,) + d.letters))
        if q is None or len(q.letters) != 1:
            raise DeltaUndefinedError("internal: s * Delta / Delta must be a letter")
        perm.append(q.letters[0])
    return tuple(perm)


def apply_tau(w: PositiveWord) -> PositiveWord:
    """Letterwise tau; a monoid automorphism in finite type."""
    perm = compute_tau_perm(w.matrix)
    return PositiveWord(w.matrix, tuple(perm[x - 1] for x in w.letters))


def parse_word(text: str) -> tuple[int, ...]:
    """Shared word syntax: whitespace-separated signed integers, or the
    single token `e` for the empty word.  No matrix check here; callers
    validate letters against their rank."""
    tokens = text.split()
    if tokens == ["e"]:
        return ()
    out = []
    for t in tokens:
        try:
            x = int(t)
        except ValueError:
            raise InvalidWordError(f"token {t!r} is not a letter") from None
        if x == 0:
            raise InvalidWordError("0 is not a letter")
        out.append(x)
    return tuple(out)


def format_word(letters) -> str:
    """Inverse of parse_word; the empty word prints as `e`."""
    letters = tuple(letters)
    if not letters:
        return "e"
    return " ".join(str(x) for x in letters)
