"""Brute-force referee for everything the fast paths compute.

Ground truth by breadth-first closure of the rewriting graph: a relation
u = v of equal length may be applied at any position in either direction,
so the set of words reachable from w is finite and enumerable.  Slow on
purpose; every answer is exact or a budget error, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import monoid
from .coxeter import INF, CoxeterMatrix
from .errors import BudgetExceededError, PreconditionError

DEFAULT_CLASS_CAP = 1_000_000
DEFAULT_LEN_CAP = 12


@dataclass(frozen=True)
class Presentation:
    """A homogeneous monoid presentation: both sides of every relation are
    positive words of equal length, so rewriting preserves length."""

    ngens: int
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def __post_init__(self):
        if self.ngens < 1:
            raise PreconditionError("presentation needs at least one generator")
        for lhs, rhs in self.relations:
            if len(lhs) != len(rhs):
                raise PreconditionError(
                    "inhomogeneous relation: sides of different length"
                )
            for w in (lhs, rhs):
                for x in w:
                    if not isinstance(x, int) or not 1 <= x <= self.ngens:
                        raise PreconditionError(
                            f"relation letter {x!r} out of range"
                        )

    def check_word(self, w) -> tuple[int, ...]:
        w = tuple(w)
        for x in w:
            if not isinstance(x, int) or not 1 <= x <= self.ngens:
                raise PreconditionError(f"letter {x!r} out of range")
        return w


def presentation_from_matrix(matrix: CoxeterMatrix) -> Presentation:
    """The Artin presentation: one alternating-word relation per finite
    off-diagonal label."""
    return Presentation(matrix.rank, tuple(matrix.relations()))


@dataclass(frozen=True)
class RewriteClass:
    """A full rewriting-equivalence class and its lexicographically least
    member, the canonical representative."""

    canonical: tuple[int, ...]
    members: frozenset


def _neighbors(P: Presentation, w: tuple[int, ...]):
    for lhs, rhs in P.relations:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            k = len(a)
            for i in range(len(w) - k + 1):
                if w[i:i + k] == a:
                    yield w[:i] + b + w[i + k:]


@lru_cache(maxsize=None)
def class_of(P: Presentation, w, class_cap: int = DEFAULT_CLASS_CAP,
             len_cap: int = DEFAULT_LEN_CAP) -> RewriteClass:
    """BFS closure of w under single-relation rewrites; deterministic."""
    w = P.check_word(w)
    if len(w) > len_cap:
        raise BudgetExceededError(
            f"word length {len(w)} exceeds the cap {len_cap}"
        )
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for v in _neighbors(P, u):
                if len(v) != len(u):
                    raise BudgetExceededError(
                        "internal: homogeneity violated during rewriting"
                    )
                if v not in seen:
                    if len(seen) >= class_cap:
                        raise BudgetExceededError(
                            f"class size exceeds the cap {class_cap}"
                        )
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return RewriteClass(min(seen), frozenset(seen))


def equals_oracle(P: Presentation, u, v, class_cap: int = DEFAULT_CLASS_CAP,
                  len_cap: int = DEFAULT_LEN_CAP) -> bool:
    u = P.check_word(u)
    v = P.check_word(v)
    if len(u) != len(v):
        return False
    return v in class_of(P, u, class_cap, len_cap).members


def divides_left_oracle(P: Presentation, u, v,
                        class_cap: int = DEFAULT_CLASS_CAP,
                        len_cap: int = DEFAULT_LEN_CAP) -> bool:
    """True iff u * w rewrites to v for some positive w: equivalently, some
    member of v's class carries a prefix equivalent to u."""
    u = P.check_word(u)
    v = P.check_word(v)
    if len(u) > len(v):
        return False
    uc = class_of(P, u, class_cap, len_cap).members
    k = len(u)
    return any(m[:k] in uc for m in class_of(P, v, class_cap, len_cap).members)


def square_free_oracle(P: Presentation, w,
                       class_cap: int = DEFAULT_CLASS_CAP,
                       len_cap: int = DEFAULT_LEN_CAP) -> bool:
    """True iff no member of w's class contains an adjacent repeated
    letter."""
    w = P.check_word(w)
    return not any(
        any(m[i] == m[i + 1] for i in range(len(m) - 1))
        for m in class_of(P, w, class_cap, len_cap).members
    )


def artin_deltas(matrix: CoxeterMatrix,
                 max_len: int | None = None) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Subset of generators -> one word for its fundamental element, for
    every finite-type subset (optionally only those of length <= max_len)."""
    out: dict[tuple[int, ...], tuple[int, ...]] = {(): ()}
    subsets: list[tuple[int, ...]] = [()]
    for g in matrix.generators:
        subsets.extend(prev + (g,) for prev in list(subsets))
    for subset in subsets:
        if not subset:
            continue
        d = monoid.delta(matrix, subset)
        if d is None:
            continue
        if max_len is not None and len(d.letters) > max_len:
            continue
        out[subset] = d.letters
    return out


def all_pal_decompositions(P: Presentation, p, deltas,
                           class_cap: int = DEFAULT_CLASS_CAP,
                           len_cap: int = DEFAULT_LEN_CAP):
    """All (y, I) with p = y * Delta_I * rev(y) in the monoid.

    deltas maps each admissible I (sorted tuple) to a word for Delta_I.
    Two-sided peel: a pair enters either because p's class contains a
    Delta_I word outright, or as s*(y', I) for a class member that starts
    and ends with s.  Results are deduplicated by the canonical form of y
    and sorted; every y is reported as one concrete word.
    """
    p = P.check_word(p)
    delta_by_len: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
    for subset, word in deltas.items():
        delta_by_len.setdefault(len(word), []).append((tuple(subset), tuple(word)))

    memo: dict[tuple[int, ...], tuple] = {}

    def search(w: tuple[int, ...]):
        cls = class_of(P, w, class_cap, len_cap)
        hit = memo.get(cls.canonical)
        if hit is not None:
            return hit
        found = []
        seen = set()
        for subset, dword in delta_by_len.get(len(w), ()):
            if dword in cls.members:
                mark = ((), subset)
                if mark not in seen:
                    seen.add(mark)
                    found.append(((), subset))
        if len(w) >= 2:
            for s in range(1, P.ngens + 1):
                middles = set()
                for m in cls.members:
                    if m[0] == s and m[-1] == s:
                        middles.add(class_of(P, m[1:-1], class_cap, len_cap).canonical)
                for mid in sorted(middles):
                    for ys, subset in search(mid):
                        entry = ((s,) + ys, subset)
                        mark = (class_of(P, entry[0], class_cap, len_cap).canonical,
                                subset)
                        if mark not in seen:
                            seen.add(mark)
                            found.append(entry)
        memo[cls.canonical] = tuple(sorted(found))
        return memo[cls.canonical]

    return search(p)


def enumerate_classes(P: Presentation, length: int,
                      class_cap: int = DEFAULT_CLASS_CAP,
                      len_cap: int = DEFAULT_LEN_CAP):
    """Partition of all length-L words into rewriting classes, as a sorted
    tuple of sorted member tuples."""
    if length > len_cap:
        raise BudgetExceededError(
            f"length {length} exceeds the cap {len_cap}"
        )
    if P.ngens ** length > class_cap:
        raise BudgetExceededError(
            f"{P.ngens}^{length} words exceed the cap {class_cap}"
        )
    words: list[tuple[int, ...]] = [()]
    for _ in range(length):
        words = [w + (x,) for w in words for x in range(1, P.ngens + 1)]
    assigned: dict[tuple[int, ...], tuple[int, ...]] = {}
    classes: dict[tuple[int, ...], tuple] = {}
    for w in words:
        if w in assigned:
            continue
        cls = class_of(P, w, class_cap, len_cap)
        for m in cls.members:
            assigned[m] = cls.canonical
        classes[cls.canonical] = tuple(sorted(cls.members))
    return tuple(classes[c] for c in sorted(classes))


def coxeter_order_oracle(matrix: CoxeterMatrix,
                         class_cap: int = DEFAULT_CLASS_CAP,
                         len_cap: int = 64) -> int:
    """Order of the Coxeter group, counted without ever multiplying
    matrices: breadth-first over reduced words, one canonical
    representative per element.

    Rests on the classical facts that two reduced words represent the same
    element iff they are connected by braid relations alone, and that a
    word is reduced iff its braid class contains no square s*s.  The
    quotient relation s^2 = e never has to be written down.
    """
    if any(matrix.m(i, j) == INF
           for i in matrix.generators for j in matrix.generators if i < j):
        raise PreconditionError("order counting needs a finite-type matrix")
    P = presentation_from_matrix(matrix)
    total = 0
    level = {(): ()}  # canonical -> any member
    while level:
        total += len(level)
        if total > class_cap:
            raise BudgetExceededError(f"group order exceeds the cap {class_cap}")
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for rep in level.values():
            for s in range(1, matrix.rank + 1):
                u = rep + (s,)
                if not square_free_oracle(P, u, class_cap, len_cap):
                    continue
                cls = class_of(P, u, class_cap, len_cap)
                nxt.setdefault(cls.canonical, cls.canonical)
        level = nxt
    return total


# ---------------------------------------------------------------------------
# Presentation file format


def parse_presentation(text: str) -> Presentation:
    """`gens N` on the first significant line, then `rel w = w` lines in
    the shared word syntax, positive letters only."""
    ngens = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "gens":
            if ngens is not None:
                raise PreconditionError(f"line {lineno}: duplicate gens line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise PreconditionError(f"line {lineno}: expected `gens N`")
            ngens = int(parts[1])
        elif parts[0] == "rel":
            if ngens is None:
                raise PreconditionError(f"line {lineno}: gens line must come first")
            body = line[len("rel"):]
            if body.count("=") != 1:
                raise PreconditionError(f"line {lineno}: expected `rel w = w`")
            lhs_s, rhs_s = body.split("=")
            try:
                lhs = monoid.parse_word(lhs_s)
                rhs = monoid.parse_word(rhs_s)
            except Exception as exc:
                raise PreconditionError(f"line {lineno}: {exc}") from exc
            if any(x < 0 for x in lhs + rhs):
                raise PreconditionError(
                    f"line {lineno}: relations must be positive words"
                )
            relations.append((lhs, rhs))
        else:
            raise PreconditionError(f"line {lineno}: unrecognized line {line!r}")
    if ngens is None:
        raise PreconditionError("missing gens line")
    return Presentation(ngens, tuple(relations))


def serialize_presentation(P: Presentation) -> str:
    lines = [f"gens {P.ngens}"]
    for lhs, rhs in P.relations:
        lines.append(
            f"rel {monoid.format_word(lhs)} = {monoid.format_word(rhs)}"
        )
    return "\n".join(lines) + "\n"
