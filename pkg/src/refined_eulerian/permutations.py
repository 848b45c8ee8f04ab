"""Permutation words, parity-refined descent statistics, and the sweep oracle.

Permutations are plain tuples in one-line notation: a member of S_n holds
each of 1..n exactly once.  An index i in 1..n-1 is a descent when
``a_i > a_{i+1}``; everything here refines the descent count by the parity
of i (``odes`` at odd i, ``edes`` at even i).

The brute-force operations sweep all of S_n, so they are definition-level
ground truth for the recurrence generators.  Sweeps refuse to run above a
cap (default 11, roughly 4e7 words) instead of silently taking hours; pass
a larger ``cap`` explicitly to go higher.

>>> descent_stats((3, 2, 1)).descent_set
(1, 2)
>>> brute_refined_poly(3).to_text()
'1 + 2*p + 2*q + p*q'
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import BivariatePolynomial

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapError",
    "DescentStats",
    "validate_permutation",
    "descent_stats",
    "is_alternating",
    "is_reverse_alternating",
    "reversal",
    "complement",
    "reversal_complement",
    "standardize_to",
    "brute_refined_poly",
    "brute_a_count",
    "brute_c_count",
    "brute_eulerian",
    "permutations_no_odd_descents",
    "permutations_no_even_descents",
    "append_max",
    "rotate_insert",
    "rotate_insert_inverse",
    "reflect_insert",
    "reflect_insert_inverse",
]

DEFAULT_CAP = 11


class EnumerationCapError(ValueError):
    """A full S_n sweep was requested above the configured cap."""


def validate_permutation(word: Sequence[int]) -> tuple[int, ...]:
    """Return ``word`` as a tuple after checking it is a permutation of 1..n.

    >>> validate_permutation([2, 1, 3])
    (2, 1, 3)
    """
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValueError("the empty word is not accepted; permutations need n >= 1")
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w!r}")
    return w


@dataclass(frozen=True)
class DescentStats:
    """Descent count split by position parity; des = odes + edes always."""

    des: int
    odes: int
    edes: int
    descent_set: tuple[int, ...]


def descent_stats(word: Sequence[int]) -> DescentStats:
    """All descent statistics of a permutation word.

    >>> descent_stats((4, 1, 8, 3, 5, 7, 10, 2, 6, 9))
    DescentStats(des=3, odes=3, edes=0, descent_set=(1, 3, 7))
    """
    w = validate_permutation(word)
    positions = tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])
    odes = sum(1 for i in positions if i & 1)
    return DescentStats(
        des=len(positions), odes=odes, edes=len(positions) - odes, descent_set=positions
    )


def is_alternating(word: Sequence[int]) -> bool:
    """a_1 > a_2 < a_3 > ...; vacuously true for n = 1."""
    w = validate_permutation(word)
    return all((w[i - 1] > w[i]) == bool(i & 1) for i in range(1, len(w)))


def is_reverse_alternating(word: Sequence[int]) -> bool:
    """a_1 < a_2 > a_3 < ...; vacuously true for n = 1."""
    w = validate_permutation(word)
    return all((w[i - 1] > w[i]) == (not i & 1) for i in range(1, len(w)))


def reversal(word: Sequence[int]) -> tuple[int, ...]:
    return validate_permutation(word)[::-1]


def complement(word: Sequence[int]) -> tuple[int, ...]:
    w = validate_permutation(word)
    top = len(w) + 1
    return tuple(top - a for a in w)


def reversal_complement(word: Sequence[int]) -> tuple[int, ...]:
    """Reversal then complement; the two maps commute."""
    return complement(reversal(word))


def standardize_to(word: Sequence[int], target: Sequence[int]) -> tuple[int, ...]:
    """Relabel ``word`` onto the values of ``target``, preserving relative order.

    The output uses exactly the values of ``target`` and has the same rank
    pattern as ``word`` position by position.

    >>> standardize_to((3, 1, 2), (5, 7, 9))
    (9, 5, 7)
    """
    w = tuple(word)
    t = sorted(target)
    if len(set(w)) != len(w):
        raise ValueError("word entries must be distinct")
    if len(set(t)) != len(t):
        raise ValueError("target values must be distinct")
    if len(w) != len(t):
        raise ValueError(f"word size {len(w)} does not match target size {len(t)}")
    rank = {v: r for r, v in enumerate(sorted(w))}
    return tuple(t[rank[a]] for a in w)


def _require_within_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("sweep requires n >= 1")
    if n > cap:
        raise EnumerationCapError(
            f"refusing to sweep S_{n}: cap is {cap} "
            f"({n}! words); pass a larger cap explicitly to proceed"
        )


_class_counts_cache: dict[int, list[list[int]]] = {}
_cache_lock = threading.Lock()


def _descent_class_counts(n: int) -> list[list[int]]:
    """counts[o][e] = number of words in S_n with o odd and e even descents.

    One lexicographic sweep per n, memoized; every brute-force operation
    reads from this matrix so repeated queries cost a dict lookup.
    """
    with _cache_lock:
        cached = _class_counts_cache.get(n)
    if cached is not None:
        return cached
    counts = [[0] * ((n - 1) // 2 + 1) for _ in range(n // 2 + 1)]
    for word in itertools.permutations(range(n)):
        odes = 0
        edes = 0
        prev = word[0]
        for i in range(1, n):
            cur = word[i]
            if prev > cur:
                if i & 1:
                    odes += 1
                else:
                    edes += 1
            prev = cur
        counts[odes][edes] += 1
    with _cache_lock:
        _class_counts_cache.setdefault(n, counts)
        return _class_counts_cache[n]


def brute_refined_poly(n: int, cap: int = DEFAULT_CAP) -> BivariatePolynomial:
    """Sum of p^odes * q^edes over all of S_n, by exhaustive sweep.

    The coefficient sum is n! by construction.
    """
    _require_within_cap(n, cap)
    counts = _descent_class_counts(n)
    return BivariatePolynomial(
        {
            (o, e): c
            for o, row in enumerate(counts)
            for e, c in enumerate(row)
            if c
        }
    )


def brute_a_count(n: int, k: int, cap: int = DEFAULT_CAP) -> int:
    """Number of words in S_n with k even descents and no odd descents."""
    _require_within_cap(n, cap)
    counts = _descent_class_counts(n)
    if 0 <= k < len(counts[0]):
        return counts[0][k]
    return 0


def brute_c_count(n: int, j: int, cap: int = DEFAULT_CAP) -> int:
    """Number of words in S_n with j odd descents and no even descents."""
    _require_within_cap(n, cap)
    counts = _descent_class_counts(n)
    if 0 <= j < len(counts):
        return counts[j][0]
    return 0


def brute_eulerian(n: int, k: int, cap: int = DEFAULT_CAP) -> int:
    """Number of words in S_n with k descents in total."""
    _require_within_cap(n, cap)
    counts = _descent_class_counts(n)
    return sum(
        row[e]
        for o, row in enumerate(counts)
        for e in range(len(row))
        if o + e == k
    )


def permutations_no_odd_descents(
    n: int, cap: int = DEFAULT_CAP
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (word, edes) for every word in S_n whose descents all sit at even i."""
    _require_within_cap(n, cap)
    for word in itertools.permutations(range(1, n + 1)):
        edes = 0
        prev = word[0]
        for i in range(1, n):
            cur = word[i]
            if prev > cur:
                if i & 1:
                    break
                edes += 1
            prev = cur
        else:
            yield word, edes


def permutations_no_even_descents(
    n: int, cap: int = DEFAULT_CAP
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (word, odes) for every word in S_n whose descents all sit at odd i."""
    _require_within_cap(n, cap)
    for word in itertools.permutations(range(1, n + 1)):
        odes = 0
        prev = word[0]
        for i in range(1, n):
            cur = word[i]
            if prev > cur:
                if not i & 1:
                    break
                odes += 1
            prev = cur
        else:
            yield word, odes


def append_max(word: Sequence[int]) -> tuple[int, ...]:
    """The trivial insertion: append n+1 to a member of S_n."""
    w = validate_permutation(word)
    return w + (len(w) + 1,)


def rotate_insert(word: Sequence[int], j: int) -> tuple[int, ...]:
    """Rotate a word of odd length 2n-1 around the even cut 2j and insert 2n.

    Maps a_1..a_{2n-1} to a_{2j+1}..a_{2n-1} (2n) a_1..a_{2j} for
    1 <= j <= n-1.  Whether the target gains an even descent depends on the
    comparison a_{2j} vs a_{2j+1}; that classification is left to the caller.

    >>> rotate_insert((1, 2, 3), 1)
    (3, 4, 1, 2)
    """
    w = validate_permutation(word)
    m = len(w)
    if m % 2 == 0:
        raise ValueError("rotate_insert expects a word of odd length")
    n = (m + 1) // 2
    if not 1 <= j <= n - 1:
        raise ValueError(f"cut index j={j} outside 1..{n - 1}")
    return w[2 * j :] + (2 * n,) + w[: 2 * j]


def rotate_insert_inverse(word: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Recover (source, j) from a rotate_insert image.

    The maximum 2n must sit at an even position other than the last.
    """
    w = validate_permutation(word)
    m = len(w)
    if m % 2 == 1:
        raise ValueError("rotate_insert images have even length")
    pos = w.index(m)  # 0-based slot of the maximum
    if pos == m - 1:
        raise ValueError("maximum in the final slot: an appended image, not a rotated one")
    if pos % 2 == 0:
        raise ValueError("maximum at an odd position: not a rotate_insert image")
    n = m // 2
    j = n - (pos + 1) // 2
    return w[pos + 1 :] + w[:pos], j


def reflect_insert(word: Sequence[int], j: int) -> tuple[int, ...]:
    """Insert 2n+1 into a word of even length 2n at the odd cut 2j-1.

    The prefix b_1..b_{2j-1} is replaced by its reversal-complement
    (b'_i = 2n+1-b_{2j-i}), then 2n+1, then the old suffix relabelled onto
    the unused values with its relative order kept.  Inversion depends on
    the sign of b_{2j-1} vs b_{2j}, which is left to the caller.
    """
    w = validate_permutation(word)
    m = len(w)
    if m % 2 == 1:
        raise ValueError("reflect_insert expects a word of even length")
    n = m // 2
    if not 1 <= j <= n:
        raise ValueError(f"cut index j={j} outside 1..{n}")
    cut = 2 * j - 1
    top = m + 1
    prefix = tuple(top - w[cut - 1 - i] for i in range(cut))
    remaining = sorted(set(range(1, m + 1)) - set(prefix))
    suffix = standardize_to(w[cut:], remaining)
    return prefix + (top,) + suffix


def reflect_insert_inverse(word: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Recover (source, j) from a reflect_insert image.

    The maximum 2n+1 must sit at an even position 2j.
    """
    w = validate_permutation(word)
    m = len(w)
    if m % 2 == 0:
        raise ValueError("reflect_insert images have odd length")
    pos = w.index(m)  # 0-based; an even 1-based position means odd pos here
    if pos % 2 == 0:
        raise ValueError("maximum at an odd position: not a reflect_insert image")
    j = (pos + 1) // 2
    prefix = tuple(m - w[pos - 1 - i] for i in range(pos))
    remaining = sorted(set(range(1, m)) - set(prefix))
    suffix = standardize_to(w[pos + 1 :], remaining)
    return prefix + suffix, j
