"""Partition arithmetic: beta-sets, hooks, p-cores, p-quotients, and signs.

Everything here works through beta-sets (strictly decreasing non-negative
integers).  A partition padded with zeros to r parts corresponds to the
beta-set {lam_i + r - i : i = 1..r}; removing a rim hook of length t is the
bead move b -> b - t.  Padding length matters for the p-quotient and for the
shuffle sign, so the convention is fixed once here:

  * p = 2: pad to the smallest length with the parity of |lam|.  This makes
    the 2-quotient of a partition of 2n and of its partner of 2n+1 (same
    quotient, 2-core () resp. (1)) come out in the same slot order, which is
    what the basechange bijection needs.
  * p >= 3: pad to the smallest multiple of p.  Slot i collects the
    beta-numbers congruent to i mod p; other padding choices permute slots.
"""

from __future__ import annotations

import itertools


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, v in enumerate(parts):
            if not isinstance(v, int) or v < 1:
                raise ValueError("parts must be positive integers, got %r" % (v,))
            if i and parts[i - 1] < v:
                raise ValueError("parts must be weakly decreasing, got %r" % (parts,))
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for v in self if v > j) for j in range(self[0]))

    def __repr__(self):
        return "Partition(%s)" % (list(self),)

    def __str__(self):
        return format_partition(self)


def partitions_of(n: int):
    """Yield all partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining, max_part, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        for v in range(min(max_part, remaining), 0, -1):
            yield from gen(remaining - v, v, prefix + (v,))

    yield from gen(n, n, ())


def beta_set(lam, length: int) -> tuple:
    """Beta-set of lam padded to `length` parts: {lam_i + length - i}, decreasing."""
    lam = tuple(lam)
    if length < len(lam):
        raise ValueError("insufficient beta length: %d < %d parts" % (length, len(lam)))
    padded = lam + (0,) * (length - len(lam))
    return tuple(padded[i] + (length - 1 - i) for i in range(length))


def partition_from_beta(beta) -> Partition:
    """Inverse of beta_set; beta must be strictly decreasing and non-negative."""
    beta = tuple(beta)
    r = len(beta)
    for i, b in enumerate(beta):
        if not isinstance(b, int) or b < 0:
            raise ValueError("beta entries must be non-negative integers, got %r" % (b,))
        if i and beta[i - 1] <= b:
            raise ValueError("beta entries must be strictly decreasing, got %r" % (beta,))
    return Partition(v for v in (beta[i] - (r - 1 - i) for i in range(r)) if v > 0)


def hook_lengths(lam) -> list:
    """Hook length (arm + leg + 1) of every cell, as a ragged row-major matrix."""
    lam = Partition(lam)
    conj = lam.conjugate()
    return [
        [(lam[i] - j) + (conj[j] - i) - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def _quotient_length(lam, p: int) -> int:
    r = len(lam)
    if p == 2:
        if r % 2 != sum(lam) % 2:
            r += 1
        return r
    return -(-r // p) * p


def p_core(lam, p: int) -> Partition:
    """The partition left after removing all rim hooks of length p.

    Computed by pushing every bead of the beta-set as low as possible within
    its residue class mod p; order independence of hook removal is a classical
    fact (and is exercised by the tests, not assumed here).
    """
    lam = Partition(lam)
    if p < 2:
        raise ValueError("p must be at least 2")
    beta = beta_set(lam, len(lam))
    counts = [0] * p
    for b in beta:
        counts[b % p] += 1
    packed = sorted(
        (i + p * j for i in range(p) for j in range(counts[i])), reverse=True
    )
    return partition_from_beta(tuple(packed))


def is_p_core(lam, p: int) -> bool:
    """True when no hook length of lam is divisible by p."""
    return p_core(lam, p) == Partition(lam)


def p_quotient(lam, p: int) -> tuple:
    """Ordered tuple of p partitions read off the residue classes of the beta-set.

    Slot i holds the partition whose beta-set is (entries congruent to i) minus
    i, divided by p.  Padding follows the module convention above, so for p = 2
    the slot order is stable across the 2n <-> 2n+1 correspondence.
    """
    lam = Partition(lam)
    if p < 2:
        raise ValueError("p must be at least 2")
    beta = beta_set(lam, _quotient_length(lam, p))
    classes = [[] for _ in range(p)]
    for b in beta:  # beta decreasing, so each class list stays decreasing
        classes[b % p].append((b - b % p) // p)
    return tuple(partition_from_beta(tuple(cls)) for cls in classes)


def from_core_and_quotient(core, quotient, p: int) -> Partition:
    """Rebuild the unique partition with the given p-core and p-quotient."""
    core = Partition(core)
    if p < 2:
        raise ValueError("p must be at least 2")
    quotient = tuple(Partition(q) for q in quotient)
    if len(quotient) != p:
        raise ValueError("quotient must have exactly %d components" % p)
    if p_core(core, p) != core:
        raise ValueError("not a p-core: %s has a hook divisible by %d" % (core, p))

    step = 2 if p == 2 else p
    r = _quotient_length(core, p)
    while True:
        counts = [0] * p
        for b in beta_set(core, r):
            counts[b % p] += 1
        if all(counts[i] >= len(quotient[i]) for i in range(p)):
            break
        r += step

    merged = []
    for i in range(p):
        merged.extend(p * x + i for x in beta_set(quotient[i], counts[i]))
    merged.sort(reverse=True)
    result = partition_from_beta(tuple(merged))
    assert result.size == core.size + p * sum(q.size for q in quotient)
    return result


def _perm_sign(perm) -> int:
    """Sign of a permutation given as a 0-based image list."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sign_shuffle(lam) -> int:
    """Sign of the shuffle permutation that sorts the beta-set by parity.

    Defined for partitions of even size with empty 2-core (pad to an even
    number of parts; the permutation sends slot i to the position its
    beta-number takes when even and odd entries are separately sorted into the
    even and odd slots of {r-1, ..., 1, 0}), and for partitions of odd size
    with 2-core (1) (pad to an odd number 2m+1 of parts, reference set
    {2m+1, ..., 1}, with an extra factor (-1)^m).
    """
    lam = Partition(lam)
    n = lam.size
    r = len(lam)
    if r % 2 != n % 2:
        r += 1
    beta = beta_set(lam, r)
    evens = sorted(b for b in beta if b % 2 == 0)
    odds = sorted(b for b in beta if b % 2 == 1)

    if n % 2 == 0:
        if len(evens) != len(odds):
            raise ValueError("sign undefined: 2-core of %s is not empty" % (lam,))
        slot = {b: 2 * i for i, b in enumerate(evens)}
        slot.update({b: 2 * i + 1 for i, b in enumerate(odds)})
        # position i in {0..r-1} carries beta[r-1-i]
        return _perm_sign([slot[beta[r - 1 - i]] for i in range(r)])

    if len(odds) != len(evens) + 1:
        raise ValueError("sign undefined: 2-core of %s is not (1)" % (lam,))
    m = (r - 1) // 2
    slot = {b: 2 * (i + 1) for i, b in enumerate(evens)}
    slot.update({b: 2 * i + 1 for i, b in enumerate(odds)})
    # position i in {1..2m+1} carries beta[r-i]; shift to 0-based for the sign
    sign = _perm_sign([slot[beta[r - i]] - 1 for i in range(1, r + 1)])
    return sign if m % 2 == 0 else -sign


def sign_odd_parts(lam) -> int:
    """(-1)^k where the number of odd parts is 2k or 2k+1; defined everywhere."""
    k = sum(1 for v in lam if v % 2) // 2
    return -1 if k % 2 else 1


def format_partition(lam) -> str:
    """Render in exponent notation: [3,2,1^4].  Empty partition is []."""
    lam = tuple(lam)
    if not lam:
        return "[]"
    chunks = []
    for v, run in itertools.groupby(lam):
        c = len(tuple(run))
        chunks.append("%d^%d" % (v, c) if c > 1 else "%d" % v)
    return "[" + ",".join(chunks) + "]"


class PartitionParseError(ValueError):
    """Malformed partition literal; message carries the offending position."""


def parse_partition(text: str) -> Partition:
    """Parse [3,2,1^4] or [3,2,1,1,1,1]; rejects unsorted or non-positive parts."""
    parts, i = _parse_partition_at(text, _skip_ws(text, 0))
    i = _skip_ws(text, i)
    if i != len(text):
        raise PartitionParseError("unexpected trailing %r at position %d" % (text[i], i))
    return parts


def _skip_ws(text, i):
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_int(text, i):
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        raise PartitionParseError("expected digit at position %d in %r" % (i, text))
    return int(text[i:j]), j


def _parse_partition_at(text, i):
    """Parse a partition literal starting at index i; returns (Partition, next index)."""
    if i >= len(text) or text[i] != "[":
        raise PartitionParseError("expected '[' at position %d in %r" % (i, text))
    i = _skip_ws(text, i + 1)
    parts = []
    if i < len(text) and text[i] == "]":
        i += 1
    else:
        while True:
            at = i
            value, i = _parse_int(text, i)
            count = 1
            if i < len(text) and text[i] == "^":
                count, i = _parse_int(text, i + 1)
            if value < 1 or count < 1:
                raise PartitionParseError(
                    "parts and exponents must be positive at position %d in %r" % (at, text)
                )
            if parts and parts[-1] < value:
                raise PartitionParseError(
                    "parts must be non-increasing at position %d in %r" % (at, text)
                )
            parts.extend([value] * count)
            i = _skip_ws(text, i)
            if i < len(text) and text[i] == ",":
                i = _skip_ws(text, i + 1)
                continue
            if i < len(text) and text[i] == "]":
                i += 1
                break
            raise PartitionParseError("expected ',' or ']' at position %d in %r" % (i, text))
    return Partition(parts), i
