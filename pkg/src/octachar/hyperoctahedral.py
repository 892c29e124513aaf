"""The hyperoctahedral group B_n = (Z/2)^n x| S_n inside S_2n.

B_n is realized as the signed permutations of {+-1, ..., +-n}, i.e. the
centralizer in S_2n of the fixed-point-free involution pairing i with -i.
Conjugacy classes are bipartitions (positive cycles, negative cycles): a cycle
is negative when the product of the signs around it is -1, equivalently when
the element's order on that cycle doubles.  Irreducibles are likewise indexed
by bipartitions (p0, p1); the (Z/2)^n block acts trivially on the p0 factor
and by the sign character on each Z/2 of the p1 factor.

An element is stored as a tuple g of length n with g[i] = image of i+1 in
{+-1..+-n}; the image of -(i+1) is forced to -g[i].
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial
from typing import NamedTuple

from .partitions import (
    Partition,
    PartitionParseError,
    format_partition,
    from_core_and_quotient,
    partitions_of,
    _parse_partition_at,
    _skip_ws,
)
from .characters import mn_character, dimension, product_character


class BiPartition(NamedTuple):
    """Ordered pair of partitions; indexes both B_n irreducibles and B_n classes."""

    p0: Partition
    p1: Partition

    @property
    def n(self) -> int:
        return sum(self.p0) + sum(self.p1)

    def __str__(self):
        return format_bipartition(self)


class BnClass(NamedTuple):
    """Conjugacy class of B_n: positive and negative cycle lengths."""

    positive: Partition
    negative: Partition

    @property
    def n(self) -> int:
        return sum(self.positive) + sum(self.negative)

    def __str__(self):
        return "(%s|%s)" % (format_partition(self.positive), format_partition(self.negative))


def bipartition(p0=(), p1=()) -> BiPartition:
    return BiPartition(Partition(p0), Partition(p1))


def bn_class(positive=(), negative=()) -> BnClass:
    return BnClass(Partition(positive), Partition(negative))


def bipartitions_of(n: int):
    """All ordered pairs (p0, p1) with |p0| + |p1| = n."""
    for k in range(n + 1):
        for q0 in partitions_of(k):
            for q1 in partitions_of(n - k):
                yield BiPartition(q0, q1)


def format_bipartition(pair) -> str:
    return "(%s|%s)" % (format_partition(pair[0]), format_partition(pair[1]))


def parse_bipartition(text: str) -> BiPartition:
    """Parse a ([..]|[..]) literal."""
    i = _skip_ws(text, 0)
    if i >= len(text) or text[i] != "(":
        raise PartitionParseError("expected '(' at position %d in %r" % (i, text))
    p0, i = _parse_partition_at(text, _skip_ws(text, i + 1))
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != "|":
        raise PartitionParseError("expected '|' at position %d in %r" % (i, text))
    p1, i = _parse_partition_at(text, _skip_ws(text, i + 1))
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != ")":
        raise PartitionParseError("expected ')' at position %d in %r" % (i, text))
    i = _skip_ws(text, i + 1)
    if i != len(text):
        raise PartitionParseError("unexpected trailing %r at position %d" % (text[i], i))
    return BiPartition(p0, p1)


def embed_class(c: BnClass) -> Partition:
    """Cycle type in S_2n of a B_n class: each positive cycle twice, negatives doubled."""
    parts = list(c.positive) * 2 + [2 * v for v in c.negative]
    return Partition(sorted(parts, reverse=True))


def norm(w, target: str | None = None) -> BnClass:
    """Norm map: the S_2n class with all cycles even {2p_1 >= ... >= 2p_r} goes to
    the all-positive B_n class with cycles {p_1 >= ... >= p_r}.

    Classes of S_2n+1 are admitted when they carry exactly one fixed point and
    even cycles otherwise; the fixed point is stripped first.  `target` may be
    "even", "odd", or None to infer from the cycle type.
    """
    w = Partition(sorted(w, reverse=True))
    fixed = sum(1 for v in w if v == 1)
    if any(v % 2 and v > 1 for v in w) or fixed > 1:
        raise ValueError("norm undefined on this class: %s" % format_partition(w))
    inferred = "odd" if fixed == 1 else "even"
    if target is None:
        target = inferred
    elif target not in ("even", "odd"):
        raise ValueError("target must be 'even' or 'odd', got %r" % (target,))
    elif target != inferred:
        raise ValueError(
            "norm undefined on this class: %s is not admissible for target %r"
            % (format_partition(w), target)
        )
    halved = Partition(v // 2 for v in w if v > 1)
    return BnClass(halved, Partition())


def basechange(pi: BiPartition, target: str) -> Partition:
    """The partition of 2n (target "even") or 2n+1 ("odd") whose 2-core is empty
    resp. (1) and whose 2-quotient is (p0, p1)."""
    p0, p1 = Partition(pi[0]), Partition(pi[1])
    if target == "even":
        core = Partition()
    elif target == "odd":
        core = Partition((1,))
    else:
        raise ValueError("target must be 'even' or 'odd', got %r" % (target,))
    return from_core_and_quotient(core, (p0, p1), 2)


def bn_dimension(pi: BiPartition) -> int:
    """dim of the irreducible (p0, p1): C(n, |p0|) * dim(p0) * dim(p1)."""
    p0, p1 = Partition(pi[0]), Partition(pi[1])
    n = p0.size + p1.size
    return comb(n, p0.size) * dimension(p0) * dimension(p1)


def bn_character_positive(pi: BiPartition, c: BnClass) -> int:
    """Character of the irreducible (p0, p1) at an all-positive class.

    Positive classes have representatives in S_n, and the restriction of the
    irreducible to S_n is the induced product of lam(p0) and lam(p1), so this
    is exactly the induced product character at the positive cycle type.
    """
    p0, p1 = Partition(pi[0]), Partition(pi[1])
    pos, neg = Partition(c[0]), Partition(c[1])
    if neg:
        raise ValueError(
            "class has negative cycles; use bn_character_bruteforce for those"
        )
    if pos.size != p0.size + p1.size:
        raise ValueError("class of B_%d against irreducible of B_%d" % (pos.size, p0.size + p1.size))
    return product_character(p0, p1, pos)


# -- explicit signed-permutation machinery (small-n oracle) ------------------


@lru_cache(maxsize=None)
def _bn_elements(n: int) -> tuple:
    return tuple(
        tuple(s * p for s, p in zip(signs, perm))
        for perm in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    )


def _apply(g, x: int) -> int:
    return g[x - 1] if x > 0 else -g[-x - 1]


def _compose(g, h):
    """g after h."""
    return tuple(_apply(g, x) for x in h)


def _inverse(g):
    inv = [0] * len(g)
    for i, x in enumerate(g):
        if x > 0:
            inv[x - 1] = i + 1
        else:
            inv[-x - 1] = -(i + 1)
    return tuple(inv)


def bn_class_of(g) -> BnClass:
    """Classify a signed permutation by its positive and negative cycle lengths."""
    n = len(g)
    seen = [False] * n
    pos, neg = [], []
    for i in range(n):
        if seen[i]:
            continue
        j, length, sign = i, 0, 1
        while not seen[j]:
            seen[j] = True
            image = g[j]
            if image < 0:
                sign = -sign
            j = abs(image) - 1
            length += 1
        (pos if sign == 1 else neg).append(length)
    return BnClass(Partition(sorted(pos, reverse=True)), Partition(sorted(neg, reverse=True)))


def _class_representative(c: BnClass):
    n = c.n
    img = [0] * n
    start = 0
    for length, negative in [(v, False) for v in c.positive] + [(v, True) for v in c.negative]:
        for i in range(length - 1):
            img[start + i] = start + i + 2
        img[start + length - 1] = -(start + 1) if negative else start + 1
        start += length
    return tuple(img)


def _block_cycle_type(g, lo: int, hi: int) -> Partition:
    """Cycle type of the underlying permutation restricted to points lo+1..hi."""
    seen = [False] * (hi - lo)
    lengths = []
    for i in range(lo, hi):
        if seen[i - lo]:
            continue
        j, length = i, 0
        while not seen[j - lo]:
            seen[j - lo] = True
            j = abs(g[j]) - 1
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def bn_character_bruteforce(pi: BiPartition, c: BnClass) -> int:
    """Oracle character of the irreducible (p0, p1) at any class, by explicit
    summation of the induced character over all 2^n n! group elements.

    The inducing subgroup is (Z/2)^n x| (S_a x S_b) with a = |p0|, b = |p1|;
    its character at a block-preserving element is (-1)^(negative signs in the
    second block) times the product of the block cycle-type characters.
    """
    p0, p1 = Partition(pi[0]), Partition(pi[1])
    c = BnClass(Partition(c[0]), Partition(c[1]))
    n = p0.size + p1.size
    if c.n != n:
        raise ValueError("class of B_%d against irreducible of B_%d" % (c.n, n))
    if n > 6:
        raise ValueError("oracle scale exceeded: n = %d > 6" % n)
    a, b = p0.size, p1.size
    g = _class_representative(c)
    acc = 0
    for t in _bn_elements(n):
        u = _compose(_inverse(t), _compose(g, t))
        if any(abs(u[i]) > a for i in range(a)):
            continue
        flips = sum(1 for i in range(a, n) if u[i] < 0)
        chi = -1 if flips % 2 else 1
        acc += (
            chi
            * mn_character(p0, _block_cycle_type(u, 0, a))
            * mn_character(p1, _block_cycle_type(u, a, n))
        )
    order_a = 2**n * factorial(a) * factorial(b)
    q, r = divmod(acc, order_a)
    if r:
        raise ArithmeticError("induced character sum not divisible by |A|")
    return q
