"""Exact character values of symmetric groups.

Conjugacy classes of S_m are identified with their cycle-type partitions.
Character values are computed by the Murnaghan-Nakayama rim-hook recursion on
beta-sets, memoized globally.  The memo is a plain dict of immutable keys and
values: concurrent readers and writers can only ever race on inserting the
same value twice, so sharing it between threads is safe; process pools simply
grow one memo per worker.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import factorial, prod

from .partitions import Partition, beta_set, partition_from_beta, hook_lengths, partitions_of


def centralizer_order(rho) -> int:
    """|Z(c_rho)| = prod over distinct parts v of v^mult * mult!."""
    rho = Partition(rho)
    return prod(v**c * factorial(c) for v, c in Counter(rho).items())


def class_size(rho) -> int:
    rho = Partition(rho)
    return factorial(rho.size) // centralizer_order(rho)


def double_class(rho) -> Partition:
    """Cycle type with every part doubled (a class of S_{2m})."""
    return Partition(2 * v for v in rho)


def sign_of_class(rho) -> int:
    """Sign character of S_m at cycle type rho."""
    rho = Partition(rho)
    return -1 if (rho.size - len(rho)) % 2 else 1


def dimension(lam) -> int:
    """Dimension of the irreducible indexed by lam, by the hook length formula."""
    lam = Partition(lam)
    return factorial(lam.size) // prod(h for row in hook_lengths(lam) for h in row)


_MN_MEMO: dict = {}


def mn_character(lam, rho) -> int:
    """Character of the irreducible lam of S_m at cycle type rho (|lam| = |rho|)."""
    lam = Partition(lam)
    rho = Partition(sorted(rho, reverse=True))
    if lam.size != rho.size:
        raise ValueError(
            "size mismatch: partition of %d against class of %d" % (lam.size, rho.size)
        )
    return _mn(lam, tuple(rho))


def _mn(lam, rho):
    if not rho:
        return 1
    key = (lam, rho)
    cached = _MN_MEMO.get(key)
    if cached is not None:
        return cached
    t, rest = rho[0], rho[1:]
    beta = beta_set(lam, len(lam))
    present = set(beta)
    total = 0
    for b in beta:
        low = b - t
        if low < 0 or low in present:
            continue
        leg = sum(1 for c in beta if low < c < b)
        rebuilt = tuple(sorted((present - {b}) | {low}, reverse=True))
        term = _mn(partition_from_beta(rebuilt), rest)
        total += -term if leg % 2 else term
    _MN_MEMO[key] = total
    return total


def _sub_multiset_splits(counts, target):
    """Yield multiplicity splits of a class: {value: taken} with sum(v*taken) = target."""
    values = sorted(counts)

    def rec(idx, remaining, chosen):
        if remaining == 0:
            rest = dict(chosen)
            for v in values[idx:]:
                rest[v] = 0
            yield rest
            return
        if idx == len(values):
            return
        v = values[idx]
        for take in range(min(counts[v], remaining // v) + 1):
            yield from rec(idx + 1, remaining - take * v, {**chosen, v: take})

    yield from rec(0, target, {})


def product_character(p0, p1, rho) -> int:
    """Character of the representation of S_{a+b} induced from lam(p0) x lam(p1).

    Class-fusion form of the induced character: |Z(rho)| times the sum over
    unordered splits rho = rho' + rho'' with |rho'| = a of
    chi_{p0}(rho') chi_{p1}(rho'') / (|Z(rho')| |Z(rho'')|).  The rational
    intermediate sum always clears to an integer; that is asserted, not assumed.
    """
    p0 = Partition(p0)
    p1 = Partition(p1)
    rho = Partition(sorted(rho, reverse=True))
    a, b = p0.size, p1.size
    if rho.size != a + b:
        raise ValueError(
            "size mismatch: class of %d against factors of %d and %d" % (rho.size, a, b)
        )
    counts = Counter(rho)
    total = Fraction(0)
    for taken in _sub_multiset_splits(counts, a):
        left = Partition(
            sorted((v for v in counts for _ in range(taken[v])), reverse=True)
        )
        right = Partition(
            sorted(
                (v for v in counts for _ in range(counts[v] - taken[v])), reverse=True
            )
        )
        total += Fraction(
            mn_character(p0, left) * mn_character(p1, right),
            centralizer_order(left) * centralizer_order(right),
        )
    total *= centralizer_order(rho)
    if total.denominator != 1:
        raise ArithmeticError("induced character did not clear to an integer")
    return int(total)


def even_cycle_classes(m: int):
    """Classes of S_m that are products of even cycles with at most one fixed point.

    For even m these are the doubled classes 2*rho, rho a partition of m/2; for
    odd m the same with a single fixed point appended.  Every consumer of this
    class family must go through this one generator.
    """
    if m % 2 == 0:
        for rho in partitions_of(m // 2):
            yield double_class(rho)
    else:
        for rho in partitions_of((m - 1) // 2):
            yield Partition(tuple(2 * v for v in rho) + (1,))


def character_table(m: int) -> tuple:
    """(partitions, classes, rows): full character table of S_m.

    Rows follow `partitions`, columns follow `classes`, both in ascending
    lexicographic order.
    """
    lams = sorted(partitions_of(m))
    classes = sorted(partitions_of(m))
    rows = [[mn_character(lam, rho) for rho in classes] for lam in lams]
    return lams, classes, rows
