"""Closed-form counts: Catalan, k-Fuss-Catalan and Bizley's partition sum."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import binomial, factorial


class NonIntegerResult(ArithmeticError):
    """A count that must be integral came out fractional (an internal bug)."""


@dataclass(frozen=True)
class PartitionMultiset:
    """Multiplicities ``(a_1, a_2, ...)``: part ``i`` occurs ``a_i`` times."""

    multiplicities: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(i * a for i, a in enumerate(self.multiplicities, start=1))

    def parts(self) -> list[int]:
        """The partition as a descending list of parts."""
        out: list[int] = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return out


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    q, rem = divmod(binomial(2 * n, n), n + 1)
    assert rem == 0
    return q


def fuss_catalan(k: int, n: int) -> int:
    """``binomial((k+1)n, n) / (kn+1)``, the number of paths weakly below ``y = kx``."""
    if k <= 0:
        raise ValueError(f"k must be a positive integer, got {k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    q, rem = divmod(binomial((k + 1) * n, n), k * n + 1)
    if rem:
        raise NonIntegerResult(f"{k * n + 1} does not divide binomial({(k + 1) * n}, {n})")
    return q


def bizley_phi(j: int, m: int, r: int) -> Fraction:
    """``binomial(j(m+r), jm) / (j(m+r))`` as an exact rational."""
    if j < 1 or m < 1 or r < 1:
        raise ValueError(f"j, m, r must be positive, got j={j}, m={m}, r={r}")
    s = j * (m + r)
    return Fraction(binomial(s, j * m), s)


def _descending(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _descending(n - part, part):
            yield [part] + rest


def enumerate_partitions(n: int) -> list[PartitionMultiset]:
    """All partitions of ``n`` as multiplicity vectors of length ``n``.

    Generated by recursion on the largest part, so the order is reverse
    lexicographic on the descending part lists.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    result = []
    for parts in _descending(n, n):
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        result.append(PartitionMultiset(tuple(mult)))
    return result


def bizley_count(m: int, r: int, n: int) -> int:
    """Paths from (0, 0) to (mn, rn) never rising above ``y = (r/m) x``.

    Sums ``prod_j phi_j**a_j / a_j!`` over every partition of ``n`` in exact
    rationals and checks the total is an integer.
    """
    if m < 1 or r < 1:
        raise ValueError(f"m and r must be positive, got m={m}, r={r}")
    if math.gcd(m, r) != 1:
        raise ValueError(f"m={m} and r={r} are not coprime")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    phi = [bizley_phi(j, m, r) for j in range(1, n + 1)]
    total = Fraction(0)
    for part in enumerate_partitions(n):
        term = Fraction(1)
        for j, a in enumerate(part.multiplicities):
            if a:
                term *= phi[j] ** a / factorial(a)
        total += term
    if total.denominator != 1:
        raise NonIntegerResult(f"Bizley sum for (m={m}, r={r}, n={n}) is {total}")
    return total.numerator
