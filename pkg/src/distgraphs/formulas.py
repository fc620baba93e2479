"""Closed-form quantities: c(n), the independence-number formula, chromatic bounds,
the pigeonhole predicate and the n = 9 counting argument.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb


def c_const(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (0, 1, 2, 2)[n % 4]


def alpha_formula(n: int) -> int:
    """Independence number of G_n: max(6n - 28, 4n - 4c(n))."""
    if n < 3:
        raise ValueError("formula holds for n >= 3")
    return max(6 * n - 28, 4 * n - 4 * c_const(n))


def gn_order(n: int) -> int:
    return 8 * comb(n, 3)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class ChiBound:
    n: int
    order: int
    alpha: int
    bound: int

    def check(self) -> bool:
        return self.bound * self.alpha >= self.order and (self.bound - 1) * self.alpha < self.order


def chi_lower_bound(n: int) -> ChiBound:
    """ceil(|V(G_n)| / alpha(G_n)), a lower bound on the chromatic number of R^n and Q^n."""
    order, alpha = gn_order(n), alpha_formula(n)
    return ChiBound(n, order, alpha, ceil_div(order, alpha))


def nagy_alpha(n: int) -> int:
    if n < 3:
        raise ValueError("n must be at least 3")
    return n - c_const(n)


def dominant_branch(n: int, reference: str = "formula") -> str:
    """Which term of the max wins: ``'cobra'`` (6n-28), ``'quad'`` or ``'tie'``.

    ``reference='4n'`` compares against the plain 4n term instead of 4n - 4c(n).
    """
    quad = 4 * n if reference == "4n" else 4 * n - 4 * c_const(n)
    cobra = 6 * n - 28
    return "cobra" if cobra > quad else "quad" if quad > cobra else "tie"


def switch_index(reference: str = "formula", n_max: int = 200) -> int:
    """Smallest n such that 6n - 28 strictly wins for every n' in [n, n_max]."""
    last_loss = 2
    for n in range(3, n_max + 1):
        if dominant_branch(n, reference) != "cobra":
            last_loss = n
    return last_loss + 1


@dataclass(frozen=True)
class Lemma1Result:
    a_min: int
    m: int
    verdict: bool


def lemma1_bound(n: int, k: int, alpha_assumed: int) -> Lemma1Result:
    """Pigeonhole bound after excluding ``k`` signplaces.

    At most ``2k`` of the ``alpha_assumed`` vertices are lost, the survivors
    use 3 signplace incidences each over ``2n - k`` signplaces.
    """
    if not 0 <= k < 2 * n:
        raise ValueError(f"need 0 <= k < 2n, got k={k}, n={n}")
    m = 2 * n - k
    a_min = ceil_div(3 * (alpha_assumed - 2 * k), m)
    return Lemma1Result(a_min, m, a_min >= 5 or m < 14)


def _quad_pair_bases(missing: int, n: int = 9) -> list[tuple[int, ...]]:
    places = [p for p in range(n) if p != missing]
    bases = []
    for block in (places[:4], places[4:]):
        bases += list(combinations(block, 3))
    return bases


@dataclass(frozen=True)
class Prop9Report:
    s1_size: int
    covered_if_missing_first: int
    covered_otherwise: int
    solutions: tuple[tuple[int, int], ...]
    pairs_total: int
    feasible: tuple[tuple[int, int], ...]
    order: int
    alpha: int

    @property
    def contradiction(self) -> bool:
        return not self.feasible

    @property
    def chi_bound(self) -> int:
        # a 21-colouring would need every class to be a maximum independent set
        ratio = self.order // self.alpha
        exact = ratio * self.alpha == self.order
        return ratio + 1 if exact and self.contradiction else ceil_div(self.order, self.alpha)


def prop9_check() -> Prop9Report:
    """Counting argument ruling out a 21-colouring of G_9 by pairs of full quads."""
    n = 9
    s1 = [b for b in combinations(range(n), 3) if 0 not in b]
    s1_set = set(s1)
    # a pair of disjoint full quads leaves exactly one place uncovered
    in_a1 = sum(b in s1_set for b in _quad_pair_bases(missing=0))
    others = {sum(b in s1_set for b in _quad_pair_bases(missing=x)) for x in range(1, n)}
    assert len(others) == 1
    other = others.pop()
    total = 2 * len(s1)
    sols = tuple((a, b) for a in range(total // in_a1 + 1) for b in range(total // other + 1)
                 if in_a1 * a + other * b == total)
    pairs = gn_order(n) // alpha_formula(n)
    feasible = tuple(ab for ab in sols if sum(ab) == pairs)
    return Prop9Report(len(s1), in_a1, other, sols, pairs, feasible, gn_order(n), alpha_formula(n))
