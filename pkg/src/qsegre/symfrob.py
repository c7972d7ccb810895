"""Class functions on products of two symmetric groups, two-alphabet
symmetric functions in the power-sum basis, and the homology characters of
rank-equal pair posets of subset lattices.

A symmetric function in alphabets x and y is a map from pairs of partitions
(mu, lam) to rational coefficients, read as sum of c * p_mu(x) * p_lam(y).
Products only ever merge partition multisets, so no monomial expansion is
materialized anywhere.  Characters of S_m x S_n are integer tables indexed
the same way.

The character of S_n x S_n on the one nonvanishing reduced homology group of
the proper part of the rank-equal pair poset of two subset lattices is
computed by a Hopf-trace count of group-fixed chains of the order complex.
That route needs nothing but exact chain counting plus the fact (checked
elsewhere via Betti numbers) that the lower homology vanishes, so it is
independent of the shelling machinery and can serve as an oracle for it.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactalg import ONE, QPolynomial, QRationalFunction, one_minus_q_power
from .permstats import w_polynomial
from .poset import (GradedPoset, boolean_lattice, chains_by_dimension,
                    proper_part, segre_product)

Partition = tuple[int, ...]

PARTITION_BOUND = 12
TOP_HOMOLOGY_BOUND = 4
INDUCTION_BOUND = 5


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > PARTITION_BOUND:
        raise ValueError(f"n={n} exceeds the partition bound {PARTITION_BOUND}")

    def generate(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in generate(remaining - part, part):
                yield (part,) + rest

    return tuple(generate(n, n))


def z_of(parts) -> int:
    """Centralizer order of a permutation of cycle type parts:
    the product over part sizes i of i^(m_i) * m_i!."""
    out = 1
    for part, mult in Counter(parts).items():
        out *= part ** mult * factorial(mult)
    return out


def class_size(parts) -> int:
    return factorial(sum(parts)) // z_of(parts)


def h_to_p(n: int) -> dict[Partition, Fraction]:
    """Power-sum expansion of the complete homogeneous function h_n: the
    coefficient of p_lam is 1/z_lam (h_n is the characteristic of the trivial
    character, whose every value is 1)."""
    return {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)}


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class SymFun2:
    """Two-alphabet symmetric function as a power-sum coefficient map."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict[tuple[Partition, Partition], Fraction] = {}
        for (mu, lam), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                out[(tuple(mu), tuple(lam))] = c
        self.terms = out

    @classmethod
    def one(cls) -> "SymFun2":
        return cls({((), ()): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymFun2") -> "SymFun2":
        if not isinstance(other, SymFun2):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return SymFun2(out)

    def __sub__(self, other: "SymFun2") -> "SymFun2":
        if not isinstance(other, SymFun2):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SymFun2":
        return SymFun2({key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFun2({key: c * other for key, c in self.terms.items()})
        if not isinstance(other, SymFun2):
            return NotImplemented
        out: dict = {}
        for (mu1, lam1), c1 in self.terms.items():
            for (mu2, lam2), c2 in other.terms.items():
                key = (_merge(mu1, mu2), _merge(lam1, lam2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return SymFun2(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFun2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFun2(0)"
        bits = [f"{c}*p{list(mu)}(x)p{list(lam)}(y)"
                for (mu, lam), c in sorted(self.terms.items())]
        return "SymFun2(" + " + ".join(bits) + ")"


def symfun2_mul(a: SymFun2, b: SymFun2) -> SymFun2:
    """Bilinear product; on basis elements the partition multisets merge."""
    return a * b


def tensor_single(xs: dict[Partition, Fraction],
                  ys: dict[Partition, Fraction]) -> SymFun2:
    """Product of a single-alphabet expansion in x with one in y."""
    return SymFun2({(mu, lam): cx * cy
                    for mu, cx in xs.items() for lam, cy in ys.items()})


class CharacterTable2:
    """Integer class function on S_m x S_n indexed by partition pairs."""

    __slots__ = ("m", "n", "values")

    def __init__(self, m: int, n: int, values):
        vals = {(tuple(mu), tuple(lam)): int(v) for (mu, lam), v in values.items()}
        expected = {(mu, lam) for mu in partitions_of(m) for lam in partitions_of(n)}
        if set(vals) != expected:
            raise ValueError("table must cover every class pair exactly once")
        self.m, self.n, self.values = m, n, vals

    def value(self, mu, lam) -> int:
        return self.values[(tuple(mu), tuple(lam))]

    def dimension(self) -> int:
        return self.values[((1,) * self.m, (1,) * self.n)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, CharacterTable2) and self.m == other.m
                and self.n == other.n and self.values == other.values)

    def __repr__(self) -> str:
        return f"CharacterTable2(m={self.m}, n={self.n}, values={self.values})"


def trivial_character(m: int, n: int) -> CharacterTable2:
    return CharacterTable2(m, n, {(mu, lam): 1
                                  for mu in partitions_of(m)
                                  for lam in partitions_of(n)})


def product_frobenius(table: CharacterTable2) -> SymFun2:
    """The characteristic sum of chi(mu, lam)/(z_mu z_lam) p_mu(x) p_lam(y)."""
    return SymFun2({(mu, lam): Fraction(v, z_of(mu) * z_of(lam))
                    for (mu, lam), v in table.values.items()})


@lru_cache(maxsize=None)
def _mn_from_beta(beta: tuple[int, ...], mu: Partition) -> int:
    """Murnaghan-Nakayama on beta numbers: removing a border strip of length
    t moves one beta value down by t into a free slot; the sign is the parity
    of the number of occupied slots jumped over."""
    if not mu:
        return 1
    t, rest = mu[0], mu[1:]
    occupied = set(beta)
    total = 0
    for b in beta:
        c = b - t
        if c >= 0 and c not in occupied:
            height = sum(1 for x in beta if c < x < b)
            new_beta = tuple(sorted((occupied - {b}) | {c}, reverse=True))
            term = _mn_from_beta(new_beta, rest)
            total += -term if height % 2 else term
    return total


def symmetric_group_character(lam, mu) -> int:
    """Irreducible character value chi^lam on the class of cycle type mu."""
    lam = tuple(sorted(lam, reverse=True))
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must partition the same integer")
    if not lam:
        return 1
    rows = len(lam)
    beta = tuple(lam[i] + (rows - 1 - i) for i in range(rows))
    return _mn_from_beta(beta, mu)


def irreducible_table2(alpha, beta) -> CharacterTable2:
    """Character of the outer tensor of the irreducibles indexed by alpha and
    beta, as a table on S_|alpha| x S_|beta|."""
    alpha = tuple(sorted(alpha, reverse=True))
    beta = tuple(sorted(beta, reverse=True))
    m, n = sum(alpha), sum(beta)
    values = {(mu, lam): symmetric_group_character(alpha, mu)
              * symmetric_group_character(beta, lam)
              for mu in partitions_of(m) for lam in partitions_of(n)}
    return CharacterTable2(m, n, values)


# ---------------------------------------------------------------------------
# symmetric group plumbing (0-based one-line tuples)

def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v] = i
    return tuple(out)


def _cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def _perm_of_cycle_type(parts, size: int) -> tuple[int, ...]:
    """Canonical representative: consecutive blocks cycled in place."""
    if sum(parts) != size:
        raise ValueError("cycle type does not match the degree")
    img = list(range(size))
    position = 0
    for part in parts:
        for offset in range(part):
            img[position + offset] = position + (offset + 1) % part
        position += part
    return tuple(img)


@lru_cache(maxsize=None)
def _conjugation_profile(first: int, second: int, mu: Partition) -> dict:
    """For a fixed g of cycle type mu in S_(first+second): how many group
    elements conjugate g into the parabolic S_first x S_second, bucketed by
    the cycle types of the two blocks of the conjugate."""
    total = first + second
    g = _perm_of_cycle_type(mu, total)
    profile: dict = {}
    for a in itertools.permutations(range(total)):
        ainv = _inverse(a)
        conj = tuple(ainv[g[a[i]]] for i in range(total))
        if all(conj[i] < first for i in range(first)):
            ta = _cycle_type(conj[:first])
            tb = _cycle_type(tuple(v - first for v in conj[first:]))
            key = (ta, tb)
            profile[key] = profile.get(key, 0) + 1
    return profile


def induce_product_character(t: CharacterTable2, u: CharacterTable2,
                             bound: int = INDUCTION_BOUND) -> CharacterTable2:
    """Induction product: the outer tensor of t (on S_k x S_l) and u (on
    S_m x S_n), induced to S_(k+m) x S_(l+n).

    Computed from the definition of induction: average the extended-by-zero
    character over conjugators, componentwise, using the profiles above.
    """
    k, l, m, n = t.m, t.n, u.m, u.n
    if k + m > bound or l + n > bound:
        raise ValueError(f"induction sizes ({k + m},{l + n}) exceed the bound {bound}")
    big_m, big_n = k + m, l + n
    denominator = factorial(k) * factorial(m) * factorial(l) * factorial(n)
    values = {}
    for mu in partitions_of(big_m):
        prof1 = _conjugation_profile(k, m, mu)
        for lam in partitions_of(big_n):
            prof2 = _conjugation_profile(l, n, lam)
            acc = 0
            for (ta, tb), c1 in prof1.items():
                for (tc, td), c2 in prof2.items():
                    acc += c1 * c2 * t.values[(ta, tc)] * u.values[(tb, td)]
            quotient, remainder = divmod(acc, denominator)
            if remainder:
                raise ArithmeticError("induced character value is not integral")
            values[(mu, lam)] = quotient
    return CharacterTable2(big_m, big_n, values)


# ---------------------------------------------------------------------------
# homology characters of the rank-equal pair poset of two subset lattices

@lru_cache(maxsize=None)
def _pair_poset(n: int) -> GradedPoset:
    """Proper part of the rank-equal pair poset of two copies of the subset
    lattice on [n]; empty for n = 1."""
    b = boolean_lattice(n)
    return proper_part(segre_product(b, b))


@lru_cache(maxsize=None)
def _pair_poset_chains(n: int):
    return tuple(tuple(level) for level in chains_by_dimension(_pair_poset(n)))


def lefschetz_character(n: int, bound: int = TOP_HOMOLOGY_BOUND) -> CharacterTable2:
    """Character of S_n x S_n on the single nonvanishing reduced homology of
    the pair poset, from the Hopf trace over the order complex.

    For each class pair (mu, lam) and representative (g, h), the trace on the
    chain complex is the signed count of fixed chains (with the empty chain
    contributing at dimension -1); since only the top homology survives, the
    homology character is (-1)^n times that alternating count.  Chains have
    distinct ranks and the action preserves rank, so a chain fixed setwise is
    fixed pointwise; both counts are computed and compared rather than
    assuming the equivalence.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > bound:
        raise ValueError(f"n={n} exceeds the homology bound {bound}")
    poset = _pair_poset(n)
    chains = _pair_poset_chains(n)
    name_index = {name: i for i, name in enumerate(poset.names)}
    values = {}
    for mu in partitions_of(n):
        g = _perm_of_cycle_type(mu, n)
        for lam in partitions_of(n):
            h = _perm_of_cycle_type(lam, n)
            act = [0] * len(poset)
            for i, (s, t) in enumerate(poset.names):
                image = (tuple(sorted(g[x - 1] + 1 for x in s)),
                         tuple(sorted(h[x - 1] + 1 for x in t)))
                act[i] = name_index[image]
            euler = -1
            for dim, level in enumerate(chains):
                pointwise = sum(1 for c in level if all(act[v] == v for v in c))
                setwise = sum(1 for c in level
                              if sorted(act[v] for v in c) == sorted(c))
                assert pointwise == setwise
                euler += pointwise if dim % 2 == 0 else -pointwise
            values[(mu, lam)] = euler if n % 2 == 0 else -euler
    return CharacterTable2(n, n, values)


@lru_cache(maxsize=None)
def homology_characteristic(n: int) -> SymFun2:
    """Product Frobenius characteristic of the top homology character; the
    constant 1 at n = 0 (the degenerate poset convention forced by the n = 1
    instance of the alternating identity)."""
    if n == 0:
        return SymFun2.one()
    return product_frobenius(lefschetz_character(n))


def h_alternating_residual(n: int) -> SymFun2:
    """The alternating sum over i of (-1)^i h_(n-i)(x) h_(n-i)(y) times the
    degree-i homology characteristic; zero exactly when the homology
    characters satisfy the complete-homogeneous identity."""
    total = SymFun2()
    for i in range(n + 1):
        h = h_to_p(n - i)
        term = tensor_single(h, h) * homology_characteristic(i)
        total = total + term if i % 2 == 0 else total - term
    return total


@lru_cache(maxsize=None)
def characteristic_by_whitney_recursion(n: int) -> SymFun2:
    """The top characteristic rebuilt bottom-up from the Whitney-homology
    decomposition: degree n is the alternating sum over r < n of the degree-r
    value times h_(n-r)(x) h_(n-r)(y), seeded with 1 at degree 0."""
    if n == 0:
        return SymFun2.one()
    total = SymFun2()
    for r in range(n):
        h = h_to_p(n - r)
        term = characteristic_by_whitney_recursion(r) * tensor_single(h, h)
        total = total + term if (n - 1 + r) % 2 == 0 else total - term
    return total


def principal_specialization(f: SymFun2) -> QRationalFunction:
    """Substitute 1, q, q^2, ... into both alphabets: each part a of either
    partition contributes a factor 1/(1 - q^a)."""
    total = QRationalFunction(QPolynomial())
    for (mu, lam), c in sorted(f.terms.items()):
        den = ONE
        for part in mu + lam:
            den = den * one_minus_q_power(part)
        total = total + QRationalFunction(QPolynomial([c]), den)
    return total


def specialization_denominator(n: int) -> QPolynomial:
    """The product of (1 - q^i)^2 for i = 1..n."""
    out = ONE
    for i in range(1, n + 1):
        factor = one_minus_q_power(i)
        out = out * factor * factor
    return out


def verify_specialization_identity(n: int) -> bool:
    """Exact equality of the specialized top characteristic with
    W_n(q) over the product of (1 - q^i)^2."""
    lhs = principal_specialization(homology_characteristic(n))
    rhs = QRationalFunction(w_polynomial(n), specialization_denominator(n))
    return lhs == rhs


def verify_induction_homomorphism(k: int, l: int, m: int, n: int,
                                  bound: int = INDUCTION_BOUND) -> bool:
    """The characteristic map must send induction products to products.
    Checked over every pair of irreducible characters of S_k x S_l and
    S_m x S_n, which span the class functions."""
    for alpha in partitions_of(k):
        for beta in partitions_of(l):
            t = irreducible_table2(alpha, beta)
            ch_t = product_frobenius(t)
            for gamma in partitions_of(m):
                for delta in partitions_of(n):
                    u = irreducible_table2(gamma, delta)
                    induced = induce_product_character(t, u, bound=bound)
                    if product_frobenius(induced) != ch_t * product_frobenius(u):
                        return False
    return True
