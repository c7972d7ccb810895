"""Finite fields of small prime-power order, the lattice of subspaces of
F_q^n, and its rightmost-coordinate edge labeling.

Field elements are plain integers 0..q-1 encoding polynomial residues in base
p (index 0 is the zero element, index 1 the one); arithmetic is table driven,
which is comfortable for the configured size bound of 16.  A subspace is its
canonical reduced row echelon basis, so subspace equality is tuple equality.

Two conventions coexist on purpose and must not be conflated: the canonical
RREF basis pivots on the leftmost nonzero coordinates, while the labeling
reads the rightmost nonzero coordinate of an atom (scaled so that coordinate
is 1).  Labels are 1-based coordinate indices.
"""

from __future__ import annotations

from itertools import combinations, product

from .poset import EdgeLabeling, GradedPoset, segre_product

FIELD_SIZE_BOUND = 16
SUBSPACE_COUNT_BOUND = 100_000


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_divmod_modp(num: list[int], den: list[int], p: int):
    """Long division of coefficient lists (ascending) over F_p."""
    num = list(num)
    dlen = len(den)
    dlead_inv = pow(den[-1], -1, p)
    quo = [0] * max(0, len(num) - dlen + 1)
    for shift in range(len(num) - dlen, -1, -1):
        factor = (num[shift + dlen - 1] * dlead_inv) % p
        if factor:
            quo[shift] = factor
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * c) % p
    while num and num[-1] == 0:
        num.pop()
    return quo, num


def _monic_polys_modp(degree: int, p: int):
    for tail in product(range(p), repeat=degree):
        yield list(tail) + [1]


def _is_irreducible_modp(poly: list[int], p: int) -> bool:
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys_modp(d, p):
            _, rem = _poly_divmod_modp(poly, divisor, p)
            if not rem:
                return False
    return True


def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    """First irreducible monic degree-k polynomial, scanning the non-leading
    coefficients as ascending base-p integers; deterministic by construction."""
    for code in range(p ** k):
        tail = []
        value = code
        for _ in range(k):
            tail.append(value % p)
            value //= p
        candidate = tail + [1]
        if _is_irreducible_modp(candidate, p):
            return tuple(candidate)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


class FiniteField:
    """F_{p^k} with table-driven arithmetic on integer element indices."""

    __slots__ = ("p", "k", "order", "modulus", "_add", "_mul", "_neg", "_inv")

    def __init__(self, p: int, k: int = 1, size_bound: int = FIELD_SIZE_BOUND):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be at least 1")
        order = p ** k
        if order > size_bound:
            raise ValueError(f"field order {order} exceeds the bound {size_bound}")
        self.p, self.k, self.order = p, k, order
        self.modulus = _find_modulus(p, k)

        def decode(e: int) -> list[int]:
            out = []
            for _ in range(k):
                out.append(e % p)
                e //= p
            return out

        def encode(coeffs: list[int]) -> int:
            e = 0
            for c in reversed(coeffs[:k] + [0] * (k - len(coeffs))):
                e = e * p + (c % p)
            return e

        self._add = [[0] * order for _ in range(order)]
        self._mul = [[0] * order for _ in range(order)]
        self._neg = [0] * order
        for a in range(order):
            ca = decode(a)
            self._neg[a] = encode([(-x) % p for x in ca])
            for b in range(order):
                cb = decode(b)
                self._add[a][b] = encode([(x + y) % p for x, y in zip(ca, cb)])
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(ca):
                    if x:
                        for j, y in enumerate(cb):
                            prod[i + j] = (prod[i + j] + x * y) % p
                _, rem = _poly_divmod_modp(prod, list(self.modulus), p)
                self._mul[a][b] = encode(rem)
        self._inv = [0] * order
        for a in range(1, order):
            self._inv[a] = next(b for b in range(1, order) if self._mul[a][b] == 1)
        # multiplicative order check: every nonzero element to the q-1 is one
        for a in range(1, order):
            acc = 1
            for _ in range(order - 1):
                acc = self._mul[acc][a]
            assert acc == 1, "field construction failed the unit-group check"

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._inv[a]

    def key(self) -> tuple:
        return (self.p, self.k, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, k={self.k})"


def field_make(p: int, k: int = 1, size_bound: int = FIELD_SIZE_BOUND) -> FiniteField:
    return FiniteField(p, k, size_bound)


def rref_rows(field: FiniteField, ambient: int, vectors) -> tuple[tuple[int, ...], ...]:
    """Canonical reduced row echelon basis of the span of the given vectors."""
    mat = [list(map(int, v)) for v in vectors]
    for v in mat:
        if len(v) != ambient:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        if any(not 0 <= x < field.order for x in v):
            raise ValueError("vector entry outside the field")
    r = 0
    for col in range(ambient):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][col])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r] if any(row))


class Subspace:
    """Row space of a canonical RREF basis over a small finite field."""

    __slots__ = ("field", "ambient", "rows")

    def __init__(self, field: FiniteField, ambient: int,
                 rows: tuple[tuple[int, ...], ...]):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        pivots = []
        for row in self.rows:
            if len(row) != ambient or not any(row):
                raise ValueError("basis rows must be nonzero vectors of ambient length")
            pivots.append(next(i for i, x in enumerate(row) if x))
        if pivots != sorted(set(pivots)):
            raise ValueError("pivot columns must be strictly increasing")
        for i, pc in enumerate(pivots):
            if self.rows[i][pc] != 1 or any(self.rows[j][pc] for j in range(len(pivots)) if j != i):
                raise ValueError("basis is not reduced row echelon")

    @classmethod
    def from_vectors(cls, field: FiniteField, ambient: int, vectors) -> "Subspace":
        return cls(field, ambient, rref_rows(field, ambient, vectors))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, other: "Subspace") -> bool:
        if self.field.key() != other.field.key() or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")
        field = self.field
        for v in other.rows:
            vec = list(v)
            for row in self.rows:
                pc = next(i for i, x in enumerate(row) if x)
                if vec[pc]:
                    c = vec[pc]
                    vec = [field.sub(x, field.mul(c, y)) for x, y in zip(vec, row)]
            if any(vec):
                return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.field.key() == other.field.key()
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field.key(), self.ambient, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, rows={self.rows})"


def _gaussian_count(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (integer arithmetic only)."""
    result = 1
    for i in range(k):
        result = result * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return result


def enumerate_subspaces(n: int, field: FiniteField,
                        count_bound: int | None = None) -> list[Subspace]:
    """Every subspace of F_q^n exactly once, generated rank by rank as RREF
    matrices (choose pivot columns, then fill the free positions)."""
    if n < 0:
        raise ValueError("ambient dimension must be nonnegative")
    bound = SUBSPACE_COUNT_BOUND if count_bound is None else count_bound
    total = sum(_gaussian_count(n, k, field.order) for k in range(n + 1))
    if total > bound:
        raise ValueError(f"{total} subspaces exceed the bound {bound}")
    out = []
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(i, j) for i in range(k)
                    for j in range(pivots[i] + 1, n) if j not in pivots]
            for assignment in product(range(field.order), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), value in zip(free, assignment):
                    rows[i][j] = value
                out.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    return out


def _nonzero_vectors(s: Subspace):
    """All nonzero vectors in the row space, from coefficient combinations of
    the basis (never scans the ambient space)."""
    field = s.field
    for coeffs in product(range(field.order), repeat=s.dim):
        if not any(coeffs):
            continue
        vec = [0] * s.ambient
        for c, row in zip(coeffs, s.rows):
            if c:
                for i, x in enumerate(row):
                    if x:
                        vec[i] = field.add(vec[i], field.mul(c, x))
        yield vec


def label_set(s: Subspace) -> frozenset[int]:
    """Rightmost nonzero coordinate indices (1-based) over the atoms of s."""
    out = set()
    for vec in _nonzero_vectors(s):
        out.add(max(i for i, x in enumerate(vec) if x) + 1)
    assert len(out) == s.dim, "a dimension-d subspace must reach exactly d indices"
    return frozenset(out)


def atom_vector(s: Subspace) -> tuple[int, ...]:
    """Basis vector of an atom, rescaled so its rightmost nonzero entry is 1."""
    if s.dim != 1:
        raise ValueError(f"atom operations need dimension 1, got {s.dim}")
    vec = list(s.rows[0])
    last = max(i for i, x in enumerate(vec) if x)
    inv = s.field.inv(vec[last])
    return tuple(s.field.mul(inv, x) for x in vec)


def atom_label(s: Subspace) -> int:
    """1-based index of the rightmost nonzero coordinate of the atom's basis
    vector; invariant under rescaling."""
    if s.dim != 1:
        raise ValueError(f"atom operations need dimension 1, got {s.dim}")
    return max(i for i, x in enumerate(s.rows[0]) if x) + 1


def edge_label(x: Subspace, y: Subspace) -> int:
    """The unique new rightmost-coordinate index gained when y covers x."""
    if y.dim != x.dim + 1 or not y.contains(x):
        raise ValueError("edge_label requires y to cover x")
    difference = label_set(y) - label_set(x)
    assert len(difference) == 1
    return next(iter(difference))


def build_bnq(n: int, field: FiniteField,
              count_bound: int | None = None) -> tuple[GradedPoset, EdgeLabeling]:
    """The subspace lattice of F_q^n with the rightmost-coordinate labeling."""
    subs = enumerate_subspaces(n, field, count_bound)
    subs.sort(key=lambda s: (s.dim, s.rows))
    names = [s.rows for s in subs]
    ranks = [s.dim for s in subs]
    index = {s.rows: i for i, s in enumerate(subs)}
    by_rank: dict[int, list[Subspace]] = {}
    for s in subs:
        by_rank.setdefault(s.dim, []).append(s)
    fsets = [label_set(s) for s in subs]
    covers = []
    labels = {}
    for upper in subs:
        if upper.dim == 0:
            continue
        b = index[upper.rows]
        for lower in by_rank.get(upper.dim - 1, ()):
            if upper.contains(lower):
                a = index[lower.rows]
                covers.append((a, b))
                difference = fsets[b] - fsets[a]
                assert len(difference) == 1
                labels[(a, b)] = next(iter(difference))
    poset = GradedPoset(names, ranks, covers)
    return poset, EdgeLabeling.with_integer_labels(labels)


def build_segre_bnq(n: int, field: FiniteField,
                    count_bound: int | None = None) -> tuple[GradedPoset, EdgeLabeling]:
    """Segre square of the subspace lattice, covers labeled by ordered pairs
    under the componentwise order."""
    p, labeling = build_bnq(n, field, count_bound)
    sp = segre_product(p, p)
    index = {name: i for i, name in enumerate(p.names)}
    pair_labels = {}
    for a, b in sp.covers:
        (xa, ya) = sp.names[a]
        (xb, yb) = sp.names[b]
        pair_labels[(a, b)] = (labeling.labels[(index[xa], index[xb])],
                               labeling.labels[(index[ya], index[yb])])
    return sp, EdgeLabeling.with_pair_labels(pair_labels)
