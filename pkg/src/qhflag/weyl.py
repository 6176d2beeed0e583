"""Exact Weyl group arithmetic over a fixed root system.

A Weyl element is stored as a pair of n x n integer matrices: its action on
the coroot lattice (column j = image of the j-th simple coroot; this is the
canonical form used for equality) and the induced action on the root
lattice.  Lengths are computed by counting inversions at construction and
cached.  Elements are immutable and freely shareable between threads; every
operation here is pure.

Weyl elements serialize as reduced words: arrays of 1-based simple indices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import CapExceededError, InternalConsistencyError, InvalidInputError
from .rootsys import Coroot, Root, RootSystem

Matrix = Tuple[Tuple[int, ...], ...]

WEYL_CAP = 2000


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    rng = range(n)
    bt = tuple(tuple(b[i][j] for i in rng) for j in rng)  # columns of b
    return tuple(tuple(sum(row[k] * col[k] for k in rng) for col in bt)
                 for row in a)


def _mat_vec(a: Matrix, v: Sequence[int]) -> Tuple[int, ...]:
    n = len(a)
    return tuple(sum(a[i][k] * v[k] for k in range(n)) for i in range(n))


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] +
         [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise InternalConsistencyError("singular Weyl action matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = m[i][n + j]
            if x.denominator != 1:
                raise InternalConsistencyError("non-integer Weyl inverse")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


class WeylElt:
    """One Weyl group element; equality and hashing use the coroot action."""

    __slots__ = ("rs", "cmat", "rmat", "length", "_word", "_hash")

    def __init__(self, rs: RootSystem, cmat: Matrix, rmat: Matrix):
        self.rs = rs
        self.cmat = cmat
        self.rmat = rmat
        self.length = sum(
            1 for g in rs.positive_roots
            if not rs.is_positive_root(_mat_vec(rmat, g)))
        self._word: Optional[Tuple[int, ...]] = None
        self._hash = hash((rs.key(), cmat))

    def __eq__(self, other):
        return (isinstance(other, WeylElt) and self.rs == other.rs
                and self.cmat == other.cmat)

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return multiply(self, other)

    def __repr__(self):
        return "W[%s]" % ",".join(map(str, self.word()))

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def apply_root(self, beta: Root) -> Root:
        return _mat_vec(self.rmat, beta)

    def apply_coroot(self, lam: Coroot) -> Coroot:
        return _mat_vec(self.cmat, lam)

    def inverse(self) -> "WeylElt":
        return WeylElt(self.rs, _mat_inverse(self.cmat), _mat_inverse(self.rmat))

    def descends_right(self, i: int) -> bool:
        """True iff l(w s_i) = l(w) - 1, i.e. w(alpha_i) is negative."""
        img = self.apply_root(self.rs.simple_root(i))
        return not self.rs.is_positive_root(img)

    def word(self) -> Tuple[int, ...]:
        """Reduced word, greedy lowest-descent-first (deterministic)."""
        if self._word is None:
            letters: List[int] = []
            x = self
            while x.length:
                j = next(i for i in range(1, self.rs.n + 1) if x.descends_right(i))
                letters.append(j)
                x = multiply(x, simple_reflection(self.rs, j))
            self._word = tuple(reversed(letters))
        return self._word

    def sort_key(self):
        return (self.length, self.word())


def identity(rs: RootSystem) -> WeylElt:
    cache = rs._cache
    if "weyl_id" not in cache:
        e = _identity_matrix(rs.n)
        cache["weyl_id"] = WeylElt(rs, e, e)
    return cache["weyl_id"]


def simple_reflection(rs: RootSystem, i: int) -> WeylElt:
    cache = rs._cache.setdefault("weyl_s", {})
    if i not in cache:
        rs._check_index(i)
        n = rs.n
        rmat = tuple(zip(*[rs.reflect_root(i, rs.simple_root(j + 1))
                           for j in range(n)]))
        cmat = tuple(zip(*[rs.reflect_coroot(i, rs.simple_coroot(j + 1))
                           for j in range(n)]))
        cache[i] = WeylElt(rs, cmat, rmat)
    return cache[i]


def multiply(w1: WeylElt, w2: WeylElt) -> WeylElt:
    """Group product w1 * w2 (w2 acts first)."""
    if w1.rs != w2.rs:
        raise InvalidInputError("cannot multiply elements of different systems")
    return WeylElt(w1.rs, _mat_mul(w1.cmat, w2.cmat), _mat_mul(w1.rmat, w2.rmat))


def word_to_element(rs: RootSystem, word: Iterable[int]) -> WeylElt:
    w = identity(rs)
    for i in word:
        w = multiply(w, simple_reflection(rs, i))
    return w


def reduced_word(w: WeylElt) -> Tuple[int, ...]:
    return w.word()


def reflection(rs: RootSystem, gamma: Root) -> WeylElt:
    """The reflection s_gamma for a positive root gamma."""
    gamma = tuple(gamma)
    if not rs.is_positive_root(gamma):
        raise InvalidInputError(f"{gamma} is not a positive root")
    gv = rs.coroot_of(gamma)
    n = rs.n
    rcols = []
    ccols = []
    for j in range(1, n + 1):
        aj = rs.simple_root(j)
        c = rs.pairing(aj, gv)
        rcols.append(tuple(aj[k] - c * gamma[k] for k in range(n)))
        ajv = rs.simple_coroot(j)
        c2 = rs.pairing(gamma, ajv)
        ccols.append(tuple(ajv[k] - c2 * gv[k] for k in range(n)))
    rmat = tuple(zip(*rcols))
    cmat = tuple(zip(*ccols))
    return WeylElt(rs, cmat, rmat)


def inversion_set(w: WeylElt) -> FrozenSet[Root]:
    """Positive roots sent to negative roots by w; size equals l(w)."""
    rs = w.rs
    return frozenset(g for g in rs.positive_roots
                     if not rs.is_positive_root(w.apply_root(g)))


def enumerate_group(rs: RootSystem, indices: Optional[Iterable[int]] = None,
                    cap: int = WEYL_CAP) -> Tuple[WeylElt, ...]:
    """All elements of the parabolic subgroup W_{P'} (whole group if None).

    Deterministic output, sorted by (length, reduced word).  Refuses with
    CapExceededError as soon as more than ``cap`` elements are found.
    """
    if indices is None:
        indices = range(1, rs.n + 1)
    ind = rs.check_parabolic(indices)
    gens = [simple_reflection(rs, i) for i in ind]
    seen = {identity(rs)}
    frontier = [identity(rs)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                x = multiply(w, s)
                if x not in seen:
                    seen.add(x)
                    if len(seen) > cap:
                        raise CapExceededError(
                            f"Weyl enumeration exceeds cap {cap} "
                            f"(raise the cap explicitly to proceed)")
                    nxt.append(x)
        frontier = nxt
    return tuple(sorted(seen, key=WeylElt.sort_key))


def is_minimal_representative(w: WeylElt, indices: Iterable[int]) -> bool:
    """True iff w is the minimal-length element of w W_{P'}."""
    rs = w.rs
    return all(rs.is_positive_root(w.apply_root(rs.simple_root(i)))
               for i in rs.check_parabolic(indices))


def parabolic_decompose(w: WeylElt, indices: Iterable[int]) -> Tuple[WeylElt, WeylElt]:
    """Write w = v u with u in W_{P'} and v minimal in v W_{P'}.

    Lengths add: l(w) = l(v) + l(u).
    """
    rs = w.rs
    ind = rs.check_parabolic(indices)
    v = w
    u = identity(rs)
    while True:
        j = next((i for i in ind if v.descends_right(i)), None)
        if j is None:
            break
        s = simple_reflection(rs, j)
        v = multiply(v, s)
        u = multiply(s, u)
    if v.length + u.length != w.length:
        raise InternalConsistencyError("parabolic decomposition lost length")
    return v, u


def longest_element(rs: RootSystem, indices: Optional[Iterable[int]] = None) -> WeylElt:
    """Longest element of W_{P'}, by greedy length ascent (no enumeration)."""
    if indices is None:
        indices = range(1, rs.n + 1)
    ind = rs.check_parabolic(indices)
    x = identity(rs)
    while True:
        j = next((i for i in ind if not x.descends_right(i)), None)
        if j is None:
            break
        x = multiply(x, simple_reflection(rs, j))
    if x.length != len(rs.positive_roots_within(ind)):
        raise InternalConsistencyError("longest element has wrong length")
    return x


def full_decomposition(w: WeylElt, order: Sequence[int]) -> List[WeylElt]:
    """The unique decomposition w = v_{r+1} ... v_1 along an ordered chain.

    ``order`` lists the parabolic simple indices alpha_1, ..., alpha_r; the
    chain is Delta_j = {order[0..j-1]} and v_j is the minimal representative
    in W_{P_j} of v_j W_{P_{j-1}}.  Returns [v_1, ..., v_{r+1}].
    """
    rs = w.rs
    order = tuple(order)
    parts: List[WeylElt] = [identity(rs)] * (len(order) + 1)
    rem = w
    for j in range(len(order) + 1, 1, -1):
        v, rem = parabolic_decompose(rem, order[:j - 1])
        parts[j - 1] = v
    parts[0] = rem
    total = identity(rs)
    for v in reversed(parts):
        total = multiply(total, v)
    if total != w or sum(v.length for v in parts) != w.length:
        raise InternalConsistencyError("chain decomposition failed to recompose")
    return parts
