"""The small quantum cohomology ring QH*(G/B).

Schubert classes are indexed by Weyl elements; a QClass is a finite integer
combination of basis elements q^lambda sigma^w, with the q-multidegree
lambda recorded over all simple-root positions.

The full quantum product is computed in two stages:

1.  The classical (q = 0) ring is divisor-generated, so each sigma^v is
    expressed, degree by degree, as an exact-rational polynomial in the
    degree-one classes via Gaussian elimination over classical products.
2.  sigma^u * sigma^v is evaluated by induction on l(v): replay the
    degree-(l(v)) pivot products quantum-mechanically on top of sigma^u and
    subtract the recursively computed q-carrying corrections, which involve
    strictly shorter Weyl elements by degree homogeneity.

All coefficients are exact; the final structure constants are asserted to
be nonnegative integers (they are genus-zero Gromov-Witten invariants).
Product computation is pure; the memo caches make repeated all-pairs
verification cheap.  Results are bit-identical regardless of call order.

JSON form of a QClass: a list of {"word": [...], "q": [...], "coeff": "c"}
objects, with Weyl elements serialized as reduced words.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import CapExceededError, InternalConsistencyError, InvalidInputError
from .rootsys import RootSystem
from . import weyl
from .weyl import WeylElt

QDIGIT = 32  # per-coordinate cap on q exponents in the packed key


class QClass:
    """Finite combination of basis elements q^lambda sigma^w."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: Dict[Tuple[WeylElt, Tuple[int, ...]], object]):
        self.rs = rs
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __eq__(self, other):
        return (isinstance(other, QClass) and self.rs == other.rs
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.rs.key(), frozenset(self.terms.items())))

    def __add__(self, other: "QClass") -> "QClass":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return QClass(self.rs, out)

    def __sub__(self, other: "QClass") -> "QClass":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return QClass(self.rs, out)

    def scale(self, c) -> "QClass":
        return QClass(self.rs, {k: c * v for k, v in self.terms.items()})

    def q_shift(self, lam: Sequence[int]) -> "QClass":
        """Multiply by the monomial q^lam."""
        lam = tuple(lam)
        return QClass(self.rs, {
            (w, tuple(a + b for a, b in zip(mu, lam))): c
            for (w, mu), c in self.terms.items()})

    def coefficient(self, w: WeylElt, lam: Sequence[int]):
        return self.terms.get((w, tuple(lam)), 0)

    def classical_part(self) -> "QClass":
        zero = (0,) * self.rs.n
        return QClass(self.rs, {k: v for k, v in self.terms.items()
                                if k[1] == zero})

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].length, sum(kv[0][1]),
                                      kv[0][1], kv[0][0].word()))

    def __repr__(self):
        return f"QClass({format_qclass(self)})"


def format_qclass(qc: QClass) -> str:
    """Human format: 'q1*q2 + q1*s[1,2]'; the unit class prints as '1'."""
    if not qc.terms:
        return "0"
    parts = []
    for (w, lam), c in qc.sorted_terms():
        factors = []
        if c != 1:
            factors.append(str(c))
        for j, e in enumerate(lam, start=1):
            if e == 1:
                factors.append(f"q{j}")
            elif e != 0:
                factors.append(f"q{j}^{e}")
        if w.length or not factors:
            factors.append("s[%s]" % ",".join(map(str, w.word()))
                           if w.length else "1")
        parts.append("*".join(factors))
    return " + ".join(parts)


def qclass_to_json(qc: QClass) -> List[dict]:
    return [{"word": list(w.word()), "q": list(lam), "coeff": str(c)}
            for (w, lam), c in qc.sorted_terms()]


class QuantumFlagRing:
    """QH*(G/B) for one root system, with memoized exact products."""

    def __init__(self, rs: RootSystem, weyl_cap: int = weyl.WEYL_CAP):
        self.rs = rs
        self.n = rs.n
        self.elements: Tuple[WeylElt, ...] = weyl.enumerate_group(rs, cap=weyl_cap)
        self.index: Dict[WeylElt, int] = {w: i for i, w in enumerate(self.elements)}
        self.lengths: Tuple[int, ...] = tuple(w.length for w in self.elements)
        self.max_length = max(self.lengths)
        if self.max_length >= QDIGIT:
            raise CapExceededError(
                f"longest element has length {self.max_length}; the packed "
                f"q-exponent range caps products at length {QDIGIT - 1}")
        self.by_length: List[List[int]] = [[] for _ in range(self.max_length + 1)]
        for i, w in enumerate(self.elements):
            self.by_length[w.length].append(i)
        self._cmat_index = {w.cmat: i for i, w in enumerate(self.elements)}
        # Positive-root data for the Chevalley formula.
        self._chev_data = []
        for g in rs.positive_roots:
            gv = rs.coroot_of(g)
            self._chev_data.append((weyl.reflection(rs, g), gv,
                                    rs.two_rho_pairing(gv), self._pack(gv)))
        self._chev_rows: Dict[Tuple[int, int], tuple] = {}
        self._expr: Dict[int, list] = {}      # v index -> [(i, x idx, Fraction)]
        self._corr: Dict[int, list] = {}      # v index -> [(x' idx, qshift, Fraction)]
        self._pivots: Dict[int, list] = {}    # degree -> [(i, x idx)]
        self._expr_built_upto = 1
        self._prod: Dict[Tuple[int, int], Dict[int, int]] = {}
        self._pivot_apps: Dict[Tuple[int, int], list] = {}

    # -- packed term keys ----------------------------------------------------

    def _pack(self, lam: Sequence[int]) -> int:
        key = 0
        for e in reversed(lam):
            if not 0 <= e < QDIGIT:
                raise InternalConsistencyError(
                    f"q exponent {e} outside packing range")
            key = key * QDIGIT + e
        return key

    def _unpack(self, key: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.n):
            key, e = divmod(key, QDIGIT)
            out.append(e)
        return tuple(out)

    @property
    def _qbase(self) -> int:
        return QDIGIT ** self.n

    def _term_key(self, widx: int, qkey: int) -> int:
        return widx * self._qbase + qkey

    def _from_packed(self, d: Dict[int, int]) -> QClass:
        qb = self._qbase
        return QClass(self.rs, {
            (self.elements[k // qb], self._unpack(k % qb)): v
            for k, v in d.items()})

    # -- element helpers -----------------------------------------------------

    def element_from_word(self, word: Iterable[int]) -> WeylElt:
        return weyl.word_to_element(self.rs, word)

    def _idx(self, w: WeylElt) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise InvalidInputError("Weyl element does not belong to this ring")

    # -- quantum Chevalley ----------------------------------------------------

    def _chev_row(self, i: int, widx: int) -> tuple:
        """Expansion of sigma^{w} * sigma^{s_i} as (widx', qshift, coeff)."""
        key = (i, widx)
        row = self._chev_rows.get(key)
        if row is None:
            w = self.elements[widx]
            lw = w.length
            out = []
            for sref, gv, tworho, qkey in self._chev_data:
                c = gv[i - 1]  # <chi_i, gamma^vee>
                if c == 0:
                    continue
                cmat2 = weyl._mat_mul(w.cmat, sref.cmat)
                widx2 = self._cmat_index[cmat2]
                l2 = self.lengths[widx2]
                if l2 == lw + 1:
                    out.append((widx2, 0, c))
                if l2 == lw + 1 - tworho:
                    out.append((widx2, qkey, c))
            row = tuple(out)
            self._chev_rows[key] = row
        return row

    def chevalley_product(self, u: WeylElt, i: int) -> QClass:
        """sigma^u * sigma^{s_i}: the two Chevalley sums, nothing else."""
        self.rs._check_index(i)
        ui = self._idx(u)
        out: Dict[int, int] = {}
        for widx2, qkey, c in self._chev_row(i, ui):
            k = self._term_key(widx2, qkey)
            out[k] = out.get(k, 0) + c
        return self._from_packed(out)

    def _chev_apply(self, i: int, cls: Dict[int, int]) -> Dict[int, int]:
        """Right-multiply a packed class by sigma^{s_i} (quantum)."""
        qb = self._qbase
        out: Dict[int, int] = {}
        get = out.get
        for key, val in cls.items():
            widx, qkey = divmod(key, qb)
            for widx2, qshift, c in self._chev_row(i, widx):
                k2 = widx2 * qb + qkey + qshift
                out[k2] = get(k2, 0) + c * val
        return {k: v for k, v in out.items() if v}

    def _chev_apply_classical(self, i: int, cls: Dict[int, int]) -> Dict[int, int]:
        qb = self._qbase
        out: Dict[int, int] = {}
        get = out.get
        for key, val in cls.items():
            widx, qkey = divmod(key, qb)
            for widx2, qshift, c in self._chev_row(i, widx):
                if qshift == 0:
                    k2 = widx2 * qb + qkey
                    out[k2] = get(k2, 0) + c * val
        return {k: v for k, v in out.items() if v}

    # -- divisor expressions ---------------------------------------------------

    def _build_expressions_upto(self, degree: int) -> None:
        """Express every sigma^v with l(v) <= degree over divisor pivots."""
        while self._expr_built_upto < degree:
            d = self._expr_built_upto + 1
            self._build_expressions_degree(d)
            self._expr_built_upto = d

    def _build_expressions_degree(self, d: int) -> None:
        basis = self.by_length[d]
        pos = {widx: row for row, widx in enumerate(basis)}
        m = len(basis)
        qb = self._qbase
        # Greedily collect m independent classical products sigma^{s_i} * sigma^x.
        pivot_cols: List[List[Fraction]] = []
        pivot_ids: List[Tuple[int, int]] = []
        reduced: List[List[Fraction]] = []  # row-echelon copies of pivot cols
        pivot_rows: List[int] = []
        for x in self.by_length[d - 1]:
            for i in range(1, self.n + 1):
                col = [Fraction(0)] * m
                for widx2, qshift, c in self._chev_row(i, x):
                    if qshift == 0:
                        col[pos[widx2]] += c
                vec = list(col)
                for prow, pvec in zip(pivot_rows, reduced):
                    f = vec[prow]
                    if f:
                        vec = [a - f * b for a, b in zip(vec, pvec)]
                lead = next((r for r in range(m) if vec[r]), None)
                if lead is None:
                    continue
                inv = 1 / vec[lead]
                vec = [a * inv for a in vec]
                pivot_cols.append(col)
                pivot_ids.append((i, x))
                reduced.append(vec)
                pivot_rows.append(lead)
                if len(pivot_ids) == m:
                    break
            if len(pivot_ids) == m:
                break
        if len(pivot_ids) != m:
            raise InternalConsistencyError(
                f"degree {d}: divisor classes fail to span "
                f"({len(pivot_ids)} of {m})")
        # Invert P (columns = pivot products over the degree-d basis).
        inv = _invert_fraction_matrix([[pivot_cols[k][r] for k in range(m)]
                                       for r in range(m)])
        self._pivots[d] = pivot_ids
        for vpos, v in enumerate(basis):
            expr = [(pivot_ids[k][0], pivot_ids[k][1], inv[k][vpos])
                    for k in range(m) if inv[k][vpos]]
            self._expr[v] = expr
            corr: Dict[Tuple[int, int], Fraction] = {}
            for i, x, t in expr:
                for widx2, qshift, c in self._chev_row(i, x):
                    if qshift:
                        key = (widx2, qshift)
                        corr[key] = corr.get(key, Fraction(0)) + t * c
            self._corr[v] = [(w2, qs, t) for (w2, qs), t in sorted(corr.items())
                             if t]

    def _pivot_applications(self, ui: int, d: int) -> list:
        key = (ui, d)
        apps = self._pivot_apps.get(key)
        if apps is None:
            apps = [self._chev_apply(i, self._product(ui, x))
                    for i, x in self._pivots[d]]
            self._pivot_apps[key] = apps
        return apps

    # -- the quantum product -----------------------------------------------------

    def _product(self, ui: int, vi: int) -> Dict[int, int]:
        lu, lv = self.lengths[ui], self.lengths[vi]
        if lv == 0:
            return {self._term_key(ui, 0): 1}
        if lu == 0:
            return {self._term_key(vi, 0): 1}
        key = (ui, vi)
        res = self._prod.get(key)
        if res is not None:
            return res
        if lv == 1:
            i = self.elements[vi].word()[0]
            out: Dict[int, int] = {}
            for widx2, qshift, c in self._chev_row(i, ui):
                k = self._term_key(widx2, qshift)
                out[k] = out.get(k, 0) + c
            res = out
        else:
            self._build_expressions_upto(lv)
            expr = self._expr[vi]
            corr = self._corr[vi]
            den = lcm(*[t.denominator for _, _, t in expr],
                      *[t.denominator for _, _, t in corr]) if expr else 1
            acc: Dict[int, int] = {}
            apps = self._pivot_applications(ui, lv)
            pivots = self._pivots[lv]
            coeff_of = {(i, x): t for i, x, t in expr}
            for k, (i, x) in enumerate(pivots):
                t = coeff_of.get((i, x))
                if not t:
                    continue
                ct = int(t * den)
                for kk, vv in apps[k].items():
                    acc[kk] = acc.get(kk, 0) + ct * vv
            for x2, qshift, t in corr:
                ct = int(t * den)
                sub = self._product(ui, x2)
                for kk, vv in sub.items():
                    k2 = kk + qshift
                    acc[k2] = acc.get(k2, 0) - ct * vv
            res = {}
            for kk, vv in acc.items():
                if vv == 0:
                    continue
                q, r = divmod(vv, den)
                if r:
                    raise InternalConsistencyError(
                        "non-integer quantum structure constant")
                if q < 0:
                    raise InternalConsistencyError(
                        "negative quantum structure constant")
                res[kk] = q
            self._check_homogeneity(res, lu + lv)
        self._prod[key] = res
        return res

    def _check_homogeneity(self, cls: Dict[int, int], degree: int) -> None:
        qb = self._qbase
        for key in cls:
            widx, qkey = divmod(key, qb)
            if self.lengths[widx] + 2 * sum(self._unpack(qkey)) != degree:
                raise InternalConsistencyError(
                    "quantum product term violates degree homogeneity")

    def quantum_product(self, u: WeylElt, v: WeylElt) -> QClass:
        """sigma^u * sigma^v in QH*(G/B)."""
        return self._from_packed(self._product(self._idx(u), self._idx(v)))

    def classical_product(self, u: WeylElt, v: WeylElt) -> QClass:
        """Cup product: the q = 0 part of the quantum product."""
        return self.quantum_product(u, v).classical_part()

    def product_with_class(self, qc: QClass, v: WeylElt) -> QClass:
        """Linear extension (sum c q^mu sigma^x) * sigma^v."""
        vi = self._idx(v)
        qb = self._qbase
        acc: Dict[int, object] = {}
        for (x, mu), c in qc.terms.items():
            shift = self._pack(mu)
            for kk, vv in self._product(self._idx(x), vi).items():
                k2 = kk + shift
                acc[k2] = acc.get(k2, 0) + c * vv
        return self._from_packed({k: v2 for k, v2 in acc.items() if v2})

    def structure_constant(self, u: WeylElt, v: WeylElt, w: WeylElt,
                           lam: Sequence[int]) -> int:
        """The coefficient of q^lam sigma^w in sigma^u * sigma^v."""
        lam = tuple(lam)
        if len(lam) != self.n or any(e < 0 for e in lam):
            raise InvalidInputError("q-multidegree must be nonnegative, length n")
        key = self._term_key(self._idx(w), self._pack(lam))
        return self._product(self._idx(u), self._idx(v)).get(key, 0)

    def multiplication_table(self, max_length: Optional[int] = None):
        """All pairwise products, deterministically ordered."""
        cap = self.max_length if max_length is None else max_length
        for u in self.elements:
            if u.length > cap:
                continue
            for v in self.elements:
                if v.length > cap:
                    continue
                yield u, v, self.quantum_product(u, v)


def _invert_fraction_matrix(m: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0)
                                       for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise InternalConsistencyError("singular pivot matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
