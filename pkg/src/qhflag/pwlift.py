"""Comparison lifting between QH*(G/P) and QH*(G/B).

Every curve class of G/P (a coset lambda_P in Q^vee / Q^vee_P) has a unique
representative lambda_B in Q^vee whose pairing with every positive root of
the parabolic subsystem lies in {0, -1}.  The lift also produces the
parabolic subset Delta_P' of roots pairing to zero and the Weyl factor
omega_P omega_{P'}; together these translate G/P structure constants into
G/B structure constants and induce the injective map psi sending
q^{lambda_P} sigma^v to q^{lambda_B} sigma^{v omega_P omega_{P'}}.

The solver enumerates the 2^r sign patterns for the simple-root pairings,
solves the corresponding Cartan linear system exactly, keeps integer
solutions, and filters by the full positive-root condition; exactly one
survivor is required.  All operations are pure.

Curve classes serialize as a JSON map from non-parabolic simple index to a
nonnegative integer exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InternalConsistencyError, InvalidInputError
from .rootsys import Coroot, RootSystem
from . import weyl
from .qchev import QuantumFlagRing
from .weyl import WeylElt


@dataclass(frozen=True)
class PWLift:
    """The unique comparison lift of one curve class."""

    lambda_B: Tuple[int, ...]
    delta_P_prime: Tuple[int, ...]
    omega_factor: WeylElt

    @property
    def length(self) -> int:
        return self.omega_factor.length


def lambda_rep(rs: RootSystem, parabolic: Sequence[int],
               lam_P: Union[Mapping[int, int], Sequence[int]]) -> Tuple[int, ...]:
    """Normalize a curve-class encoding to a full coroot-coordinate tuple.

    Mappings are keyed by non-parabolic 1-based simple indices; sequences
    must already have full length n.
    """
    par = set(rs.check_parabolic(parabolic))
    if isinstance(lam_P, Mapping):
        rep = [0] * rs.n
        for key, val in lam_P.items():
            i = int(key)
            rs._check_index(i)
            if i in par:
                raise InvalidInputError(
                    f"index {i} lies in the parabolic subset; curve classes "
                    "are indexed by the complement")
            rep[i - 1] = int(val)
        return tuple(rep)
    rep = tuple(int(x) for x in lam_P)
    if len(rep) != rs.n:
        raise InvalidInputError("curve-class vector must have length n")
    return rep


def _pairing_condition(rs: RootSystem, roots, lam: Coroot) -> bool:
    return all(rs.pairing(beta, lam) in (0, -1) for beta in roots)


def pw_lift(rs: RootSystem, parabolic: Iterable[int],
            lam_P: Union[Mapping[int, int], Sequence[int]],
            ambient: Optional[Iterable[int]] = None) -> PWLift:
    """The unique lift of lam_P + Q^vee_P with pairings in {0, -1}.

    ``ambient`` restricts the construction to a chain level: the lift is
    computed inside the sub-root-system on those indices (defaults to the
    whole system).  The representative may be any member of the coset.
    """
    par = rs.check_parabolic(parabolic)
    rep = lambda_rep(rs, par, lam_P)
    if ambient is not None:
        amb = set(rs.check_parabolic(ambient))
        if not set(par) <= amb:
            raise InvalidInputError("parabolic must lie inside the ambient set")
        if any(rep[k] and (k + 1) not in amb for k in range(rs.n)):
            raise InvalidInputError("representative leaves the ambient set")
    roots_p = rs.positive_roots_within(par)
    r = len(par)
    solutions: List[Tuple[int, ...]] = []
    if r == 0:
        solutions.append(rep)
    else:
        # M a = eps - base over the parabolic block of the Cartan pairing.
        base = [rs.pairing(rs.simple_root(i), rep) for i in par]
        mat = [[rs.cartan[j - 1][i - 1] for j in par] for i in par]
        for eps in iproduct((0, -1), repeat=r):
            rhs = [Fraction(e - b) for e, b in zip(eps, base)]
            a = _solve_exact(mat, rhs)
            if a is None or any(x.denominator != 1 for x in a):
                continue
            lam = list(rep)
            for i, x in zip(par, a):
                lam[i - 1] += int(x)
            lam_t = tuple(lam)
            if _pairing_condition(rs, roots_p, lam_t):
                solutions.append(lam_t)
    uniq = sorted(set(solutions))
    if len(uniq) != 1:
        raise InternalConsistencyError(
            f"comparison lift of {rep} over {par} found {len(uniq)} "
            "solutions instead of exactly one")
    lam_B = uniq[0]
    dpp = tuple(i for i in par
                if rs.pairing(rs.simple_root(i), lam_B) == 0)
    omega = weyl.multiply(weyl.longest_element(rs, par),
                          weyl.longest_element(rs, dpp))
    expected = len(roots_p) - len(rs.positive_roots_within(dpp))
    if omega.length != expected:
        raise InternalConsistencyError(
            f"omega factor has length {omega.length}, expected {expected}")
    return PWLift(lam_B, dpp, omega)


def _solve_exact(mat: List[List[int]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None  # finite-type Cartan blocks are invertible
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r2 in range(n):
            if r2 != col and a[r2][col]:
                f = a[r2][col]
                a[r2] = [x - f * y for x, y in zip(a[r2], a[col])]
    return [a[i][n] for i in range(n)]


def pw_lift_bruteforce(rs: RootSystem, parabolic: Sequence[int],
                       lam_P: Union[Mapping[int, int], Sequence[int]],
                       bound: int = 6) -> List[Tuple[int, ...]]:
    """Independent box search for every lift candidate with |a_i| <= bound."""
    par = rs.check_parabolic(parabolic)
    rep = lambda_rep(rs, par, lam_P)
    roots_p = rs.positive_roots_within(par)
    out = []
    for shifts in iproduct(range(-bound, bound + 1), repeat=len(par)):
        lam = list(rep)
        for i, s in zip(par, shifts):
            lam[i - 1] += s
        lam_t = tuple(lam)
        if _pairing_condition(rs, roots_p, lam_t):
            out.append(lam_t)
    return sorted(out)


def minimal_representatives(rs: RootSystem, parabolic: Sequence[int],
                            cap: int = weyl.WEYL_CAP) -> Tuple[WeylElt, ...]:
    """The minimal coset representatives W^P, sorted by (length, word)."""
    par = rs.check_parabolic(parabolic)
    return tuple(w for w in weyl.enumerate_group(rs, cap=cap)
                 if weyl.is_minimal_representative(w, par))


def psi_map(rs: RootSystem, parabolic: Sequence[int], v: WeylElt,
            lam_P: Union[Mapping[int, int], Sequence[int]]) -> Tuple[WeylElt, Tuple[int, ...]]:
    """The injective lift of q^{lam_P} sigma^v into the G/B basis."""
    par = rs.check_parabolic(parabolic)
    if not weyl.is_minimal_representative(v, par):
        raise InvalidInputError(
            "psi is defined on minimal coset representatives only")
    lift = pw_lift(rs, par, lam_P)
    return weyl.multiply(v, lift.omega_factor), lift.lambda_B


def quantum_degree(rs: RootSystem, parabolic: Sequence[int], j: int) -> int:
    """Complex degree of the G/P quantum variable attached to simple index j."""
    par = rs.check_parabolic(parabolic)
    if j in par:
        raise InvalidInputError(f"index {j} is parabolic; no quantum variable")
    lift = pw_lift(rs, par, {j: 1})
    return lift.length + rs.two_rho_pairing(lift.lambda_B)


def qhp_structure_constant(ring: QuantumFlagRing, parabolic: Sequence[int],
                           u: WeylElt, v: WeylElt, w: WeylElt,
                           lam_P: Union[Mapping[int, int], Sequence[int]]) -> int:
    """A G/P structure constant, evaluated through the comparison lift."""
    rs = ring.rs
    par = rs.check_parabolic(parabolic)
    for x in (u, v, w):
        if not weyl.is_minimal_representative(x, par):
            raise InvalidInputError(
                "G/P constants are indexed by minimal coset representatives")
    lift = pw_lift(rs, par, lam_P)
    return ring.structure_constant(u, v, weyl.multiply(w, lift.omega_factor),
                                   lift.lambda_B)


def qhp_product(ring: QuantumFlagRing, parabolic: Sequence[int],
                u: WeylElt, v: WeylElt) -> Dict[Tuple[WeylElt, Tuple[int, ...]], int]:
    """sigma^u * sigma^v in the Schubert basis of QH*(G/P).

    Keys are (w, exponent tuple over the sorted complement indices).
    """
    rs = ring.rs
    par = rs.check_parabolic(parabolic)
    comp = tuple(i for i in range(1, rs.n + 1) if i not in par)
    degs = [quantum_degree(rs, par, j) for j in comp]
    reps = minimal_representatives(rs, par)
    total = u.length + v.length
    out: Dict[Tuple[WeylElt, Tuple[int, ...]], int] = {}

    def boxes(k: int, remaining: int):
        if k == len(comp):
            yield ()
            return
        for e in range(remaining // degs[k] + 1):
            for rest in boxes(k + 1, remaining - e * degs[k]):
                yield (e,) + rest

    for exps in boxes(0, total):
        wlen = total - sum(e * d for e, d in zip(exps, degs))
        lam_p = {j: e for j, e in zip(comp, exps) if e}
        for w in reps:
            if w.length != wlen:
                continue
            c = qhp_structure_constant(ring, par, u, v, w, lam_p)
            if c:
                out[(w, exps)] = c
    return out
