"""Kazhdan-Lusztig combinatorics on small Weyl groups.

Provides the Bruhat order (by the descent-lifting criterion), the classical
KL recursion with mu-corrections, an independent table construction through
R-polynomials and the inversion identity, the parabolic alternating-sum
reduction, and the resulting highest-weight-module Dirac cohomology and
nilradical homology Euler characteristics.

Polynomials in q are dense integer coefficient tuples, low degree first;
the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charring import FormalChar, VirtualModule, weyl_character
from .rootsys import (
    CartanData,
    Coords,
    InputError,
    InternalError,
    Subsystem,
    add,
    mat_mul,
    neg,
    sub,
)

Poly = tuple[int, ...]


def p_trim(a: Poly) -> Poly:
    i = len(a)
    while i and a[i - 1] == 0:
        i -= 1
    return a[:i]


def p_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return p_trim(tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    ))


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, tuple(-c for c in b))


def p_shift(a: Poly, k: int) -> Poly:
    return ((0,) * k + a) if a else ()


def p_scale(a: Poly, m: int) -> Poly:
    return p_trim(tuple(m * c for c in a)) if m else ()


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return p_trim(tuple(out))


def p_eval_one(a: Poly) -> int:
    return sum(a)


def p_degree(a: Poly) -> int:
    return len(a) - 1


Q_MINUS_ONE: Poly = (-1, 1)


class KLContext:
    """Weyl group of one Cartan type with Bruhat order and KL tables."""

    def __init__(self, cartan: CartanData):
        self.cartan = cartan
        self.full = Subsystem(cartan, tuple(range(len(cartan.positive_roots))), "full")
        group = self.full.weyl
        self.elements = group.elements
        self.size = group.order
        index = {w.matrix: i for i, w in enumerate(self.elements)}
        self.length = tuple(w.length for w in self.elements)
        n = cartan.rank
        self.lmul = tuple(
            tuple(index[mat_mul(cartan.simple_reflections[i], w.matrix)]
                  for w in self.elements)
            for i in range(n)
        )
        self.rmul = tuple(
            tuple(index[mat_mul(w.matrix, cartan.simple_reflections[i])]
                  for w in self.elements)
            for i in range(n)
        )
        self.identity = index[tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )]
        self._bruhat: dict[tuple[int, int], bool] = {}
        self._P: dict[tuple[int, int], Poly] = {}
        self._R: dict[tuple[int, int], Poly] = {}

    def word(self, i: int) -> tuple[int, ...]:
        return self.elements[i].word

    def left_descent(self, w: int) -> int:
        for i in range(self.cartan.rank):
            if self.length[self.lmul[i][w]] < self.length[w]:
                return i
        raise InternalError("non-identity element has no left descent")

    def bruhat_leq(self, x: int, w: int) -> bool:
        """Bruhat order by the descent lifting criterion."""
        if x == w:
            return True
        if self.length[x] >= self.length[w]:
            return False
        key = (x, w)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        s = self.left_descent(w)
        v = self.lmul[s][w]
        sx = self.lmul[s][x]
        if self.length[sx] < self.length[x]:
            result = self.bruhat_leq(sx, v)
        else:
            result = self.bruhat_leq(x, v)
        self._bruhat[key] = result
        return result

    # -- classical recursion --------------------------------------------

    def kl_polynomial(self, x: int, w: int) -> Poly:
        if x == w:
            return (1,)
        if not self.bruhat_leq(x, w):
            return ()
        key = (x, w)
        cached = self._P.get(key)
        if cached is not None:
            return cached
        s = self.left_descent(w)
        sx = self.lmul[s][x]
        v = self.lmul[s][w]
        if self.length[sx] > self.length[x]:
            result = self.kl_polynomial(sx, w)
        else:
            result = p_add(self.kl_polynomial(sx, v),
                           p_shift(self.kl_polynomial(x, v), 1))
            for z in range(self.size):
                if self.length[z] >= self.length[v] and z != v:
                    continue
                if z == v:
                    continue
                if self.length[self.lmul[s][z]] > self.length[z]:
                    continue
                gap = self.length[v] - self.length[z]
                if gap % 2 == 0:
                    continue
                pzv = self.kl_polynomial(z, v)
                mu_deg = (gap - 1) // 2
                if len(pzv) <= mu_deg or pzv[mu_deg] == 0:
                    continue
                pxz = self.kl_polynomial(x, z)
                if not pxz:
                    continue
                shift = (self.length[w] - self.length[z]) // 2
                result = p_sub(result, p_shift(p_scale(pxz, pzv[mu_deg]), shift))
        self._P[key] = result
        return result

    def kl_table(self) -> dict[tuple[int, int], Poly]:
        table = {}
        for w in range(self.size):
            for x in range(self.size):
                if self.bruhat_leq(x, w):
                    p = self.kl_polynomial(x, w)
                    table[(x, w)] = p
                    self._check_entry(x, w, p)
        return table

    def _check_entry(self, x: int, w: int, p: Poly) -> None:
        if not p or p[0] != 1:
            raise InternalError("KL polynomial has constant term != 1")
        if any(c < 0 for c in p):
            raise InternalError("KL polynomial has a negative coefficient")
        if x != w and 2 * p_degree(p) > self.length[w] - self.length[x] - 1:
            raise InternalError("KL polynomial violates the degree bound")

    # -- independent route: R-polynomials and the inversion identity -----

    def r_polynomial(self, x: int, w: int) -> Poly:
        if x == w:
            return (1,)
        if not self.bruhat_leq(x, w):
            return ()
        key = (x, w)
        cached = self._R.get(key)
        if cached is not None:
            return cached
        s = self.left_descent(w)
        v = self.lmul[s][w]
        sx = self.lmul[s][x]
        if self.length[sx] < self.length[x]:
            result = self.r_polynomial(sx, v)
        else:
            result = p_add(p_mul(Q_MINUS_ONE, self.r_polynomial(x, v)),
                           p_shift(self.r_polynomial(sx, v), 1))
        self._R[key] = result
        return result

    def kl_table_by_inversion(self) -> dict[tuple[int, int], Poly]:
        """Solve q^(l(w)-l(x)) Pbar(x,w) = sum_z R(x,z) P(z,w) top down.

        Fully determines the table from R-polynomials alone, with the
        leftover coefficient equations asserted as a consistency check.
        """
        table: dict[tuple[int, int], Poly] = {}
        for w in range(self.size):
            below = [x for x in range(self.size) if self.bruhat_leq(x, w)]
            for x in sorted(below, key=lambda i: -self.length[i]):
                if x == w:
                    table[(x, w)] = (1,)
                    continue
                gap = self.length[w] - self.length[x]
                rhs: Poly = ()
                for z in below:
                    if z == x or not self.bruhat_leq(x, z):
                        continue
                    rhs = p_add(rhs, p_mul(self.r_polynomial(x, z), table[(z, w)]))
                half = (gap - 1) // 2
                p = p_trim(tuple(
                    -(rhs[m] if m < len(rhs) else 0) for m in range(half + 1)
                ))
                full = p_add(p, rhs)     # = q^gap Pbar
                for m in range(gap + 1):
                    lhs_c = p[gap - m] if gap - m < len(p) else 0
                    rhs_c = full[m] if m < len(full) else 0
                    if lhs_c != rhs_c:
                        raise InternalError("inversion identity is inconsistent")
                table[(x, w)] = p
        return table

    # -- parabolic quotients ---------------------------------------------

    def parabolic_subgroup(self, levi: tuple[int, ...]) -> tuple[int, ...]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in levi:
                    u = self.lmul[i][w]
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return tuple(sorted(seen, key=lambda i: (self.length[i], self.word(i))))

    def minimal_coset_reps(self, levi: tuple[int, ...]) -> tuple[int, ...]:
        """Elements with no left descent in the Levi set."""
        return tuple(
            w for w in range(self.size)
            if all(self.length[self.lmul[i][w]] > self.length[w] for i in levi)
        )

    def doubly_minimal_reps(self, levi: tuple[int, ...],
                            singular: tuple[int, ...]) -> tuple[int, ...]:
        """Left-minimal reps that stay left-minimal under right singular moves."""
        base = self.minimal_coset_reps(levi)
        base_set = set(base)
        out = []
        for w in base:
            ok = True
            for j in singular:
                ws = self.rmul[j][w]
                if self.length[ws] < self.length[w] or ws not in base_set:
                    ok = False
                    break
            if ok:
                out.append(w)
        return tuple(out)

    def longest_in(self, members: tuple[int, ...]) -> int:
        return max(members, key=lambda i: self.length[i])


@lru_cache(maxsize=None)
def kl_context(label: str) -> KLContext:
    from .rootsys import cartan_data
    return KLContext(cartan_data(label))


def parabolic_klv(ctx: KLContext, levi: tuple[int, ...],
                  singular: tuple[int, ...] = ()) -> dict[tuple[int, int], Poly]:
    """Relative KLV table over the minimal coset representatives.

    In the regular case the entry at (x, w) is the ordinary KL polynomial at
    the longest-representative pair (w_I x, w_I w); left descents along the
    Levi leave KL polynomials unchanged.  Note the Levi-alternating sum of
    ordinary polynomials is a different family (it can vanish at comparable
    pairs) and does not give these multiplicities.  A nonempty singular set
    is accepted structurally but has no polynomial values here.
    """
    rank = ctx.cartan.rank
    for i in (*levi, *singular):
        if not 0 <= i < rank:
            raise InputError("Levi or singular index out of range")
    if singular:
        raise InputError("singular-block KLV polynomials are not supported")
    reps = ctx.minimal_coset_reps(levi)
    subgroup = ctx.parabolic_subgroup(levi)
    w_i = ctx.longest_in(subgroup)
    table: dict[tuple[int, int], Poly] = {}
    for w in reps:
        shifted_w = _compose(ctx, w_i, w)
        for x in reps:
            p = ctx.kl_polynomial(_compose(ctx, w_i, x), shifted_w)
            if bool(p) != ctx.bruhat_leq(x, w):
                raise InternalError("parabolic table support disagrees with Bruhat order")
            if not p:
                continue
            if any(c < 0 for c in p):
                raise InternalError("parabolic KLV entry has a negative coefficient")
            if x != w and 2 * p_degree(p) > ctx.length[w] - ctx.length[x] - 1:
                raise InternalError("parabolic KLV entry violates the degree bound")
            table[(x, w)] = p
    return table


def _compose(ctx: KLContext, a: int, b: int) -> int:
    """Index of the product a*b, via the left multiplication tables."""
    result = b
    for letter in reversed(ctx.word(a)):
        result = ctx.lmul[letter][result]
    return result


def levi_subsystem(cartan: CartanData, levi: tuple[int, ...]) -> Subsystem:
    levi_set = set(levi)
    indices = tuple(
        r.index for r in cartan.positive_roots
        if all(k == 0 or i in levi_set for i, k in enumerate(r.root_coords))
    )
    return Subsystem(cartan, indices, "levi")


@dataclass
class HighestWeightResult:
    module: VirtualModule          # Levi types of H_D with multiplicities
    antidominant: Coords           # mu with lam = w_I w . mu (doubled, unshifted)
    position_word: tuple[int, ...]  # reduced word of w in the ambient group
    nilrad_half_sum: Coords        # rho(u)


def hd_highest_weight(cartan: CartanData, levi: tuple[int, ...],
                      lam: Coords) -> HighestWeightResult:
    """Dirac cohomology of a simple highest weight module, regular integral case.

    The multiplicity of the Levi type at w_I x . mu + rho(u) is the value at
    one of the relative KLV polynomial at (x, w), where mu is the
    antidominant representative and lam = w_I w . mu.
    """
    ctx = kl_context(cartan.label)
    full = ctx.full
    shifted = add(lam, full.rho)
    for r in cartan.positive_roots:
        pairing = cartan.coroot_pairing(shifted, r)
        if pairing.denominator != 1:
            raise InputError("weight is not integral")
        if pairing == 0:
            raise InputError("infinitesimal character is singular")
    for i in levi:
        p = cartan.coroot_pairing(lam, cartan.simple_root(i))
        if p.denominator != 1 or p < 0:
            raise InputError("weight is not dominant integral for the Levi")
    anti, to_anti = full.antidominant_conjugate(shifted)
    v = full.weyl.element(to_anti.inverse)      # v(mu + rho) = lam + rho
    index = {w.matrix: i for i, w in enumerate(ctx.elements)}
    v_idx = index[v.matrix]
    subgroup = ctx.parabolic_subgroup(levi)
    w_i = ctx.longest_in(subgroup)
    w_idx = _compose(ctx, w_i, v_idx)
    reps = ctx.minimal_coset_reps(levi)
    if w_idx not in reps:
        raise InputError("weight is not in an admissible orbit position")
    klv = parabolic_klv(ctx, levi)
    levi_sys = levi_subsystem(cartan, levi)
    rho_u = sub(full.rho, levi_sys.rho)
    entries: dict[Coords, int] = {}
    w_i_elem = ctx.elements[w_i]
    for x in reps:
        p = klv.get((x, w_idx))
        if not p:
            continue
        m = p_eval_one(p)
        if m == 0:
            continue
        key = sub(w_i_elem.apply(ctx.elements[x].apply(anti)), levi_sys.rho)
        entries[key] = entries.get(key, 0) + m
    return HighestWeightResult(
        module=VirtualModule(levi_sys, entries),
        antidominant=sub(anti, full.rho),
        position_word=ctx.word(w_idx),
        nilrad_half_sum=rho_u,
    )


def u_homology_euler(cartan: CartanData, levi: tuple[int, ...],
                     lam: Coords) -> FormalChar:
    """Euler characteristic of nilradical homology of a finite-dimensional module.

    Computed as ch V * product over nilradical roots of (1 - e(-a)); equal to
    the Levi Dirac index twisted by e(rho(u)).
    """
    ctx = kl_context(cartan.label)
    full = ctx.full
    if not all(c >= 0 and c % 2 == 0 for c in lam):
        raise InputError("highest weight must be dominant integral")
    levi_sys = levi_subsystem(cartan, levi)
    levi_idx = set(levi_sys.indices)
    out = weyl_character(full, lam)
    one = FormalChar.one(cartan.rank)
    for r in cartan.positive_roots:
        if r.index in levi_idx:
            continue
        out = out * (one - FormalChar.exp(neg(r.doubled)))
    return out
