"""Root systems, real-form gradings, Weyl groups and chamber coset representatives.

Weights are stored as tuples of integers holding the fundamental-weight
coordinates of 2*lambda ("doubled coordinates").  Doubling keeps every value
met in practice integral: rho-shifts, half sums of root subsets, and spin
weights are all half-integral on the ordinary weight lattice.  The invariant
bilinear form is normalised so that long roots have squared length 2 in each
simple factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


Coords = tuple[int, ...]


class InputError(ValueError):
    """Invalid user-supplied data (unknown type label, bad grading, ...)."""


class InternalError(AssertionError):
    """An identity guaranteed by the theory failed; indicates a bug."""


_CARTAN_MATRICES: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}

# Squared lengths of the simple roots, long roots normalised to 2.
_ROOT_NORMS: dict[str, tuple[Fraction, ...]] = {
    "A1": (Fraction(2),),
    "A2": (Fraction(2), Fraction(2)),
    "A3": (Fraction(2), Fraction(2), Fraction(2)),
    "B2": (Fraction(2), Fraction(1)),
    "C2": (Fraction(1), Fraction(2)),
    "G2": (Fraction(2), Fraction(2, 3)),
}

_POSITIVE_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6}

MAX_RANK = 4


def add(u: Coords, v: Coords) -> Coords:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Coords, v: Coords) -> Coords:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Coords) -> Coords:
    return tuple(-a for a in u)


def scale(k: int, u: Coords) -> Coords:
    return tuple(k * a for a in u)


def mat_apply(m: tuple[Coords, ...], u: Coords) -> Coords:
    return tuple(sum(row[j] * u[j] for j in range(len(u))) for row in m)


def mat_mul(a: tuple[Coords, ...], b: tuple[Coords, ...]) -> tuple[Coords, ...]:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def identity_matrix(n: int) -> tuple[Coords, ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def det(m: tuple[Coords, ...]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        total += (-1) ** j * m[0][j] * det(minor)
    return total


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root with its simple-root coordinates and doubled weight."""

    index: int
    root_coords: Coords      # alpha as an integer combination of simple roots
    doubled: Coords          # doubled fundamental-weight coordinates of alpha
    height: int

    @property
    def half(self) -> Coords:
        """Doubled coordinates of alpha/2 (always integral)."""
        if any(c % 2 for c in self.doubled):
            raise InternalError("root has odd doubled coordinates")
        return tuple(c // 2 for c in self.doubled)


@dataclass(frozen=True)
class WeylElem:
    """Weyl group element: reduced word, integer action on doubled coordinates."""

    word: tuple[int, ...]
    matrix: tuple[Coords, ...]
    inverse: tuple[Coords, ...]
    length: int
    sign: int

    def apply(self, u: Coords) -> Coords:
        return mat_apply(self.matrix, u)

    def apply_inverse(self, u: Coords) -> Coords:
        return mat_apply(self.inverse, u)


class CartanData:
    """Cartan matrix, roots and the invariant form for one ambient system.

    ``cartan[i][j]`` is ``<alpha_j, alpha_i^vee>``, so the fundamental-weight
    coordinate vector of the simple root ``alpha_j`` is column ``j``.
    """

    def __init__(self, label: str):
        parts = label.split("x")
        for p in parts:
            if p not in _CARTAN_MATRICES:
                raise InputError(f"unknown Cartan type label: {p!r}")
        self.label = label
        self.factors = tuple(parts)
        blocks = [_CARTAN_MATRICES[p] for p in parts]
        self.rank = sum(len(b) for b in blocks)
        if self.rank > MAX_RANK:
            raise InputError(f"rank {self.rank} exceeds supported maximum {MAX_RANK}")
        cartan = [[0] * self.rank for _ in range(self.rank)]
        offset = 0
        norms: list[Fraction] = []
        for part, block in zip(parts, blocks):
            r = len(block)
            for i in range(r):
                for j in range(r):
                    cartan[offset + i][offset + j] = block[i][j]
            norms.extend(_ROOT_NORMS[part])
            offset += r
        self.cartan: tuple[Coords, ...] = tuple(tuple(row) for row in cartan)
        self.d: tuple[Fraction, ...] = tuple(n / 2 for n in norms)
        self._validate_cartan()
        self.simple_reflections: tuple[tuple[Coords, ...], ...] = tuple(
            self._simple_reflection_matrix(i) for i in range(self.rank)
        )
        self.positive_roots: tuple[PositiveRoot, ...] = self._generate_positive_roots()
        expected = sum(_POSITIVE_COUNTS[p] for p in parts)
        if len(self.positive_roots) != expected:
            raise InternalError(
                f"{label}: expected {expected} positive roots, "
                f"got {len(self.positive_roots)}"
            )
        self._sign_of_root: dict[Coords, int] = {}
        for r in self.positive_roots:
            self._sign_of_root[r.doubled] = 1
            self._sign_of_root[neg(r.doubled)] = -1
        self._gram = self._fundamental_gram()
        self._root_by_doubled = {r.doubled: r for r in self.positive_roots}
        self._reflections: dict[int, tuple[Coords, ...]] = {}
        self.rho: Coords = tuple(2 for _ in range(self.rank))

    def _validate_cartan(self) -> None:
        for i in range(self.rank):
            if self.cartan[i][i] != 2:
                raise InternalError("Cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and self.cartan[i][j] > 0:
                    raise InternalError("off-diagonal Cartan entries must be <= 0")

    def _simple_reflection_matrix(self, i: int) -> tuple[Coords, ...]:
        # s_i on doubled coordinates: u |-> u - u_i * column_i(cartan)
        n = self.rank
        return tuple(
            tuple((1 if r == c else 0) - (self.cartan[r][i] if c == i else 0)
                  for c in range(n))
            for r in range(n)
        )

    def _generate_positive_roots(self) -> tuple[PositiveRoot, ...]:
        n = self.rank
        seen: dict[Coords, Coords] = {}
        frontier: list[tuple[Coords, Coords]] = []
        for i in range(n):
            rc = tuple(1 if j == i else 0 for j in range(n))
            dc = tuple(2 * self.cartan[k][i] for k in range(n))
            seen[rc] = dc
            frontier.append((rc, dc))
        while frontier:
            rc, dc = frontier.pop()
            for i in range(n):
                # s_i on root coordinates: k |-> k - <alpha, alpha_i^vee> e_i
                pairing = sum(rc[j] * self.cartan[i][j] for j in range(n))
                new_rc = tuple(
                    rc[j] - (pairing if j == i else 0) for j in range(n)
                )
                if all(c >= 0 for c in new_rc) and any(new_rc):
                    if new_rc not in seen:
                        new_dc = mat_apply(self.simple_reflections[i], dc)
                        seen[new_rc] = new_dc
                        frontier.append((new_rc, new_dc))
        ordered = sorted(seen.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        return tuple(
            PositiveRoot(index=k, root_coords=rc, doubled=dc, height=sum(rc))
            for k, (rc, dc) in enumerate(ordered)
        )

    def _fundamental_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        # G[i][j] = (w_i, w_j) = d_i * (cartan^{-1})[i][j]
        n = self.rank
        inv = _invert_rational(self.cartan)
        gram = tuple(
            tuple(self.d[i] * inv[i][j] for j in range(n)) for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise InternalError("fundamental Gram matrix not symmetric")
        return gram

    # -- the invariant form -------------------------------------------------

    def bilinear(self, u: Coords, v: Coords) -> Fraction:
        """(lambda, mu) for weights given in doubled coordinates."""
        total = Fraction(0)
        for i in range(self.rank):
            if not u[i]:
                continue
            row = self._gram[i]
            total += u[i] * sum(row[j] * v[j] for j in range(self.rank) if v[j])
        return total / 4

    def norm_sq(self, u: Coords) -> Fraction:
        return self.bilinear(u, u)

    def coroot_pairing(self, u: Coords, root: PositiveRoot) -> Fraction:
        """<lambda, alpha^vee> = 2(lambda, alpha)/(alpha, alpha)."""
        return 2 * self.bilinear(u, root.doubled) / self.norm_sq(root.doubled)

    def reflection_matrix(self, root: PositiveRoot) -> tuple[Coords, ...]:
        """Integer action of s_alpha on doubled coordinates (cached per root)."""
        cached = self._reflections.get(root.index)
        if cached is not None:
            return cached
        n = self.rank
        cols = []
        norm = self.norm_sq(root.doubled)
        for j in range(n):
            basis = tuple(2 if k == j else 0 for k in range(n))
            pairing = 2 * self.bilinear(basis, root.doubled) / norm
            col = [Fraction(1 if k == j else 0) - pairing * Fraction(root.doubled[k], 2)
                   for k in range(n)]
            cols.append(col)
        mat = tuple(
            tuple(_as_int(cols[j][i]) for j in range(n)) for i in range(n)
        )
        self._reflections[root.index] = mat
        return mat

    def root_sign(self, doubled: Coords) -> int:
        """+1 for a positive root, -1 for a negative root, 0 otherwise."""
        return self._sign_of_root.get(doubled, 0)

    def simple_root(self, i: int) -> PositiveRoot:
        target = tuple(1 if j == i else 0 for j in range(self.rank))
        for r in self.positive_roots:
            if r.root_coords == target:
                return r
        raise InputError(f"simple root index {i} out of range")

    def positive_root_with_coords(self, doubled: Coords) -> PositiveRoot:
        return self._root_by_doubled[doubled]


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise InternalError(f"expected integer, got {x}")
    return x.numerator


def _invert_rational(m: tuple[Coords, ...]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class WeylGroup:
    """A finite reflection group enumerated by closure over reduced words.

    ``generators`` are reflection matrices (simple reflections of the system
    the group belongs to); ``positive`` is that system's positive-root list,
    used to compute lengths as inversion counts.
    """

    def __init__(self, cartan: CartanData, generators: tuple[tuple[Coords, ...], ...],
                 positive: tuple[PositiveRoot, ...]):
        self.cartan = cartan
        self.generators = generators
        self.positive = positive
        self.elements: tuple[WeylElem, ...] = self._enumerate()
        self.by_matrix: dict[tuple[Coords, ...], WeylElem] = {
            w.matrix: w for w in self.elements
        }
        self.order = len(self.elements)

    def _inversions(self, matrix: tuple[Coords, ...]) -> int:
        count = 0
        for r in self.positive:
            s = self.cartan.root_sign(mat_apply(matrix, r.doubled))
            if s == 0:
                raise InternalError("Weyl element does not permute the root set")
            if s < 0:
                count += 1
        return count

    def _enumerate(self) -> tuple[WeylElem, ...]:
        n = self.cartan.rank
        ident = identity_matrix(n)
        elems: dict[tuple[Coords, ...], WeylElem] = {
            ident: WeylElem(word=(), matrix=ident, inverse=ident, length=0, sign=1)
        }
        frontier = [elems[ident]]
        while frontier:
            nxt: list[WeylElem] = []
            for w in frontier:
                for gi, g in enumerate(self.generators):
                    m = mat_mul(w.matrix, g)
                    if m in elems:
                        continue
                    inv = mat_mul(g, w.inverse)
                    length = self._inversions(m)
                    if length != len(w.word) + 1:
                        raise InternalError("BFS depth disagrees with inversion count")
                    elem = WeylElem(
                        word=w.word + (gi,), matrix=m, inverse=inv,
                        length=length, sign=-w.sign,
                    )
                    elems[m] = elem
                    nxt.append(elem)
            frontier = nxt
        ordered = sorted(elems.values(), key=lambda w: (w.length, w.word))
        for w in ordered:
            if det(w.matrix) != w.sign:
                raise InternalError("sign of Weyl element disagrees with determinant")
        return tuple(ordered)

    def element(self, matrix: tuple[Coords, ...]) -> WeylElem:
        try:
            return self.by_matrix[matrix]
        except KeyError:
            raise InternalError("matrix is not an element of this Weyl group") from None

    @property
    def longest(self) -> WeylElem:
        return self.elements[-1]


class Subsystem:
    """A root subsystem of the ambient system, with the inherited positives.

    The full system itself is the special case ``indices = all``; all
    character-level machinery is written against this one interface.
    """

    def __init__(self, cartan: CartanData, indices: tuple[int, ...], name: str = ""):
        self.cartan = cartan
        self.indices = tuple(sorted(set(indices)))
        for i in self.indices:
            if not 0 <= i < len(cartan.positive_roots):
                raise InputError(f"positive root index {i} out of range")
        self.positive: tuple[PositiveRoot, ...] = tuple(
            cartan.positive_roots[i] for i in self.indices
        )
        self.name = name or "sub(" + ",".join(map(str, self.indices)) + ")"
        self._check_closed()
        self.rho: Coords = _half_sum(self.positive, cartan.rank)
        self.simples: tuple[PositiveRoot, ...] = self._find_simples()
        self._weyl: WeylGroup | None = None

    def _check_closed(self) -> None:
        doubled = set()
        for r in self.positive:
            doubled.add(r.doubled)
            doubled.add(neg(r.doubled))
        for a, b in itertools.combinations(list(doubled), 2):
            s = add(a, b)
            if self.cartan.root_sign(s) and s not in doubled:
                raise InputError(
                    f"{self.name}: root set not closed under addition"
                )

    def _find_simples(self) -> tuple[PositiveRoot, ...]:
        doubled = {r.doubled for r in self.positive}
        simples = []
        for r in self.positive:
            if not any(
                sub(r.doubled, s) in doubled for s in doubled if s != r.doubled
            ):
                simples.append(r)
        # Order so the full system's simples sit in Cartan index order; word
        # letters of Weyl elements then agree with simple-root numbering.
        def first_support(root: PositiveRoot) -> int:
            return next(i for i, k in enumerate(root.root_coords) if k)

        return tuple(sorted(simples, key=lambda r: (first_support(r), r.root_coords)))

    @property
    def weyl(self) -> WeylGroup:
        if self._weyl is None:
            gens = tuple(self.cartan.reflection_matrix(r) for r in self.simples)
            self._weyl = WeylGroup(self.cartan, gens, self.positive)
            expected = len(self.positive)
            if self._weyl.longest.length != expected:
                raise InternalError("longest element length != positive root count")
        return self._weyl

    def is_dominant(self, u: Coords) -> bool:
        return all(self.cartan.coroot_pairing(u, r) >= 0 for r in self.simples)

    def is_regular(self, u: Coords) -> bool:
        return all(self.cartan.coroot_pairing(u, r) != 0 for r in self.positive)

    def contains(self, other: "Subsystem") -> bool:
        return set(other.indices) <= set(self.indices)

    def dominant_conjugate(self, u: Coords) -> tuple[Coords, WeylElem]:
        """Unique dominant W-conjugate of u, with a minimal-length witness.

        Ties at singular u are broken by always reflecting in the lowest
        numbered negative simple, which yields the minimal-length element.
        """
        n = self.cartan.rank
        current = u
        matrix = identity_matrix(n)
        while True:
            for r in self.simples:
                if self.cartan.coroot_pairing(current, r) < 0:
                    refl = self.cartan.reflection_matrix(r)
                    current = mat_apply(refl, current)
                    matrix = mat_mul(refl, matrix)
                    break
            else:
                return current, self.weyl.element(matrix)

    def antidominant_conjugate(self, u: Coords) -> tuple[Coords, WeylElem]:
        dom, w = self.dominant_conjugate(neg(u))
        return neg(dom), w

    def orbit(self, u: Coords) -> set[Coords]:
        return {w.apply(u) for w in self.weyl.elements}

    def weyl_dimension(self, u: Coords) -> int:
        """Dimension of the irreducible with highest weight u (doubled coords)."""
        num = Fraction(1)
        rho = self.rho
        for r in self.positive:
            num *= self.cartan.coroot_pairing(add(u, rho), r)
            num /= self.cartan.coroot_pairing(rho, r)
        return _as_int(num)


def _half_sum(roots: tuple[PositiveRoot, ...], rank: int) -> Coords:
    total = [0] * rank
    for r in roots:
        for i, c in enumerate(r.doubled):
            total[i] += c
    if any(c % 2 for c in total):
        raise InternalError("half sum of roots has odd doubled coordinates")
    return tuple(c // 2 for c in total)


def chamber_coset_reps(big: Subsystem, small: Subsystem) -> tuple[WeylElem, ...]:
    """Elements of W(big) mapping the big dominant chamber into small's chamber.

    Multiplication gives a bijection W(small) x reps -> W(big); the count
    |reps| * |W(small)| = |W(big)| is asserted.
    """
    if not big.contains(small):
        raise InputError("subsystem is not contained in the ambient system")
    big_doubled = {r.doubled for r in big.positive}
    reps = []
    for w in big.weyl.elements:
        ok = True
        for beta in small.positive:
            pre = w.apply_inverse(beta.doubled)
            if pre not in big_doubled:
                ok = False
                break
        if ok:
            reps.append(w)
    if len(reps) * small.weyl.order != big.weyl.order:
        raise InternalError("|W^1| * |W_sub| != |W|")
    return tuple(reps)


class GroupData:
    """A root system with a compact/noncompact grading (an equal-rank real form)."""

    def __init__(self, cartan: CartanData, grading: tuple[int, ...]):
        if len(grading) != cartan.rank:
            raise InputError(
                f"grading length {len(grading)} does not match rank {cartan.rank}"
            )
        if any(b not in (0, 1) for b in grading):
            raise InputError("grading bits must be 0 or 1")
        self.cartan = cartan
        self.grading = tuple(grading)
        self.full = Subsystem(cartan, tuple(range(len(cartan.positive_roots))), "full")
        compact = tuple(
            r.index for r in cartan.positive_roots if self.epsilon(r) == 0
        )
        self.compact = Subsystem(cartan, compact, "compact")
        self.noncompact: tuple[PositiveRoot, ...] = tuple(
            r for r in cartan.positive_roots if self.epsilon(r) == 1
        )
        self.rho: Coords = self.full.rho
        self.rho_c: Coords = self.compact.rho
        self.rho_n: Coords = sub(self.rho, self.rho_c)
        self.q: int = len(self.noncompact)
        self.l0: int = 0
        self._check_grading_closure()
        generators = [r.doubled for r in cartan.positive_roots] + [self.rho_n]
        self._ktilde_basis = _lattice_basis(generators)
        for g in generators:
            if any(g) and not _in_lattice(self._ktilde_basis, g):
                raise InternalError("lattice basis does not span its generators")

    def epsilon(self, root: PositiveRoot) -> int:
        return sum(k * g for k, g in zip(root.root_coords, self.grading)) % 2

    def _check_grading_closure(self) -> None:
        # [k,k] and [p,p] land in k at the root level: the sum of two roots of
        # equal grading, when a root, is compact.
        by_doubled: dict[Coords, int] = {}
        for r in self.cartan.positive_roots:
            e = self.epsilon(r)
            by_doubled[r.doubled] = e
            by_doubled[neg(r.doubled)] = e
        for a, ea in by_doubled.items():
            for b, eb in by_doubled.items():
                s = add(a, b)
                if s in by_doubled and by_doubled[s] != (ea + eb) % 2:
                    raise InternalError("grading is not additive on roots")

    def is_ktilde_integral(self, u: Coords) -> bool:
        """Membership of the lattice spanned by the roots and rho_n."""
        return _in_lattice(self._ktilde_basis, u)

    def rho_c_for(self, u: Coords) -> Coords:
        """Half sum of the compact roots made positive on u (u compact-regular)."""
        total = [0] * self.cartan.rank
        for r in self.compact.positive:
            p = self.cartan.bilinear(u, r.doubled)
            if p == 0:
                raise InputError("weight is singular for a compact root")
            d = r.doubled if p > 0 else neg(r.doubled)
            for i, c in enumerate(d):
                total[i] += c
        if any(c % 2 for c in total):
            raise InternalError("rho_c has odd doubled coordinates")
        return tuple(c // 2 for c in total)


def _lattice_basis(generators: list[Coords]) -> list[list[int]]:
    """Row-style Hermite basis of the integer lattice spanned by generators."""
    rows = [list(g) for g in generators if any(g)]
    n = len(generators[0]) if generators else 0
    basis: list[list[int]] = []
    col = 0
    while rows and col < n:
        pivots = [r for r in rows if r[col] != 0]
        if not pivots:
            col += 1
            continue
        while True:
            pivots.sort(key=lambda r: abs(r[col]))
            p = pivots[0]
            done = True
            for r in pivots[1:]:
                k = r[col] // p[col]
                for i in range(n):
                    r[i] -= k * p[i]
                if r[col]:
                    done = False
            pivots = [r for r in pivots if r[col] != 0]
            if done or len(pivots) == 1:
                break
        p = pivots[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        rows = [r for r in rows if r is not p and any(r)]
        for r in rows:
            if r[col] % p[col] == 0 and r[col]:
                k = r[col] // p[col]
                for i in range(n):
                    r[i] -= k * p[i]
        rows = [r for r in rows if any(r)]
        col += 1
    return basis


def _in_lattice(basis: list[list[int]], u: Coords) -> bool:
    v = list(u)
    for b in basis:
        col = next(i for i, x in enumerate(b) if x)
        if v[col] % b[col] != 0:
            return False
        k = v[col] // b[col]
        for i in range(len(v)):
            v[i] -= k * b[i]
    return not any(v)


@lru_cache(maxsize=None)
def cartan_data(label: str) -> CartanData:
    return CartanData(label)


@lru_cache(maxsize=None)
def build_group_datum(label: str, grading: tuple[int, ...]) -> GroupData:
    """Construct the full real-form datum for a type label and grading bits."""
    return GroupData(cartan_data(label), grading)


def build_subsystem(cartan: CartanData, indices: tuple[int, ...], name: str = "") -> Subsystem:
    return Subsystem(cartan, indices, name)
