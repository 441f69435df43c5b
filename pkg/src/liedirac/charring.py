"""Exact formal characters: sparse exponential sums on the half-weight lattice.

A ``FormalChar`` is a finitely supported integer-valued function on doubled
weight coordinates.  Convolution realises ``e(a) * e(b) = e(a+b)``; Weyl
numerators, denominators and characters are computed and divided exactly,
with any nonzero remainder treated as an internal error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import (
    Coords,
    InputError,
    InternalError,
    Subsystem,
    add,
    neg,
)


class FormalChar:
    """Finitely supported Z-valued function on the weight lattice."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Coords, int] | None = None):
        self.terms: dict[Coords, int] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    @staticmethod
    def exp(weight: Coords, coeff: int = 1) -> "FormalChar":
        """The exponential e(weight), optionally scaled."""
        return FormalChar({tuple(weight): coeff})

    @staticmethod
    def zero() -> "FormalChar":
        return FormalChar()

    @staticmethod
    def one(rank: int) -> "FormalChar":
        return FormalChar({(0,) * rank: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, weight: Coords) -> int:
        return self.terms.get(tuple(weight), 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalChar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FormalChar") -> "FormalChar":
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return FormalChar(out)

    def __neg__(self) -> "FormalChar":
        return FormalChar({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FormalChar") -> "FormalChar":
        return self + (-other)

    def __mul__(self, other: "FormalChar") -> "FormalChar":
        out: dict[Coords, int] = {}
        small, big = self.terms, other.terms
        if len(big) < len(small):
            small, big = big, small
        for ka, va in small.items():
            for kb, vb in big.items():
                k = add(ka, kb)
                c = out.get(k, 0) + va * vb
                if c:
                    out[k] = c
                else:
                    out.pop(k, None)
        return FormalChar(out)

    def scaled(self, k: int) -> "FormalChar":
        if k == 0:
            return FormalChar()
        return FormalChar({w: k * v for w, v in self.terms.items()})

    def conjugate(self) -> "FormalChar":
        """Weight negation: the complex conjugate on a compact torus."""
        return FormalChar({neg(k): v for k, v in self.terms.items()})

    def translate(self, weight: Coords) -> "FormalChar":
        return FormalChar({add(k, weight): v for k, v in self.terms.items()})

    def mass(self) -> int:
        """Sum of all coefficients (the dimension of a genuine character)."""
        return sum(self.terms.values())

    def support(self) -> list[Coords]:
        return sorted(self.terms)

    def sorted_items(self) -> list[tuple[Coords, int]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "FormalChar(0)"
        bits = [f"{v}*e{list(k)}" for k, v in self.sorted_items()]
        return "FormalChar(" + " + ".join(bits) + ")"


def convolve(f: FormalChar, g: FormalChar) -> FormalChar:
    return f * g


def torus_inner_product(f: FormalChar, g: FormalChar) -> int:
    """Coefficientwise dot product: the L^2 pairing of real exponential sums.

    Exponentials are orthonormal on the compact torus, so for sums with
    integer coefficients the pairing integral reduces to this dot product.
    """
    small, big = f.terms, g.terms
    if len(big) < len(small):
        small, big = big, small
    return sum(v * big.get(k, 0) for k, v in small.items())


def _leading(f: FormalChar) -> Coords:
    return max(f.terms)


def divide_exact(numerator: FormalChar, denominator: FormalChar,
                 max_steps: int = 2_000_000) -> FormalChar:
    """Exact division in the group ring, by lexicographic leading-term elimination.

    Raises InternalError if the division leaves a remainder or fails to
    terminate within ``max_steps`` quotient terms.
    """
    if denominator.is_zero():
        raise InputError("division by the zero character")
    lead = _leading(denominator)
    lead_coeff = denominator.terms[lead]
    remainder = FormalChar(dict(numerator.terms))
    quotient: dict[Coords, int] = {}
    steps = 0
    while remainder:
        steps += 1
        if steps > max_steps:
            raise InternalError("exact division did not terminate")
        top = _leading(remainder)
        c = remainder.terms[top]
        if c % lead_coeff:
            raise InternalError("division leaves a remainder")
        q = c // lead_coeff
        shift = tuple(a - b for a, b in zip(top, lead))
        quotient[shift] = quotient.get(shift, 0) + q
        remainder = remainder - denominator.translate(shift).scaled(q)
    return FormalChar(quotient)


def weyl_numerator(system: Subsystem, u: Coords) -> FormalChar:
    """The signed orbit sum over the subsystem's Weyl group at u."""
    out: dict[Coords, int] = {}
    for w in system.weyl.elements:
        k = w.apply(u)
        c = out.get(k, 0) + w.sign
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return FormalChar(out)


def weyl_denominator(system: Subsystem) -> FormalChar:
    """Product over positive roots of (e(a/2) - e(-a/2)); equals the rho orbit sum.

    Both closed forms are computed and compared; a mismatch is an internal
    error.  Cached on the subsystem.
    """
    cached = getattr(system, "_denominator", None)
    if cached is not None:
        return cached
    rank = system.cartan.rank
    prod = FormalChar.one(rank)
    for r in system.positive:
        factor = FormalChar.exp(r.half) - FormalChar.exp(neg(r.half))
        prod = prod * factor
    numerator = weyl_numerator(system, system.rho)
    if prod != numerator:
        raise InternalError("Weyl denominator product and orbit forms differ")
    system._denominator = prod
    return prod


def weyl_character(system: Subsystem, u: Coords) -> FormalChar:
    """Irreducible character with highest weight u for the subsystem.

    Computed as numerator(u + rho) / numerator(rho) by exact division; the
    total mass is checked against the Weyl dimension formula.  Cached on the
    subsystem.
    """
    u = tuple(u)
    cache = getattr(system, "_character_cache", None)
    if cache is None:
        cache = system._character_cache = {}
    if u in cache:
        return cache[u]
    if not system.is_dominant(u):
        raise InputError(f"weight {u} is not dominant for {system.name}")
    numerator = weyl_numerator(system, add(u, system.rho))
    char = divide_exact(numerator, weyl_denominator(system))
    if char.mass() != system.weyl_dimension(u):
        raise InternalError("character mass disagrees with the dimension formula")
    cache[u] = char
    return char


@dataclass
class VirtualModule:
    """Signed multiset of subsystem-dominant highest weights."""

    system: Subsystem
    entries: dict[Coords, int]

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        for k in self.entries:
            if not self.system.is_dominant(k):
                raise InputError(f"virtual module key {k} is not dominant")

    def to_character(self) -> FormalChar:
        total = FormalChar()
        for k, m in self.entries.items():
            total = total + weyl_character(self.system, k).scaled(m)
        return total

    def dimension(self) -> int:
        return sum(m * self.system.weyl_dimension(k) for k, m in self.entries.items())

    def sorted_items(self) -> list[tuple[Coords, int]]:
        return sorted(self.entries.items())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VirtualModule)
            and self.entries == other.entries
            and self.system.indices == other.system.indices
        )

    def hom_dimension(self, other: "VirtualModule") -> int:
        """dim Hom of the underlying (genuine) modules: multiplicity dot product."""
        return sum(
            m * other.entries.get(k, 0) for k, m in self.entries.items()
        )


def _height_key(system: Subsystem, u: Coords) -> tuple[Fraction, Coords]:
    return (system.cartan.bilinear(system.rho, u), u)


def decompose_into_irreducibles(f: FormalChar, system: Subsystem) -> VirtualModule:
    """Write a W-invariant character as a signed sum of irreducibles.

    Strips the highest remaining weight repeatedly.  Non-invariant input is
    reported as an error.
    """
    for r in system.simples:
        refl = system.cartan.reflection_matrix(r)
        reflected = FormalChar({
            tuple(sum(refl[i][j] * k[j] for j in range(len(k))) for i in range(len(k))): v
            for k, v in f.terms.items()
        })
        if reflected != f:
            raise InputError("character is not Weyl invariant for the subsystem")
    remainder = f
    entries: dict[Coords, int] = {}
    while remainder:
        top = max(remainder.terms, key=lambda u: _height_key(system, u))
        if not system.is_dominant(top):
            raise InternalError("invariant character has non-dominant extreme weight")
        m = remainder.terms[top]
        entries[top] = entries.get(top, 0) + m
        remainder = remainder - weyl_character(system, top).scaled(m)
    return VirtualModule(system, entries)
