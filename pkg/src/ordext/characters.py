"""Exact symbolic characters of F^x and of T(F).

A character of F^x = uniformizer^Z x mu_{q-1} x (principal units) is stored by
its three parts:

* unramified: the value at the uniformizer, as an exponent of a fixed root of
  unity of order ``value_order`` plus (continuous mode only) a formal product
  of named symbols;
* tame: a power of the Teichmueller character on mu_{q-1};
* wild: an integer power of the canonical wild character (the wild part of
  the cyclotomic character) times formal named symbols, plus, for p = 2, a
  sign exponent on the {+-1} factor of Z_2^x.

Smooth mod-p characters have no wild part: a pro-p group has no nontrivial
smooth character in characteristic p. Equality is equality of all parts, so
distinct symbols are always unequal.

A torus character is the tuple of its pullbacks along a basis of X^v.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import FieldMismatch, ModeMismatch, ValidationError
from .root_datum import RootDatum


class Mode(enum.Enum):
    SMOOTH_MOD_P = "smooth-mod-p"
    CONTINUOUS = "continuous-unitary"


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_power_exponent(q: int, p: int) -> int | None:
    """f with q == p**f, or None."""
    f = 0
    while q > 1 and q % p == 0:
        q //= p
        f += 1
    return f if q == 1 and f >= 1 else None


@dataclass(frozen=True)
class FieldData:
    p: int
    degree: int = 1
    residue_card: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError(f"p = {self.p} is not prime")
        if self.residue_card is None:
            object.__setattr__(self, "residue_card", self.p)
        f = prime_power_exponent(self.residue_card, self.p)
        if f is None:
            raise ValidationError(f"residue_card = {self.residue_card} is not a power of p = {self.p}")
        if self.degree < 1 or self.degree % f:
            raise ValidationError(f"residue degree {f} does not divide [F:Qp] = {self.degree}")

    @property
    def q(self) -> int:
        return self.residue_card

    @property
    def f(self) -> int:
        return prime_power_exponent(self.residue_card, self.p)

    @property
    def e(self) -> int:
        return self.degree // self.f

    @property
    def is_qp(self) -> bool:
        return self.degree == 1


@dataclass(frozen=True)
class CharacterGroup:
    """Ambient group of characters: base field, coefficient mode and value group.

    ``value_order`` is the order of the cyclic group of roots of unity holding
    unramified values. In mod-p mode it is q' - 1 for the residue field F_q' of
    the coefficients. ``cyclotomic_unramified`` is the exponent of eps at the
    chosen uniformizer in that cyclic group; it is 0 for F = Qp (eps(p) = 1)
    and depends on the choice of uniformizer otherwise.
    """

    field: FieldData
    mode: Mode
    value_order: int = 2
    cyclotomic_unramified: int = 0

    def __post_init__(self):
        if self.value_order < 1:
            raise ValidationError("value_order must be positive")
        q = self.field.q
        if self.mode is Mode.SMOOTH_MOD_P:
            if prime_power_exponent(self.value_order + 1, self.field.p) is None:
                raise ValidationError(
                    f"mod-p value group needs value_order = q' - 1 with q' a power of {self.field.p}"
                )
            if self.value_order % (q - 1):
                raise ValidationError(
                    f"coefficient field F_{self.value_order + 1} does not contain mu_{q - 1}"
                )
        object.__setattr__(self, "cyclotomic_unramified", self.cyclotomic_unramified % self.value_order)
        if self.field.is_qp and self.cyclotomic_unramified:
            raise ValidationError("for F = Qp the cyclotomic character is trivial at p")

    @classmethod
    def mod_p(cls, field: FieldData, coefficient_card: int | None = None, **kw) -> "CharacterGroup":
        """Smooth characters with values in F_{coefficient_card} (default: F_q)."""
        return cls(field, Mode.SMOOTH_MOD_P, (coefficient_card or field.q) - 1, **kw)

    @classmethod
    def continuous(cls, field: FieldData, value_order: int = 2, **kw) -> "CharacterGroup":
        return cls(field, Mode.CONTINUOUS, value_order, **kw)

    @property
    def has_sign2(self) -> bool:
        return self.mode is Mode.CONTINUOUS and self.field.p == 2


Symbols = tuple[tuple[str, int], ...]


def _norm_symbols(items) -> Symbols:
    acc: dict[str, int] = {}
    for name, e in (items.items() if isinstance(items, dict) else items):
        acc[str(name)] = acc.get(str(name), 0) + int(e)
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def _add_symbols(a: Symbols, b: Symbols, k: int = 1) -> Symbols:
    return _norm_symbols(list(a) + [(n, k * e) for n, e in b])


@dataclass(frozen=True)
class PadicCharacter:
    group: CharacterGroup = field(repr=False)
    unram: int = 0
    unram_symbols: Symbols = ()
    tame: int = 0
    wild: int = 0
    wild_symbols: Symbols = ()
    sign2: int = 0

    def __post_init__(self):
        g = self.group
        object.__setattr__(self, "unram", self.unram % g.value_order)
        object.__setattr__(self, "tame", self.tame % (g.field.q - 1))
        object.__setattr__(self, "unram_symbols", _norm_symbols(self.unram_symbols))
        object.__setattr__(self, "wild_symbols", _norm_symbols(self.wild_symbols))
        object.__setattr__(self, "sign2", self.sign2 % 2)
        if g.mode is Mode.SMOOTH_MOD_P and (self.unram_symbols or self.wild or self.wild_symbols):
            raise ValidationError("smooth mod-p characters have no wild part and no symbolic unramified part")
        if self.sign2 and not g.has_sign2:
            raise ValidationError("the sign component exists only for p = 2 in continuous mode")

    def _check(self, other: "PadicCharacter"):
        if self.group != other.group:
            if self.group.field != other.group.field:
                raise FieldMismatch("characters over different base fields")
            raise ModeMismatch("characters in different coefficient modes or value groups")

    def __mul__(self, other: "PadicCharacter") -> "PadicCharacter":
        self._check(other)
        return PadicCharacter(
            self.group,
            self.unram + other.unram,
            _add_symbols(self.unram_symbols, other.unram_symbols),
            self.tame + other.tame,
            self.wild + other.wild,
            _add_symbols(self.wild_symbols, other.wild_symbols),
            self.sign2 + other.sign2,
        )

    def __pow__(self, k: int) -> "PadicCharacter":
        k = int(k)
        return PadicCharacter(
            self.group,
            k * self.unram,
            tuple((n, k * e) for n, e in self.unram_symbols),
            k * self.tame,
            k * self.wild,
            tuple((n, k * e) for n, e in self.wild_symbols),
            k * self.sign2,
        )

    def inverse(self) -> "PadicCharacter":
        return self ** -1

    def __truediv__(self, other: "PadicCharacter") -> "PadicCharacter":
        return self * other.inverse()

    def is_trivial(self) -> bool:
        return self == trivial(self.group)

    def order(self) -> int | None:
        """Multiplicative order, None if infinite."""
        if self.unram_symbols or self.wild or self.wild_symbols:
            return None
        M, q1 = self.group.value_order, self.group.field.q - 1
        return math.lcm(M // math.gcd(self.unram, M), q1 // math.gcd(self.tame, q1), 2 if self.sign2 else 1)

    def sort_key(self):
        return (self.unram, self.unram_symbols, self.tame, self.wild, self.wild_symbols, self.sign2)

    def __str__(self) -> str:
        parts = []
        if self.unram:
            parts.append(f"z^{self.unram}")
        parts += [f"[{n}]^{e}" for n, e in self.unram_symbols]
        if self.tame:
            parts.append(f"t^{self.tame}")
        if self.wild:
            parts.append(f"w^{self.wild}")
        parts += [f"w[{n}]^{e}" for n, e in self.wild_symbols]
        if self.sign2:
            parts.append("sgn")
        return "*".join(parts) or "1"


def trivial(group: CharacterGroup) -> PadicCharacter:
    return PadicCharacter(group)


def cyclotomic(group: CharacterGroup) -> PadicCharacter:
    """Image of the p-adic cyclotomic character eps in the group.

    In mod-p mode this is omega: the wild part is erased. On mu_{q-1} the
    norm map is the Teichmueller power e(q-1)/(p-1).
    """
    fd = group.field
    tame = fd.e * (fd.q - 1) // (fd.p - 1)
    if group.mode is Mode.SMOOTH_MOD_P:
        return PadicCharacter(group, group.cyclotomic_unramified, tame=tame)
    return PadicCharacter(
        group,
        group.cyclotomic_unramified,
        tame=tame,
        wild=1,
        sign2=1 if (fd.p == 2 and fd.is_qp) else 0,
    )


def unramified(group: CharacterGroup, exponent: int = 0, symbols=()) -> PadicCharacter:
    return PadicCharacter(group, exponent, symbols)


def reduce_mod_p(chi: PadicCharacter, target: CharacterGroup) -> PadicCharacter:
    """Reduction of a continuous character to the mod-p group ``target``.

    The wild and sign parts die; symbolic unramified values cannot be reduced.
    """
    src = chi.group
    if src.mode is not Mode.CONTINUOUS or target.mode is not Mode.SMOOTH_MOD_P:
        raise ModeMismatch("reduction goes from continuous to smooth mod-p")
    if src.field != target.field:
        raise FieldMismatch("reduction must keep the base field")
    if chi.unram_symbols:
        raise ValidationError("cannot reduce a symbolic unramified value")
    M, M2 = src.value_order, target.value_order
    if chi.unram and M2 % M:
        raise ValidationError(f"mu_{M} does not embed in F_{M2 + 1}^x")
    return PadicCharacter(target, chi.unram * (M2 // M) if chi.unram else 0, tame=chi.tame)


def enumerate_finite_characters(group: CharacterGroup, bound: int) -> list[PadicCharacter]:
    """All smooth characters with unramified order dividing ``bound``, tame part arbitrary."""
    if group.mode is not Mode.SMOOTH_MOD_P:
        raise ModeMismatch("enumeration is only defined for smooth mod-p characters")
    M = group.value_order
    return [
        PadicCharacter(group, u, tame=t)
        for u in range(M)
        if (u * bound) % M == 0
        for t in range(group.field.q - 1)
    ]


# --- torus characters --------------------------------------------------------


@dataclass(frozen=True)
class TorusCharacter:
    group: CharacterGroup = field(repr=False)
    coords: tuple[PadicCharacter, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        for c in self.coords:
            if c.group != self.group:
                if c.group.field != self.group.field:
                    raise FieldMismatch("coordinates over different base fields")
                raise ModeMismatch("coordinates in different modes")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "TorusCharacter"):
        if self.group != other.group:
            if self.group.field != other.group.field:
                raise FieldMismatch("torus characters over different base fields")
            raise ModeMismatch("torus characters in different modes or value groups")
        if self.rank != other.rank:
            raise ValidationError("torus characters of different rank")

    def __mul__(self, other: "TorusCharacter") -> "TorusCharacter":
        self._check(other)
        return TorusCharacter(self.group, tuple(a * b for a, b in zip(self.coords, other.coords)))

    def __pow__(self, k: int) -> "TorusCharacter":
        return TorusCharacter(self.group, tuple(c ** k for c in self.coords))

    def inverse(self) -> "TorusCharacter":
        return self ** -1

    def __truediv__(self, other: "TorusCharacter") -> "TorusCharacter":
        return self * other.inverse()

    def is_trivial(self) -> bool:
        return all(c.is_trivial() for c in self.coords)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.coords)) + ")"


def mul(a: TorusCharacter, b: TorusCharacter) -> TorusCharacter:
    return a * b


def inv(a: TorusCharacter) -> TorusCharacter:
    return a.inverse()


def eq(a: TorusCharacter, b: TorusCharacter) -> bool:
    a._check(b)
    return a.coords == b.coords


def trivial_torus(group: CharacterGroup, rank: int) -> TorusCharacter:
    return TorusCharacter(group, (trivial(group),) * rank)


def pullback_cochar(chi: TorusCharacter, lam: Sequence[int]) -> PadicCharacter:
    """chi o lambda for a cocharacter lambda given in the basis of X^v."""
    out = trivial(chi.group)
    for c, k in zip(chi.coords, lam):
        if k:
            out = out * c ** k
    return out


def compose_root(eta: PadicCharacter, alpha: Sequence[int]) -> TorusCharacter:
    """eta o alpha as a torus character: coordinate i is eta^{<alpha, e_i^v>}."""
    return TorusCharacter(eta.group, tuple(eta ** a for a in alpha))


def twist_by_root_char(chi: TorusCharacter, eta: PadicCharacter, alpha: Sequence[int]) -> TorusCharacter:
    """chi . (eta o alpha)."""
    if len(alpha) != chi.rank:
        raise ValidationError("root and character have different ranks")
    return chi * compose_root(eta, alpha)


def _apply_x_matrix(chi: TorusCharacter, x_action) -> TorusCharacter:
    # (w chi)(lambda) = chi(w^{-1} lambda); w^{-1} on X^v is the transpose of w on X
    coords = []
    for row in x_action:
        coords.append(pullback_cochar(chi, row))
    return TorusCharacter(chi.group, tuple(coords))


def weyl_twist(w, chi: TorusCharacter) -> TorusCharacter:
    """w(chi) := chi o w^{-1} on cocharacters."""
    if len(w.x_action) != chi.rank:
        raise ValidationError("Weyl element and character have different ranks")
    return _apply_x_matrix(chi, w.x_action)


def reflect(rd: RootDatum, i: int, chi: TorusCharacter) -> TorusCharacter:
    """s_{alpha_i}(chi)."""
    rd.check_index(i)
    if rd.rank != chi.rank:
        raise ValidationError("root datum and character have different ranks")
    return _apply_x_matrix(chi, rd.reflection_x(i))


def is_L_character(rd: RootDatum, chi: TorusCharacter, levi: Iterable[int]) -> bool:
    """True iff chi is trivial on the image of every coroot of the Levi."""
    return all(
        pullback_cochar(chi, rd.simple_coroots[i]).is_trivial() for i in rd.check_subset(levi)
    )


def restrict_ambient(rd: RootDatum, ambient: Sequence[PadicCharacter]) -> TorusCharacter:
    """Restrict a character of the ambient diagonal torus to T (ExampleCard-style data)."""
    basis = rd.ambient_basis
    if basis is None:
        if len(ambient) != rd.rank:
            raise ValidationError(f"expected {rd.rank} coordinates, got {len(ambient)}")
        return TorusCharacter(ambient[0].group, tuple(ambient))
    if len(ambient) != len(basis[0]):
        raise ValidationError(f"expected {len(basis[0])} ambient coordinates, got {len(ambient)}")
    amb = TorusCharacter(ambient[0].group, tuple(ambient))
    return TorusCharacter(amb.group, tuple(pullback_cochar(amb, b) for b in basis))

