"""Bruhat filtration pieces and derived ordinary parts of ordinary representations.

An ordinary representation Ind_{P^-}(Sp_Q (x) chi) is described by the pair
(Delta_L, Delta_{L_Q}) and an L-character chi. Its H^n Ord is the direct sum,
over w in W_sigma with [F:Qp] * l(w) = n, of w^{-1}(chi) . (omega^{-1} o alpha_w).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .characters import (
    Mode,
    TorusCharacter,
    cyclotomic,
    is_L_character,
    twist_by_root_char,
    weyl_twist,
)
from .errors import NotLCharacter, ValidationError, ValidityDomain
from .root_datum import ParabolicData, RootDatum
from .weyl import SpecialRepLabel, WeylElement, alpha_w, n_w_dimension, w_sigma, weyl_group


@dataclass(frozen=True)
class OrdinaryRepDescriptor:
    rd: RootDatum
    parabolic: ParabolicData
    chi: TorusCharacter

    def __post_init__(self):
        self.parabolic.check(self.rd)
        if self.chi.rank != self.rd.rank:
            raise ValidationError("character rank does not match the root datum")
        if not is_L_character(self.rd, self.chi, self.parabolic.levi):
            raise NotLCharacter(
                f"chi is not trivial on the coroots of the Levi {list(self.parabolic.levi)}"
            )

    @property
    def sigma(self) -> SpecialRepLabel:
        return SpecialRepLabel(self.parabolic)


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    characters: tuple[TorusCharacter, ...]
    witnesses: tuple[WeylElement, ...]
    # False when the formula is evaluated outside the proved range
    proved: bool = True

    def __post_init__(self):
        if len(self.characters) != len(self.witnesses):
            raise ValidationError("every character needs a witness")

    def __len__(self) -> int:
        return len(self.characters)

    def multiset(self) -> list[TorusCharacter]:
        return sorted(self.characters, key=TorusCharacter.sort_key)


def bruhat_graded(rep: OrdinaryRepDescriptor, r: int) -> list[tuple[WeylElement, int]]:
    """Graded piece r of the Bruhat filtration: (w_sigma, dim N_{w_sigma}) with l(w_sigma) = r."""
    d = len(rep.rd.root_system.positive)
    if not 0 <= r <= d:
        raise ValidationError(f"filtration index {r} outside 0..{d}")
    return [(w, n_w_dimension(rep.rd, w)) for w in w_sigma(rep.rd, rep.parabolic) if w.length == r]


def hord(
    rep: OrdinaryRepDescriptor,
    n: int,
    *,
    override_validity: bool = False,
    jobs: int = 1,
) -> GradedPiece:
    """H^n Ord_B of the ordinary representation.

    Continuous-mode characters stand for artinian coefficients, where the
    isomorphism is only known for n <= 1; larger n raises ValidityDomain
    unless ``override_validity`` is set, in which case the piece is returned
    with ``proved = False``.
    """
    if n < 0:
        raise ValidationError("degree must be non-negative")
    proved = rep.chi.group.mode is Mode.SMOOTH_MOD_P or n <= 1
    if not proved and not override_validity:
        raise ValidityDomain(
            f"H^{n} Ord with artinian coefficients is only established for n <= 1"
        )
    deg = rep.chi.group.field.degree
    if n % deg:
        return GradedPiece(n, (), (), proved)
    length = n // deg
    W = weyl_group(rep.rd)
    witnesses = [w for w in w_sigma(rep.rd, rep.parabolic) if w.length == length]
    omega_inv = cyclotomic(rep.chi.group).inverse()

    def term(w: WeylElement) -> TorusCharacter:
        return twist_by_root_char(weyl_twist(W.inverse(w), rep.chi), omega_inv, alpha_w(rep.rd, w))

    if jobs > 1 and len(witnesses) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            chars = list(ex.map(term, witnesses))
    else:
        chars = [term(w) for w in witnesses]
    return GradedPiece(n, tuple(chars), tuple(witnesses), proved)


def hord_principal_series(
    rd: RootDatum, chi: TorusCharacter, n: int, **kw
) -> GradedPiece:
    """H^n Ord_B of Ind_{B^-} chi (the case P = B)."""
    return hord(OrdinaryRepDescriptor(rd, ParabolicData(()), chi), n, **kw)
