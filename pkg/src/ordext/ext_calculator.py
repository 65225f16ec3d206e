"""Dimensions of Ext^1 between principal series and ordinary representations.

Every function returns an ExtReport. Values that are theorems are ``exact``;
where only bounds are known the report is an ``interval`` whose ``expected``
entry (if any) is a conjectural value and never promoted to exact. For
F != Qp the dimension of Ext^1_T(chi, chi) is not computed here and stays
``symbolic`` unless the caller supplies it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .characters import (
    Mode,
    PadicCharacter,
    TorusCharacter,
    compose_root,
    cyclotomic,
    pullback_cochar,
    reflect,
)
from .errors import FieldMismatch, ModeMismatch, ValidationError
from .ordinary_parts import OrdinaryRepDescriptor
from .root_datum import (
    RankOneClass,
    RootDatum,
    center_component_group,
    classify_rank_one,
    is_center_connected,
    mu_p_hom_dimension,
)


@dataclass(frozen=True)
class Symbolic:
    """constant + torus * [dim Ext^1_T(chi, chi)]."""

    constant: int = 0
    torus: int = 1

    def __str__(self) -> str:
        term = "[dimExt1_T]" if self.torus == 1 else f"{self.torus}*[dimExt1_T]"
        return term if not self.constant else f"{self.constant} + {term}"


@dataclass(frozen=True)
class ExtReport:
    kind: str
    dim: int | None = None
    low: int | None = None
    high: int | None = None
    expected: int | None = None
    symbolic: Symbolic | None = None
    delta_prime: tuple[int, ...] = ()
    delta_doubleprime: tuple[int, ...] = ()
    case_label: str = ""
    hypotheses: dict[str, Any] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.kind == "exact":
            if self.dim is None:
                raise ValidationError("exact report without a dimension")
            object.__setattr__(self, "low", self.dim)
            object.__setattr__(self, "high", self.dim)
        elif self.kind == "interval":
            if self.low is None or self.high is None or self.low > self.high:
                raise ValidationError("interval report needs low <= high")
            if self.expected is not None and not self.low <= self.expected <= self.high:
                raise ValidationError("expected value outside the proved interval")
        elif self.kind == "symbolic":
            if self.symbolic is None:
                raise ValidationError("symbolic report without a formula")
        else:
            raise ValidationError(f"unknown report kind {self.kind!r}")
        if not set(self.delta_doubleprime) <= set(self.delta_prime):
            raise ValidationError("delta'' must be contained in delta'")

    def __str__(self) -> str:
        if self.kind == "exact":
            return f"exact {self.dim}"
        if self.kind == "interval":
            s = f"interval [{self.low}, {self.high}]"
            return s + (f" expected {self.expected}" if self.expected is not None else "")
        return f"symbolic {self.symbolic}"


def _check_pair(a: TorusCharacter, b: TorusCharacter):
    if a.group.field != b.group.field:
        raise FieldMismatch("characters over different base fields")
    if a.group != b.group:
        raise ModeMismatch("characters in different modes or value groups")
    if a.rank != b.rank:
        raise ValidationError("characters of different rank")


def _check_datum(rd: RootDatum, chi: TorusCharacter):
    if rd.rank != chi.rank:
        raise ValidationError(f"character has rank {chi.rank}, root datum has rank {rd.rank}")


def reflected_twist(rd: RootDatum, chi: TorusCharacter, i: int) -> TorusCharacter:
    """s_alpha(chi) . (eps^{-1} o alpha), eps read in the character's mode."""
    eps_inv = cyclotomic(chi.group).inverse()
    return reflect(rd, i, chi) * compose_root(eps_inv, rd.simple_roots[i])


def delta_prime(rd: RootDatum, chi: TorusCharacter, chi_prime: TorusCharacter) -> tuple[int, ...]:
    """{alpha : chi' = s_alpha(chi) . (eps^{-1} o alpha)}."""
    _check_pair(chi, chi_prime)
    _check_datum(rd, chi)
    return tuple(i for i in range(rd.semisimple_rank) if reflected_twist(rd, chi, i) == chi_prime)


def delta_doubleprime(rd: RootDatum, chi: TorusCharacter, dprime) -> tuple[int, ...]:
    """{alpha in delta' : chi o alpha^v = eps^{-1}}."""
    eps_inv = cyclotomic(chi.group).inverse()
    return tuple(i for i in dprime if pullback_cochar(chi, rd.simple_coroots[i]) == eps_inv)


# --- Ext^1 between characters of T(Qp) ---------------------------------------


def units_decomposition(fd) -> list[tuple[str, int]]:
    """Qp^x as a product: ('Z', 0) for p^Z, ('cyclic', n) torsion, ('Zp', 0) free pro-p part."""
    if not fd.is_qp:
        raise ValidationError("the unit group decomposition is only tabulated for F = Qp")
    p = fd.p
    if p == 2:
        # Q_2^x = 2^Z x {+-1} x (1 + 4 Z_2)
        return [("Z", 0), ("cyclic", 2), ("Zp", 0)]
    # Q_p^x = p^Z x mu_{p-1} x (1 + p Z_p)
    return [("Z", 0), ("cyclic", p - 1), ("Zp", 0)]


def hom_dimension(decomposition, characteristic: int) -> int:
    """dim of continuous Hom(product, coefficient field) as additive groups."""
    total = 0
    for kind, n in decomposition:
        if kind in ("Z", "Zp"):
            total += 1
        elif characteristic and n % characteristic == 0:
            total += 1
    return total


def torus_ext_dim_qp(rank: int, fd, mode: Mode) -> int:
    """dim Ext^1_{T(Qp)}(chi, chi) = rank * dim Hom_cont(Qp^x, coefficients)."""
    char = fd.p if mode is Mode.SMOOTH_MOD_P else 0
    return rank * hom_dimension(units_decomposition(fd), char)


def dim_ext1_torus(
    rd: RootDatum,
    chi: TorusCharacter,
    chi_prime: TorusCharacter,
    torus_ext_dim: int | None = None,
) -> ExtReport:
    _check_pair(chi, chi_prime)
    _check_datum(rd, chi)
    fd, mode = chi.group.field, chi.group.mode
    hyps = {"mode": mode.value, "F_is_Qp": fd.is_qp}
    if chi != chi_prime:
        return ExtReport("exact", 0, case_label="distinct torus characters have no extensions", hypotheses=hyps)
    if fd.is_qp:
        return ExtReport(
            "exact",
            torus_ext_dim_qp(rd.rank, fd, mode),
            case_label="continuous homomorphisms T(Qp) -> coefficients",
            hypotheses=hyps,
        )
    if torus_ext_dim is not None:
        return ExtReport("exact", int(torus_ext_dim), case_label="user-supplied torus Ext dimension", hypotheses=hyps)
    return ExtReport("symbolic", symbolic=Symbolic(), case_label="torus Ext dimension left symbolic for F != Qp", hypotheses=hyps)


# --- principal series ------------------------------------------------------------


def _hypotheses(rd: RootDatum, chi: TorusCharacter, **extra) -> dict[str, Any]:
    fd = chi.group.field
    h = {
        "center_connected": is_center_connected(rd),
        "p_odd": fd.p != 2,
        "F_is_Qp": fd.is_qp,
        "mode": chi.group.mode.value,
    }
    h.update(extra)
    return h


def s_fixed_roots(rd: RootDatum, chi: TorusCharacter) -> tuple[int, ...]:
    """{alpha : s_alpha(chi) = chi}."""
    return tuple(i for i in range(rd.semisimple_rank) if reflect(rd, i, chi) == chi)


def autoext_modp(rd: RootDatum, chi: TorusCharacter) -> ExtReport:
    """dim Ext^1_G(Ind chi, Ind chi) for a smooth mod-p character of T(Qp)."""
    _check_datum(rd, chi)
    if chi.group.mode is not Mode.SMOOTH_MOD_P:
        raise ModeMismatch("self-extensions mod p need a smooth mod-p character")
    fd = chi.group.field
    if not fd.is_qp:
        raise FieldMismatch("self-extensions mod p are computed for F = Qp only")
    p = fd.p
    dim_t = torus_ext_dim_qp(rd.rank, fd, chi.group.mode)
    dp = delta_prime(rd, chi, chi)
    ddp = delta_doubleprime(rd, chi, dp)
    connected = is_center_connected(rd)
    hyps = _hypotheses(rd, chi, generic=not dp)
    if p == 2:
        fixed = s_fixed_roots(rd, chi)
        return ExtReport(
            "exact", dim_t + len(fixed), delta_prime=dp, delta_doubleprime=ddp,
            case_label="p = 2: cokernel has dimension #{alpha : s_alpha(chi) = chi}",
            hypotheses=hyps,
        )
    if connected:
        return ExtReport(
            "exact", dim_t, delta_prime=dp, delta_doubleprime=ddp,
            case_label="connected center, p odd: Ind is an isomorphism on Ext^1",
            hypotheses=hyps,
        )
    if not dp:
        return ExtReport(
            "exact", dim_t, case_label="generic: Ind is an isomorphism on Ext^1", hypotheses=hyps,
        )
    component = center_component_group(rd, ddp)
    expected = dim_t + len(dp) - len(ddp) + mu_p_hom_dimension(component, p)
    hyps["component_group_of_Z''"] = list(component)
    return ExtReport(
        "interval", low=dim_t + len(dp) - len(ddp), high=dim_t + len(dp), expected=expected,
        delta_prime=dp, delta_doubleprime=ddp,
        case_label="non-connected center, p odd: bounds proved, expected value conjectural",
        hypotheses=hyps,
    )


def dim_ext1_principal_series(
    rd: RootDatum,
    chi_prime: TorusCharacter,
    chi: TorusCharacter,
    torus_ext_dim: int | None = None,
) -> ExtReport:
    """dim Ext^1_G(Ind chi', Ind chi)."""
    _check_pair(chi, chi_prime)
    _check_datum(rd, chi)
    fd = chi.group.field
    if not fd.is_qp:
        t = dim_ext1_torus(rd, chi, chi_prime, torus_ext_dim)
        return ExtReport(
            t.kind, t.dim, symbolic=t.symbolic,
            case_label="F != Qp: extensions come from extensions of torus characters",
            hypotheses=_hypotheses(rd, chi),
        )
    dp = delta_prime(rd, chi, chi_prime)
    if chi_prime != chi:
        return ExtReport(
            "exact", len(dp), delta_prime=dp,
            case_label="distinct characters: #{alpha : chi' = s_alpha(chi).(eps^-1 o alpha)}",
            hypotheses=_hypotheses(rd, chi),
        )
    if chi.group.mode is Mode.SMOOTH_MOD_P:
        return autoext_modp(rd, chi)
    dim_t = torus_ext_dim_qp(rd.rank, fd, chi.group.mode)
    ddp = delta_doubleprime(rd, chi, dp)
    hyps = _hypotheses(rd, chi, generic=not dp)
    if not dp:
        return ExtReport("exact", dim_t, case_label="generic: Ind is an isomorphism on Ext^1", hypotheses=hyps)
    if hyps["center_connected"] and hyps["p_odd"]:
        return ExtReport(
            "exact", dim_t, delta_prime=dp, delta_doubleprime=ddp,
            case_label="connected center, p odd: Ind is an isomorphism on Ext^1",
            hypotheses=hyps,
        )
    low = dim_t + len(dp) - len(ddp)
    return ExtReport(
        "interval", low=low, high=dim_t + len(dp), expected=low,
        delta_prime=dp, delta_doubleprime=ddp,
        case_label="non-generic self-extensions: bounds proved, lower bound expected",
        hypotheses=hyps,
    )


# --- ordinary representations --------------------------------------------------


def ext_ordinary(
    rd: RootDatum,
    chi_prime: TorusCharacter,
    rep: OrdinaryRepDescriptor,
    torus_ext_dim: int | None = None,
) -> ExtReport:
    """dim Ext^1_G(Ind chi', Ind_{P^-}(sigma (x) chi))."""
    chi = rep.chi
    _check_pair(chi, chi_prime)
    if rep.rd != rd:
        raise ValidationError("representation is attached to a different root datum")
    sigma = rep.sigma
    fd = chi.group.field
    hyps = _hypotheses(rd, chi, sigma=str(sigma))
    if not fd.is_qp:
        if sigma.is_steinberg and chi_prime == chi:
            t = dim_ext1_torus(rd, chi, chi, torus_ext_dim)
            return ExtReport(
                t.kind, t.dim, symbolic=t.symbolic,
                case_label="F != Qp, sigma = St, chi' = chi: isomorphic to Ext^1_T(chi, chi)",
                hypotheses=hyps,
            )
        return ExtReport("exact", 0, case_label="F != Qp: vanishes unless sigma = St and chi' = chi", hypotheses=hyps)

    eps_inv = cyclotomic(chi.group).inverse()
    if not sigma.is_steinberg and sigma.simple_root is None:
        return ExtReport("exact", 0, case_label="sigma is neither St nor Sp_alpha", hypotheses=hyps)
    if sigma.simple_root is not None:
        a = sigma.simple_root
        hit = chi_prime == chi * compose_root(eps_inv, rd.simple_roots[a])
        return ExtReport(
            "exact", int(hit), delta_prime=(a,) if hit else (),
            case_label="sigma = Sp_alpha: 1 iff chi' = chi.(eps^-1 o alpha)",
            hypotheses=hyps,
        )
    outside = [i for i in range(rd.semisimple_rank) if i not in rep.parabolic.levi]
    dp = tuple(i for i in outside if reflected_twist(rd, chi, i) == chi_prime)
    if chi_prime != chi:
        return ExtReport(
            "exact", len(dp), delta_prime=dp,
            case_label="sigma = St, chi' != chi: #{alpha not in Delta_L : chi' = s_alpha(chi).(eps^-1 o alpha)}",
            hypotheses=hyps,
        )
    dim_t = torus_ext_dim_qp(rd.rank, fd, chi.group.mode)
    ddp = tuple(i for i in dp if pullback_cochar(chi, rd.simple_coroots[i]) == eps_inv)
    hyps["generic"] = not dp
    if not dp:
        return ExtReport("exact", dim_t, case_label="sigma = St, generic: isomorphic to Ext^1_T(chi, chi)", hypotheses=hyps)
    if hyps["center_connected"] and hyps["p_odd"]:
        return ExtReport(
            "exact", dim_t, delta_prime=dp, delta_doubleprime=ddp,
            case_label="sigma = St, connected center, p odd: lower bound attained",
            hypotheses=hyps,
        )
    low = dim_t + len(dp) - len(ddp)
    expected = None if (chi.group.mode is Mode.SMOOTH_MOD_P and fd.p == 2) else low
    return ExtReport(
        "interval", low=low, high=dim_t + len(dp), expected=expected,
        delta_prime=dp, delta_doubleprime=ddp,
        case_label="sigma = St, non-generic: bounds proved",
        hypotheses=hyps,
    )


# --- irregular characters ------------------------------------------------------


@dataclass(frozen=True)
class IrregularityRecord:
    twist_fixed: bool
    pullback_equal: bool
    exceptional: bool

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.twist_fixed, self.pullback_equal, self.exceptional)


def classify_irregular(rd: RootDatum, chi: TorusCharacter, eta: PadicCharacter, i: int) -> IrregularityRecord:
    """Compare s_alpha(chi).(eta o alpha) = chi with chi o alpha^v = eta."""
    rd.check_index(i)
    _check_datum(rd, chi)
    twisted = reflect(rd, i, chi) * compose_root(eta, rd.simple_roots[i])
    pulled = pullback_cochar(chi, rd.simple_coroots[i])
    ratio = pulled / eta
    exceptional = classify_rank_one(rd, i) is RankOneClass.SL2 and ratio.order() == 2
    return IrregularityRecord(twisted == chi, pulled == eta, exceptional)
