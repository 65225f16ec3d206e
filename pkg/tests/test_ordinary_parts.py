import pytest

from ordext.characters import CharacterGroup, FieldData, TorusCharacter, compose_root, cyclotomic, unramified
from ordext.errors import NotLCharacter, ValidationError, ValidityDomain
from ordext.lattice import integer_kernel
from ordext.ordinary_parts import (
    GradedPiece,
    OrdinaryRepDescriptor,
    bruhat_graded,
    hord,
    hord_principal_series,
)
from ordext.root_datum import ParabolicData, builtin, subsets
from ordext.weyl import weyl_group

import oracles

MODP = CharacterGroup.mod_p(FieldData(5))


def l_character(rd, levi, group):
    """A character trivial on the Levi coroots: a product of eta_k o x_k over x_k in X orthogonal to them."""
    x = integer_kernel([rd.simple_coroots[i] for i in levi], rd.rank) if levi else [
        tuple(int(i == j) for j in range(rd.rank)) for i in range(rd.rank)
    ]
    chi = TorusCharacter(group, (unramified(group),) * rd.rank)
    for k, v in enumerate(x):
        chi = chi * compose_root(unramified(group, k + 1) * cyclotomic(group) ** k, v)
    return chi


def all_reps(name, group=MODP):
    rd = builtin(name)
    for levi in subsets(range(rd.semisimple_rank)):
        chi = l_character(rd, levi, group)
        for inner in subsets(levi):
            yield OrdinaryRepDescriptor(rd, ParabolicData(levi, inner), chi)


@pytest.mark.parametrize("name", ["GL3", "GL4", "Sp4"])
def test_low_degrees_match_case_formulas(name):
    for rep in all_reps(name):
        for n in (0, 1):
            got = hord(rep, n).multiset()
            want = oracles.closed_hord(rep.rd, rep.parabolic.levi, rep.parabolic.inner, rep.chi, n)
            assert got == want, (rep.parabolic, n)


@pytest.mark.parametrize("name", ["GL3", "Sp4", "GL2xSL2"])
def test_totals_and_top_degree(name):
    rd = builtin(name)
    W = weyl_group(rd)
    d = len(rd.root_system.positive)
    by_levi = {}
    for rep in all_reps(name):
        total = sum(len(hord(rep, n)) for n in range(d + 1))
        by_levi[rep.parabolic.levi] = by_levi.get(rep.parabolic.levi, 0) + total
        top = hord(rep, d)
        assert (len(top) > 0) == (rep.parabolic.inner == rep.parabolic.levi) == (W.longest in top.witnesses)
    assert all(v == len(W) for v in by_levi.values())


def test_principal_series_gl3():
    rd = builtin("GL3")
    a, b = unramified(MODP, 1), unramified(MODP, 2)
    chi = TorusCharacter(MODP, (a, b, unramified(MODP)))
    assert hord_principal_series(rd, chi, 0).characters == (chi,)
    h1 = hord_principal_series(rd, chi, 1)
    assert [w.label() for w in h1.witnesses] == ["s1", "s2"]
    assert len(hord_principal_series(rd, chi, 3)) == 1


def test_other_fields_skip_degrees():
    group = CharacterGroup.mod_p(FieldData(3, 2, 9))
    rd = builtin("GL3")
    chi = TorusCharacter(group, (unramified(group, 1),) * 3)
    assert len(hord_principal_series(rd, chi, 1)) == 0
    assert len(hord_principal_series(rd, chi, 2)) == 2
    assert len(hord_principal_series(rd, chi, 6)) == 1


def test_validity_domain_for_artinian_coefficients():
    group = CharacterGroup.continuous(FieldData(5))
    rd = builtin("GL3")
    chi = TorusCharacter(group, (unramified(group),) * 3)
    assert hord_principal_series(rd, chi, 1).proved
    with pytest.raises(ValidityDomain):
        hord_principal_series(rd, chi, 2)
    piece = hord_principal_series(rd, chi, 2, override_validity=True)
    assert not piece.proved and len(piece) == 2


def test_bruhat_graded():
    rd = builtin("GL3")
    chi = TorusCharacter(MODP, (unramified(MODP),) * 3)
    st = OrdinaryRepDescriptor(rd, ParabolicData(()), chi)
    assert [(w.label(), k) for w, k in bruhat_graded(st, 0)] == [("1", 3)]
    sp = OrdinaryRepDescriptor(rd, ParabolicData((0,), (0,)), chi)
    assert bruhat_graded(sp, 0) == []
    top = OrdinaryRepDescriptor(rd, ParabolicData((0, 1), (0, 1)), chi)
    assert [(w.label(), k) for w, k in bruhat_graded(top, 3)] == [("s1 s2 s1", 0)]


def test_threads_do_not_change_output():
    for rep in all_reps("GL4"):
        for n in range(3):
            assert hord(rep, n, jobs=4) == hord(rep, n)


def test_not_l_character():
    rd = builtin("GL3")
    chi = TorusCharacter(MODP, (unramified(MODP, 1), unramified(MODP), unramified(MODP)))
    with pytest.raises(NotLCharacter):
        OrdinaryRepDescriptor(rd, ParabolicData((0,)), chi)


def test_graded_piece_invariant():
    with pytest.raises(ValidationError):
        GradedPiece(0, (), (weyl_group(builtin("GL2")).identity,))
