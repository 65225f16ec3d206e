import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordext.characters import (
    CharacterGroup,
    FieldData,
    Mode,
    PadicCharacter,
    TorusCharacter,
    compose_root,
    cyclotomic,
    enumerate_finite_characters,
    is_L_character,
    pullback_cochar,
    reduce_mod_p,
    reflect,
    restrict_ambient,
    trivial,
    trivial_torus,
    unramified,
    weyl_twist,
)
from ordext.errors import FieldMismatch, ModeMismatch, ValidationError
from ordext.root_datum import builtin
from ordext.weyl import weyl_group

Q5 = FieldData(5)
CONT = CharacterGroup.continuous(Q5, value_order=4)
MODP = CharacterGroup.mod_p(Q5)


def padic(group):
    symbols = st.dictionaries(st.sampled_from("ab"), st.integers(-3, 3), max_size=2)
    cont = group.mode is Mode.CONTINUOUS
    return st.builds(
        lambda u, us, t, w, ws: PadicCharacter(group, u, us if cont else {}, t, w if cont else 0, ws if cont else {}),
        st.integers(-10, 10), symbols, st.integers(-10, 10), st.integers(-3, 3), symbols,
    )


@settings(max_examples=100, deadline=None)
@given(padic(CONT), padic(CONT), padic(CONT))
def test_group_laws(a, b, c):
    one = trivial(CONT)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * one == a
    assert a * a.inverse() == one
    assert a ** 3 == a * a * a
    assert (a / b) * b == a


@settings(max_examples=60, deadline=None)
@given(padic(MODP), padic(MODP))
def test_torus_group_laws(a, b):
    x = TorusCharacter(MODP, (a, b))
    y = TorusCharacter(MODP, (b, a))
    assert (x * y) / y == x
    assert (x * x.inverse()).is_trivial()


def test_normal_forms_and_order():
    assert PadicCharacter(MODP, 5, tame=6) == PadicCharacter(MODP, 1, tame=2)
    assert PadicCharacter(MODP, 2).order() == 2
    assert PadicCharacter(MODP, 1, tame=2).order() == 4
    assert PadicCharacter(CONT, unram_symbols={"a": 1}).order() is None
    assert str(PadicCharacter(CONT, 1, {"a": 2}, 3, 1)) == "z^1*[a]^2*t^3*w^1"
    assert str(trivial(CONT)) == "1"


def test_mod_p_rejects_wild_parts():
    with pytest.raises(ValidationError):
        PadicCharacter(MODP, wild=1)
    with pytest.raises(ValidationError):
        PadicCharacter(MODP, unram_symbols={"a": 1})
    with pytest.raises(ValidationError):
        PadicCharacter(CONT, sign2=1)


def test_mismatches():
    other_field = CharacterGroup.mod_p(FieldData(3))
    with pytest.raises(FieldMismatch):
        trivial(MODP) * trivial(other_field)
    with pytest.raises(ModeMismatch):
        trivial(MODP) * trivial(CharacterGroup.continuous(Q5, value_order=4))


def test_value_group_checks():
    with pytest.raises(ValidationError):
        CharacterGroup.mod_p(Q5, coefficient_card=9)
    with pytest.raises(ValidationError):
        CharacterGroup.mod_p(FieldData(3, 2, 9), coefficient_card=3)
    assert CharacterGroup.mod_p(Q5, coefficient_card=25).value_order == 24


def test_cyclotomic_reduces_to_omega():
    for p in (2, 3, 5, 7):
        fd = FieldData(p)
        eps = cyclotomic(CharacterGroup.continuous(fd))
        omega = cyclotomic(CharacterGroup.mod_p(fd))
        assert reduce_mod_p(eps, CharacterGroup.mod_p(fd)) == omega
        # omega on Qp is the Teichmueller character itself, of order p - 1
        assert omega.tame == (1 if p > 2 else 0)
        assert omega.order() == p - 1
    assert cyclotomic(CharacterGroup.continuous(FieldData(2))).sign2 == 1


def test_cyclotomic_on_extensions():
    # on mu_{q-1} the norm to Fp^x is the (q-1)/(p-1) power
    unram = cyclotomic(CharacterGroup.mod_p(FieldData(3, 2, 9)))
    assert unram.tame == 4
    ram = cyclotomic(CharacterGroup.mod_p(FieldData(3, 2, 3)))
    assert ram.tame == 0  # e (q-1)/(p-1) = 2, and t has order q - 1 = 2


@pytest.mark.parametrize("p,card,bound,count", [(3, None, 2, 4), (2, None, 1, 1), (5, None, 4, 16), (2, 4, 3, 3)])
def test_enumeration_counts(p, card, bound, count):
    group = CharacterGroup.mod_p(FieldData(p), card)
    chars = enumerate_finite_characters(group, bound)
    assert len(chars) == len(set(chars)) == count
    assert all(bound % PadicCharacter(group, c.unram).order() == 0 for c in chars)


def test_reflection_identity_exhaustive():
    """s_a(chi) chi^{-1} = ((chi o a^v)^{-1}) o a, for all enumerated characters."""
    for name, p in [("GL2", 3), ("SL2", 5), ("PGL2", 5), ("Sp4", 3), ("GL3", 3)]:
        rd = builtin(name)
        group = CharacterGroup.mod_p(FieldData(p))
        letters = enumerate_finite_characters(group, group.value_order)
        for coords in itertools.product(letters, repeat=rd.rank):
            chi = TorusCharacter(group, coords)
            for i in range(rd.semisimple_rank):
                lhs = reflect(rd, i, chi) / chi
                rhs = compose_root(pullback_cochar(chi, rd.simple_coroots[i]).inverse(), rd.simple_roots[i])
                assert lhs == rhs


def test_weyl_twist_is_an_action():
    rd = builtin("GL3")
    W = weyl_group(rd)
    chi = TorusCharacter(CONT, (unramified(CONT, 0, {"a": 1}), unramified(CONT, 0, {"b": 1}), trivial(CONT)))
    for u in W:
        for v in W:
            assert weyl_twist(W.mul(u, v), chi) == weyl_twist(u, weyl_twist(v, chi))
    # s1 permutes the first two coordinates of GL3
    assert weyl_twist(W.simple[0], chi).coords == (chi.coords[1], chi.coords[0], chi.coords[2])
    assert reflect(rd, 0, chi) == weyl_twist(W.simple[0], chi)


def test_is_L_character():
    rd = builtin("GL3")
    a = unramified(CONT, 1)
    chi = TorusCharacter(CONT, (a, a, trivial(CONT)))
    assert is_L_character(rd, chi, (0,))
    assert not is_L_character(rd, chi, (1,))
    assert is_L_character(rd, trivial_torus(CONT, 3), (0, 1))


def test_restrict_ambient_example_card():
    rd = builtin("ExampleCard(2)")
    eta = unramified(CONT, 1)
    one = trivial(CONT)
    chi = restrict_ambient(rd, [eta, one, one, one])
    # u_1 = e1 - e2, u_2 = e3 - e4, v = e1 - e3
    assert chi.coords == (eta, one, eta)
