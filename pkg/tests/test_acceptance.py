"""Acceptance checks, one per criterion. Each prints a single PASS/FAIL line."""

import contextlib
import io
import itertools
import random
import time
from pathlib import Path

import pytest

from ordext.characters import (
    CharacterGroup,
    FieldData,
    PadicCharacter,
    TorusCharacter,
    compose_root,
    cyclotomic,
    enumerate_finite_characters,
    pullback_cochar,
    reflect,
    trivial,
    unramified,
)
from ordext.cli import main
from ordext.ext_calculator import autoext_modp, classify_irregular, delta_prime, dim_ext1_principal_series, ext_ordinary
from ordext.lattice import integer_kernel
from ordext.ordinary_parts import OrdinaryRepDescriptor, hord
from ordext.root_datum import (
    ParabolicData,
    RankOneClass,
    builtin,
    catalog,
    center_component_group,
    classify_rank_one,
    mu_p_hom_dimension,
    subsets,
)
from ordext.weyl import w_sigma, weyl_group

import oracles

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = ""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail

    return emit


def torus_chars(group, rank, letters=None):
    letters = letters or enumerate_finite_characters(group, group.value_order)
    for coords in itertools.product(letters, repeat=rank):
        yield TorusCharacter(group, coords)


def l_characters(rd, levi, group, letters):
    """All products of eta_k o x_k, x_k running over a basis of X orthogonal to the Levi coroots."""
    basis = integer_kernel([rd.simple_coroots[i] for i in levi], rd.rank) if levi else [
        tuple(int(i == j) for j in range(rd.rank)) for i in range(rd.rank)
    ]
    for etas in itertools.product(letters, repeat=len(basis)):
        chi = TorusCharacter(group, (trivial(group),) * rd.rank)
        for eta, x in zip(etas, basis):
            chi = chi * compose_root(eta, x)
        yield chi


def test_criterion_1_example_card(verdict):
    details = []
    ok = True
    for n in (2, 3, 4):
        rd, chi, _ = oracles.card_characters(n)
        eps_inv = cyclotomic(chi.group).inverse()
        twists = {reflect(rd, i, chi) * compose_root(eps_inv, rd.simple_roots[i]) for i in range(n)}
        chi_prime = next(iter(twists))
        dp = delta_prime(rd, chi, chi_prime)
        rep = dim_ext1_principal_series(rd, chi_prime, chi)
        good = len(twists) == 1 and chi_prime != chi and dp == tuple(range(n)) and str(rep) == f"exact {n}"
        ok &= good
        details.append(f"n={n}: |D'|={len(dp)}, {rep}")
    verdict(1, "ExampleCard(n) gives exact n", ok, "; ".join(details))


def test_criterion_2_low_degree_ordinary_parts(verdict):
    start = time.perf_counter()
    group = CharacterGroup.mod_p(FieldData(5))
    letters = [unramified(group, 1), PadicCharacter(group, 2, tame=1)]
    checked, bad = 0, 0
    for name in ("GL3", "GL4", "Sp4"):
        rd = builtin(name)
        for levi in subsets(range(rd.semisimple_rank)):
            for chi in l_characters(rd, levi, group, letters):
                for inner in subsets(levi):
                    rep = OrdinaryRepDescriptor(rd, ParabolicData(levi, inner), chi)
                    for n in (0, 1):
                        checked += 1
                        if hord(rep, n).multiset() != oracles.closed_hord(rd, levi, inner, chi, n):
                            bad += 1
    elapsed = time.perf_counter() - start
    verdict(2, "H^0/H^1 Ord match the case formulas", bad == 0 and elapsed < 10,
            f"{checked} comparisons, {bad} mismatches, {elapsed:.2f}s")


def test_criterion_3_weyl_partition(verdict):
    bad, blocks = 0, 0
    for rd in catalog(4):
        W = weyl_group(rd)
        for levi in subsets(range(rd.semisimple_rank)):
            pieces = [w_sigma(rd, ParabolicData(levi, inner)) for inner in subsets(levi)]
            union = [w for piece in pieces for w in piece]
            blocks += 1
            if len(union) != len(W) or set(union) != set(W.elements):
                bad += 1
    verdict(3, "W_sigma over inner parabolics partition W", bad == 0, f"{blocks} (datum, Levi) pairs")


def test_criterion_4_irregular_exhaustive(verdict):
    fields = {2: 4, 3: 9, 5: 5}  # coefficient field F_{q'} per p
    cases, counterexamples = 0, 0
    witnesses = {3: 0, 5: 0}
    for p, card in fields.items():
        group = CharacterGroup.mod_p(FieldData(p), card)
        letters = [c for c in enumerate_finite_characters(group, 12) if PadicCharacter(group, c.unram).order() <= 4]
        for name in ("GL2", "SL2", "PGL2"):
            rd = builtin(name)
            for chi in torus_chars(group, rd.rank, letters):
                for eta in letters:
                    cases += 1
                    rec = classify_irregular(rd, chi, eta, 0)
                    if rec.pullback_equal != rec.twist_fixed and not rec.exceptional:
                        counterexamples += 1
                    if not rec.twist_fixed and rec.pullback_equal:
                        counterexamples += 1
                    if name == "SL2" and p != 2 and rec.as_tuple() == (True, False, True):
                        witnesses[p] += 1
    ok = counterexamples == 0 and all(witnesses.values()) and cases <= 10**4
    verdict(4, "twist-fixed vs pullback-equal, exhaustive", ok,
            f"{cases} cases, {counterexamples} counterexamples, SL2 exceptional witnesses {witnesses}")


def test_criterion_5_p2_autoext(verdict):
    group = CharacterGroup.mod_p(FieldData(2), 4)
    one = trivial(group)
    cases, bad = 0, 0
    for name in ("GL2", "ExampleCard(2)"):
        rd = builtin(name)
        for chi in torus_chars(group, rd.rank):
            cases += 1
            fixed = sum(1 for i in range(rd.semisimple_rank) if reflect(rd, i, chi) == chi)
            pulled = sum(1 for i in range(rd.semisimple_rank) if pullback_cochar(chi, rd.simple_coroots[i]) == one)
            rep = autoext_modp(rd, chi)
            if not (rep.kind == "exact" and rep.dim == 3 * rd.rank + fixed == 3 * rd.rank + pulled):
                bad += 1
    verdict(5, "p = 2 self-extension formula, two counts agree", bad == 0, f"{cases} characters, {bad} failures")


def test_criterion_6_rank_one(verdict):
    bad, total = 0, 0
    for rd in catalog(4):
        for i in range(rd.semisimple_rank):
            total += 1
            bad += classify_rank_one(rd, i) != oracles.rank_one_by_search(rd, i)
    gl_type = [builtin(f"GL{n}") for n in range(2, 5)] + [builtin(f"ExampleCard({n})") for n in range(1, 4)]
    all_gl2 = all(classify_rank_one(rd, i) is RankOneClass.GL2 for rd in gl_type for i in range(rd.semisimple_rank))
    verdict(6, "rank-one classification vs lattice search", bad == 0 and all_gl2, f"{total} roots, {bad} mismatches")


def test_criterion_7_component_groups(verdict):
    sl_ok = all(center_component_group(builtin(f"SL{n}"), range(n - 1)) == (n,) for n in range(2, 7))
    rng = random.Random(7)
    bad = 0
    for _ in range(50):
        factors = tuple(rng.choice([2, 3, 4, 5, 6, 8, 9, 12, 16, 25, 27]) for _ in range(rng.randint(1, 4)))
        p = rng.choice([2, 3, 5])
        bad += mu_p_hom_dimension(factors, p) != oracles.mu_p_hom_count(factors, p)
    verdict(7, "SL_n component groups and Hom(-, mu_p)", sl_ok and bad == 0, f"{bad} mismatches in 50 groups")


def test_criterion_8_ext_ordinary_table(verdict):
    rd = builtin("GL3")
    group = CharacterGroup.continuous(FieldData(5), value_order=4)
    eps_inv = cyclotomic(group).inverse()
    letters = [unramified(group, 1), PadicCharacter(group, 0, {"a": 1}, 2), eps_inv]
    levi = (0,)
    cases, bad = 0, 0
    sp_values, st_counts = set(), set()
    for chi in l_characters(rd, levi, group, letters):
        st = OrdinaryRepDescriptor(rd, ParabolicData(levi), chi)
        sp = OrdinaryRepDescriptor(rd, ParabolicData(levi, levi), chi)
        listed_st = {reflect(rd, 1, chi) * compose_root(eps_inv, rd.simple_roots[1])}
        listed_sp = chi * compose_root(eps_inv, rd.simple_roots[0])
        pool = {chi, listed_sp, *listed_st, reflect(rd, 0, chi) * compose_root(eps_inv, rd.simple_roots[0])}
        pool |= {chi * compose_root(eps_inv ** k, b) for k in (1, 2) for b in rd.root_system.positive}
        for chi_prime in pool:
            cases += 1
            r_st, r_sp = ext_ordinary(rd, chi_prime, st), ext_ordinary(rd, chi_prime, sp)
            nonzero_st = r_st.kind != "exact" or r_st.dim != 0
            nonzero_sp = r_sp.dim != 0
            bad += nonzero_st != (chi_prime == chi or chi_prime in listed_st)
            bad += nonzero_sp != (chi_prime == listed_sp)
            if chi_prime == listed_sp:
                sp_values.add(r_sp.dim)
            if chi_prime != chi:
                count = sum(1 for t in listed_st if t == chi_prime)
                bad += r_st.dim != count
                st_counts.add(r_st.dim)
    ok = bad == 0 and sp_values == {1} and 1 in st_counts
    verdict(8, "ordinary Ext^1 case table on GL3, Delta_L = {a1}", ok, f"{cases} cases, {bad} failures")


def test_criterion_9_other_fields(verdict):
    group = CharacterGroup.continuous(FieldData(3, 2, 9))
    letters = [unramified(group, 0, {"a": 1}), PadicCharacter(group, tame=2)]
    bad, cases = 0, 0
    for name in ("GL2", "GL3", "Sp4"):
        rd = builtin(name)
        for levi in subsets(range(rd.semisimple_rank)):
            for chi in l_characters(rd, levi, group, letters):
                pool = [chi, reflect(rd, 0, chi), chi * compose_root(cyclotomic(group).inverse(), rd.simple_roots[0])]
                for inner in subsets(levi):
                    rep = OrdinaryRepDescriptor(rd, ParabolicData(levi, inner), chi)
                    bad += len(hord(rep, 1)) != 0
                    for chi_prime in pool:
                        cases += 1
                        r = ext_ordinary(rd, chi_prime, rep)
                        expect_symbolic = not inner and chi_prime == chi
                        if expect_symbolic:
                            bad += not (r.kind == "symbolic" and str(r) == "symbolic [dimExt1_T]")
                        else:
                            bad += str(r) != "exact 0"
    verdict(9, "[F:Qp] = 2 collapse", bad == 0, f"{cases} Ext cases, {bad} failures")


def test_criterion_10_cli_determinism(verdict):
    configs = sorted((ROOT / "configs").glob("*.toml"))
    bad = 0
    for config in configs:
        for fmt, suffix in (("human", "yaml"), ("machine", "json")):
            golden = (ROOT / "tests" / "golden" / f"{config.stem}.{suffix}").read_text(encoding="utf-8")
            outputs = []
            for jobs in (1, 1, 4):
                buf = io.StringIO()
                with contextlib.redirect_stdout(buf):
                    code = main(["--config", str(config), "--format", fmt, "--jobs", str(jobs)])
                outputs.append((code, buf.getvalue()))
            bad += any(o != (0, golden) for o in outputs)
    verdict(10, "CLI golden reports are byte-stable", len(configs) == 12 and bad == 0,
            f"{len(configs)} configs x 2 formats, {bad} differences")
