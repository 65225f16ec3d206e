"""Ext^1 between the two principal series of ExampleCard(n), for a range of n and p.

One row per (n, p): center component group, |Delta'|, and the reported
dimension (expected to equal n).
"""

from __future__ import annotations

import argparse

from ordext import (
    CharacterGroup,
    FieldData,
    center_component_group,
    cyclotomic,
    dim_ext1_principal_series,
    example_card,
    reflect,
)
from ordext.characters import restrict_ambient, twist_by_root_char, unramified


def card_characters(n: int, p: int):
    """chi on the ambient torus of GL2^n: odd slots carry the unramified sign."""
    rd = example_card(n)
    group = CharacterGroup.continuous(FieldData(p), value_order=2)
    eps = cyclotomic(group)
    sign = unramified(group, 1)
    ambient = [eps ** -(2 * n - 1 - j) * sign ** ((j + 1) % 2) for j in range(2 * n)]
    chi = restrict_ambient(rd, ambient)
    chi_prime = twist_by_root_char(reflect(rd, 0, chi), eps.inverse(), rd.simple_roots[0])
    return rd, chi, chi_prime


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    args = ap.parse_args()
    print(f"{'n':>3} {'p':>3}  {'pi0(Z)':<14} {'|D1|':>5}  result")
    for n in range(1, args.max_n + 1):
        for p in args.primes:
            rd, chi, chi_prime = card_characters(n, p)
            rep = dim_ext1_principal_series(rd, chi_prime, chi)
            comp = str(list(center_component_group(rd)))
            print(f"{n:>3} {p:>3}  {comp:<14} {len(rep.delta_prime):>5}  {rep}")


if __name__ == "__main__":
    main()
