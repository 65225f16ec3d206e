"""Sizes of the W_sigma blocks for every catalog datum and every Levi.

Each row lists |W_sigma| over the inner parabolics Q <= L; the sum column must
equal |W|.
"""

from __future__ import annotations

import argparse

from ordext import ParabolicData, w_sigma, weyl_group
from ordext.root_datum import catalog, subsets


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-rank", type=int, default=4)
    args = ap.parse_args()
    for rd in catalog(args.max_rank):
        W = weyl_group(rd)
        for levi in subsets(range(rd.semisimple_rank)):
            sizes = [len(w_sigma(rd, ParabolicData(levi, inner))) for inner in subsets(levi)]
            flag = "ok" if sum(sizes) == len(W) else "MISMATCH"
            levi_label = "{" + ",".join(f"a{i + 1}" for i in levi) + "}"
            print(f"{rd.name:<16} L={levi_label:<14} |W|={len(W):<5} blocks={sizes} {flag}")


if __name__ == "__main__":
    main()
