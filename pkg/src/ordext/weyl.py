"""Finite Weyl groups and the coset combinatorics of standard parabolics.

Elements are identified by their action matrix on X^v; the canonical word
(lexicographically least reduced word) is carried as metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import GroupTooLarge, ValidationError
from .lattice import Matrix, Vector, identity, matmul, matvec, transpose
from .root_datum import ParabolicData, RootDatum, subsets

DEFAULT_MAX_WEYL = 10**6


@dataclass(frozen=True)
class WeylElement:
    action: Matrix
    word: tuple[int, ...] = field(compare=False)
    # action on X, same word
    x_action: Matrix = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act_x(self, x: Sequence[int]) -> Vector:
        return matvec(self.x_action, x)

    def act_y(self, y: Sequence[int]) -> Vector:
        return matvec(self.action, y)

    def inverse_act_x(self, x: Sequence[int]) -> Vector:
        # w^{-1} on X is the transpose of w on X^v
        return matvec(transpose(self.action), x)

    def label(self) -> str:
        return " ".join(f"s{i + 1}" for i in self.word) if self.word else "1"

    def sort_key(self):
        return (len(self.word), self.word)


@dataclass(frozen=True)
class SpecialRepLabel:
    """Names Sp_Q inside L; St when Q = B_L, Sp_alpha when Q = Q_alpha."""

    parabolic: ParabolicData

    @property
    def is_steinberg(self) -> bool:
        return not self.parabolic.inner

    @property
    def simple_root(self) -> int | None:
        """alpha for Sp_alpha, else None."""
        inner = self.parabolic.inner
        return inner[0] if len(inner) == 1 else None

    def __str__(self) -> str:
        if self.is_steinberg:
            return "St"
        if self.simple_root is not None:
            return f"Sp_a{self.simple_root + 1}"
        return "Sp_Q{" + ",".join(f"a{i + 1}" for i in self.parabolic.inner) + "}"


class WeylGroup:
    """All elements of W, breadth-first by length, words in lexicographic order."""

    def __init__(self, rd: RootDatum, max_size: int = DEFAULT_MAX_WEYL):
        self.rd = rd
        n = rd.semisimple_rank
        sy = [rd.reflection_y(i) for i in range(n)]
        sx = [rd.reflection_x(i) for i in range(n)]
        e = WeylElement(identity(rd.rank), (), identity(rd.rank))
        elements = [e]
        index = {e.action: 0}
        level = [e]
        while level:
            nxt = []
            for v in level:
                for i in range(n):
                    a = matmul(v.action, sy[i])
                    if a in index:
                        continue
                    u = WeylElement(a, v.word + (i,), matmul(v.x_action, sx[i]))
                    index[a] = len(elements)
                    elements.append(u)
                    nxt.append(u)
                    if len(elements) > max_size:
                        raise GroupTooLarge(f"Weyl group of {rd} has more than {max_size} elements")
            level = nxt
        self.elements: list[WeylElement] = elements
        self._index = index
        self.simple = [elements[index[sy[i]]] for i in range(n)]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def lookup(self, action: Matrix) -> WeylElement:
        try:
            return self.elements[self._index[action]]
        except KeyError:
            raise ValidationError("matrix is not the action of a Weyl group element") from None

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.lookup(matmul(a.action, b.action))

    def inverse(self, a: WeylElement) -> WeylElement:
        return self.lookup(transpose(a.x_action))

    def from_word(self, word: Sequence[int]) -> WeylElement:
        w = self.identity
        for i in word:
            w = self.mul(w, self.simple[self.rd.check_index(i)])
        return w

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        """{i : l(s_i w) < l(w)}, i.e. w^{-1}(alpha_i) is negative."""
        neg = self.rd.root_system.negative_set
        return frozenset(
            i for i, a in enumerate(self.rd.simple_roots) if w.inverse_act_x(a) in neg
        )

    def inversion_count(self, w: WeylElement) -> int:
        neg = self.rd.root_system.negative_set
        return sum(1 for b in self.rd.root_system.positive if w.act_x(b) in neg)


@lru_cache(maxsize=64)
def weyl_group(rd: RootDatum, max_size: int = DEFAULT_MAX_WEYL) -> WeylGroup:
    return WeylGroup(rd, max_size)


def enumerate_weyl(rd: RootDatum, max_size: int = DEFAULT_MAX_WEYL) -> list[WeylElement]:
    return list(weyl_group(rd, max_size).elements)


def longest_element(rd: RootDatum, max_size: int = DEFAULT_MAX_WEYL) -> WeylElement:
    return weyl_group(rd, max_size).longest


def w_BQ(rd: RootDatum, pd: ParabolicData, max_size: int = DEFAULT_MAX_WEYL) -> list[WeylElement]:
    """Elements of maximal length in their coset W_{L_Q} w."""
    pd.check(rd)
    W = weyl_group(rd, max_size)
    neg = rd.root_system.negative_set
    betas = [rd.simple_roots[i] for i in pd.inner]
    return [w for w in W if all(w.inverse_act_x(b) in neg for b in betas)]


def w_sigma(rd: RootDatum, pd: ParabolicData, max_size: int = DEFAULT_MAX_WEYL) -> list[WeylElement]:
    """W_BQ minus the union of W_BQ' over the standard Q' with Q < Q' <= L."""
    base = w_BQ(rd, pd, max_size)
    removed = set()
    extra = [i for i in pd.levi if i not in pd.inner]
    for add in subsets(extra):
        if add:
            bigger = ParabolicData(pd.levi, pd.inner + add)
            removed.update(w_BQ(rd, bigger, max_size))
    return [w for w in base if w not in removed]


def alpha_w(rd: RootDatum, w: WeylElement, max_size: int = DEFAULT_MAX_WEYL) -> Vector:
    """Determinant character of T on Lie(N_{w0 w}): sum of the positive beta with w0 w beta > 0."""
    W = weyl_group(rd, max_size)
    u = W.mul(W.longest, w)
    pos = rd.root_system.positive_set
    total = [0] * rd.rank
    for b in rd.root_system.positive:
        if u.act_x(b) in pos:
            total = [t + x for t, x in zip(total, b)]
    return tuple(total)


def n_w_dimension(rd: RootDatum, w: WeylElement) -> int:
    """dim N_w = #{beta > 0 : w beta > 0}."""
    pos = rd.root_system.positive_set
    return sum(1 for b in rd.root_system.positive if w.act_x(b) in pos)
