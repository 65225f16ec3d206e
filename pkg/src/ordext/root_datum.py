"""Based root data of split reductive groups, in fixed dual bases of Z^r.

Characters X and cocharacters X^v are both Z^r and the pairing is the dot
product. Simple roots live in X, simple coroots in X^v.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import IndexOutOfRange, NonFiniteType, UnknownName, ValidationError
from .lattice import Vector, dot, in_lattice, integer_kernel, matrix_rank, quotient_torsion

DEFAULT_ROOT_BOUND = 10_000


class RankOneClass(enum.Enum):
    SL2 = "SL2"
    GL2 = "GL2"
    PGL2 = "PGL2"


@dataclass(frozen=True)
class RootSystem:
    """Positive roots in X, with their coefficients on the simple roots."""

    positive: tuple[Vector, ...]
    coefficients: tuple[Vector, ...]

    @cached_property
    def positive_set(self) -> frozenset[Vector]:
        return frozenset(self.positive)

    @cached_property
    def negative_set(self) -> frozenset[Vector]:
        return frozenset(tuple(-x for x in r) for r in self.positive)

    @property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive + tuple(tuple(-x for x in r) for r in self.positive)

    def __len__(self) -> int:
        return 2 * len(self.positive)


@dataclass(frozen=True)
class RootDatum:
    rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    name: str | None = field(default=None, compare=False)
    # images of the basis cocharacters in an ambient Z^N (ExampleCard only)
    ambient_basis: tuple[Vector, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        roots = tuple(tuple(int(x) for x in a) for a in self.simple_roots)
        coroots = tuple(tuple(int(x) for x in a) for a in self.simple_coroots)
        object.__setattr__(self, "simple_roots", roots)
        object.__setattr__(self, "simple_coroots", coroots)
        if self.rank < 1:
            raise ValidationError(f"rank must be positive, got {self.rank}")
        if len(roots) != len(coroots):
            raise ValidationError("simple roots and coroots must have the same length")
        for v in roots + coroots:
            if len(v) != self.rank:
                raise ValidationError(f"vector {v} does not have length {self.rank}")
        for i, (a, c) in enumerate(zip(roots, coroots)):
            if dot(a, c) != 2:
                raise ValidationError(f"<alpha_{i}, alpha_{i}^v> = {dot(a, c)}, expected 2")
        if roots and matrix_rank(roots) != len(roots):
            raise ValidationError("simple roots are linearly dependent")
        if coroots and matrix_rank(coroots) != len(coroots):
            raise ValidationError("simple coroots are linearly dependent")

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def pairing(self, x, y) -> int:
        return dot(x, y)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """C[i][j] = <alpha_j, alpha_i^v>."""
        return tuple(
            tuple(dot(a, c) for a in self.simple_roots) for c in self.simple_coroots
        )

    def check_index(self, i: int) -> int:
        if not 0 <= i < self.semisimple_rank:
            raise IndexOutOfRange(f"simple root index {i} out of range 0..{self.semisimple_rank - 1}")
        return i

    def check_subset(self, S) -> tuple[int, ...]:
        return tuple(sorted({self.check_index(int(i)) for i in S}))

    def reflection_x(self, i: int) -> tuple[tuple[int, ...], ...]:
        """Matrix of s_i on X: x -> x - <x, a^v> a."""
        a, c = self.simple_roots[i], self.simple_coroots[i]
        r = self.rank
        return tuple(tuple(int(p == q) - a[p] * c[q] for q in range(r)) for p in range(r))

    def reflection_y(self, i: int) -> tuple[tuple[int, ...], ...]:
        """Matrix of s_i on X^v: y -> y - <a, y> a^v."""
        a, c = self.simple_roots[i], self.simple_coroots[i]
        r = self.rank
        return tuple(tuple(int(p == q) - c[p] * a[q] for q in range(r)) for p in range(r))

    @cached_property
    def root_system(self) -> RootSystem:
        return generate_roots(self)

    def root_coefficients(self, x: Vector) -> Vector | None:
        """Coefficients of a root on the simple roots, None if x is not a root."""
        rs = self.root_system
        x = tuple(x)
        if x in rs.positive_set:
            return rs.coefficients[rs.positive.index(x)]
        neg = tuple(-v for v in x)
        if neg in rs.positive_set:
            return tuple(-c for c in rs.coefficients[rs.positive.index(neg)])
        return None

    def __str__(self) -> str:
        return self.name or f"RootDatum(rank={self.rank}, simple_roots={list(self.simple_roots)})"


@dataclass(frozen=True)
class ParabolicData:
    """Standard parabolic P (via its Levi's simple roots) and Q inside L.

    ``inner`` names the special representation Sp_Q: empty for the Steinberg
    representation, a single root alpha for Sp_alpha.
    """

    levi: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "levi", tuple(sorted(set(int(i) for i in self.levi))))
        object.__setattr__(self, "inner", tuple(sorted(set(int(i) for i in self.inner))))
        if not set(self.inner) <= set(self.levi):
            raise ValidationError(
                f"inner roots {_names(self.inner)} are not contained in levi roots {_names(self.levi)}"
            )

    def check(self, rd: RootDatum) -> "ParabolicData":
        rd.check_subset(self.levi)
        return self


def _names(indices) -> str:
    return "{" + ", ".join(f"a{i + 1}" for i in indices) + "}"


def generate_roots(rd: RootDatum, bound: int = DEFAULT_ROOT_BOUND) -> RootSystem:
    """Reflection closure of the simple roots.

    Works on coefficient vectors over the simple roots, so positivity is read
    off directly. Raises NonFiniteType once more than ``bound`` roots appear.
    """
    C = rd.cartan_matrix()
    n = rd.semisimple_rank
    start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                k = sum(C[i][j] * c[j] for j in range(n))
                if k == 0:
                    continue
                d = tuple(c[j] - k * (i == j) for j in range(n))
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
                    if len(seen) > bound:
                        raise NonFiniteType(
                            f"reflection closure exceeded {bound} roots; Cartan matrix is not of finite type"
                        )
        frontier = nxt
    positive = sorted((c for c in seen if all(x >= 0 for x in c)), key=lambda c: (sum(c), c))
    if len(positive) * 2 != len(seen):
        raise NonFiniteType("root closure is not symmetric under negation")
    vectors = tuple(
        tuple(sum(c[j] * rd.simple_roots[j][k] for j in range(n)) for k in range(rd.rank))
        for c in positive
    )
    return RootSystem(positive=vectors, coefficients=tuple(positive))


def center_component_group(rd: RootDatum, S=None) -> tuple[int, ...]:
    """Invariant factors of pi_0 of the intersection of ker(alpha), alpha in S.

    This is the torsion of X / <S>. ``S`` defaults to all simple roots, which
    gives the component group of the center.
    """
    S = range(rd.semisimple_rank) if S is None else rd.check_subset(S)
    return quotient_torsion([rd.simple_roots[i] for i in S], rd.rank)


def is_center_connected(rd: RootDatum) -> bool:
    return not center_component_group(rd)


def mu_p_hom_dimension(factors, p: int) -> int:
    """dim over F_p of Hom(prod Z/d_i, mu_p)."""
    return sum(1 for d in factors if d % p == 0)


def classify_rank_one(rd: RootDatum, i: int) -> RankOneClass:
    """Type of the derived rank-one factor of the centralizer of (ker alpha_i)^0."""
    rd.check_index(i)
    a, c = rd.simple_roots[i], rd.simple_coroots[i]
    if all(x % 2 == 0 for x in c):
        return RankOneClass.PGL2
    # cocharacters of (ker alpha)^0
    y_prime = integer_kernel([a])
    doubled = [tuple(2 * int(k == j) for j in range(rd.rank)) for k in range(rd.rank)]
    if in_lattice(c, y_prime + doubled):
        return RankOneClass.GL2
    return RankOneClass.SL2


# --- builtin catalog -------------------------------------------------------


def _unit(n: int, i: int) -> Vector:
    return tuple(int(i == j) for j in range(n))


def _gl(n: int) -> RootDatum:
    roots = [tuple(_unit(n, i)[k] - _unit(n, i + 1)[k] for k in range(n)) for i in range(n - 1)]
    return RootDatum(n, roots, roots, name=f"GL{n}")


def _cartan_a(m: int) -> list[list[int]]:
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(m)] for i in range(m)]


def _sl(n: int) -> RootDatum:
    # X^v has basis the simple coroots; X has the fundamental weights
    m = n - 1
    C = _cartan_a(m)
    roots = [tuple(C[i][j] for i in range(m)) for j in range(m)]
    coroots = [_unit(m, j) for j in range(m)]
    return RootDatum(m, roots, coroots, name=f"SL{n}")


def _pgl(n: int) -> RootDatum:
    m = n - 1
    C = _cartan_a(m)
    roots = [_unit(m, j) for j in range(m)]
    coroots = [tuple(C[j][i] for i in range(m)) for j in range(m)]
    return RootDatum(m, roots, coroots, name=f"PGL{n}")


def _sp(two_n: int) -> RootDatum:
    if two_n % 2 or two_n < 2:
        raise UnknownName(f"Sp{two_n}: the index must be even and positive")
    n = two_n // 2
    roots = [tuple(_unit(n, i)[k] - _unit(n, i + 1)[k] for k in range(n)) for i in range(n - 1)]
    coroots = list(roots)
    roots.append(tuple(2 * x for x in _unit(n, n - 1)))
    coroots.append(_unit(n, n - 1))
    return RootDatum(n, roots, coroots, name=f"Sp{two_n}")


def example_card(n: int) -> RootDatum:
    """Diagonal-block subgroup of GL_2^n cut out by det(g_k) det(g_{k+1}) = 1.

    Basis of the cocharacter lattice (inside the diagonal cocharacters Z^{2n}):
    u_i = e_{2i-1} - e_{2i} for i = 1..n, and v = e_1 - e_3 + e_5 - ..., whose
    consecutive pair sums alternate. The u_i are the simple coroots.
    """
    if n < 1:
        raise UnknownName("ExampleCard(n) needs n >= 1")
    N = 2 * n
    basis = [tuple(_unit(N, 2 * i)[k] - _unit(N, 2 * i + 1)[k] for k in range(N)) for i in range(n)]
    basis.append(tuple((-1) ** (k // 2) if k % 2 == 0 else 0 for k in range(N)))
    r = n + 1
    roots, coroots = [], []
    for i in range(n):
        ambient_root = tuple(_unit(N, 2 * i)[k] - _unit(N, 2 * i + 1)[k] for k in range(N))
        roots.append(tuple(dot(ambient_root, b) for b in basis))
        coroots.append(_unit(r, i))
    return RootDatum(r, roots, coroots, name=f"ExampleCard({n})", ambient_basis=tuple(basis))


def product(*data: RootDatum) -> RootDatum:
    """Direct product of root data (block sum of lattices)."""
    if len(data) == 1:
        return data[0]
    rank = sum(d.rank for d in data)
    roots, coroots, offset = [], [], 0
    for d in data:
        pad = lambda v: (0,) * offset + tuple(v) + (0,) * (rank - offset - d.rank)
        roots += [pad(a) for a in d.simple_roots]
        coroots += [pad(c) for c in d.simple_coroots]
        offset += d.rank
    ambient = None
    if any(d.ambient_basis is not None for d in data):
        blocks = [d.ambient_basis or tuple(_unit(d.rank, k) for k in range(d.rank)) for d in data]
        total = sum(len(b[0]) for b in blocks)
        ambient, off = [], 0
        for b in blocks:
            width = len(b[0])
            ambient += [(0,) * off + tuple(v) + (0,) * (total - off - width) for v in b]
            off += width
        ambient = tuple(ambient)
    name = "x".join(d.name or "?" for d in data)
    return RootDatum(rank, roots, coroots, name=name, ambient_basis=ambient)


_FACTOR = re.compile(
    r"^(?:(?P<kind>GL|SL|PGL|Sp|T)_?\(?(?P<n>\d+)\)?|ExampleCard_?\(?(?P<card>\d+)\)?)$"
)


def builtin(name: str) -> RootDatum:
    """Builtin datum by name, e.g. ``GL3``, ``SL_2``, ``Sp4``, ``ExampleCard(3)``, ``GL2xSL2``."""
    parts = [p.strip() for p in re.split(r"\s*[x*×]\s*(?=[A-Z])", name.strip()) if p.strip()]
    if not parts:
        raise UnknownName(f"unknown group name {name!r}")
    factors = []
    for part in parts:
        m = _FACTOR.match(part)
        if not m:
            raise UnknownName(f"unknown group name {part!r}")
        if m.group("card"):
            factors.append(example_card(int(m.group("card"))))
            continue
        kind, n = m.group("kind"), int(m.group("n"))
        if n < 1:
            raise UnknownName(f"unknown group name {part!r}")
        if kind == "GL":
            factors.append(_gl(n))
        elif kind == "T":
            factors.append(RootDatum(n, (), (), name=f"T{n}"))
        elif kind == "Sp":
            factors.append(_sp(n))
        elif n < 2:
            raise UnknownName(f"{kind}{n} is trivial; use n >= 2")
        elif kind == "SL":
            factors.append(_sl(n))
        else:
            factors.append(_pgl(n))
    return product(*factors)


def catalog(max_rank: int = 4) -> list[RootDatum]:
    """The builtin data used by the exhaustive checks, up to the given rank."""
    names = (
        [f"GL{n}" for n in range(1, 5)]
        + [f"SL{n}" for n in range(2, 6)]
        + [f"PGL{n}" for n in range(2, 6)]
        + ["Sp4", "Sp6", "GL2xSL2", "SL2xPGL2", "SL2xSL2"]
        + [f"ExampleCard({n})" for n in range(1, 5)]
    )
    return [rd for rd in map(builtin, names) if rd.rank <= max_rank]


def subsets(indices) -> list[tuple[int, ...]]:
    """All subsets of ``indices`` as sorted tuples, smallest first."""
    indices = tuple(indices)
    return [c for k in range(len(indices) + 1) for c in itertools.combinations(indices, k)]
