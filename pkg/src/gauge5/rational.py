"""Rational decompositions of gauge groups driven by Hilbert series.

The base space enters only through its rational Betti numbers b_i, and the
group only through its rational generator degrees, so everything is exact
integer bookkeeping:

  rational_gauge      Map(X, BG)-model: product of b_i copies of Omega^i G
  rational_B_star     moduli of connections: b_i copies of Omega^(i-1) G
  em_expansion        the same space written in sphere / K(Q, n) atoms
  rational_rank_formula   rank of pi_q from the b_i and the degrees
  rational_cohomology_ring  free (graded-commutative) generator ledger

Convention used throughout: factors whose resulting degree is <= 1 are
dropped (the loop space of S^3 twice is rationally K(Q, 1), a point in the
simply connected modeling used here). The b_star cohomology formula is the
one place the degree-1 case survives, since there the ring genuinely has a
degree-1 class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError
from .lie import LieGroupSpec, rational_degrees
from .localization import Localization
from .manifold import ManifoldSpec
from .spaces import (
    SpaceAtom,
    SpaceExpr,
    em_factor,
    group_itself,
    loops_g,
    sphere_factor,
)


@dataclass(frozen=True)
class HilbertSeries:
    """Finite-support rational Betti numbers b_0, b_1, ..., with b_0 = 1.

    >>> HilbertSeries((1, 0, 0, 0, 1))
    HilbertSeries('1 + t^4')
    >>> HilbertSeries.sphere(4) == HilbertSeries((1, 0, 0, 0, 1))
    True
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("b_0 must be 1 (connected space)")
        if any(b < 0 for b in coeffs):
            raise ValueError("Betti numbers must be nonnegative")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @staticmethod
    def point() -> "HilbertSeries":
        return HilbertSeries((1,))

    @staticmethod
    def sphere(n: int) -> "HilbertSeries":
        if n < 2:
            raise ValueError(f"sphere dimension must be >= 2, got {n}")
        return HilbertSeries((1,) + (0,) * (n - 1) + (1,))

    @staticmethod
    def for_manifold(M: ManifoldSpec) -> "HilbertSeries":
        """Rational Betti numbers of the 5-manifold: (1, 0, m-1, m-1, 0, 1)."""
        return HilbertSeries((1, 0, M.m - 1, M.m - 1, 0, 1))

    @staticmethod
    def parse(text: str) -> "HilbertSeries":
        """Comma-separated coefficients, b_0 first: '1,0,2,2,0,1'."""
        return HilbertSeries(tuple(int(b.strip()) for b in text.split(",")))

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def require_simply_connected(self) -> None:
        if self.coefficient(1) != 0:
            raise HypothesisError("not rationally simply connected: b_1 != 0")

    def __str__(self) -> str:
        terms = []
        for i, b in enumerate(self.coefficients):
            if not b:
                continue
            if i == 0:
                terms.append(str(b))
            else:
                head = "" if b == 1 else str(b)
                terms.append(f"{head}t^{i}" if i > 1 else f"{head}t")
        return " + ".join(terms) or "0"

    def __repr__(self) -> str:
        return f"HilbertSeries({str(self)!r})"


@dataclass(frozen=True)
class RationalGroupModel:
    """Generator degrees of H*(G; Q): exterior odd >= 3, polynomial even >= 2.

    >>> RationalGroupModel.from_lie(LieGroupSpec("SU", 3)).exterior_degrees
    (3, 5)
    >>> print(RationalGroupModel.parse("3,5/4"))
    Λ(3,5) ⊗ Q[4]
    """

    exterior_degrees: tuple[int, ...]
    polynomial_degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ext = tuple(sorted(self.exterior_degrees))
        poly = tuple(sorted(self.polynomial_degrees))
        if any(d % 2 == 0 or d < 3 for d in ext):
            raise ValueError(f"exterior degrees must be odd >= 3, got {ext}")
        if any(d % 2 or d < 2 for d in poly):
            raise ValueError(f"polynomial degrees must be even >= 2, got {poly}")
        object.__setattr__(self, "exterior_degrees", ext)
        object.__setattr__(self, "polynomial_degrees", poly)

    @staticmethod
    def from_lie(G: LieGroupSpec) -> "RationalGroupModel":
        return RationalGroupModel(rational_degrees(G))

    @staticmethod
    def parse(text: str) -> "RationalGroupModel":
        """'ext degrees / poly degrees', comma lists, either side empty:
        '3,5/4', '3,7/', '/2'."""
        ext_s, sep, poly_s = text.partition("/")
        if not sep:
            poly_s = ""
        ext = tuple(int(d.strip()) for d in ext_s.split(",") if d.strip())
        poly = tuple(int(d.strip()) for d in poly_s.split(",") if d.strip())
        return RationalGroupModel(ext, poly)

    def all_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.exterior_degrees + self.polynomial_degrees))

    def rank_pi(self, d: int) -> int:
        """rank of pi_d(G) tensor Q."""
        return self.exterior_degrees.count(d) + self.polynomial_degrees.count(d)

    def is_finite_dimensional(self) -> bool:
        return not self.polynomial_degrees

    def generator_count(self) -> int:
        return len(self.exterior_degrees) + len(self.polynomial_degrees)

    def __str__(self) -> str:
        parts = []
        if self.exterior_degrees:
            parts.append("Λ(" + ",".join(map(str, self.exterior_degrees)) + ")")
        if self.polynomial_degrees:
            parts.append("Q[" + ",".join(map(str, self.polynomial_degrees)) + "]")
        return " ⊗ ".join(parts) or "Q"


@dataclass(frozen=True)
class GeneratorLedger:
    """Multiset of (degree, kind) free generators of a graded-commutative
    algebra, kind exterior or polynomial."""

    generators: tuple[tuple[int, str], ...]

    def __post_init__(self) -> None:
        for degree, kind in self.generators:
            if kind not in ("exterior", "polynomial"):
                raise ValueError(f"unknown generator kind {kind!r}")
            if degree < 1:
                raise ValueError(f"generator degree must be >= 1, got {degree}")
            if kind == "exterior" and degree % 2 == 0:
                raise ValueError(f"exterior generators have odd degree, got {degree}")
            if kind == "polynomial" and degree % 2:
                raise ValueError(f"polynomial generators have even degree, got {degree}")
        object.__setattr__(self, "generators", tuple(sorted(self.generators)))

    def count_in_degree(self, d: int) -> int:
        return sum(1 for degree, _ in self.generators if degree == d)

    def __str__(self) -> str:
        ext = [str(d) for d, kind in self.generators if kind == "exterior"]
        poly = [str(d) for d, kind in self.generators if kind == "polynomial"]
        parts = []
        if ext:
            parts.append("Λ(" + ",".join(ext) + ")")
        if poly:
            parts.append("Q[" + ",".join(poly) + "]")
        return " ⊗ ".join(parts) or "Q"

    def machine(self) -> str:
        return "\n".join(f"generator degree={d} kind={kind}" for d, kind in self.generators)


# -- the decomposition formulas ------------------------------------------------


def rational_gauge(X: HilbertSeries, G: RationalGroupModel, based: bool = False) -> SpaceExpr:
    """Rational model of the gauge group of any principal bundle over X:
    b_i copies of Omega^i G, with Omega^0 G = G itself.

    >>> print(rational_gauge(HilbertSeries.sphere(4), RationalGroupModel.parse("3,5,7/")))
    G × Ω⁴G
    >>> print(rational_gauge(HilbertSeries.point(), RationalGroupModel.parse("3/")))
    G
    """
    X.require_simply_connected()
    pairs: list[tuple[SpaceAtom, int]] = []
    start = 1 if based else 0
    for i in range(start, X.degree() + 1):
        b = X.coefficient(i)
        if not b:
            continue
        pairs.append((group_itself() if i == 0 else loops_g(i), b))
    return SpaceExpr(tuple(pairs), localization=Localization.rational(), group=G)


def rational_B_star(X: HilbertSeries, G: RationalGroupModel) -> SpaceExpr:
    """Rational model of the moduli space of based connections:
    b_i copies of Omega^(i-1) G for i >= 1.

    >>> print(rational_B_star(HilbertSeries.sphere(4), RationalGroupModel.parse("3/")))
    Ω³G
    >>> print(rational_B_star(HilbertSeries.parse("1,0,1,1"), RationalGroupModel.parse("3,5/")))
    ΩG × Ω²G
    """
    X.require_simply_connected()
    if not G.is_finite_dimensional():
        raise HypothesisError(
            "rational homology must be finite dimensional:"
            f" polynomial generators {list(G.polynomial_degrees)} present"
        )
    pairs: list[tuple[SpaceAtom, int]] = []
    for i in range(2, X.degree() + 1):  # i = 1 is ruled out by b_1 = 0
        b = X.coefficient(i)
        if b:
            pairs.append((loops_g(i - 1), b))
    return SpaceExpr(tuple(pairs), localization=Localization.rational(), group=G)


def atomize(degree: int) -> SpaceAtom | None:
    """Sphere/EM atom of the given degree; None when degree <= 1 (dropped)."""
    if degree <= 1:
        return None
    return sphere_factor(degree) if degree % 2 else em_factor(degree)


def em_expansion(X: HilbertSeries, G: RationalGroupModel, based: bool = False) -> SpaceExpr:
    """The gauge group written in irreducible rational atoms: each factor
    Omega^i (sphere or K(Q, n)) collapses to a single atom of degree d - i.

    >>> print(em_expansion(HilbertSeries.sphere(2), RationalGroupModel.parse("3/")))
    S³
    >>> print(em_expansion(HilbertSeries.sphere(2), RationalGroupModel.parse("3/"), based=True))
    *
    >>> print(em_expansion(HilbertSeries.sphere(4), RationalGroupModel.parse("3/")))
    S³
    """
    X.require_simply_connected()
    pairs: list[tuple[SpaceAtom, int]] = []
    start = 1 if based else 0
    for i in range(start, X.degree() + 1):
        b = X.coefficient(i)
        if not b:
            continue
        for d in G.all_degrees():
            atom = atomize(d - i)
            if atom is not None:
                pairs.append((atom, b))
    return SpaceExpr(tuple(pairs), localization=Localization.rational(), group=G)


def rational_rank_formula(
    X: HilbertSeries, G: RationalGroupModel, q: int, based: bool = False
) -> int:
    """rank pi_q of the gauge group: sum of b_r * rank pi_(r+q)(G).

    >>> rational_rank_formula(HilbertSeries.sphere(4), RationalGroupModel.parse("3,5,7/"), 3)
    2
    """
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    start = 1 if based else 0
    return sum(
        X.coefficient(r) * G.rank_pi(r + q)
        for r in range(start, X.degree() + 1)
    )


def rational_cohomology_ring(target: str, X: HilbertSeries, G: RationalGroupModel) -> GeneratorLedger:
    """Free generator ledger of H*(target; Q), target 'gauge' or 'b_star'.

    gauge reads the generators straight off em_expansion (one generator per
    atom). b_star applies the connection-moduli formula: for each exterior
    degree a of G, b_(2k+1) exterior generators of degree a - 2k and b_(2k)
    polynomial generators of degree a - 2k + 1, k >= 0, dropping
    non-positive degrees.

    >>> print(rational_cohomology_ring("b_star", HilbertSeries.sphere(4), RationalGroupModel.parse("3/")))
    Q[4]
    >>> print(rational_cohomology_ring("gauge", HilbertSeries.point(), RationalGroupModel.parse("3,5/4")))
    Λ(3,5) ⊗ Q[4]
    """
    if target == "gauge":
        gens: list[tuple[int, str]] = []
        for atom, mult in em_expansion(X, G).atoms:
            kind = "exterior" if atom.kind == "sphere" else "polynomial"
            gens.extend([(atom.n, kind)] * mult)
        return GeneratorLedger(tuple(gens))
    if target != "b_star":
        raise ValueError(f"target must be gauge or b_star, got {target!r}")
    X.require_simply_connected()
    if not G.is_finite_dimensional():
        raise HypothesisError(
            "rational homology must be finite dimensional:"
            f" polynomial generators {list(G.polynomial_degrees)} present"
        )
    gens = []
    for a in G.exterior_degrees:
        for k in range(0, a // 2 + 1):
            odd_b = X.coefficient(2 * k + 1)
            if odd_b and a - 2 * k >= 1:
                gens.extend([(a - 2 * k, "exterior")] * odd_b)
            even_b = X.coefficient(2 * k)
            if even_b and a - 2 * k + 1 >= 2:
                gens.extend([(a - 2 * k + 1, "polynomial")] * even_b)
    return GeneratorLedger(tuple(gens))
