"""Five-manifold data model, homology, and suspension splittings.

A manifold spec records the invariants the decomposition theory consumes:
the order c of the (cyclic) fundamental group, the rank m - 1 of H_2, a spin
flag, stable parallelizability, and whether the top cell is a single 5-cell.
Alongside it live the Moore-space homotopy groups that feed the gauge-group
computations, and the wedge splittings of the 2-, 3-, and 4-fold suspensions.

Hypotheses on c (odd, or coprime to 6) are enforced exactly where the
underlying statements require them; nothing is extrapolated to even c.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import FGAbelianGroup
from .errors import HypothesisError
from .lie import LieGroupSpec, pi4_is_trivial
from .localization import Localization


@dataclass(frozen=True)
class ManifoldSpec:
    """A closed orientable 5-manifold with pi_1 = Z/c and torsion-free H_2.

    >>> M = ManifoldSpec(c=5, m=3)
    >>> M.spin, M.stably_parallelizable, M.single_top_cell
    (True, False, False)
    """

    c: int
    m: int
    spin: bool = True
    stably_parallelizable: bool = False
    single_top_cell: bool = False

    def __post_init__(self) -> None:
        if self.c < 2:
            raise ValueError(f"c must be >= 2 (finite nontrivial pi_1), got {self.c}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")

    @staticmethod
    def parse(text: str) -> "ManifoldSpec":
        """Parse key-value config text: 'c=5 m=2 spin=true', newline or
        whitespace separated; keys c, m, spin, stably_parallelizable,
        single_top_cell.

        >>> ManifoldSpec.parse("c=9 m=2 spin=false stably_parallelizable=true")
        ManifoldSpec(c=9, m=2, spin=False, stably_parallelizable=True, single_top_cell=False)
        """
        kwargs: dict[str, object] = {}
        for item in text.split():
            if "=" not in item:
                raise ValueError(f"bad config item {item!r}, expected key=value")
            key, _, value = item.partition("=")
            if key in ("c", "m"):
                kwargs[key] = int(value)
            elif key in ("spin", "stably_parallelizable", "single_top_cell"):
                low = value.lower()
                if low not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(f"bad boolean {value!r} for {key}")
                kwargs[key] = low in ("true", "1", "yes")
            else:
                raise ValueError(f"unknown manifold key {key!r}")
        if "c" not in kwargs or "m" not in kwargs:
            raise ValueError("manifold config needs at least c and m")
        return ManifoldSpec(**kwargs)  # type: ignore[arg-type]

    def describe(self) -> str:
        flags = [
            "spin" if self.spin else "non-spin",
        ]
        if self.stably_parallelizable:
            flags.append("stably parallelizable")
        if self.single_top_cell:
            flags.append("single top cell")
        return f"M(c={self.c}, m={self.m}; {', '.join(flags)})"


def homology(M: ManifoldSpec) -> list[FGAbelianGroup]:
    """Integral homology H_0 .. H_5 in canonical form.

    >>> [str(h) for h in homology(ManifoldSpec(c=5, m=3))]
    ['Z', 'Z/5', 'Z^2', 'Z^2 ⊕ Z/5', '0', 'Z']
    """
    Z = FGAbelianGroup.free(1)
    Zc = FGAbelianGroup.cyclic(M.c)
    free_part = FGAbelianGroup.free(M.m - 1)
    return [Z, Zc, free_part, free_part + Zc, FGAbelianGroup.trivial(), Z]


def bundle_classes(
    M: ManifoldSpec, G: LieGroupSpec, ctx: Localization | None = None
) -> FGAbelianGroup:
    """Principal G-bundles over M up to isomorphism: Z/c when pi_4(G) = 0.

    >>> str(bundle_classes(ManifoldSpec(c=7, m=2), LieGroupSpec("SU", 3)))
    'Z/7'
    """
    ctx = ctx or Localization.integral()
    if not pi4_is_trivial(G, ctx):
        raise HypothesisError(
            f"classification lemma inapplicable: pi_4({G}) != 0 {ctx.describe()}"
        )
    return FGAbelianGroup.cyclic(M.c)


# -- Moore space homotopy ----------------------------------------------------


def _require_odd(c: int) -> None:
    if c < 2:
        raise HypothesisError(f"Moore space order must be >= 2, got {c}")
    if c % 2 == 0:
        raise HypothesisError(f"hypothesis 2 ∤ c fails: c = {c}")


def pi_moore_self(n: int, c: int) -> FGAbelianGroup:
    """pi_n of the Moore space P^n(c) for odd c: Z/c at n = 3, zero above.

    >>> str(pi_moore_self(3, 9)), str(pi_moore_self(4, 9))
    ('Z/9', '0')
    """
    _require_odd(c)
    if n < 3:
        raise HypothesisError(f"pi_moore_self needs n >= 3, got {n}")
    return FGAbelianGroup.cyclic(c) if n == 3 else FGAbelianGroup.trivial()


def pi6_P4(c: int) -> FGAbelianGroup:
    """pi_6(P^4(c)) = Z/c + Z/gcd(3, c) for odd c.

    >>> str(pi6_P4(9))
    'Z/9 ⊕ Z/3'
    >>> str(pi6_P4(5))
    'Z/5'
    """
    _require_odd(c)
    return FGAbelianGroup.from_cyclic_orders(c, gcd(3, c))


def pi7_P5(c: int) -> FGAbelianGroup:
    """pi_7(P^5(c)), equal to pi_6(P^4(c)) in the stable range."""
    _require_odd(c)
    return FGAbelianGroup.from_cyclic_orders(c, gcd(3, c))


def suspension_image_order(c: int) -> int:
    """Order of the image of the suspension pi_6(P^4(c)) -> pi_7(P^5(c)).

    >>> suspension_image_order(9), suspension_image_order(5)
    (3, 1)
    """
    _require_odd(c)
    return gcd(3, c)


_COEFFICIENT_TARGETS = ("S3@4", "S4@5", "P3@4", "P4@5")


def pi_with_coefficients(target: str, c: int) -> FGAbelianGroup:
    """Homotopy with Z/c coefficients for the four fixed targets.

    Target syntax 'space@degree': S3@4 means pi_4(S^3; Z/c), P3@4 means
    pi_4(P^3(c); Z/c), and so on.

    >>> str(pi_with_coefficients("P3@4", 9))
    'Z/9'
    >>> str(pi_with_coefficients("S3@4", 9))
    '0'
    """
    _require_odd(c)
    if target not in _COEFFICIENT_TARGETS:
        raise HypothesisError(
            f"unsupported coefficient target {target!r}; known: {_COEFFICIENT_TARGETS}"
        )
    if target == "P3@4":
        return FGAbelianGroup.cyclic(c)
    return FGAbelianGroup.trivial()


# -- wedge expressions and suspension splittings -------------------------------


@dataclass(frozen=True)
class WedgeAtom:
    """One summand of a wedge: a sphere, a Moore space, or an opaque rest.

    kind 'sphere': S^n; kind 'moore': P^n(c) = S^(n-1) with an n-cell glued
    by degree c; kind 'opaque': an unidentified complex carrying only its
    reduced-homology ledger (degree -> group), so homology checks stay
    possible.
    """

    kind: str
    n: int = 0
    c: int = 0
    tag: str = ""
    ledger: tuple[tuple[int, FGAbelianGroup], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("sphere", "moore", "opaque"):
            raise ValueError(f"unknown wedge atom kind {self.kind!r}")
        if self.kind in ("sphere", "moore") and self.n < 2:
            raise ValueError(f"wedge atom dimension must be >= 2, got {self.n}")
        if self.kind == "moore" and self.c < 2:
            raise ValueError(f"Moore atom order must be >= 2, got {self.c}")

    def reduced_homology(self) -> dict[int, FGAbelianGroup]:
        if self.kind == "sphere":
            return {self.n: FGAbelianGroup.free(1)}
        if self.kind == "moore":
            return {self.n - 1: FGAbelianGroup.cyclic(self.c)}
        return {deg: grp for deg, grp in self.ledger}

    def __str__(self) -> str:
        if self.kind == "sphere":
            return f"S^{self.n}"
        if self.kind == "moore":
            return f"P^{self.n}({self.c})"
        return f"[{self.tag}]"


def sphere(n: int) -> WedgeAtom:
    return WedgeAtom("sphere", n=n)


def moore(n: int, c: int) -> WedgeAtom:
    return WedgeAtom("moore", n=n, c=c)


def opaque(tag: str, ledger: dict[int, FGAbelianGroup]) -> WedgeAtom:
    items = tuple(sorted(ledger.items(), key=lambda kv: kv[0]))
    return WedgeAtom("opaque", tag=tag, ledger=items)


_WEDGE_KIND_ORDER = {"sphere": 0, "moore": 1, "opaque": 2}


@dataclass(frozen=True)
class WedgeExpr:
    """A formal wedge of atoms, kept in canonical multiset order.

    >>> w = WedgeExpr.of(sphere(4), moore(6, 5), sphere(4))
    >>> str(w)
    'S^4 ∨ S^4 ∨ P^6(5)'
    """

    atoms: tuple[WedgeAtom, ...]

    def __post_init__(self) -> None:
        canon = tuple(
            sorted(
                self.atoms,
                key=lambda a: (_WEDGE_KIND_ORDER[a.kind], a.n, a.c, a.tag),
            )
        )
        object.__setattr__(self, "atoms", canon)

    @staticmethod
    def of(*atoms: WedgeAtom) -> "WedgeExpr":
        return WedgeExpr(tuple(atoms))

    def reduced_homology(self) -> dict[int, FGAbelianGroup]:
        """Degreewise direct sum over the atoms; trivial degrees omitted."""
        out: dict[int, FGAbelianGroup] = {}
        for atom in self.atoms:
            for deg, grp in atom.reduced_homology().items():
                out[deg] = out.get(deg, FGAbelianGroup.trivial()) + grp
        return {deg: grp for deg, grp in sorted(out.items()) if not grp.is_trivial()}

    def __str__(self) -> str:
        if not self.atoms:
            return "*"
        return " ∨ ".join(str(a) for a in self.atoms)


def suspension_splitting(M: ManifoldSpec, t: int) -> WedgeExpr:
    """Wedge decomposition of the t-fold suspension, t in {2, 3, 4}.

    t = 2 splits the double suspension of the 4-skeleton (2 does not divide
    c); t = 3 splits the full triple suspension up to one opaque summand
    (6 coprime to c, m >= 2); t = 4 needs a single top cell and stable
    parallelizability on top of odd c, and splits completely.

    >>> str(suspension_splitting(ManifoldSpec(c=5, m=3), 2))
    'S^4 ∨ S^4 ∨ S^5 ∨ S^5 ∨ P^4(5) ∨ P^6(5)'
    """
    c, m = M.c, M.m
    if t == 2:
        _require_odd(c)
        atoms = [moore(6, c), moore(4, c)]
        atoms += [sphere(5), sphere(4)] * (m - 1)
        return WedgeExpr(tuple(atoms))
    if t == 3:
        if c % 2 == 0 or c % 3 == 0:
            raise HypothesisError(f"hypothesis 6 ∤ c fails: c = {c}")
        if m < 2:
            raise HypothesisError(f"triple-suspension splitting needs m >= 2, got m = {m}")
        # The remainder complex: its reduced homology is what is left of the
        # shifted homology of M after the split-off summands are removed.
        Z = FGAbelianGroup.free(1)
        rest = opaque("suspended core", {5: Z, 6: Z, 8: Z})
        atoms = [rest, moore(5, c), moore(7, c)]
        atoms += [sphere(6), sphere(5)] * (m - 2)
        return WedgeExpr(tuple(atoms))
    if t == 4:
        _require_odd(c)
        if not M.single_top_cell:
            raise HypothesisError("hypothesis single_top_cell fails")
        if not M.stably_parallelizable:
            raise HypothesisError("hypothesis stably_parallelizable fails")
        atoms = [sphere(9), moore(8, c), moore(6, c)]
        atoms += [sphere(7), sphere(6)] * (m - 1)
        return WedgeExpr(tuple(atoms))
    raise ValueError(f"suspension splitting only for t in 2..4, got {t}")
