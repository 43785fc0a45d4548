"""Catalog of simply connected compact simple Lie groups.

Static data and derived predicates: the rational type (exponents of the
sphere product), l(G) and rank, triviality of pi_4, p-regularity, the
Theriault range, the order of the degree-4 connecting map (drives bundle
classification over Moore spaces), the loop-power offset r(G, p) used by the
exponent bounds, and the stable homotopy of the SU and Spin families.

Numeric rows live in data/catalog.txt (override with the GAUGE_CATALOG
environment variable); this module parses and interprets them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .abelian import FGAbelianGroup
from .arith import is_prime, legendre_valuation, nu_p
from .errors import CatalogError
from .localization import Localization

FAMILIES = ("SU", "Sp", "Spin", "G2", "F4", "E6", "E7", "E8")
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

_EXCEPTIONAL_TYPE = {
    "G2": (1, 5),
    "F4": (1, 5, 7, 11),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
}

# Odd torsion primes of H*(G; Z); 2-torsion never matters below because
# every caller works at an odd prime.
_TORSION_PRIMES = {
    "G2": frozenset({2}),
    "F4": frozenset({2, 3}),
    "E6": frozenset({2, 3}),
    "E7": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
}


@dataclass(frozen=True)
class LieGroupSpec:
    """A simple compact Lie group given by family and parameter.

    >>> LieGroupSpec.parse("SU:4")
    LieGroupSpec(family='SU', n=4)
    >>> str(LieGroupSpec.parse("Spin:8")), str(LieGroupSpec.parse("E8"))
    ('Spin(8)', 'E8')
    """

    family: str
    n: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in EXCEPTIONAL:
            if self.n is not None:
                raise ValueError(f"{self.family} takes no parameter")
            return
        if self.n is None:
            raise ValueError(f"{self.family} needs a parameter")
        low = {"SU": 2, "Sp": 1, "Spin": 5}[self.family]
        if self.n < low:
            raise ValueError(f"{self.family} parameter must be >= {low}, got {self.n}")

    @staticmethod
    def parse(text: str) -> "LieGroupSpec":
        """Parse 'family:param' (exceptionals take no ':param')."""
        if ":" in text:
            fam, _, num = text.partition(":")
            try:
                n = int(num)
            except ValueError:
                raise ValueError(f"bad group parameter {num!r} in {text!r}") from None
            return LieGroupSpec(fam, n)
        return LieGroupSpec(text)

    def __str__(self) -> str:
        if self.n is None:
            return self.family
        return f"{self.family}({self.n})"


# -- rational type -----------------------------------------------------------


def type_of(G: LieGroupSpec) -> tuple[int, ...]:
    """The type multiset: exponents n_i with G rationally a product of
    spheres S^(2 n_i + 1), sorted ascending.

    >>> type_of(LieGroupSpec("SU", 4))
    (1, 2, 3)
    >>> type_of(LieGroupSpec("Spin", 8))
    (1, 3, 3, 5)
    >>> type_of(LieGroupSpec("G2"))
    (1, 5)
    """
    if G.family == "SU":
        return tuple(range(1, G.n))
    if G.family == "Sp":
        return tuple(range(1, 2 * G.n, 2))
    if G.family == "Spin":
        if G.n % 2:
            half = G.n // 2  # Spin(2n+1): 1, 3, ..., 2n-1
            return tuple(range(1, 2 * half, 2))
        half = G.n // 2  # Spin(2n): 1, 3, ..., 2n-3 plus n-1
        return tuple(sorted(tuple(range(1, 2 * half - 2, 2)) + (half - 1,)))
    return _EXCEPTIONAL_TYPE[G.family]


def l_of(G: LieGroupSpec) -> int:
    return max(type_of(G))


def rank_of(G: LieGroupSpec) -> int:
    return len(type_of(G))


def rational_degrees(G: LieGroupSpec) -> tuple[int, ...]:
    """Degrees of the rational sphere factors, 2 n_i + 1."""
    return tuple(2 * n + 1 for n in type_of(G))


# -- pi_4 and regularity -----------------------------------------------------


def pi4(G: LieGroupSpec) -> FGAbelianGroup:
    """Integral pi_4: Z/2 for SU(2), every Sp(n), and Spin(5); else 0."""
    z2 = (
        (G.family == "SU" and G.n == 2)
        or G.family == "Sp"
        or (G.family == "Spin" and G.n == 5)
    )
    return FGAbelianGroup.cyclic(2) if z2 else FGAbelianGroup.trivial()


def pi4_is_trivial(G: LieGroupSpec, ctx: Localization) -> bool:
    """Does pi_4(G) vanish in the localization?

    >>> pi4_is_trivial(LieGroupSpec("Sp", 2), Localization.integral())
    False
    >>> pi4_is_trivial(LieGroupSpec("Sp", 2), Localization.away_from([2]))
    True
    """
    return pi4(G).localize(ctx).is_trivial()


def torsion_primes(G: LieGroupSpec) -> frozenset[int]:
    if G.family in EXCEPTIONAL:
        return _TORSION_PRIMES[G.family]
    if G.family == "Spin" and G.n >= 7:
        return frozenset({2})
    return frozenset()


def is_p_regular(G: LieGroupSpec, p: int) -> bool:
    """p-regularity: p >= l(G) + 1 and no p-torsion in H*(G; Z).

    >>> is_p_regular(LieGroupSpec("SU", 4), 5)
    True
    >>> is_p_regular(LieGroupSpec("SU", 4), 3)
    False
    """
    _require_odd_prime(p)
    return p >= l_of(G) + 1 and p not in torsion_primes(G)


def in_theriault_range(G: LieGroupSpec, p: int) -> bool:
    """Range of validity of the looped-sphere filtration bound.

    >>> in_theriault_range(LieGroupSpec("SU", 7), 5)
    True
    >>> in_theriault_range(LieGroupSpec("SU", 14), 5)
    False
    """
    _require_odd_prime(p)
    bound = (p - 1) * (p - 2)
    if G.family == "SU":
        return G.n - 1 <= bound
    if G.family == "Sp":
        return 2 * G.n <= bound
    if G.family == "Spin":
        if G.n % 2:
            return 2 * (G.n // 2) <= bound
        return 2 * (G.n // 2 - 1) <= bound
    if G.family in ("G2", "F4", "E6"):
        return p >= 5
    return p >= 7  # E7, E8


def epsilon(G: LieGroupSpec, p: int) -> int:
    """Correction bit for low-rank groups at p = 3.

    >>> epsilon(LieGroupSpec("SU", 3), 3), epsilon(LieGroupSpec("SU", 3), 5)
    (1, 0)
    """
    _require_odd_prime(p)
    if p != 3:
        return 0
    if G.family == "SU" and G.n in (2, 3, 4):
        return 1
    if G.family == "Spin" and G.n == 6:
        return 1
    return 0


def _require_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    if p == 2:
        raise ValueError("odd primes only")


# -- catalog file ------------------------------------------------------------

_DEFAULT_CATALOG = Path(__file__).parent / "data" / "catalog.txt"

_ORD_FORMULAS = {
    "n(n^2-1)": lambda n: n * (n * n - 1),
    "n(2n+1)": lambda n: n * (2 * n + 1),
    "(n-1)(2n-1)": lambda n: (n - 1) * (2 * n - 1),
}
_R_FORMULAS = {
    "nu_p((n-1)!)": lambda n, p: legendre_valuation(n - 1, p),
    "nu_p((2n-1)!)": lambda n, p: legendre_valuation(2 * n - 1, p),
    "nu_p((2n-3)!)": lambda n, p: legendre_valuation(2 * n - 3, p),
}
_RANGE_TAGS = {
    "su_range": lambda n, p: p >= 3 and n <= (p - 1) ** 2 + 1,
    "symp_range": lambda n, p: p >= 3 and 2 * n <= (p - 1) ** 2 + 1,
    "spin_even_range": lambda n, p: p >= 5 and 2 * (n - 1) <= (p - 1) ** 2 + 1,
}
_FAMILY_KEYS = ("SU", "Sp", "SpinOdd", "SpinEven", "G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class CatalogRow:
    family_key: str
    param: int | None  # None means any n (a * row)
    prime_cond: str
    ord_spec: str
    r_spec: str

    def prime_cond_holds(self, p: int, n: int | None) -> bool:
        tag = self.prime_cond
        if tag == "all":
            return True
        if tag in _RANGE_TAGS:
            return _RANGE_TAGS[tag](n, p)
        if tag.startswith("p>="):
            return p >= int(tag[3:])
        if tag.startswith("p="):
            return p == int(tag[2:])
        raise CatalogError(f"unknown prime condition {tag!r}")

    def is_integral(self) -> bool:
        return self.prime_cond == "all"

    def ord_value(self, n: int | None) -> int:
        if self.ord_spec in _ORD_FORMULAS:
            return _ORD_FORMULAS[self.ord_spec](n)
        return int(self.ord_spec)

    def r_value(self, n: int | None, p: int) -> int:
        if self.r_spec in _R_FORMULAS:
            return _R_FORMULAS[self.r_spec](n, p)
        return int(self.r_spec)


_catalog_cache: dict[str, tuple[CatalogRow, ...]] = {}


def load_catalog(path: str | os.PathLike | None = None) -> tuple[CatalogRow, ...]:
    """Parse the catalog data file (GAUGE_CATALOG env var overrides the
    packaged default). Results are cached per path."""
    if path is None:
        path = os.environ.get("GAUGE_CATALOG") or _DEFAULT_CATALOG
    key = str(path)
    if key in _catalog_cache:
        return _catalog_cache[key]
    rows: list[CatalogRow] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise CatalogError(f"{path}:{lineno}: expected 5 columns, got {len(parts)}")
        fam, param_s, primes, ord_s, r_s = parts
        if fam not in _FAMILY_KEYS:
            raise CatalogError(f"{path}:{lineno}: unknown family {fam!r}")
        if param_s in ("*", "-"):
            param = None
        else:
            param = int(param_s)
        if not (
            primes == "all"
            or primes in _RANGE_TAGS
            or primes.startswith("p>=")
            or primes.startswith("p=")
        ):
            raise CatalogError(f"{path}:{lineno}: unknown prime condition {primes!r}")
        if ord_s not in _ORD_FORMULAS and not ord_s.isdigit():
            raise CatalogError(f"{path}:{lineno}: unknown ord spec {ord_s!r}")
        if r_s not in _R_FORMULAS and not r_s.isdigit():
            raise CatalogError(f"{path}:{lineno}: unknown r spec {r_s!r}")
        rows.append(CatalogRow(fam, param, primes, ord_s, r_s))
    result = tuple(rows)
    _catalog_cache[key] = result
    return result


def _family_key(G: LieGroupSpec) -> tuple[str, int | None]:
    """Map a group spec to its catalog family key and formula parameter."""
    if G.family == "Spin":
        if G.n % 2:
            return "SpinOdd", G.n // 2
        return "SpinEven", G.n // 2
    if G.family in EXCEPTIONAL:
        return G.family, None
    return G.family, G.n

def _rows_for(G: LieGroupSpec) -> tuple[list[CatalogRow], int | None]:
    """Catalog rows matching G, specific-parameter rows first."""
    key, n = _family_key(G)
    rows = [r for r in load_catalog() if r.family_key == key and (r.param is None or r.param == n)]
    rows.sort(key=lambda r: r.param is None)  # False (specific) before True (*)
    return rows, n


def ord_partial1_tilde(G: LieGroupSpec, p: int | None = None) -> int:
    """Order of the lifted degree-4 connecting map, from the catalog.

    p = None asks for the integral statement; only rows marked valid at all
    primes answer it. A prime p asks for the p-local statement.

    >>> ord_partial1_tilde(LieGroupSpec("SU", 3))
    24
    >>> ord_partial1_tilde(LieGroupSpec("G2"), 5)
    21
    """
    rows, n = _rows_for(G)
    if p is None:
        for row in rows:
            if row.is_integral():
                return row.ord_value(n)
        raise CatalogError(f"order unknown for ({G}, integral)")
    if not is_prime(p):
        raise ValueError(f"expected a prime or None, got {p}")
    for row in rows:
        if row.prime_cond_holds(p, n):
            return row.ord_value(n)
    raise CatalogError(f"order unknown for ({G}, p={p})")


def catalog_order(G: LieGroupSpec) -> tuple[int, str]:
    """The raw table value for G and the validity tag of its row.

    Classification uses this as an upper-bound order even when the row is
    only a p-local statement; callers must surface the validity tag.
    """
    rows, n = _rows_for(G)
    if not rows:
        raise CatalogError(f"no catalog row for {G}")
    row = rows[0]
    return row.ord_value(n), row.prime_cond

def r_of(G: LieGroupSpec, p: int) -> int:
    """Loop-power offset r(G, p) for the exponent bound.

    >>> r_of(LieGroupSpec("SU", 7), 5)
    1
    >>> r_of(LieGroupSpec("G2"), 5)
    1
    >>> r_of(LieGroupSpec("E8"), 7)
    2
    """
    if not in_theriault_range(G, p):
        raise CatalogError(f"({G}, p={p}) outside the loop-filtration range")
    rows, n = _rows_for(G)
    if G.family in EXCEPTIONAL:
        for row in rows:
            if row.prime_cond_holds(p, n):
                return row.r_value(n, p)
        raise CatalogError(f"no r value for ({G}, p={p})")
    return rows[0].r_value(n, p)


def exceptional_rows(family: str) -> list[tuple[str, int, int]]:
    """(prime condition, ord, r) triples for an exceptional family, in file
    order; feeds the exponent-table emitter."""
    if family not in EXCEPTIONAL:
        raise ValueError(f"{family} is not exceptional")
    out = []
    for row in load_catalog():
        if row.family_key == family:
            out.append((row.prime_cond, row.ord_value(None), row.r_value(None, 2)))
    return out


# -- stable homotopy ---------------------------------------------------------

# pi_r of the stable Spin group for r = 0..7 mod 8, given as cyclic orders
# (0 encodes Z, 1 the zero group).
_SPIN_BOTT = (2, 2, 1, 0, 1, 1, 1, 0)


def stable_pi(family: str, r: int) -> FGAbelianGroup:
    """Stable pi_r for the SU or Spin family (Bott periodicity).

    >>> str(stable_pi("SU", 7)), str(stable_pi("SU", 8))
    ('Z', '0')
    >>> str(stable_pi("Spin", 11)), str(stable_pi("Spin", 13))
    ('Z', '0')
    """
    if family == "SU":
        if r < 1:
            raise ValueError(f"stable SU homotopy needs r >= 1, got {r}")
        return FGAbelianGroup.free(1) if r % 2 else FGAbelianGroup.trivial()
    if family == "Spin":
        if r < 2:
            raise ValueError(f"stable Spin homotopy needs r >= 2, got {r}")
        return FGAbelianGroup.cyclic(_SPIN_BOTT[r % 8])
    raise ValueError(f"stable families are SU and Spin, got {family!r}")
