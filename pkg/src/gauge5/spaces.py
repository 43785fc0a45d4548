"""Formal product expressions for decompositions of looped gauge groups.

An expression is a multiset of atomic factors together with a localization
context, an ambient group, and (where Moore spaces are involved) the cyclic
order c. Atom kinds:

  group         the ambient group G itself
  loops_g       Omega^j G
  loop_fiber    Omega^j G{c}, with G{c} the homotopy fiber of the c-th
                power map on G
  moore_gauge   Omega^j of the gauge group, labeled k, of the 4-dimensional
                mod-c Moore space
  moore_map     Omega^j Map*_0(P^n(c), G)
  map_cp2       Omega^j Map*_0(CP^2, G)
  sphere        S^n (rational factor)
  em            K(Q, n) (rational factor)

normalize() rewrites to a canonical form: pointed mapping spaces out of
Moore spaces become loop fibers; atoms that are contractible in the
expression's localization are removed; the CP^2 factor splits into loop
factors once 2 is inverted; atoms are merged and sorted.

Equality of normalized expressions is structural equality of the underlying
decompositions; nothing finer is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError
from .lie import LieGroupSpec, rational_degrees
from .localization import Localization

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")

_KIND_ORDER = {
    "group": 0,
    "moore_gauge": 1,
    "map_cp2": 2,
    "loop_fiber": 3,
    "moore_map": 4,
    "loops_g": 5,
    "sphere": 6,
    "em": 7,
}


def _sup(j: int) -> str:
    return str(j).translate(_SUP)


def _sub(j: int) -> str:
    return str(j).translate(_SUB)


@dataclass(frozen=True)
class SpaceAtom:
    kind: str
    j: int = 0  # outer loop degree (loop kinds only)
    k: int | None = None  # gauge component label (moore_gauge only)
    n: int | None = None  # dimension (moore_map, sphere, em)

    def __post_init__(self) -> None:
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.j < 0:
            raise ValueError(f"loop degree must be >= 0, got {self.j}")
        if self.kind == "moore_gauge" and (self.k is None or self.k < 0):
            raise ValueError("moore_gauge atom needs a component label k >= 0")
        if self.kind in ("moore_map", "sphere", "em") and self.n is None:
            raise ValueError(f"{self.kind} atom needs a dimension")
        if self.kind == "moore_map" and self.n < 2:
            raise ValueError(f"Moore mapping space needs dimension >= 2, got {self.n}")

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.j, self.n or 0, self.k or 0)

    def pretty(self, c: int | None) -> str:
        loops = "" if self.j == 0 else ("Ω" if self.j == 1 else "Ω" + _sup(self.j))
        if self.kind == "group":
            return "G"
        if self.kind == "loops_g":
            return loops + "G" if loops else "G"
        if self.kind == "loop_fiber":
            cc = "c" if c is None else str(c)
            return f"{loops}G{{{cc}}}"
        if self.kind == "moore_gauge":
            cc = "c" if c is None else str(c)
            return f"{loops}G{_sub(self.k)}(P⁴({cc}))"
        if self.kind == "map_cp2":
            return f"{loops}Map*₀(CP²,G)"
        if self.kind == "moore_map":
            cc = "c" if c is None else str(c)
            return f"{loops}Map*₀(P{_sup(self.n)}({cc}),G)"
        if self.kind == "sphere":
            return "S" + _sup(self.n)
        return f"K(Q,{self.n})"


def group_itself() -> SpaceAtom:
    return SpaceAtom("group")


def loops_g(j: int) -> SpaceAtom:
    return SpaceAtom("loops_g", j=j)


def loop_fiber(j: int) -> SpaceAtom:
    return SpaceAtom("loop_fiber", j=j)


def moore_gauge(j: int, k: int) -> SpaceAtom:
    return SpaceAtom("moore_gauge", j=j, k=k)


def moore_map(n: int, j: int = 0) -> SpaceAtom:
    return SpaceAtom("moore_map", j=j, n=n)


def map_cp2(j: int) -> SpaceAtom:
    return SpaceAtom("map_cp2", j=j)


def sphere_factor(n: int) -> SpaceAtom:
    return SpaceAtom("sphere", n=n)


def em_factor(n: int) -> SpaceAtom:
    return SpaceAtom("em", n=n)


def group_degrees(group) -> tuple[int, ...]:
    """Rational homotopy degrees of a group context (Lie spec or any model
    exposing all_degrees())."""
    if isinstance(group, LieGroupSpec):
        return rational_degrees(group)
    degs = getattr(group, "all_degrees", None)
    if callable(degs):
        return tuple(degs())
    raise TypeError(f"no rational degrees for group context {group!r}")


@dataclass(frozen=True)
class SpaceExpr:
    """Multiset of (atom, multiplicity) with localization and context.

    The constructor merges and sorts; normalize() additionally applies the
    rewrite rules described in the module docstring.
    """

    atoms: tuple[tuple[SpaceAtom, int], ...]
    localization: Localization = field(default_factory=Localization.integral)
    group: object | None = None
    c: int | None = None

    def __post_init__(self) -> None:
        merged: dict[SpaceAtom, int] = {}
        for atom, mult in self.atoms:
            if mult < 0:
                raise ValueError(f"negative multiplicity for {atom}")
            if mult:
                merged[atom] = merged.get(atom, 0) + mult
        canon = tuple(sorted(merged.items(), key=lambda am: am[0].sort_key()))
        object.__setattr__(self, "atoms", canon)
        if self.c is not None and self.c < 2:
            raise ValueError(f"c must be >= 2 when present, got {self.c}")

    @staticmethod
    def of(atoms, localization=None, group=None, c=None) -> "SpaceExpr":
        """Build from an iterable of atoms or (atom, multiplicity) pairs."""
        pairs = []
        for item in atoms:
            if isinstance(item, SpaceAtom):
                pairs.append((item, 1))
            else:
                pairs.append(item)
        return SpaceExpr(
            tuple(pairs),
            localization=localization or Localization.integral(),
            group=group,
            c=c,
        )

    def is_empty(self) -> bool:
        return not self.atoms

    def multiplicity(self, atom: SpaceAtom) -> int:
        for a, m in self.atoms:
            if a == atom:
                return m
        return 0

    def total_factors(self) -> int:
        return sum(m for _, m in self.atoms)

    # -- normalization -----------------------------------------------------

    def normalize(self) -> "SpaceExpr":
        """Canonical form; idempotent, and the result does not depend on the
        order the rules fire (rewrites happen before drops, so a rule never
        sees an atom another rule has yet to produce)."""
        ctx = self.localization
        away_c = self.c is not None and ctx.inverts_all_of(self.c)
        rewritten: list[tuple[SpaceAtom, int]] = []
        for atom, mult in self.atoms:
            # mapping space out of a Moore space is a looped power-map fiber
            if atom.kind == "moore_map":
                atom = loop_fiber(atom.j + atom.n - 1)
            if away_c and atom.kind == "loop_fiber":
                continue  # fiber of a now-invertible power map
            if away_c and atom.kind == "moore_gauge":
                # the Moore space is contractible once c is inverted, so its
                # gauge group collapses to the group itself
                atom = loops_g(atom.j) if atom.j else group_itself()
            if atom.kind == "map_cp2" and ctx.inverts(2):
                # the suspended CP^2 splits into two spheres away from 2
                rewritten.append((loops_g(atom.j + 2), mult))
                rewritten.append((loops_g(atom.j + 4), mult))
                continue
            rewritten.append((atom, mult))
        out: list[tuple[SpaceAtom, int]] = []
        for atom, mult in rewritten:
            if atom.kind in ("sphere", "em") and atom.n <= 1:
                continue  # a point in the simply connected rational model
            if (
                atom.kind in ("loops_g", "moore_gauge")
                and ctx.kind == "rational"
                and self.group is not None
                and atom.j >= max(group_degrees(self.group), default=0)
            ):
                continue  # looped beyond the top rational degree
            out.append((atom, mult))
        return SpaceExpr(tuple(out), self.localization, self.group, self.c)

    # -- rational ranks ------------------------------------------------------

    def rational_rank(self, q: int) -> int:
        """rank of pi_q of the expression after rationalization, q >= 1."""
        if q < 1:
            raise ValueError(f"rational_rank needs q >= 1, got {q}")
        total = 0
        degrees: tuple[int, ...] | None = None
        for atom, mult in self.atoms:
            if atom.kind in ("loop_fiber", "moore_map"):
                continue  # rationally trivial: torsion fiber data only
            if atom.kind == "sphere":
                if atom.n % 2:
                    total += mult * (1 if q == atom.n else 0)
                else:
                    total += mult * (1 if q in (atom.n, 2 * atom.n - 1) else 0)
                continue
            if atom.kind == "em":
                total += mult * (1 if q == atom.n else 0)
                continue
            if degrees is None:
                if self.group is None:
                    raise ValueError("expression has group factors but no group context")
                degrees = group_degrees(self.group)
            if atom.kind in ("group", "loops_g", "moore_gauge"):
                # the Moore-space gauge group is rationally the group itself
                total += mult * degrees.count(q + atom.j)
            elif atom.kind == "map_cp2":
                total += mult * (
                    degrees.count(q + atom.j + 2) + degrees.count(q + atom.j + 4)
                )
        return total

    # -- printing ------------------------------------------------------------

    def pretty(self) -> str:
        """Product notation, e.g. 'Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁴G'."""
        if not self.atoms:
            return "*"
        parts = []
        for atom, mult in self.atoms:
            body = atom.pretty(self.c)
            parts.append(body if mult == 1 else f"({body}){_sup(mult)}")
        return " × ".join(parts)

    def __str__(self) -> str:
        return self.pretty()

    # -- machine format --------------------------------------------------------

    def machine(self) -> str:
        """Line-delimited records; parse_machine inverts exactly."""
        lines = [
            "expr"
            f" localization={_machine_localization(self.localization)}"
            f" group={_machine_group(self.group)}"
            f" c={self.c if self.c is not None else '-'}"
        ]
        for atom, mult in self.atoms:
            lines.append(
                f"atom kind={atom.kind} j={atom.j}"
                f" n={atom.n if atom.n is not None else '-'}"
                f" k={atom.k if atom.k is not None else '-'}"
                f" mult={mult}"
            )
        return "\n".join(lines)


def _machine_localization(ctx: Localization) -> str:
    if ctx.kind == "integral":
        return "integral"
    if ctx.kind == "rational":
        return "rational"
    if ctx.kind == "at_prime":
        return f"at:{ctx.prime}"
    return "away:" + ",".join(str(p) for p in sorted(ctx.inverted_set))


def _parse_localization(text: str) -> Localization:
    if text == "integral":
        return Localization.integral()
    if text == "rational":
        return Localization.rational()
    if text.startswith("at:"):
        return Localization.at_prime(int(text[3:]))
    if text.startswith("away:"):
        primes = frozenset(int(p) for p in text[5:].split(","))
        return Localization("away_from", inverted_set=primes)
    raise ValueError(f"bad localization record {text!r}")


def _machine_group(group) -> str:
    if group is None:
        return "-"
    if isinstance(group, LieGroupSpec):
        return f"lie:{group.family}" + ("" if group.n is None else f":{group.n}")
    ext = ",".join(str(d) for d in group.exterior_degrees)
    poly = ",".join(str(d) for d in group.polynomial_degrees)
    return f"model:{ext}/{poly}"


def _parse_group(text: str):
    if text == "-":
        return None
    if text.startswith("lie:"):
        return LieGroupSpec.parse(text[4:])
    if text.startswith("model:"):
        from .rational import RationalGroupModel

        ext_s, _, poly_s = text[6:].partition("/")
        ext = tuple(int(d) for d in ext_s.split(",") if d)
        poly = tuple(int(d) for d in poly_s.split(",") if d)
        return RationalGroupModel(ext, poly)
    raise ValueError(f"bad group record {text!r}")


def parse_machine(text: str) -> SpaceExpr:
    """Rebuild a SpaceExpr from its machine records.

    >>> e = SpaceExpr.of([loops_g(4), loops_g(4), loop_fiber(3)], c=5)
    >>> parse_machine(e.machine()) == e
    True
    """
    header: dict[str, str] | None = None
    pairs: list[tuple[SpaceAtom, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        fields = dict(p.split("=", 1) for p in parts[1:])
        if parts[0] == "expr":
            header = fields
        elif parts[0] == "atom":
            atom = SpaceAtom(
                fields["kind"],
                j=int(fields["j"]),
                k=None if fields["k"] == "-" else int(fields["k"]),
                n=None if fields["n"] == "-" else int(fields["n"]),
            )
            pairs.append((atom, int(fields["mult"])))
        else:
            raise ValueError(f"bad machine record {line!r}")
    if header is None:
        raise ValueError("machine text has no expr header")
    return SpaceExpr(
        tuple(pairs),
        localization=_parse_localization(header["localization"]),
        group=_parse_group(header["group"]),
        c=None if header["c"] == "-" else int(header["c"]),
    )
