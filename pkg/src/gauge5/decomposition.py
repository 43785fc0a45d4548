"""Product decompositions of looped gauge groups over the 5-manifolds.

Three constructors, one per theorem shape:

  loops2_gauge       double loops, 6 not dividing c
  loops3_gauge       triple loops, odd c, stably parallelizable with a
                     single top cell
  gauge_away_from_c  the unlooped gauge group after inverting c

Each returns a SpaceExpr whose factors are the atoms of spaces.py. The
expressions decompose the *looped* gauge group only; no delooping is
claimed anywhere.
"""

from __future__ import annotations

from .errors import HypothesisError
from .lie import LieGroupSpec, pi4, pi4_is_trivial
from .localization import Localization
from .manifold import ManifoldSpec
from .spaces import (
    SpaceExpr,
    group_itself,
    loop_fiber,
    loops_g,
    map_cp2,
    moore_gauge,
)


def _require_pi4_trivial(G: LieGroupSpec, ctx: Localization) -> None:
    if not pi4_is_trivial(G, ctx):
        raise HypothesisError(
            f"hypothesis pi_4(G) = 0 fails: pi_4({G}) = {pi4(G).localize(ctx)} ({ctx})"
        )


def _require_nonspin_width(M: ManifoldSpec) -> None:
    # the non-spin expression carries an (m-2)-fold factor
    if M.m < 2:
        raise HypothesisError(f"non-spin case needs m >= 2, got m = {M.m}")


def loops2_gauge(
    M: ManifoldSpec, G: LieGroupSpec, k: int, ctx: Localization | None = None
) -> SpaceExpr:
    """Decomposition of the double loops on the k-th gauge group of M.

    >>> M = ManifoldSpec(c=5, m=2)
    >>> print(loops2_gauge(M, LieGroupSpec.parse("SU:4"), 1))
    Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁴G × Ω⁵G × Ω⁷G
    """
    ctx = ctx or Localization.integral()
    if M.c % 6 == 0:
        raise HypothesisError(f"hypothesis 6 ∤ c fails: c = {M.c}")
    _require_pi4_trivial(G, ctx)
    k %= M.c
    if M.spin:
        atoms = [(moore_gauge(2, k), 1), (loop_fiber(3), 1), (loops_g(7), 1),
                 (loops_g(4), M.m - 1), (loops_g(5), M.m - 1)]
    else:
        _require_nonspin_width(M)
        atoms = [(moore_gauge(2, k), 1), (map_cp2(3), 1), (loop_fiber(3), 1),
                 (loops_g(4), M.m - 1), (loops_g(5), M.m - 2)]
    return SpaceExpr(tuple(atoms), localization=ctx, group=G, c=M.c)


def loops3_gauge(
    M: ManifoldSpec, G: LieGroupSpec, k: int, ctx: Localization | None = None
) -> SpaceExpr:
    """Decomposition of the triple loops, for odd c and stably parallelizable
    M whose top cell splits off.

    >>> M = ManifoldSpec(c=9, m=2, stably_parallelizable=True, single_top_cell=True)
    >>> print(loops3_gauge(M, LieGroupSpec.parse("SU:5"), 2))
    Ω³G₂(P⁴(9)) × Ω⁴G{9} × Ω⁵G × Ω⁶G × Ω⁸G
    """
    ctx = ctx or Localization.integral()
    if M.c % 2 == 0:
        raise HypothesisError(f"hypothesis 2 ∤ c fails: c = {M.c}")
    if not M.stably_parallelizable:
        raise HypothesisError("hypothesis stably_parallelizable fails")
    if not M.single_top_cell:
        raise HypothesisError("hypothesis single_top_cell fails")
    _require_pi4_trivial(G, ctx)
    k %= M.c
    atoms = [(moore_gauge(3, k), 1), (loop_fiber(4), 1), (loops_g(8), 1),
             (loops_g(5), M.m - 1), (loops_g(6), M.m - 1)]
    return SpaceExpr(tuple(atoms), localization=ctx, group=G, c=M.c)


def gauge_away_from_c(M: ManifoldSpec, G: LieGroupSpec, k: int = 0) -> SpaceExpr:
    """Decomposition of the gauge group itself once c is inverted.

    All components become equivalent away from c, so k only labels the
    input. The expression's localization inverts every prime dividing c.

    >>> M = ManifoldSpec(c=4, m=2)
    >>> print(gauge_away_from_c(M, LieGroupSpec.parse("SU:3")))
    G × Ω²G × Ω³G × Ω⁵G
    >>> M = ManifoldSpec(c=3, m=2, spin=False)
    >>> print(gauge_away_from_c(M, LieGroupSpec.parse("Spin:12")))
    G × ΩMap*₀(CP²,G) × Ω²G
    """
    ctx = Localization.away_from([M.c])
    _require_pi4_trivial(G, ctx)
    if M.spin:
        atoms = [(group_itself(), 1), (loops_g(5), 1),
                 (loops_g(2), M.m - 1), (loops_g(3), M.m - 1)]
    else:
        _require_nonspin_width(M)
        atoms = [(group_itself(), 1), (map_cp2(1), 1),
                 (loops_g(2), M.m - 1), (loops_g(3), M.m - 2)]
    return SpaceExpr(tuple(atoms), localization=ctx, group=G, c=M.c)


def rational_rank(e: SpaceExpr, q: int) -> int:
    """rank of pi_q of the rationalized expression; see SpaceExpr.rational_rank."""
    return e.rational_rank(q)
