"""Stable-range motive, Betti and Hodge numbers of M(d, chi) on the plane.

``M(d, chi)`` is the moduli space of one-dimensional semistable sheaves with
first Chern class ``d H`` and Euler characteristic ``chi``; it is irreducible
of dimension ``d^2 + 1``.  Its class agrees with

    L^(3d + 1 + 2 chi0) * [Hilb^dbar(P^2)],   dbar = d(d-3)/2 - chi0,

in every degree above ``d^2 - rho_d + 1``, where ``chi0`` is the representative
of ``+-chi mod d`` in ``[-3d/2, -d]`` and ``rho_d`` is ``d - 1`` when ``d`` is a
prime or twice a prime and ``7`` otherwise.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .hilb import HilbCache, default_cache
from .lpoly import LPoly, eq_mod

__all__ = [
    "UniquenessError",
    "CoprimalityError",
    "ModuliParams",
    "MotivicTail",
    "BettiTail",
    "ChiIndependenceReport",
    "is_prime",
    "rho",
    "chi0",
    "params",
    "motivic_tail",
    "betti_tail",
    "verify_chi_independence",
    "duality_symmetry",
]

log = logging.getLogger(__name__)


class UniquenessError(RuntimeError):
    """The window ``[-3d/2, -d]`` did not contain exactly one admissible chi0."""


class CoprimalityError(ValueError):
    """Betti numbers were requested for non-coprime ``(d, chi)``."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def rho(d: int) -> int:
    """Codimension depth: ``d - 1`` if ``d`` is ``p`` or ``2p`` (p prime), else 7."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if is_prime(d) or (d % 2 == 0 and is_prime(d // 2)):
        return d - 1
    return 7


def _admissible(d: int, chi: int, lo: int, hi: int) -> list[int]:
    return [c for c in range(lo, hi + 1) if (c - chi) % d == 0 or (c + chi) % d == 0]


def chi0(d: int, chi: int, extended: bool = False) -> int | list[int]:
    """Representative of ``+-chi mod d``.

    With ``extended=False`` returns the unique value in ``[ceil(-3d/2), -d]``.
    With ``extended=True`` returns every admissible value in
    ``[-2d-1, -d+1]``, ascending.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if extended:
        return _admissible(d, chi, -2 * d - 1, -d + 1)
    found = _admissible(d, chi, -(3 * d // 2), -d)
    if len(found) != 1:
        raise UniquenessError(
            f"uniqueness violated: chi0 candidates {found} for d={d}, chi={chi}"
        )
    return found[0]


@dataclass(frozen=True)
class ModuliParams:
    d: int
    chi: int
    chi0: int
    rho: int
    dbar: int
    shift: int
    dim_m: int
    level_scheme: int
    stable_threshold: int
    coprime: bool

    @property
    def vacuous(self) -> bool:
        """Nothing is determined: the depth exceeds ``d - 1`` or the level reaches the top."""
        return self.rho > self.d - 1 or self.level_scheme >= self.dim_m

    @property
    def determined_degrees(self) -> range:
        """Degrees of the motive fixed by the congruence (empty when vacuous)."""
        if self.vacuous:
            return range(0)
        return range(self.level_scheme + 1, self.dim_m + 1)

    @property
    def betti_indices(self) -> range:
        if self.vacuous:
            return range(0)
        return range(self.stable_threshold, 2 * self.dim_m + 1)

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "chi": self.chi,
            "chi0": self.chi0,
            "rho": self.rho,
            "dbar": self.dbar,
            "shift": self.shift,
            "dim": self.dim_m,
            "level_scheme": self.level_scheme,
            "stable_threshold": self.stable_threshold,
            "coprime": self.coprime,
            "vacuous": self.vacuous,
        }


def _params_for(d: int, chi: int, c0: int) -> ModuliParams:
    r = rho(d)
    return ModuliParams(
        d=d,
        chi=chi,
        chi0=c0,
        rho=r,
        dbar=d * (d - 3) // 2 - c0,
        shift=3 * d + 1 + 2 * c0,
        dim_m=d * d + 1,
        level_scheme=d * d - r + 1,
        stable_threshold=1 + 2 * (d * d + 1 - r),
        coprime=math.gcd(d, chi) == 1,
    )


def params(d: int, chi: int) -> ModuliParams:
    p = _params_for(d, chi, chi0(d, chi))
    assert p.shift + 2 * p.dbar == p.dim_m
    return p


@dataclass(frozen=True)
class MotivicTail:
    """Coefficients of ``[M(d, chi)]`` in degrees ``> level``; below that nothing is known."""

    params: ModuliParams
    level: int
    tail: LPoly
    semistable_only: bool
    warnings: tuple[str, ...] = ()

    @property
    def vacuous(self) -> bool:
        return self.params.vacuous


@dataclass(frozen=True)
class BettiTail:
    params: ModuliParams
    entries: list[tuple[int, int]] = field(default_factory=list)
    hodge_diag: list[tuple[int, int]] = field(default_factory=list)
    warnings: tuple[str, ...] = ()

    @property
    def vacuous(self) -> bool:
        return self.params.vacuous

    def betti(self, i: int) -> int:
        for j, b in self.entries:
            if j == i:
                return b
        raise KeyError(f"b_{i} is outside the stable range")


def _vacuous_warning(p: ModuliParams) -> str:
    return (
        f"vacuous range: rho_{p.d}={p.rho} leaves no determined degree "
        f"for d={p.d}"
    )


def _shifted_hilb(d: int, c0: int, cache: HilbCache) -> LPoly:
    return cache.get(d * (d - 3) // 2 - c0).shift(3 * d + 1 + 2 * c0)


def motivic_tail(d: int, chi: int, cache: HilbCache | None = None) -> MotivicTail:
    """Top coefficients of ``[M(d, chi)]`` (of ``[M^ss(d, chi)]`` if not coprime)."""
    cache = cache or default_cache()
    p = params(d, chi)
    warnings = []
    if not p.coprime:
        warnings.append(
            f"semistable_only: gcd(d, chi)={math.gcd(d, chi)}; the tail describes M^ss(d, chi)"
        )
    if p.vacuous:
        warnings.append(_vacuous_warning(p))
        tail = LPoly()
    else:
        full = _shifted_hilb(d, p.chi0, cache)
        tail = LPoly({j: c for j, c in full.terms() if j > p.level_scheme})
    for w in warnings:
        log.warning(w)
    return MotivicTail(p, p.level_scheme, tail, not p.coprime, tuple(warnings))


def betti_tail(d: int, chi: int, cache: HilbCache | None = None) -> BettiTail:
    """Betti numbers ``b_i(M(d, chi))`` for ``i >= 1 + 2(d^2 + 1 - rho_d)``."""
    if math.gcd(d, chi) != 1:
        raise CoprimalityError(
            f"gcd(d, chi)={math.gcd(d, chi)}: Betti and Hodge numbers of the tail "
            "are only determined for d coprime to chi, where M(d, chi) is smooth"
        )
    cache = cache or default_cache()
    p = params(d, chi)
    if p.vacuous:
        w = _vacuous_warning(p)
        log.warning(w)
        return BettiTail(p, [], [], (w,))
    h = cache.get(p.dbar)
    entries = []
    hodge = []
    for i in p.betti_indices:
        if i % 2:
            entries.append((i, 0))
            continue
        b = h.coefficient(i // 2 - p.shift)
        entries.append((i, b))
        hodge.append((i // 2, b))
    return BettiTail(p, entries, hodge)


@dataclass(frozen=True)
class ChiIndependenceReport:
    d: int
    level: int
    chi0_values: tuple[int, ...]
    passed: bool
    vacuous: bool = False
    first_discrepancy: int | None = None
    discrepant_pair: tuple[int, int] | None = None

    @property
    def min_degree(self) -> int:
        return self.level + 1


def verify_chi_independence(
    d: int, cache: HilbCache | None = None, include_noncoprime: bool = False
) -> ChiIndependenceReport:
    """Check that the shifted Hilbert classes over ``chi0 in [-2d-1, -d+1]``
    agree in every degree ``>= d^2 - rho_d + 2``.

    Only ``chi0`` coprime to ``d`` are compared unless ``include_noncoprime``.
    A failed check is reported, not raised.
    """
    if d < 3:
        raise ValueError(f"d must be at least 3, got {d}")
    cache = cache or default_cache()
    r = rho(d)
    level = d * d + 1 - r
    values = [
        c
        for c in range(-2 * d - 1, -d + 2)
        if include_noncoprime or math.gcd(d, c) == 1
    ]
    if r > d - 1 or level >= d * d + 1:
        return ChiIndependenceReport(d, level, tuple(values), True, vacuous=True)
    cache.extend(d * (d - 3) // 2 - values[0])
    classes = {c: _shifted_hilb(d, c, cache) for c in values}
    for i, a in enumerate(values):
        for b in values[i + 1 :]:
            if eq_mod(classes[a], classes[b], level):
                continue
            diff = classes[a] - classes[b]
            worst = max(j for j, _ in diff.terms() if j > level)
            return ChiIndependenceReport(
                d, level, tuple(values), False,
                first_discrepancy=worst, discrepant_pair=(a, b),
            )
    return ChiIndependenceReport(d, level, tuple(values), True)


def duality_symmetry(d: int, chi: int) -> bool:
    """``chi`` and ``-chi`` (dual sheaves) lead to the same parameters."""
    a, b = params(d, chi), params(d, -chi)
    return (a.chi0, a.rho, a.dbar, a.shift) == (b.chi0, b.rho, b.dbar, b.shift)
