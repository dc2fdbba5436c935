"""Truncated power series in ``q`` with :class:`LPoly` coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

from .lpoly import ONE, ZERO, LPoly

__all__ = ["QSeries", "one", "mul_series", "geometric_factor", "product"]


class QSeries:
    """``sum_{n<=order} coeffs[n] q^n``, all higher terms discarded."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[LPoly], order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs = coeffs + (ZERO,) * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    def __getitem__(self, n: int) -> LPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __mul__(self, other: "QSeries") -> "QSeries":
        return mul_series(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"QSeries([{body}])"


def one(N: int) -> QSeries:
    return QSeries([ONE], N)


def mul_series(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at the (common) order."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    N = a.order
    out = []
    for n in range(N + 1):
        acc = ZERO
        for j in range(n + 1):
            x, y = a.coeffs[j], b.coeffs[n - j]
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return QSeries(out, N)


def geometric_factor(a: int, k: int, N: int) -> QSeries:
    """Expansion of ``1 / (1 - L^a q^k)`` through ``q^N``."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if N < 0:
        raise ValueError("order must be non-negative")
    coeffs = [ZERO] * (N + 1)
    for m in range(N // k + 1):
        coeffs[k * m] = LPoly.monomial(a * m)
    return QSeries(coeffs, N)


def product(factors: Iterable[tuple[int, int]], N: int) -> QSeries:
    """Truncated product of ``1 / (1 - L^a q^k)`` over ``(a, k)`` in ``factors``.

    Factors are applied in ascending ``(k, a)`` order.  Multiplying by a
    geometric factor is the in-place recurrence ``c[n] += L^a c[n-k]`` for
    ascending ``n``, which gives exactly the Cauchy product with
    :func:`geometric_factor` at a fraction of the cost.
    """
    if N < 0:
        raise ValueError("order must be non-negative")
    factors = sorted(factors, key=lambda f: (f[1], f[0]))
    for a, k in factors:
        if k <= 0:
            raise ValueError(f"k must be positive, got {k}")

    # dense work area: slot n holds {degree: coeff}
    slots: list[dict[int, int]] = [{} for _ in range(N + 1)]
    slots[0][0] = 1
    for a, k in factors:
        if k > N:
            continue
        for n in range(k, N + 1):
            src = slots[n - k]
            if not src:
                continue
            dst = slots[n]
            for deg, val in src.items():
                j = deg + a
                dst[j] = dst.get(j, 0) + val
    return QSeries([LPoly(s) for s in slots], N)
