"""Classes of Hilbert schemes of points on the projective plane.

``[Hilb^n(P^2)]`` is read off the Goettsche product

    prod_{k>=1} 1 / ((1 - L^(k-1) q^k) (1 - L^k q^k) (1 - L^(k+1) q^k))

(the standard formula for a surface whose class is ``1 + L + L^2``; it is
external input here, not derived).  Two checks that share no code with the
expansion are provided: :func:`euler_oracle` counts torus fixed points (triples
of partitions), and palindromicity reflects Poincare duality.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from pathlib import Path

from .lpoly import ONE, LPoly, from_json, is_palindromic, to_json
from .qseries import product

__all__ = [
    "CACHE_VERSION",
    "HilbCache",
    "plane_factors",
    "hilb_classes",
    "hilb_class",
    "partition_numbers",
    "euler_oracle",
    "betti_hilb",
    "default_cache",
]

log = logging.getLogger(__name__)

CACHE_VERSION = "1"
CACHE_FILENAME = "hilb_p2.json"


def plane_factors(N: int) -> list[tuple[int, int]]:
    """``(a, k)`` pairs of the plane's product formula with ``k <= N``."""
    return [(k + e, k) for k in range(1, N + 1) for e in (-1, 0, 1)]


def hilb_classes(N: int) -> list[LPoly]:
    """``[Hilb^n(P^2)]`` for ``n = 0..N`` from one truncated expansion."""
    if N < 0:
        raise ValueError(f"n must be non-negative, got {N}")
    return list(product(plane_factors(N), N).coeffs)


class HilbCache:
    """Growable store of Hilbert-scheme classes, optionally backed by a JSON file.

    Reads are lock-free; extension and persistence hold an internal lock.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self.version = CACHE_VERSION
        self.classes: list[LPoly] = [ONE]
        self._lock = threading.Lock()
        self._dirty = False
        self.loaded = False
        if self.path is not None:
            self._load()

    @property
    def max_n(self) -> int:
        return len(self.classes) - 1

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.max_n

    def get(self, n: int) -> LPoly:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        if n > self.max_n:
            self.extend(n)
        return self.classes[n]

    def extend(self, n: int) -> None:
        with self._lock:
            if n <= self.max_n:
                return
            self.classes = hilb_classes(n)
            self._dirty = True

    # --- persistence ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "classes": {str(n): to_json(c) for n, c in enumerate(self.classes)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HilbCache":
        cache = cls()
        cache.classes = _parse_classes(obj)
        return cache

    def _load(self) -> None:
        try:
            with open(self.path, encoding="utf-8") as fh:
                obj = json.load(fh)
        except FileNotFoundError:
            return
        except (OSError, json.JSONDecodeError) as exc:
            log.warning("ignoring unreadable cache %s: %s", self.path, exc)
            return
        if not isinstance(obj, dict) or obj.get("version") != CACHE_VERSION:
            log.info("cache %s has a stale version; discarding", self.path)
            return
        try:
            classes = _parse_classes(obj)
        except ValueError as exc:
            log.warning("ignoring corrupt cache %s: %s", self.path, exc)
            return
        self.classes = classes
        self.loaded = True

    def save(self) -> bool:
        """Write the cache atomically if anything changed; return whether it wrote."""
        if self.path is None:
            return False
        with self._lock:
            if not self._dirty and self.path.exists():
                return False
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(
                dir=self.path.parent, prefix=".hilb-", suffix=".tmp"
            )
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(self.to_json(), fh, sort_keys=True)
                os.replace(tmp, self.path)
            except BaseException:
                os.unlink(tmp)
                raise
            self._dirty = False
            return True


def _parse_classes(obj: dict) -> list[LPoly]:
    raw = obj.get("classes")
    if not isinstance(raw, dict):
        raise ValueError("missing 'classes' map")
    try:
        by_n = {int(k): from_json(v) for k, v in raw.items()}
    except (TypeError, ValueError) as exc:
        raise ValueError(str(exc)) from exc
    if sorted(by_n) != list(range(len(by_n))):
        raise ValueError("classes are not indexed 0..max_n")
    classes = [by_n[n] for n in range(len(by_n))]
    # cheap integrity screen: support, duality and the fixed-point count
    euler = _triple_partition_counts(len(classes) - 1)
    for n, c in enumerate(classes):
        if not is_palindromic(c, 0, 2 * n) or c.eval_at_one() != euler[n]:
            raise ValueError(f"class {n} fails the integrity screen")
    return classes


_default = HilbCache()


def default_cache() -> HilbCache:
    return _default


def hilb_class(n: int, cache: HilbCache | None = None) -> LPoly:
    """``[Hilb^n(P^2)]`` as a polynomial in ``L``.

    >>> str(hilb_class(2))
    '1 + 2L + 3L^2 + 2L^3 + L^4'
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return (cache or _default).get(n)


def betti_hilb(n: int, i: int, cache: HilbCache | None = None) -> int:
    """``b_i(Hilb^n(P^2))``; zero for odd or out-of-range ``i``."""
    if i % 2 or i < 0 or i > 4 * n:
        return 0
    return hilb_class(n, cache).coefficient(i // 2)


def partition_numbers(N: int) -> list[int]:
    """``p(0..N)`` via Euler's pentagonal-number recurrence."""
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def _convolve(x: list[int], y: list[int]) -> list[int]:
    return [sum(x[j] * y[n - j] for j in range(n + 1)) for n in range(len(x))]


def _triple_partition_counts(N: int) -> list[int]:
    p = partition_numbers(N)
    return _convolve(_convolve(p, p), p)


def euler_oracle(n: int) -> int:
    """Number of ordered triples of partitions of total size ``n``.

    These index the torus-fixed points of ``Hilb^n(P^2)`` (one monomial ideal
    per chart), so this is its topological Euler number.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _triple_partition_counts(n)[n]
