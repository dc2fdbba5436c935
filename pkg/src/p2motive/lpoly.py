"""Laurent polynomials in the Lefschetz class ``L`` with exact integer coefficients.

Classes of cellular varieties (and every class this package manipulates) are
polynomials in ``L``.  Comparison "modulo the dimension filtration" is modelled
as agreement of coefficients strictly above a given degree: a space of
dimension ``<= m`` contributes only to degrees ``<= m``, so two classes are
congruent modulo that filtration exactly when they agree in degrees ``> m``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = [
    "LPoly",
    "L",
    "ONE",
    "ZERO",
    "add",
    "mul",
    "shift",
    "eq_mod",
    "coefficient",
    "eval_at_one",
    "is_palindromic",
    "to_json",
    "from_json",
    "render",
]


class LPoly:
    """Immutable Laurent polynomial ``sum c_j L^j``.

    Zero coefficients are never stored, so two equal polynomials always have
    identical internal state.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for deg, val in coeffs.items():
                if val:
                    c[int(deg)] = int(val)
        self._c = c
        self._hash = None

    @classmethod
    def _wrap(cls, c: dict) -> "LPoly":
        # c must already be canonical (no zero values)
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> "LPoly":
        """Build ``sum coeffs[i] L^(low+i)``."""
        return cls._wrap({low + i: v for i, v in enumerate(coeffs) if v})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LPoly":
        return cls._wrap({degree: coeff} if coeff else {})

    # --- inspection -------------------------------------------------------

    @property
    def min_degree(self) -> int | None:
        return min(self._c) if self._c else None

    @property
    def max_degree(self) -> int | None:
        return max(self._c) if self._c else None

    def terms(self) -> Iterator[tuple[int, int]]:
        """``(degree, coefficient)`` pairs in ascending degree."""
        for deg in sorted(self._c):
            yield deg, self._c[deg]

    def coefficient(self, j: int) -> int:
        return self._c.get(j, 0)

    def to_list(self, low: int, high: int) -> list[int]:
        return [self._c.get(j, 0) for j in range(low, high + 1)]

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    # --- ring structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LPoly.monomial(0, other)
        elif not isinstance(other, LPoly):
            return NotImplemented
        if len(other._c) > len(self._c):
            big, small = other._c, self._c
        else:
            big, small = self._c, other._c
        c = dict(big)
        for deg, val in small.items():
            s = c.get(deg, 0) + val
            if s:
                c[deg] = s
            else:
                del c[deg]
        return LPoly._wrap(c)

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly._wrap({deg: -val for deg, val in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LPoly.monomial(0, other)
        elif not isinstance(other, LPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LPoly._wrap({deg: val * other for deg, val in self._c.items()})
        if not isinstance(other, LPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for da, va in self._c.items():
            for db, vb in other._c.items():
                k = da + db
                c[k] = c.get(k, 0) + va * vb
        return LPoly._wrap({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LPoly":
        if e < 0:
            if len(self._c) == 1:
                ((deg, val),) = self._c.items()
                if val in (1, -1):
                    return LPoly._wrap({deg * e: val**e})
            raise ValueError("only signed monomials are invertible")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, s: int) -> "LPoly":
        """Multiply by ``L**s``."""
        if not s:
            return self
        return LPoly._wrap({deg + s: val for deg, val in self._c.items()})

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    # --- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LPoly({dict(self.terms())!r})"

    def __str__(self) -> str:
        return render(self)


ZERO = LPoly()
ONE = LPoly({0: 1})
L = LPoly({1: 1})


def add(p: LPoly, q: LPoly) -> LPoly:
    return p + q


def mul(p: LPoly, q: LPoly) -> LPoly:
    return p * q


def shift(p: LPoly, s: int) -> LPoly:
    return p.shift(s)


def coefficient(p: LPoly, j: int) -> int:
    return p.coefficient(j)


def eval_at_one(p: LPoly) -> int:
    """Specialize ``L -> 1``; on a cellular class this is the Euler number."""
    return p.eval_at_one()


def eq_mod(p: LPoly, q: LPoly, m: int) -> bool:
    """True iff ``p - q`` vanishes in every degree ``> m``."""
    for deg in p._c.keys() | q._c.keys():
        if deg > m and p._c.get(deg, 0) != q._c.get(deg, 0):
            return False
    return True


def is_palindromic(p: LPoly, low: int, high: int) -> bool:
    """True iff ``p`` is supported in ``[low, high]`` and symmetric about its midpoint."""
    if p and (p.min_degree < low or p.max_degree > high):
        return False
    return all(
        p.coefficient(low + j) == p.coefficient(high - j)
        for j in range((high - low) // 2 + 1)
    )


def to_json(p: LPoly) -> dict[str, str]:
    """``{"degree": "coefficient"}`` with both sides as decimal strings."""
    return {str(deg): str(val) for deg, val in p.terms()}


def from_json(obj: Mapping[str, str]) -> LPoly:
    try:
        return LPoly({int(k): int(v) for k, v in obj.items()})
    except (TypeError, ValueError, AttributeError) as exc:
        raise ValueError(f"not an LPoly JSON object: {obj!r}") from exc


def _term(deg: int, val: int) -> str:
    mag = abs(val)
    if deg == 0:
        return str(mag)
    power = "L" if deg == 1 else f"L^{deg}"
    return power if mag == 1 else f"{mag}{power}"


def render(p: LPoly) -> str:
    """Human-readable form, lowest degree first: ``1 + 2L + L^2``."""
    if not p:
        return "0"
    out = []
    for i, (deg, val) in enumerate(p.terms()):
        t = _term(deg, val)
        if i == 0:
            out.append(t if val > 0 else "-" + t)
        else:
            out.append(("+ " if val > 0 else "- ") + t)
    return " ".join(out)
