"""Exact sparse bivariate polynomials over arbitrary-precision integers.

A polynomial in two variables x and y is stored as a mapping from exponent
pairs ``(i, j)`` to nonzero integer coefficients.  The representation is
canonical: zero coefficients are never stored, so the zero polynomial is the
empty mapping and structural equality coincides with mathematical equality.

Coefficients are plain Python ints, which are already arbitrary precision,
and evaluation is done in ``fractions.Fraction`` so every result is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Tuple, Union

Exponents = Tuple[int, int]
Scalar = Union[int, "BiPoly"]


class BiPoly:
    """Immutable sparse polynomial in x and y with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Dict[Exponents, int], Iterable[Tuple[Exponents, int]], None] = None):
        data: Dict[Exponents, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent pair ({i}, {j})")
                if c:
                    acc = data.get((i, j), 0) + c
                    if acc:
                        data[(i, j)] = acc
                    else:
                        data.pop((i, j), None)
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): int(c)})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    @property
    def deg_x(self) -> int:
        """Largest x-exponent, or -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        """Largest y-exponent, or -1 for the zero polynomial."""
        return max((j for _, j in self._terms), default=-1)

    def terms(self) -> Dict[Exponents, int]:
        """Copy of the underlying exponent-to-coefficient mapping."""
        return dict(self._terms)

    def sorted_terms(self) -> Iterator[Tuple[Exponents, int]]:
        """Terms ordered by x-exponent descending, then y-exponent descending."""
        for key in sorted(self._terms, key=lambda e: (-e[0], -e[1])):
            yield key, self._terms[key]

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value: Scalar) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, int):
            return BiPoly.const(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "BiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            else:
                del data[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = data
        return result

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        result = BiPoly.__new__(BiPoly)
        result._terms = {key: -c for key, c in self._terms.items()}
        return result

    def __sub__(self, other: Scalar) -> "BiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "BiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> "BiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        data: Dict[Exponents, int] = {}
        for (ia, ja), ca in a.items():
            for (ib, jb), cb in b.items():
                key = (ia + ib, ja + jb)
                acc = data.get(key, 0) + ca * cb
                if acc:
                    data[key] = acc
                else:
                    del data[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = data
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        """Integer power by repeated squaring."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- beyond the ring ---------------------------------------------------

    def evaluate(self, x: Union[int, Fraction], y: Union[int, Fraction]) -> Fraction:
        """Exact value at a rational point."""
        x = Fraction(x)
        y = Fraction(y)
        x_pow: Dict[int, Fraction] = {0: Fraction(1)}
        y_pow: Dict[int, Fraction] = {0: Fraction(1)}
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            xi = x_pow.get(i)
            if xi is None:
                xi = x_pow[i] = x ** i
            yj = y_pow.get(j)
            if yj is None:
                yj = y_pow[j] = y ** j
            total += c * xi * yj
        return total

    def diagonal(self) -> "BiPoly":
        """Substitute y = x, collapsing each term to a single variable."""
        data: Dict[Exponents, int] = {}
        for (i, j), c in self._terms.items():
            key = (i + j, 0)
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            else:
                del data[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = data
        return result

    def divide_exact_x_minus_1(self) -> "BiPoly":
        """Exact quotient by (x - 1), by synthetic division on each y-slice.

        Raises ValueError if any slice leaves a nonzero remainder, i.e. if
        (x - 1) does not divide the polynomial.
        """
        slices: Dict[int, Dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            slices.setdefault(j, {})[i] = c
        data: Dict[Exponents, int] = {}
        for j, coeffs in slices.items():
            top = max(coeffs)
            running = 0
            for i in range(top, 0, -1):
                running += coeffs.get(i, 0)
                if running:
                    data[(i - 1, j)] = running
            remainder = coeffs.get(0, 0) + running
            if remainder:
                raise ValueError(f"not divisible by (x - 1): remainder {remainder} at y^{j}")
        result = BiPoly.__new__(BiPoly)
        result._terms = data
        return result

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        """Canonical JSON object with coefficients as decimal strings."""
        return {
            "terms": [
                {"x": i, "y": j, "c": str(c)} for (i, j), c in self.sorted_terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BiPoly":
        terms = obj["terms"]
        return cls({(int(t["x"]), int(t["y"])): int(t["c"]) for t in terms})

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls.from_json_obj(json.loads(text))

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            body = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"BiPoly({self._terms!r})"
