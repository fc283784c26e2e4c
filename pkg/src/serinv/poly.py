"""Sparse multivariate polynomials over exact rationals.

Values are immutable; every operation returns a new polynomial in
canonical form.  The canonical text form is the interchange format used
by the CLI and the tests: terms are sorted so that powers of the last
variable in the universe dominate (for the polynomials this package
prints, that groups terms by ascending power of ``x``, matching the way
they are usually displayed), factors inside a monomial follow the
universe order, and coefficients are written ``p`` or ``p/q``.

>>> s1, s2, x = MPoly.symbols("s1", "s2", "x")
>>> print(1 + 2 * s1 * x + (s1**2 + s2) * x**2)
1 + 2*s1*x + s1^2*x^2 + s2*x^2
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from . import _kernel
from .errors import ExactDivisionError, InputError, UnknownVariableError
from .rational import Scalar, as_exact, format_rational, parse_rational


def name_sort_key(name: str) -> tuple[str, int]:
    """Order variable names naturally: ``s2`` before ``s10``."""
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return (head, int(tail) if tail else -1)


def _sorted_universe(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=name_sort_key))


@dataclass(frozen=True)
class Monomial:
    """A product of variable powers, e.g. ``s1^2*x^2``; the unit is empty."""

    exponents: tuple[tuple[str, int], ...]  # (name, exponent > 0), name-sorted

    @classmethod
    def from_map(cls, exps: Mapping[str, int]) -> "Monomial":
        items = tuple(
            (name, e)
            for name, e in sorted(exps.items(), key=lambda kv: name_sort_key(kv[0]))
            if e
        )
        if any(e < 0 for _, e in items):
            raise InputError("monomial exponents must be positive")
        return cls(items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in self.exponents
        )


class MPoly:
    """Sparse polynomial in named indeterminates with exact coefficients."""

    __slots__ = ("_names", "_terms")

    def __init__(
        self,
        terms: Mapping[tuple[int, ...], Scalar] | None = None,
        names: Sequence[str] = (),
    ):
        given = tuple(names)
        if len(set(given)) != len(given):
            raise InputError("duplicate variable names in universe")
        universe = _sorted_universe(given)
        clean: dict[tuple[int, ...], Scalar] = {}
        if terms:
            order = [given.index(n) for n in universe] if given != universe else None
            for exps, coeff in terms.items():
                if len(exps) != len(given):
                    raise InputError("exponent vector does not match universe")
                coeff = as_exact(coeff)
                if not coeff:
                    continue
                key = tuple(exps[i] for i in order) if order else tuple(exps)
                if any(e < 0 for e in key):
                    raise InputError("negative exponent")
                clean[key] = coeff
        object.__setattr__(self, "_names", universe)
        object.__setattr__(self, "_terms", clean)

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict, names: tuple[str, ...]) -> "MPoly":
        poly = cls.__new__(cls)
        object.__setattr__(poly, "_names", names)
        object.__setattr__(poly, "_terms", terms)
        return poly

    @classmethod
    def zero(cls, names: Sequence[str] = ()) -> "MPoly":
        return cls._raw({}, _sorted_universe(names))

    @classmethod
    def one(cls, names: Sequence[str] = ()) -> "MPoly":
        return cls.constant(1, names)

    @classmethod
    def constant(cls, value: Scalar, names: Sequence[str] = ()) -> "MPoly":
        universe = _sorted_universe(names)
        value = as_exact(value)
        terms = {(0,) * len(universe): value} if value else {}
        return cls._raw(terms, universe)

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        return cls._raw({(1,): 1}, (name,))

    @classmethod
    def symbols(cls, *names: str) -> tuple["MPoly", ...]:
        """Generator polynomials for each name, over the shared universe."""
        universe = _sorted_universe(names)
        out = []
        for name in names:
            exps = tuple(1 if n == name else 0 for n in universe)
            out.append(cls._raw({exps: 1}, universe))
        return tuple(out)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def universe(self) -> tuple[str, ...]:
        return self._names

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _sorted_keys(self) -> list[tuple[int, ...]]:
        # canonical order: ascending, last universe variable most significant
        return sorted(self._terms, key=lambda e: e[::-1])

    def terms(self) -> Iterator[tuple[Monomial, Scalar]]:
        """Canonically ordered (monomial, coefficient) pairs."""
        for exps in self._sorted_keys():
            mono = Monomial(
                tuple((n, e) for n, e in zip(self._names, exps) if e)
            )
            yield mono, self._terms[exps]

    def term_count(self) -> int:
        return len(self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * len(self._names), 0)

    def as_constant(self) -> Scalar | None:
        """The value of a constant polynomial, or None if non-constant."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            ((exps, coeff),) = self._terms.items()
            if not any(exps):
                return coeff
        return None

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if name not in self._names:
            return 0
        i = self._names.index(name)
        return max(e[i] for e in self._terms)

    def coefficient_in(self, name: str, power: int) -> "MPoly":
        """The coefficient of ``name**power``, as a polynomial."""
        if name not in self._names:
            return self if power == 0 else MPoly.zero(self._names)
        i = self._names.index(name)
        terms = {
            e[:i] + (0,) + e[i + 1:]: c
            for e, c in self._terms.items()
            if e[i] == power
        }
        return MPoly._raw(terms, self._names)

    def truncate_in(self, name: str, max_power: int) -> "MPoly":
        """Drop all terms whose power of ``name`` exceeds ``max_power``."""
        if name not in self._names:
            return self
        i = self._names.index(name)
        terms = {e: c for e, c in self._terms.items() if e[i] <= max_power}
        return MPoly._raw(terms, self._names)

    # ------------------------------------------------------------------
    # universe plumbing
    # ------------------------------------------------------------------

    def _embedded(self, universe: tuple[str, ...]) -> dict:
        """Terms re-indexed over a superset universe."""
        if universe == self._names:
            return self._terms
        pos = [universe.index(n) for n in self._names]
        width = len(universe)
        out = {}
        for exps, coeff in self._terms.items():
            key = [0] * width
            for p, e in zip(pos, exps):
                key[p] = e
            out[tuple(key)] = coeff
        return out

    def with_universe(self, names: Sequence[str]) -> "MPoly":
        universe = _sorted_universe(set(names) | set(self._names))
        return MPoly._raw(self._embedded(universe), universe)

    @staticmethod
    def _aligned(p: "MPoly", q: "MPoly"):
        if p._names == q._names:
            return p._terms, q._terms, p._names
        universe = _sorted_universe(p._names + q._names)
        return p._embedded(universe), q._embedded(universe), universe

    def _coerced(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other, self._names)
        return None

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        a, b, universe = MPoly._aligned(self, other)
        out = dict(a)
        for exps, coeff in b.items():
            v = out.get(exps)
            if v is None:
                out[exps] = coeff
            else:
                v = v + coeff
                if v:
                    out[exps] = as_exact(v)
                else:
                    del out[exps]
        return MPoly._raw(out, universe)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()}, self._names)

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_exact(other)
            if not other:
                return MPoly.zero(self._names)
            if other == 1:
                return self
            return MPoly._raw(
                {e: as_exact(c * other) for e, c in self._terms.items()},
                self._names,
            )
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b, universe = MPoly._aligned(self, other)
        return MPoly._raw(_kernel.mul_terms(a, b, len(universe)), universe)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise InputError("polynomial power must be a natural number")
        result = MPoly.one(self._names)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base_needed = e > 1
            e >>= 1
            if base_needed and e:
                base = base * base
        return result

    def divexact(self, other) -> "MPoly":
        """Exact quotient (raises ExactDivisionError when not divisible)."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ExactDivisionError("division by zero")
            inv = as_exact(Fraction(1, 1) / other)
            return self * inv
        a, b, universe = MPoly._aligned(self, other)
        return MPoly._raw(_kernel.divexact_terms(a, b, len(universe)), universe)

    # ------------------------------------------------------------------
    # substitution
    # ------------------------------------------------------------------

    def substitute(self, values: Mapping[str, "MPoly | Scalar"]) -> "MPoly":
        """Replace named variables by polynomials or rationals."""
        for name in values:
            if name not in self._names:
                raise UnknownVariableError(f"unknown indeterminate {name!r}")
        if not values:
            return self
        kept = tuple(n for n in self._names if n not in values)
        kept_pos = [self._names.index(n) for n in kept]
        sub_pos = [(i, n) for i, n in enumerate(self._names) if n in values]
        powers: dict[str, list] = {}

        def power_of(name: str, e: int):
            cache = powers.setdefault(name, [MPoly.one(), values[name]])
            while len(cache) <= e:
                cache.append(cache[-1] * values[name])
            return cache[e]

        total = MPoly.zero(kept)
        for exps, coeff in self._terms.items():
            base_key = tuple(exps[p] for p in kept_pos)
            factor: MPoly | Scalar = MPoly._raw(
                {base_key: coeff} if coeff else {}, kept
            )
            for i, name in sub_pos:
                if exps[i]:
                    factor = factor * power_of(name, exps[i])
            total = total + factor
        return total

    # ------------------------------------------------------------------
    # comparison & text
    # ------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            value = self.as_constant()
            return value is not None and value == other
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b, _ = MPoly._aligned(self, other)
        return a == b

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exps in self._sorted_keys():
            coeff = self._terms[exps]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(self._names, exps)
                if e
            )
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly({self})"

    # ------------------------------------------------------------------
    # parsing
    # ------------------------------------------------------------------

    _FACTOR_RE = re.compile(
        r"(?P<rat>\d+(?:/\d+)?)$|(?P<var>[A-Za-z_][A-Za-z_0-9]*?)(?:\^(?P<exp>\d+))?$"
    )

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        """Parse the canonical text form back into a polynomial."""
        src = text.strip()
        if not src:
            raise InputError("empty polynomial text")
        chunks = re.split(r"\s*([+-])\s*", src)
        if chunks[0] == "":
            chunks = chunks[1:]
        else:
            chunks = ["+"] + chunks
        if len(chunks) % 2 != 0:
            raise InputError(f"cannot parse polynomial {text!r}")
        parsed: list[tuple[Scalar, dict[str, int]]] = []
        for sign, chunk in zip(chunks[::2], chunks[1::2]):
            if not chunk:
                raise InputError(f"cannot parse polynomial {text!r}")
            coeff: Scalar = -1 if sign == "-" else 1
            exps: dict[str, int] = {}
            for factor in chunk.split("*"):
                factor = factor.strip()
                m = cls._FACTOR_RE.fullmatch(factor)
                if m is None:
                    raise InputError(f"bad factor {factor!r} in {text!r}")
                if m.group("rat"):
                    coeff = coeff * parse_rational(m.group("rat"))
                else:
                    e = int(m.group("exp") or 1)
                    name = m.group("var")
                    exps[name] = exps.get(name, 0) + e
            parsed.append((coeff, exps))
        universe = _sorted_universe(n for _, e in parsed for n in e)
        total = MPoly.zero(universe)
        for coeff, exps in parsed:
            key = tuple(exps.get(n, 0) for n in universe)
            total = total + MPoly._raw({key: as_exact(coeff)} if coeff else {}, universe)
        return total


def as_mpoly(value: "MPoly | Scalar", names: Sequence[str] = ()) -> MPoly:
    """Lift a rational to a constant polynomial; pass polynomials through."""
    if isinstance(value, MPoly):
        return value
    return MPoly.constant(value, names)


def binomial_poly(arg: "MPoly | Scalar", m: int):
    """Falling-factorial binomial ``arg*(arg-1)***(arg-m+1)/m!``.

    Total in the first argument; for integer ``arg`` with 0 <= arg < m
    the product hits zero.  Returns the same kind of value it was given.
    """
    if m < 0:
        raise InputError("binomial order must be a natural number")
    if isinstance(arg, MPoly):
        result = MPoly.one(arg.universe)
        for i in range(m):
            result = result * (arg - i)
        return result * Fraction(1, math.factorial(m))
    falling = 1
    for i in range(m):
        falling *= arg - i
    return as_exact(Fraction(falling, math.factorial(m)))


def lagrange_interpolate(
    points: Sequence[tuple[Scalar, "MPoly | Scalar"]], var: str = "x"
) -> MPoly:
    """Unique polynomial of degree < len(points) through the given points.

    Nodes are rationals; values may be rationals or polynomials (the
    interpolation variable must not occur in them).
    """
    if not points:
        raise InputError("interpolation needs at least one point")
    nodes = [as_exact(x) for x, _ in points]
    if len(set(nodes)) != len(nodes):
        raise InputError("interpolation nodes must be pairwise distinct")
    x = MPoly.variable(var)
    total = MPoly.zero((var,))
    for i, (xi, yi) in enumerate(points):
        basis = MPoly.one((var,))
        denom: Scalar = 1
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = basis * (x - xj)
            denom = denom * (nodes[i] - xj)
        scale = as_exact(Fraction(1, 1) / denom)
        total = total + basis * scale * yi
    return total
