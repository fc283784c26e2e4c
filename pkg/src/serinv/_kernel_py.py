"""Pure-Python kernel for sparse polynomial term maps.

A term map is ``dict[tuple[int, ...], coeff]`` where the key is the
exponent vector over a fixed, ordered variable universe and the
coefficient is an exact rational (``int`` or ``Fraction``; zero values
never stored).  These two functions are the multiplication and exact
division inner loops that dominate symbolic determinant work; the
compiled twin in ``_kernel_cy`` implements the same contract.

Internally exponent vectors are packed into single integers (fixed bit
width per variable) so that monomial products become integer additions
and the accumulator dict hashes machine words instead of tuples.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import ExactDivisionError

backend = "python"

# below this many coefficient products the packing overhead is not worth it
_SMALL_PRODUCT = 64


def _normalized(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _max_exponents(terms, nvars):
    mx = [0] * nvars
    for exps in terms:
        for i in range(nvars):
            if exps[i] > mx[i]:
                mx[i] = exps[i]
    return mx


def _pack_all(terms, width, nvars):
    packed = []
    for exps, c in terms.items():
        key = 0
        for i in range(nvars - 1, -1, -1):
            key = (key << width) | exps[i]
        packed.append((key, c))
    return packed


def _unpack(key, width, nvars, mask):
    return tuple((key >> (i * width)) & mask for i in range(nvars))


def mul_terms(a, b, nvars):
    """Product of two term maps over a shared ``nvars``-variable universe."""
    if not a or not b:
        return {}

    if len(a) * len(b) <= _SMALL_PRODUCT:
        acc = {}
        get = acc.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                v = get(key)
                acc[key] = ca * cb if v is None else v + ca * cb
        return {e: _normalized(c) for e, c in acc.items() if c}

    maxa = _max_exponents(a, nvars)
    maxb = _max_exponents(b, nvars)
    width = max(2, max((ma + mb).bit_length() + 1 for ma, mb in zip(maxa, maxb)))
    items_a = _pack_all(a, width, nvars)
    items_b = _pack_all(b, width, nvars)

    acc = {}
    get = acc.get
    for ea, ca in items_a:
        for eb, cb in items_b:
            key = ea + eb
            v = get(key)
            acc[key] = ca * cb if v is None else v + ca * cb

    mask = (1 << width) - 1
    out = {}
    for key, c in acc.items():
        if c:
            out[_unpack(key, width, nvars, mask)] = _normalized(c)
    return out


def _coeff_div(c, d):
    if type(c) is int and type(d) is int:
        q, r = divmod(c, d)
        if r == 0:
            return q
        return Fraction(c, d)
    return _normalized(c / d if type(c) is Fraction else Fraction(c) / d)


def divexact_terms(a, b, nvars):
    """Exact quotient of term maps; raises ExactDivisionError otherwise.

    Standard single-divisor polynomial division under the packed-integer
    monomial order, with a lazy max-heap tracking the running remainder's
    leading term.  Exactness is required, not checked in advance: any
    leftover remainder raises.
    """
    if not b:
        raise ExactDivisionError("division by zero polynomial")
    if not a:
        return {}

    if len(b) == 1:
        ((eb, cb),) = b.items()
        out = {}
        for ea, ca in a.items():
            for x, y in zip(ea, eb):
                if x < y:
                    raise ExactDivisionError("monomial does not divide term")
            out[tuple(x - y for x, y in zip(ea, eb))] = _coeff_div(ca, cb)
        return out

    maxa = _max_exponents(a, nvars)
    maxb = _max_exponents(b, nvars)
    width = max(2, max((ma + mb).bit_length() + 1 for ma, mb in zip(maxa, maxb)))
    mask = (1 << width) - 1

    remainder = dict(_pack_all(a, width, nvars))
    divisor = sorted(_pack_all(b, width, nvars), key=lambda t: -t[0])
    lead_key, lead_coeff = divisor[0]
    lead_fields = _unpack(lead_key, width, nvars, mask)
    tail = divisor[1:]

    heap = [-k for k in remainder]
    heapq.heapify(heap)
    quotient = {}

    while heap:
        key = -heapq.heappop(heap)
        c = remainder.pop(key, None)
        if c is None:
            continue  # stale heap entry
        for i in range(nvars):
            if ((key >> (i * width)) & mask) < lead_fields[i]:
                raise ExactDivisionError("leading term does not divide remainder")
        qkey = key - lead_key
        qc = _coeff_div(c, lead_coeff)
        quotient[qkey] = qc
        for bk, bc in tail:
            nk = qkey + bk
            prev = remainder.get(nk)
            if prev is None:
                remainder[nk] = -qc * bc
                heapq.heappush(heap, -nk)
            else:
                v = prev - qc * bc
                if v:
                    remainder[nk] = v
                else:
                    del remainder[nk]

    if remainder:
        raise ExactDivisionError("nonzero remainder in exact division")
    return {
        _unpack(k, width, nvars, mask): _normalized(c) for k, c in quotient.items()
    }
