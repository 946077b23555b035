"""
==========================
Year: 2026
==========================
This module contains exact arithmetic in F_q, F_{q^2} and F_{q^3}: polynomials over the base field,
irreducibility testing, field contexts with a verified primitive element and the element operations
used by the Ruzsa, Bose and Singer constructions.

All arithmetic is done by galois. Over a prime base field the context wraps galois.GF(p^e) built on the
chosen modulus. Over a prime-power base field F_q (q = p^m) elements are galois polynomials over GF(q)
reduced by the modulus. Scalars of F_q are the integer labels [0, q) of galois.GF(q) (the
polynomial-evaluated-at-p encoding).
"""

import dataclasses
import itertools
import logging
import re
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple, Type

import galois
import numpy as np

from gsidon.core.model import ContextError, InvalidInputError, ModulusError, PrimitivityError

logger = logging.getLogger(__name__)

MAX_DEGREE = 3
MAX_BASE_ORDER = 2 ** 12
MAX_MULTIPLICATIVE_ORDER = 2 ** 64
POWER_BLOCK = 2 ** 16


def check_base_order(q: int):
    if not isinstance(q, (int, np.integer)) or q < 2 or not galois.is_prime_power(int(q)):
        raise InvalidInputError(f"Base order {q} is not a prime power")
    if not galois.is_prime(int(q)) and q > MAX_BASE_ORDER:
        raise InvalidInputError(f"Prime-power base order {q} exceeds the supported maximum of {MAX_BASE_ORDER}")


@lru_cache(maxsize=None)
def base_field(q: int) -> Type[galois.FieldArray]:
    check_base_order(q)
    logger.debug("Building GF(%d)", q)
    return galois.GF(int(q))


class Poly:
    """A polynomial over F_q, constant term first, without trailing zero coefficients."""

    coeffs: Tuple[int, ...]
    q: int

    def __init__(self, coeffs: Sequence[int], q: int):
        coeffs = [int(c) for c in coeffs]
        for c in coeffs:
            if c < 0 or c >= q:
                raise InvalidInputError(f"Coefficient {c} not in [0, {q})")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.q = q

    def to_galois(self) -> galois.Poly:
        return galois.Poly(list(self.coeffs) or [0], field=base_field(self.q), order="asc")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, Poly) and self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.q))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)} over F_{self.q})"

    def to_json(self):
        return {
            'poly': format_poly(self),
            'q': self.q
        }


_term_pattern = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, q: int) -> Poly:
    """
    Parses "x^2+3x+6" style text over F_q. Unit coefficients may be omitted, terms may come in any order
    and repeated degrees are summed. For prime q integer coefficients are reduced mod q; for prime-power
    q they are element labels.
    """
    GF = base_field(q)
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("Empty polynomial")
    if compact[0] not in "+-":
        compact = "+" + compact
    pieces = re.findall(r"([+-])([^+-]*)", compact)
    if "".join(sign + body for sign, body in pieces) != compact:
        raise ValueError(f"Malformed polynomial '{text}'")
    terms = {}
    for sign, body in pieces:
        match = _term_pattern.match(body)
        if not body or match is None or (match.group(1) == "" and match.group(2) is None):
            raise ValueError(f"Malformed term '{sign}{body}' in '{text}'")
        literal = int(match.group(1)) if match.group(1) else 1
        if match.group(2) is None:
            degree = 0
        else:
            degree = int(match.group(3)) if match.group(3) else 1
        if GF.is_prime_field:
            literal %= q
        elif literal >= q:
            raise ValueError(f"Coefficient {literal} is not an element label of F_{q}")
        c = GF(literal) if sign == "+" else -GF(literal)
        terms[degree] = terms.get(degree, GF(0)) + c
    return Poly([int(terms.get(degree, 0)) for degree in range(max(terms) + 1)], q)


def format_poly(poly: Poly) -> str:
    if poly.is_zero():
        return "0"
    terms = []
    for degree in range(poly.degree, -1, -1):
        c = poly.coeffs[degree]
        if c == 0:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        power = "x" if degree == 1 else f"x^{degree}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms)


def is_irreducible(p: int, f: Poly) -> bool:
    """
    :param p: the order of the base field (a prime, or a prime power within the supported range).
    :param f: a polynomial of degree 1 to 3 over F_p.
    :return: True iff f has no nontrivial factorization over F_p.
    """
    check_base_order(p)
    if f.q != p:
        raise InvalidInputError(f"Polynomial over F_{f.q} tested over F_{p}")
    if f.degree < 1:
        raise InvalidInputError(f"Irreducibility of a degree {f.degree} polynomial is undefined")
    if f.degree > MAX_DEGREE:
        raise InvalidInputError(f"Degree {f.degree} exceeds the supported maximum of {MAX_DEGREE}")
    return bool(f.to_galois().is_irreducible())


@dataclasses.dataclass(frozen=True)
class FieldElem:
    """Coefficients of 1, theta, theta^2 in the power basis of the modulus root."""
    coeffs: Tuple[int, ...]
    ctx_key: Tuple

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return format_poly(Poly(self.coeffs, self.ctx_key[0]))


class FieldCtx:
    """
    F_{q^e} = F_q[x] / (modulus) together with a generator theta of its multiplicative group. For e >= 2
    theta is the class of x; for e = 1 theta is a primitive element of
    F_q, the root of the linear modulus when one is given.

    `array` is the galois field class holding the elements when one exists: GF(q) for e = 1 and
    GF(p^e) on the modulus for a prime base. It is None for extensions of a prime-power base, whose
    elements are reduced galois polynomials.
    """

    q: int
    p: int
    e: int
    modulus: Poly
    generator: FieldElem
    base: Type[galois.FieldArray]
    array: Optional[Type[galois.FieldArray]]
    modulus_poly: galois.Poly
    key: Tuple

    def __init__(self, q: int, e: int, modulus: Poly, generator_coeffs: Sequence[int]):
        self.q = q
        self.e = e
        self.modulus = modulus
        self.base = base_field(q)
        self.p = int(self.base.characteristic)
        self.modulus_poly = modulus.to_galois()
        if e == 1:
            self.array = self.base
        elif self.base.is_prime_field:
            self.array = galois.GF(q ** e, irreducible_poly=self.modulus_poly)
        else:
            self.array = None
        self.key = (q, e, modulus.coeffs)
        self.generator = self.element(generator_coeffs)

    @property
    def order(self) -> int:
        return self.q ** self.e

    @property
    def group_order(self) -> int:
        return self.q ** self.e - 1

    def element(self, coeffs: Sequence[int]) -> FieldElem:
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > self.e:
            if any(coeffs[self.e:]):
                raise InvalidInputError(f"Element {coeffs} has more than {self.e} coefficients")
            coeffs = coeffs[:self.e]
        for c in coeffs:
            if c < 0 or c >= self.q:
                raise InvalidInputError(f"Coefficient {c} not in [0, {self.q})")
        return FieldElem(tuple(coeffs + [0] * (self.e - len(coeffs))), self.key)

    def scalar(self, c: int) -> FieldElem:
        return self.element([c])

    def one(self) -> FieldElem:
        return self.scalar(1)

    def zero(self) -> FieldElem:
        return self.scalar(0)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key and self.generator == other.generator

    def __hash__(self):
        return hash((self.key, self.generator))

    def __repr__(self):
        return f"FieldCtx(F_{self.q}^{self.e}, modulus={format_poly(self.modulus)}, generator={self.generator})"

    def to_json(self):
        return {
            'q': self.q,
            'p': self.p,
            'e': self.e,
            'modulus': format_poly(self.modulus),
            'generator': list(self.generator.coeffs)
        }


def _check(ctx: FieldCtx, *elems: FieldElem):
    for a in elems:
        if a.ctx_key != ctx.key:
            raise ContextError(f"Element {a} does not belong to {ctx}")


def _to_array(ctx: FieldCtx, a: FieldElem) -> galois.FieldArray:
    if ctx.e == 1:
        return ctx.array(a.coeffs[0])
    return ctx.array.Vector(list(reversed(a.coeffs)))


def _rows(ctx: FieldCtx, values: galois.FieldArray) -> List[Tuple[int, ...]]:
    """Power-basis coefficient tuples of a 1-d array of field elements."""
    if ctx.e == 1:
        return [(c,) for c in values.view(np.ndarray).tolist()]
    return [tuple(reversed(row)) for row in values.vector().view(np.ndarray).tolist()]


def _from_array(ctx: FieldCtx, x: galois.FieldArray) -> FieldElem:
    return FieldElem(_rows(ctx, np.atleast_1d(x))[0], ctx.key)


def _to_poly(ctx: FieldCtx, a: FieldElem) -> galois.Poly:
    return galois.Poly(list(a.coeffs), field=ctx.base, order="asc")


def _from_poly(ctx: FieldCtx, f: galois.Poly) -> FieldElem:
    return FieldElem(tuple(f.coefficients(ctx.e, order="asc").view(np.ndarray).tolist()), ctx.key)


def fe_add(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    _check(ctx, a, b)
    return FieldElem(tuple((ctx.base(list(a.coeffs)) + ctx.base(list(b.coeffs))).view(np.ndarray).tolist()), ctx.key)


def fe_neg(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    _check(ctx, a)
    return FieldElem(tuple((-ctx.base(list(a.coeffs))).view(np.ndarray).tolist()), ctx.key)


def fe_sub(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return fe_add(ctx, a, fe_neg(ctx, b))


def fe_mul(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    _check(ctx, a, b)
    if ctx.array is not None:
        return _from_array(ctx, _to_array(ctx, a) * _to_array(ctx, b))
    return _from_poly(ctx, (_to_poly(ctx, a) * _to_poly(ctx, b)) % ctx.modulus_poly)


def fe_pow(ctx: FieldCtx, a: FieldElem, n: int) -> FieldElem:
    _check(ctx, a)
    if n < 0:
        raise InvalidInputError(f"Negative exponent {n}")
    if ctx.array is not None:
        return _from_array(ctx, _to_array(ctx, a) ** int(n))
    return _from_poly(ctx, pow(_to_poly(ctx, a), int(n), ctx.modulus_poly))


def fe_inv(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    _check(ctx, a)
    if a.is_zero():
        raise InvalidInputError("Zero has no inverse")
    if ctx.array is not None:
        return _from_array(ctx, _to_array(ctx, a) ** -1)
    return fe_pow(ctx, a, ctx.group_order - 1)


def element_order(ctx: FieldCtx, a: FieldElem) -> int:
    _check(ctx, a)
    if a.is_zero():
        raise InvalidInputError("Zero has no multiplicative order")
    if ctx.array is not None:
        return int(_to_array(ctx, a).multiplicative_order())
    f = _to_poly(ctx, a)
    one = galois.Poly([1], field=ctx.base)
    order = ctx.group_order
    primes, _ = galois.factors(order)
    for prime in map(int, primes):
        while order % prime == 0 and pow(f, order // prime, ctx.modulus_poly) == one:
            order //= prime
    return order


def is_primitive(ctx: FieldCtx, a: FieldElem) -> bool:
    return not a.is_zero() and element_order(ctx, a) == ctx.group_order


def primitive_root(q: int) -> int:
    """The least element label of F_q generating its multiplicative group."""
    check_base_order(q)
    if galois.is_prime(q):
        return int(galois.primitive_root(q))
    # labels below p lie in the prime subfield, so the least primitive label is x = p (Conway modulus)
    return int(base_field(q).primitive_element)


def powers(ctx: FieldCtx, base: Optional[FieldElem] = None) -> Iterator[Tuple[int, FieldElem]]:
    """Yields (a, base^a) for a = 1 .. q^e - 1."""
    base = ctx.generator if base is None else base
    _check(ctx, base)
    if ctx.array is None:
        f = _to_poly(ctx, base)
        current = f
        for a in range(1, ctx.group_order + 1):
            yield a, _from_poly(ctx, current)
            current = (current * f) % ctx.modulus_poly
        return
    x = _to_array(ctx, base)
    for start in range(1, ctx.group_order + 1, POWER_BLOCK):
        exponents = np.arange(start, min(start + POWER_BLOCK, ctx.group_order + 1))
        for a, coeffs in zip(exponents.tolist(), _rows(ctx, x ** exponents)):
            yield a, FieldElem(coeffs, ctx.key)


def make_field(p: int, e: int, modulus: Optional[Poly] = None) -> FieldCtx:
    """
    :param p: order of the base field (prime, or a prime power within the supported range).
    :param e: extension degree, 1, 2 or 3.
    :param modulus: optional monic modulus of degree e. When omitted, monic polynomials are tried in
    lexicographic order of their (constant first) coefficient vectors and the first primitive one is used.
    :return: a FieldCtx whose generator has multiplicative order p^e - 1.
    """
    check_base_order(p)
    if e not in (1, 2, 3):
        raise InvalidInputError(f"Extension degree {e} not in 1..3")
    if p ** e - 1 >= MAX_MULTIPLICATIVE_ORDER:
        raise InvalidInputError(f"F_{p}^{e} is too large")

    if modulus is not None:
        if modulus.q != p or modulus.degree != e or not modulus.is_monic():
            raise InvalidInputError(f"Modulus {format_poly(modulus)} is not monic of degree {e} over F_{p}")
        if not is_irreducible(p, modulus):
            raise ModulusError(f"Modulus {format_poly(modulus)} is reducible over F_{p}")
        if not modulus.to_galois().is_primitive():
            raise PrimitivityError(f"x is not primitive modulo {format_poly(modulus)} over F_{p}")
        return FieldCtx(p, e, modulus, _root_of(p, modulus))

    if e == 1:
        return FieldCtx(p, 1, Poly([0, 1], p), [primitive_root(p)])

    for tail in itertools.product(range(p), repeat=e):
        if tail[0] == 0:
            continue
        candidate = Poly(list(tail) + [1], p)
        if candidate.to_galois().is_primitive():
            logger.debug("Selected modulus %s for F_%d^%d", format_poly(candidate), p, e)
            return FieldCtx(p, e, candidate, [0, 1])
    raise PrimitivityError(f"No monic irreducible modulus of degree {e} over F_{p} has x primitive")


def _root_of(p: int, modulus: Poly) -> List[int]:
    # the class of x; for a linear modulus x + c0 that is the scalar -c0
    if modulus.degree == 1:
        return [int(-base_field(p)(modulus.coeffs[0]))]
    return [0, 1]
