"""
==========================
Year: 2026
==========================
This module contains the explicit constructions of generalized Sidon sets: the Ruzsa, Bose and Singer
families indexed by a set K, the CRT combination of two cyclic sets, linear interleaving with the gap
shift, and the four-block family. Each of the three field constructions is the disjoint union of its
per-index components, which are exposed as well.
"""

import logging
import math
from typing import Dict, Iterable, List, Sequence, Tuple

import galois

from gsidon.core.convolution import cyclic_gaps, g_value
from gsidon.core.finite_field import FieldCtx, base_field, make_field, powers
from gsidon.core.model import (CoprimalityError, CyclicSet, IntegerSet, InvalidIndexError, InvalidInputError,
                               PrimitivityError, WitnessError)

logger = logging.getLogger(__name__)

IndexPair = Tuple[int, int]


def crt(residues: Sequence[int], moduli: Sequence[int]) -> Tuple[int, int]:
    """
    :return: (x, N) with x the solution in [0, N) of x = residues[i] (mod moduli[i]) and N = prod(moduli).
    """
    moduli = [int(n) for n in moduli]
    residues = [int(c) % n for c, n in zip(residues, moduli)]
    for i, n in enumerate(moduli):
        if any(math.gcd(n, m) != 1 for m in moduli[i + 1:]):
            raise CoprimalityError(f"Moduli {moduli} are not pairwise coprime")
    product = math.prod(moduli)
    if len(moduli) < 2:
        return (residues[0] if residues else 0), product
    return int(galois.crt(residues, moduli)) % product, product


def _check_scalar_indices(K: Iterable[int], q: int, what: str) -> List[int]:
    indices = sorted(set(int(k) for k in K))
    if not indices:
        raise InvalidIndexError(f"{what} index set K is empty")
    offending = [k for k in indices if k < 1 or k >= q]
    if offending:
        raise InvalidIndexError(f"{what} indices {offending} not in [1, {q})", offending)
    return indices


def _check_index_pairs(K: Iterable[IndexPair], q: int) -> List[IndexPair]:
    GF = base_field(q)
    pairs = [(int(a), int(b)) for a, b in K]
    if not pairs:
        raise InvalidIndexError("Singer index set K is empty")
    offending = [pair for pair in pairs if not (0 <= pair[0] < q and 0 <= pair[1] < q)]
    if offending:
        raise InvalidIndexError(f"Index pairs {offending} not in F_{q} x F_{q}", offending)
    zero = [pair for pair in pairs if pair == (0, 0)]
    if zero:
        raise InvalidIndexError("Index pair <0,0> is not allowed", zero)
    for i, (a, b) in enumerate(pairs):
        for c, d in pairs[i + 1:]:
            if GF(a) * GF(d) == GF(b) * GF(c):
                raise InvalidIndexError(f"Index pairs <{a},{b}> and <{c},{d}> are F_{q}-multiples of each other",
                                        [(a, b), (c, d)])
    return pairs


def ruzsa_components(p: int, theta: int, K: Iterable[int]) -> List[CyclicSet]:
    """R_k = {a_{t,k} : 1 <= t < p} mod p^2 - p, with a = t (mod p-1) and a = k theta^t (mod p)."""
    if not galois.is_prime(p):
        raise InvalidInputError(f"Ruzsa sets need a prime, got {p}")
    indices = _check_scalar_indices(K, p, "Ruzsa")
    theta %= p
    if theta == 0 or not galois.is_primitive_root(theta, p):
        raise PrimitivityError(f"{theta} is not a primitive root mod {p}")
    n = p * p - p
    components = []
    for k in indices:
        component = []
        power = 1
        for t in range(1, p):
            power = power * theta % p
            a, _ = crt([t % (p - 1), k * power % p], [p - 1, p])
            component.append(a)
        components.append(CyclicSet(n, component))
    logger.debug("Ruzsa components for p=%d theta=%d K=%s", p, theta, indices)
    return components


def ruzsa(p: int, theta: int, K: Iterable[int]) -> CyclicSet:
    return _union(p * p - p, ruzsa_components(p, theta, K))


def bose_components(ctx: FieldCtx, K: Iterable[int]) -> List[CyclicSet]:
    """B_k = {a in [q^2 - 1] : theta^a - k theta in F_q}, by forward power iteration."""
    if ctx.e != 2:
        raise InvalidInputError(f"Bose sets need a quadratic extension, got degree {ctx.e}")
    indices = _check_scalar_indices(K, ctx.q, "Bose")
    n = ctx.group_order
    members: Dict[int, List[int]] = {k: [] for k in indices}
    for a, elem in powers(ctx):
        theta_coeff = elem.coeffs[1]
        if theta_coeff in members:
            members[theta_coeff].append(a % n)
    return [CyclicSet(n, members[k]) for k in indices]


def bose(ctx: FieldCtx, K: Iterable[int]) -> CyclicSet:
    return _union(ctx.group_order, bose_components(ctx, K))


def _lift_members(ctx: FieldCtx, pairs: List[IndexPair]) -> Dict[IndexPair, List[int]]:
    members: Dict[IndexPair, List[int]] = {pair: [] for pair in pairs}
    for a, elem in powers(ctx):
        key = (elem.coeffs[1], elem.coeffs[2])
        if key in members:
            members[key].append(a % ctx.group_order)
    return members


def singer_components(ctx: FieldCtx, K: Iterable[IndexPair]) -> List[CyclicSet]:
    """
    The residue classes mod q^2 + q + 1 meeting T(<k1,k2>) = {a : theta^a - k2 theta^2 - k1 theta in F_q},
    one component per pair; {0} is adjoined to the first component.
    """
    if ctx.e != 3:
        raise InvalidInputError(f"Singer sets need a cubic extension, got degree {ctx.e}")
    pairs = _check_index_pairs(K, ctx.q)
    n = ctx.q * ctx.q + ctx.q + 1
    members = _lift_members(ctx, pairs)
    components = []
    for i, pair in enumerate(pairs):
        residues = {a % n for a in members[pair]}
        if i == 0:
            residues.add(0)
        components.append(CyclicSet(n, residues))
    return components


def singer(ctx: FieldCtx, K: Iterable[IndexPair]) -> CyclicSet:
    return _union(ctx.q * ctx.q + ctx.q + 1, singer_components(ctx, K))


def singer_lift(ctx: FieldCtx, K: Iterable[IndexPair]) -> CyclicSet:
    """The union of B<k1,k2> = {a in [q^3 - 1] : theta^a - k2 theta^2 - k1 theta in F_q}, kept mod q^3 - 1."""
    if ctx.e != 3:
        raise InvalidInputError(f"Singer lifts need a cubic extension, got degree {ctx.e}")
    pairs = _check_index_pairs(K, ctx.q)
    members = _lift_members(ctx, pairs)
    return _union(ctx.group_order, [CyclicSet(ctx.group_order, members[pair]) for pair in pairs])


def _union(n: int, components: List[CyclicSet]) -> CyclicSet:
    elements = set()
    for component in components:
        elements.update(component.elements)
    return CyclicSet(n, elements)


def crt_combine(M: CyclicSet, S: CyclicSet) -> CyclicSet:
    """M + yS = {m + y s mod xy} for M mod y and S mod x with gcd(x, y) = 1."""
    y, x = M.modulus, S.modulus
    if math.gcd(x, y) != 1:
        raise CoprimalityError(f"gcd({x}, {y}) = {math.gcd(x, y)}")
    return CyclicSet(x * y, {(m + y * s) % (x * y) for m in M for s in S})


def gap_shift(M: CyclicSet) -> IntegerSet:
    """
    Representatives of M in [1, y - maxgap + 1]: M is translated so that the element following a largest
    cyclic gap becomes 1. Among several largest gaps the lexicographically least result is taken.
    """
    gaps = cyclic_gaps(M)
    widest = max(gap for gap, _ in gaps)
    y = M.modulus
    candidates = [tuple(sorted((m - start) % y + 1 for m in M)) for gap, start in gaps if gap == widest]
    return IntegerSet(min(candidates))


def interleave_linear(M: CyclicSet, Sprime: IntegerSet) -> IntegerSet:
    """
    M' + y S' where M' is the gap-shifted copy of M mod y. The result lies in [1, y r + 1 - maxgap] when
    S' lies in [0, r), and its g-value is at most g(M) g(S').
    """
    if len(M) == 0:
        raise InvalidInputError("Cannot interleave with an empty cyclic set")
    shifted = gap_shift(M)
    y = M.modulus
    return IntegerSet({m + y * s for m in shifted for s in Sprime})


def block_set(g: int) -> IntegerSet:
    """
    [0, t) u {g - t + 2i : i < s} u [g, g + t) u [2g - t + 1, 3g - t + 1) with t = floor(g/3) and
    s = floor(g/6). Its g-value is at most g and it has g + 2t + s elements.
    """
    if g < 1:
        raise InvalidInputError(f"Block sets need g >= 1, got {g}")
    t, s = g // 3, g // 6
    elements = set(range(0, t))
    elements.update(g - t + 2 * i for i in range(s))
    elements.update(range(g, g + t))
    elements.update(range(2 * g - t + 1, 3 * g - t + 1))
    return IntegerSet(elements)


def kolountzakis_union(S: IntegerSet) -> IntegerSet:
    """S u (S + 1); for a Sidon set S disjoint from S + 1 the g-value is at most 4."""
    shifted = S.shifted(1)
    overlap = set(S.elements) & set(shifted.elements)
    if overlap:
        raise InvalidInputError(f"S and S + 1 share {sorted(overlap)}")
    return IntegerSet(set(S.elements) | set(shifted.elements))


def dense_set_construction(g: int, x: int, witness: IntegerSet, n: int) -> IntegerSet:
    """
    An explicit subset of [n] with g-value at most 2g and m |witness| elements, where m is the largest
    prime not exceeding sqrt(n / x): the m-element Bose-Sidon set mod m^2 - 1 interleaved with witness - 1.
    """
    if len(witness) == 0 or not witness.fits(1, x):
        raise WitnessError(f"Witness {witness} is not a nonempty subset of [1, {x}]", "container")
    if g_value(witness) > g:
        raise WitnessError(f"Witness {witness} has g-value {g_value(witness)} > {g}", "g-value")
    root = math.isqrt(n // x)
    if root < 2:
        raise InvalidInputError(f"n = {n} is too small for x = {x}: need n >= 4x")
    m = int(galois.prev_prime(root))
    M = bose(make_field(m, 2), [1])
    logger.info("Dense set for g=%d x=%d n=%d uses m=%d (%d elements mod %d)", g, x, n, m, len(M), M.modulus)
    return interleave_linear(M, witness.shifted(-1))
