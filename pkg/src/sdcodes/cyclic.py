"""Arithmetic in R = F2[x]/(x^p - 1) and its even-weight subring P.

When 2 is a primitive root modulo the odd prime p, the even-weight
polynomials P form a field isomorphic to F_{2^(p-1)} with multiplicative
identity e(x) = x + x^2 + ... + x^(p-1).  A ring element is a coefficient
mask: bit i of ``mask`` is the coefficient of x^i.

The distinguished elements used by the dihedral construction are ``a`` of
order q - 1 and ``b`` of order (q + 1)/p, where q = 2^((p-1)/2); they are
obtained from a primitive element alpha as a = alpha^(q+1), b = alpha^((q-1)p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import sympy


class HypothesisViolation(ValueError):
    """2 is not a primitive root modulo p, so P is not a field."""


@dataclass(frozen=True)
class RingElement:
    """Polynomial in F2[x]/(x^p - 1), packed as a coefficient mask."""

    p: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.p:
            raise ValueError("coefficient mask wider than p")

    @classmethod
    def from_exponents(cls, p: int, exponents) -> "RingElement":
        mask = 0
        for ex in exponents:
            mask ^= 1 << (ex % p)
        return cls(p, mask)

    @classmethod
    def parse(cls, p: int, text: str) -> "RingElement":
        """Parse either the exponent form ``x^1+x^4+1`` or a hex mask ``0x...``."""
        text = text.strip()
        if text.startswith("0x"):
            return cls(p, int(text, 16))
        if text == "0":
            return cls(p, 0)
        mask = 0
        for term in text.replace(" ", "").split("+"):
            if term == "1":
                mask ^= 1
            elif term == "x":
                mask ^= 2
            elif term.startswith("x^"):
                mask ^= 1 << (int(term[2:]) % p)
            else:
                raise ValueError(f"bad term {term!r}")
        return cls(p, mask)

    def weight(self) -> int:
        return self.mask.bit_count()

    def is_even(self) -> bool:
        """Membership in the even-weight subring P."""
        return self.weight() % 2 == 0

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.p, self.mask ^ other.mask)

    def _check(self, other: "RingElement"):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} != {other.p}")

    def __str__(self) -> str:
        if self.mask == 0:
            return "0"
        terms = []
        for i in range(self.p):
            if (self.mask >> i) & 1:
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return "+".join(terms)

    def to_hex(self) -> str:
        return hex(self.mask)


def multiply(u: RingElement, v: RingElement) -> RingElement:
    """Product reduced mod x^p - 1."""
    u._check(v)
    p = u.p
    acc = 0
    rest = u.mask
    vm = v.mask
    while rest:
        low = rest & -rest
        acc ^= vm << (low.bit_length() - 1)
        rest ^= low
    # fold the high part back (x^p == 1)
    mask = (1 << p) - 1
    while acc >> p:
        acc = (acc & mask) ^ (acc >> p)
    return RingElement(p, acc)


def identity(p: int) -> RingElement:
    """e(x) = x + x^2 + ... + x^(p-1), the identity of P."""
    return RingElement(p, ((1 << p) - 1) & ~1)


def power(u: RingElement, k: int) -> RingElement:
    """Square-and-multiply exponentiation; u^0 = e for nonzero u in P."""
    if k < 0:
        raise ValueError("negative exponent")
    if k == 0:
        if u.mask == 0:
            raise ValueError("0^0 is undefined in P")
        return identity(u.p)
    acc = None
    sq = u
    while k:
        if k & 1:
            acc = sq if acc is None else multiply(acc, sq)
        sq = multiply(sq, sq)
        k >>= 1
    return acc


@lru_cache(maxsize=None)
def _unit_group_factorization(p: int) -> dict[int, int]:
    return dict(sympy.factorint((1 << (p - 1)) - 1))


def multiplicative_order(u: RingElement) -> int:
    """Least k >= 1 with u^k = e; defined for nonzero elements of P."""
    if u.mask == 0 or not u.is_even():
        raise ValueError("not a unit of P")
    p = u.p
    e = identity(p)
    n = (1 << (p - 1)) - 1
    if power(u, n) != e:
        raise ValueError("not a unit of P (is 2 a primitive root mod p?)")
    order = n
    for prime, mult in _unit_group_factorization(p).items():
        for _ in range(mult):
            if power(u, order // prime) == e:
                order //= prime
            else:
                break
    return order


def conjugate(u: RingElement) -> RingElement:
    """The Galois involution u -> u^q on P, fixing the subfield of size q."""
    if not u.is_even():
        raise ValueError("not in P")
    q = 1 << ((u.p - 1) // 2)
    if u.mask == 0:
        return u
    return power(u, q)


# Elements of prescribed order shipped as defaults, so that published
# parameter tables are meaningful verbatim.
_KNOWN_GENERATORS: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    19: (
        (1, 2, 5, 6, 13, 14, 17, 18),
        (4, 7, 8, 9, 10, 11, 12, 15, 16, 17),
    ),
    29: (
        (1, 3, 4, 6, 9, 10, 11, 18, 19, 20, 23, 25, 26, 28),
        (1, 2, 3, 4, 6, 7, 10, 12, 13, 14, 17, 19, 20, 21, 22, 28),
    ),
}


@dataclass(frozen=True)
class FieldContext:
    """The field P for one prime p, with its distinguished elements a and b."""

    p: int
    q: int
    e: RingElement
    a: RingElement
    b: RingElement
    _a_pows: tuple[int, ...] = field(repr=False, default=())
    _b_pows: tuple[int, ...] = field(repr=False, default=())

    @property
    def b_modulus(self) -> int:
        """(q + 1) / p, the order of b."""
        return (self.q + 1) // self.p

    def a_power(self, k: int) -> RingElement:
        return RingElement(self.p, self._a_pows[k % (self.q - 1)])

    def b_power(self, k: int) -> RingElement:
        return RingElement(self.p, self._b_pows[k % self.b_modulus])


def two_is_primitive_root(p: int) -> bool:
    if p < 3 or not sympy.isprime(p):
        return False
    return sympy.n_order(2, p) == p - 1


def _power_table(u: RingElement, order: int) -> tuple[int, ...]:
    out = [identity(u.p).mask]
    cur = identity(u.p)
    for _ in range(order - 1):
        cur = multiply(cur, u)
        out.append(cur.mask)
    return tuple(out)


def find_generators(
    p: int,
    a_override: RingElement | None = None,
    b_override: RingElement | None = None,
) -> FieldContext:
    """Build the FieldContext for p, locating elements of order q-1 and (q+1)/p.

    Candidates for a primitive element are scanned in lexicographic order of
    the coefficient mask, so the result is deterministic.  Overrides (and the
    built-in defaults for known primes) pin specific published elements; their
    orders are always verified.
    """
    if not two_is_primitive_root(p):
        raise HypothesisViolation(f"2 is not a primitive root mod {p}")
    q = 1 << ((p - 1) // 2)
    e = identity(p)
    n = (1 << (p - 1)) - 1

    if a_override is None and b_override is None and p in _KNOWN_GENERATORS:
        a_exp, b_exp = _KNOWN_GENERATORS[p]
        a_override = RingElement.from_exponents(p, a_exp)
        b_override = RingElement.from_exponents(p, b_exp)

    if a_override is not None and b_override is not None:
        a, b = a_override, b_override
    else:
        alpha = None
        for mask in range(3, 1 << p):
            if mask.bit_count() % 2:
                continue
            cand = RingElement(p, mask)
            if multiplicative_order(cand) == n:
                alpha = cand
                break
        if alpha is None:
            raise HypothesisViolation(f"no primitive element found for p={p}")
        a = a_override if a_override is not None else power(alpha, q + 1)
        b = b_override if b_override is not None else power(alpha, (q - 1) * p)

    if multiplicative_order(a) != q - 1:
        raise ValueError(f"a has order {multiplicative_order(a)}, wanted {q - 1}")
    if multiplicative_order(b) != (q + 1) // p:
        raise ValueError(
            f"b has order {multiplicative_order(b)}, wanted {(q + 1) // p}"
        )
    return FieldContext(
        p=p,
        q=q,
        e=e,
        a=a,
        b=b,
        _a_pows=_power_table(a, q - 1),
        _b_pows=_power_table(b, (q + 1) // p),
    )


def find_v_pairs(ctx: FieldContext) -> list[tuple[int, int]]:
    """All pairs 1 <= v1 < v2 <= q-2 with a^v1 + a^v2 = e (raw, unreduced)."""
    e_mask = ctx.e.mask
    exponent_of = {ctx._a_pows[v]: v for v in range(ctx.q - 1)}
    pairs = []
    for v1 in range(1, ctx.q - 1):
        v2 = exponent_of.get(ctx._a_pows[v1] ^ e_mask)
        if v2 is not None and v1 < v2 <= ctx.q - 2:
            pairs.append((v1, v2))
    return pairs
