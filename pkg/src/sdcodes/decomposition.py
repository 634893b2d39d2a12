"""Construction of self-dual codes invariant under a dihedral group of order 2p.

A length n = pc + f code with an order-p automorphism sigma of type p-(c;f)
splits into the sigma-fixed subcode and the even-per-cycle subcode.  The
fixed part projects to a self-dual code of length c + f (one bit per cycle);
the even part is a free rank-2 module over the field P of even-weight
polynomials mod x^p - 1 and is generated, after coordinates are normalised
for the involution, by two rows in the distinguished elements a and b.

Coordinate convention: cycle i covers [i*p, (i+1)*p), offset j inside a
cycle corresponds to x^j, sigma shifts offsets by +1 mod p, and the f fixed
points occupy the last f coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from sdcodes import gf2
from sdcodes.cyclic import FieldContext, RingElement, multiply
from sdcodes.gf2 import BitMatrix, BitVector


class ConstructionBug(AssertionError):
    """Internal consistency failure: a built code is not self-dual."""


class UnsupportedCase(ValueError):
    """The requested (p, f) case has no built-in involution analysis."""


# ---------------------------------------------------------------------------
# permutations (tuples of images, 0-based)


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation like ``(1,2,3,4)`` or ``(1,3)(2,4)`` or ``I``."""
    text = text.strip().replace(" ", "")
    perm = list(range(degree))
    if text in ("I", "()", "id", ""):
        return tuple(perm)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation {text!r}")
    for cyc in text[1:-1].split(")("):
        elems = [int(t) - 1 for t in cyc.split(",")]
        if len(set(elems)) != len(elems) or any(not 0 <= e < degree for e in elems):
            raise ValueError(f"bad cycle {cyc!r}")
        for i, e in enumerate(elems):
            perm[e] = elems[(i + 1) % len(elems)]
    return tuple(perm)


def format_cycles(perm) -> str:
    perm = tuple(perm)
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        out.append("(" + ",".join(str(e + 1) for e in cyc) + ")")
    return "".join(out) if out else "I"


def compose(outer, inner) -> tuple[int, ...]:
    """Permutation applying ``inner`` first, then ``outer``."""
    return tuple(outer[inner[i]] for i in range(len(inner)))


def inverse(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, img in enumerate(perm):
        inv[img] = i
    return tuple(inv)


# ---------------------------------------------------------------------------
# automorphism types


@dataclass(frozen=True)
class AutomorphismType:
    p: int
    c: int
    f: int

    @property
    def n(self) -> int:
        return self.p * self.c + self.f

    def __str__(self) -> str:
        return f"{self.p}-({self.c};{self.f})"


def weight_budget(d: int, s: int) -> int:
    """g(s) = sum of ceil(d / 2^i) for i < s (Griesmer-type increments)."""
    return sum(-(-d >> i) for i in range(s))


def feasible_types(n: int, d: int, p: int) -> list[AutomorphismType]:
    """All types p-(c;f) not excluded by the counting and parity filters."""
    import sympy

    if n % 2:
        raise ValueError("self-dual codes have even length")
    if not sympy.isprime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    out = []
    even_order = sympy.n_order(2, p) % 2 == 0 if n >= p else False
    for c in range(1, n // p + 1):
        f = n - p * c
        if even_order and c % 2:
            continue
        if p * c < weight_budget(d, (p - 1) * c // 2):
            continue
        if f > c and f < weight_budget(d, (f - c) // 2):
            continue
        out.append(AutomorphismType(p, c, f))
    return out


def standard_sigma(p: int, c: int, f: int) -> tuple[int, ...]:
    """Order-p automorphism: +1 shift inside each cycle block, fixed tail."""
    perm = []
    for i in range(c):
        base = i * p
        perm.extend(base + (j + 1) % p for j in range(p))
    perm.extend(range(c * p, c * p + f))
    return tuple(perm)


# ---------------------------------------------------------------------------
# involution catalog

# Each involution tau with tau*sigma*tau = sigma^{-1} acts blockwise as
# z -> K - z on 1-based coordinates; one constant K per cycle.  The ten
# catalog entries cover every case of the coordinate normalisation.
_K_TEMPLATES = (
    (2, 2, 6, 6),
    (3, 5, 3, 5),
    (4, 4, 4, 4),
    (1, 3, 5, 7),
    (1, 3, 6, 6),
    (1, 4, 4, 7),
    (1, 5, 5, 5),
    (2, 2, 5, 7),
    (3, 3, 3, 7),
    (4, 3, 5, 4),
)


@dataclass(frozen=True)
class InvolutionCatalog:
    """The ten reversing involutions on 4p coordinates, as permutations."""

    p: int
    involutions: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, p: int) -> "InvolutionCatalog":
        invs = []
        for ks in _K_TEMPLATES:
            perm = [0] * (4 * p)
            for z in range(4 * p):
                k = ks[z // p] * p + 1
                img = k - z - 2  # 1-based: z+1 -> k - (z+1)
                perm[z] = img
            invs.append(tuple(perm))
        cat = cls(p, tuple(invs))
        sigma = standard_sigma(p, 4, 0)
        sig_inv = inverse(sigma)
        for tau in cat.involutions:
            if compose(tau, tau) != tuple(range(4 * p)):
                raise ConstructionBug("catalog entry is not an involution")
            if compose(tau, compose(sigma, tau)) != sig_inv:
                raise ConstructionBug("catalog entry does not reverse sigma")
        return cat


def _fixed_point_involutions(f: int):
    """All involutive permutations of the f fixed coordinates."""
    out = []
    for perm in itertools.permutations(range(f)):
        if compose(perm, perm) == tuple(range(f)):
            out.append(perm)
    return out


def dihedral_involution(g: BitMatrix, p: int, c: int, f: int):
    """A catalog involution (extended over fixed points) preserving the code.

    Returns the full-length permutation witnessing that the automorphism
    group contains a dihedral group of order 2p, or None.
    """
    if c != 4:
        raise UnsupportedCase("involution catalog covers c = 4 only")
    cat = InvolutionCatalog.build(p)
    for tau in cat.involutions:
        for ext in _fixed_point_involutions(f):
            full = tau + tuple(4 * p + e for e in ext)
            if gf2.preserves_row_space(g, full):
                return full
    return None


# ---------------------------------------------------------------------------
# fixed subcodes and their lifts

# Projected generator of the fixed subcode for the f = 2 searches: pairs one
# cycle with another and each remaining cycle with a fixed point.  A pairing
# of the two fixed points with each other would lift to a weight-2 codeword.
_FIXED_GEN_C4_F2 = (
    (1, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1),
)

_FIXED_GEN_C4_F0 = (
    (1, 1, 0, 0),
    (0, 0, 1, 1),
)


def default_fixed_gen(c: int, f: int) -> BitMatrix:
    if (c, f) == (4, 2):
        return BitMatrix.from_lists(_FIXED_GEN_C4_F2)
    if (c, f) == (4, 0):
        return BitMatrix.from_lists(_FIXED_GEN_C4_F0)
    raise UnsupportedCase(f"no default fixed-subcode generator for (c,f)=({c},{f})")


def lift_fixed(fixed_gen: BitMatrix, typ: AutomorphismType, s) -> BitMatrix:
    """Expand a projected fixed-subcode generator back to length pc + f.

    ``s`` permutes the c cycle labels before the lift; each cycle coordinate
    becomes a constant run of length p, fixed points pass through.
    """
    p, c, f = typ.p, typ.c, typ.f
    if fixed_gen.cols != c + f:
        raise ValueError(f"fixed generator has {fixed_gen.cols} cols, wanted {c + f}")
    s = gf2.check_permutation(s, c)
    run = (1 << p) - 1
    out = []
    for row in fixed_gen.rows:
        lifted = 0
        for i in range(c):
            if row.get(i):
                lifted |= run << (s[i] * p)
        for t in range(f):
            if row.get(c + t):
                lifted |= 1 << (c * p + t)
        out.append(lifted)
    return BitMatrix.from_ints(typ.n, out)


# ---------------------------------------------------------------------------
# skew (even-per-cycle) subcode


@dataclass(frozen=True)
class ConstructionParams:
    """One point of the construction grid."""

    ctx: FieldContext
    f: int
    u: tuple[int, int, int]
    v: tuple[int, int]
    s: tuple[int, ...]
    fixed_gen: BitMatrix

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def typ(self) -> AutomorphismType:
        return AutomorphismType(self.p, 4, self.f)

    def validate(self):
        ctx = self.ctx
        mod = ctx.b_modulus
        if not all(0 <= ui < mod for ui in self.u):
            raise ValueError(f"u entries must lie in [0, {mod})")
        v1, v2 = self.v
        if not 1 <= v1 < v2 <= ctx.q - 2:
            raise ValueError("v pair out of range")
        if ctx.a_power(v1) + ctx.a_power(v2) != ctx.e:
            raise ValueError("a^v1 + a^v2 != e")
        if not dihedral_classes(self.u, mod):
            raise ValueError("u does not satisfy any dihedral congruence")
        if self.fixed_gen.cols != 4 + self.f:
            raise ValueError("fixed generator has wrong length")
        if not gf2.is_self_dual(self.fixed_gen):
            raise ValueError("fixed generator is not self-dual")

    def flat_record(self, fixed_gen_id: str = "default") -> str:
        u1, u2, u3 = self.u
        v1, v2 = self.v
        return (
            f"{self.p} {self.f} {u1} {u2} {u3} {v1} {v2} "
            f"{format_cycles(self.s)} {fixed_gen_id}"
        )


def dihedral_classes(u: tuple[int, int, int], modulus: int) -> list[int]:
    """Which of the four congruence conditions the u-triple satisfies (all)."""
    u1, u2, u3 = (ui % modulus for ui in u)
    out = []
    if (u1 + u2 - u3) % modulus == 0:
        out.append(1)
    if (u2 + u3 - u1) % modulus == 0:
        out.append(2)
    if (u1 + u3 - u2) % modulus == 0:
        out.append(3)
    if u1 == u2 == u3 == 0:
        out.append(4)
    return out


def _rotate(mask: int, j: int, p: int) -> int:
    """Multiply a coefficient mask by x^j (cyclic shift)."""
    j %= p
    full = (1 << p) - 1
    return ((mask << j) | (mask >> (p - j))) & full if j else mask


def lift_skew(params: ConstructionParams) -> BitMatrix:
    """Binary basis of the even-per-cycle subcode from its two module rows.

    Each row over P expands into p - 1 binary rows (multiples by x^0..x^{p-2});
    the f fixed coordinates stay zero.
    """
    params.validate()
    ctx = params.ctx
    p, f = params.p, params.f
    u1, u2, u3 = params.u
    v1, v2 = params.v
    av1, av2 = ctx.a_power(v1), ctx.a_power(v2)
    module_rows = (
        (ctx.b_power(u1), RingElement(p, 0), av1, multiply(av2, ctx.b_power(u3))),
        (RingElement(p, 0), ctx.b_power(u2), av2, multiply(av1, ctx.b_power(u3))),
    )
    n = 4 * p + f
    out = []
    for row in module_rows:
        for j in range(p - 1):
            bits = 0
            for cyc in range(4):
                bits |= _rotate(row[cyc].mask, j, p) << (cyc * p)
            out.append(bits)
    return BitMatrix.from_ints(n, out)


def build_code(params: ConstructionParams) -> BitMatrix:
    """Stack the lifted fixed and skew parts; canonical RREF generator.

    The result is checked to be self-dual of dimension n/2; a failure means
    a convention bug, not bad input, and raises ConstructionBug.
    """
    fixed_part = lift_fixed(params.fixed_gen, params.typ, params.s)
    skew_part = lift_skew(params)
    n = fixed_part.cols
    stacked = fixed_part.int_rows() + skew_part.int_rows()
    reduced, pivots = gf2._rref_ints(stacked, n)
    if len(pivots) != n // 2:
        raise ConstructionBug(f"rank {len(pivots)} != {n // 2}")
    g = BitMatrix.from_ints(n, reduced)
    if not gf2.is_self_dual(g):
        raise ConstructionBug("built code is not self-dual")
    return g


# ---------------------------------------------------------------------------
# coset representatives of the fixed-subcode stabilizer


def automorphism_group(g: BitMatrix) -> list[tuple[int, ...]]:
    """All coordinate permutations preserving the row space (brute force)."""
    if g.cols > 8:
        raise ValueError("brute-force automorphism search limited to length 8")
    reduced, pivots = gf2._rref_ints(g.int_rows(), g.cols)
    out = []
    for perm in itertools.permutations(range(g.cols)):
        if all(
            gf2.row_space_member(
                reduced, pivots, gf2.apply_permutation(BitVector(g.cols, r), perm).bits
            )
            for r in reduced
        ):
            out.append(perm)
    return out


def coset_reps(fixed_gen: BitMatrix, fixed_points: set[int]) -> list[tuple[int, ...]]:
    """Transversal of the stabilizer inside the symmetric group on the cycles.

    The stabilizer S is the restriction, to the cycle coordinates, of the
    automorphisms of the projected fixed code that map the fixed-point set to
    itself.  Label permutations in the same coset s*S (s applied after the
    stabilizer element) give equivalent codes, so one representative per
    coset suffices.
    """
    cycle_cols = [c for c in range(fixed_gen.cols) if c not in fixed_points]
    c = len(cycle_cols)
    pos = {col: i for i, col in enumerate(cycle_cols)}
    stab = set()
    for g in automorphism_group(fixed_gen):
        if all(g[fp] in fixed_points for fp in fixed_points):
            stab.add(tuple(pos[g[col]] for col in cycle_cols))
    reps = []
    covered = set()
    for cand in sorted(itertools.permutations(range(c))):
        if cand in covered:
            continue
        reps.append(cand)
        covered.update(compose(cand, h) for h in stab)
    return reps


_PAIRING_F2 = {
    1: ["(1,2,3,4)"],
    2: ["(1,3,4)", "(1,2)"],
    3: ["I", "(1,3)(2,4)", "(1,4,3,2)"],
    4: ["I", "(1,2,3,4)", "(1,2)", "(1,3)(2,4)", "(1,3,4)", "(1,4,3,2)"],
}


def pair_conditions(typ: AutomorphismType) -> dict[int, list[tuple[int, ...]]]:
    """Allowed cycle-label permutations for each congruence class.

    For f = 2 the involution analysis ties each congruence class to specific
    coset representatives.  For f = 0 no restriction is known, so every class
    gets the full transversal (duplicate codes are possible and are handled
    by invariant deduplication downstream).
    """
    if typ.c != 4:
        raise UnsupportedCase("pairing analysis covers c = 4 only")
    if typ.f == 2:
        return {
            cls: [parse_cycles(t, 4) for t in texts]
            for cls, texts in _PAIRING_F2.items()
        }
    if typ.f == 0:
        reps = coset_reps(default_fixed_gen(4, 0), set())
        return {cls: list(reps) for cls in (1, 2, 3, 4)}
    raise UnsupportedCase(f"no pairing analysis for f={typ.f}")
