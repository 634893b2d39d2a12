"""Code invariants: minimum distance, weight counts, intersection numbers, shadows.

Weight enumeration uses information-set enumeration: a rate-1/2 code in
reduced echelon form is systematic both on its pivot columns and on their
complement (the off-pivot block A satisfies A*A^T = I for any self-orthogonal
code), giving two disjoint information sets.  A codeword of weight w has
weight <= floor(w/2) on one of the two sets, so enumerating information
patterns of weight <= t over both sets finds every codeword of weight
<= 2t + 1.  The same scan over a translated basis enumerates cosets, which
is how shadow weight counts are obtained.

The inner loop XORs pre-built combination blocks of two halves of the basis
against each other in large numpy batches and popcounts the results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from sdcodes import gf2
from sdcodes.gf2 import BitMatrix

_WORD = 64
_MASK64 = (1 << 64) - 1

# blocks larger than this are streamed instead of cached
_CACHE_ROWS = 5_000_000
_CHUNK = 1 << 22


class IncompleteCoverage(ValueError):
    """The information-set family cannot certify the requested weight."""


class DoublyEvenCode(ValueError):
    """Shadow requested for a doubly even code (the shadow degenerates to C)."""


def _pack_int(x: int, nwords: int) -> list[int]:
    return [(x >> (_WORD * i)) & _MASK64 for i in range(nwords)]


def _pack_rows(int_rows: list[int], n: int) -> np.ndarray:
    nwords = max(1, (n + _WORD - 1) // _WORD)
    return np.array([_pack_int(r, nwords) for r in int_rows], dtype=np.uint64).reshape(
        len(int_rows), nwords
    )


def _unpack_bytes(b: bytes) -> int:
    return int.from_bytes(b, "little")


class _HalfBlocks:
    """XOR-combination blocks of one half of a basis, grouped by weight.

    Block i holds the XOR of every i-subset of the rows in colexicographic
    order, so the combinations with maximum row index < r form the leading
    comb(r, i) entries.  That prefix property lets block i+1 be assembled
    (or streamed) from block i with pure slice XORs.
    """

    def __init__(self, rows: np.ndarray):
        self.rows = rows
        self.k = rows.shape[0]
        self.nwords = rows.shape[1]
        self._cache: dict[int, np.ndarray] = {
            0: np.zeros((1, self.nwords), dtype=np.uint64)
        }

    def size(self, i: int) -> int:
        return comb(self.k, i)

    def block(self, i: int) -> np.ndarray:
        if i in self._cache:
            return self._cache[i]
        if self.size(i) > _CACHE_ROWS:
            raise MemoryError("block too large to cache; use iter_chunks")
        prev = self.block(i - 1)
        out = np.empty((self.size(i), self.nwords), dtype=np.uint64)
        pos = 0
        for r in range(i - 1, self.k):
            cnt = comb(r, i - 1)
            np.bitwise_xor(prev[:cnt], self.rows[r], out=out[pos : pos + cnt])
            pos += cnt
        self._cache[i] = out
        return out

    def iter_chunks(self, i: int, max_rows: int):
        """Yield block i in pieces without materialising it."""
        if i in self._cache or self.size(i) <= _CACHE_ROWS:
            blk = self.block(i)
            for s in range(0, len(blk), max_rows):
                yield blk[s : s + max_rows]
            return
        prev = self.block(i - 1)
        for r in range(i - 1, self.k):
            cnt = comb(r, i - 1)
            for s in range(0, cnt, max_rows):
                yield prev[s : min(s + max_rows, cnt)] ^ self.rows[r]


@dataclass
class LevelOutcome:
    min_weight: int | None
    collected: dict[int, set[bytes]]
    aborted: bool


class InfoSetScanner:
    """Scans one systematized basis by information weight level."""

    def __init__(self, basis_int_rows: list[int], n: int):
        rows = _pack_rows(basis_int_rows, n)
        k = len(basis_int_rows)
        half = (k + 1) // 2
        self.k = k
        self.nwords = rows.shape[1]
        self.left = _HalfBlocks(rows[:half])
        self.right = _HalfBlocks(rows[half:])

    def level_size(self, t: int) -> int:
        return comb(self.k, t)

    def scan_level(
        self,
        t: int,
        *,
        offset: np.ndarray | None = None,
        targets: tuple[int, ...] = (),
        abort_below: int | None = None,
    ) -> LevelOutcome:
        """Visit all codewords (or coset words) of information weight exactly t."""
        min_w: int | None = None
        collected: dict[int, set[bytes]] = {w: set() for w in targets}
        skip_zero = offset is None and t == 0
        for i in range(t + 1):
            j = t - i
            if i > self.left.k or j > self.right.k:
                continue
            right = self.right.block(j)
            per = max(1, _CHUNK // len(right))
            for lc in self.left.iter_chunks(i, per):
                if offset is not None:
                    lc = lc ^ offset
                x = (lc[:, None, :] ^ right[None, :, :]).reshape(-1, self.nwords)
                wts = np.bitwise_count(x).sum(axis=1, dtype=np.uint16)
                if skip_zero:
                    lvl_min = None
                else:
                    lvl_min = int(wts.min())
                if lvl_min is not None and (min_w is None or lvl_min < min_w):
                    min_w = lvl_min
                for w in targets:
                    idx = np.nonzero(wts == w)[0]
                    if len(idx):
                        words = x[idx]
                        coll = collected[w]
                        for row in words:
                            coll.add(row.tobytes())
                if abort_below is not None and min_w is not None and min_w < abort_below:
                    return LevelOutcome(min_w, collected, True)
        return LevelOutcome(min_w, collected, False)


def _rref_ordered(rows: list[int], col_order: list[int]) -> tuple[list[int], list[int]]:
    """Row reduce choosing pivots along the given column order."""
    rows = list(rows)
    pivots = []
    rank = 0
    for col in col_order:
        mask = 1 << col
        src = None
        for i in range(rank, len(rows)):
            if rows[i] & mask:
                src = i
                break
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        piv = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= piv
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def disjoint_information_sets(g: BitMatrix) -> list[tuple[list[int], list[int]]]:
    """Two disjoint complete information sets with systematized bases.

    Returns [(pivot_cols, basis_rows), ...].  The second entry exists
    whenever the complement of the pivot set has full rank, which holds for
    every self-orthogonal code.
    """
    reduced, piv1 = gf2._rref_ints(g.int_rows(), g.cols)
    k = len(piv1)
    out = [(piv1, reduced)]
    piv_set = set(piv1)
    comp = [c for c in range(g.cols) if c not in piv_set]
    rows2, piv2 = _rref_ordered(reduced, comp)
    if len(piv2) == k:
        out.append((piv2, rows2))
    return out


@dataclass
class _Systems:
    g: BitMatrix
    sets: list[tuple[list[int], list[int]]]
    scanners: list[InfoSetScanner] = field(default_factory=list)

    @classmethod
    def build(cls, g: BitMatrix, require_two: bool = True) -> "_Systems":
        sets = disjoint_information_sets(g)
        if require_two and len(sets) < 2:
            raise IncompleteCoverage(
                "no second disjoint information set; covering guarantee unavailable"
            )
        systems = cls(g, sets)
        systems.scanners = [InfoSetScanner(rows, g.cols) for _, rows in sets]
        return systems

    @property
    def k(self) -> int:
        return len(self.sets[0][1])


def min_distance(
    g: BitMatrix, budget: int = 10, fail_below: int | None = None
) -> tuple[int, bool]:
    """Minimum distance via two-information-set enumeration.

    After finishing information weight t over both sets, every unseen
    codeword has weight >= 2(t+1); the best weight found is proven once that
    bound reaches it.  ``budget`` caps t; if exhausted first, the best weight
    found so far is returned unproven.  ``fail_below`` aborts (unproven) as
    soon as any codeword lighter than it appears, which is the cheap-reject
    path for searches.
    """
    systems = _Systems.build(g)
    k = systems.k
    if k == 0:
        raise ValueError("empty code has no minimum distance")
    best: int | None = None
    for t in range(1, min(budget, k) + 1):
        for sc in systems.scanners:
            res = sc.scan_level(t, abort_below=fail_below)
            if res.min_weight is not None and (best is None or res.min_weight < best):
                best = res.min_weight
            if fail_below is not None and best is not None and best < fail_below:
                return best, False
        if t == k:
            return best, True
        if best is not None and best <= 2 * (t + 1):
            return best, True
    return best if best is not None else 0, False


def min_weight_probe(g: BitMatrix, tmax: int, abort_below: int) -> int | None:
    """Cheap upper-bound probe: the lightest codeword seen up to level tmax.

    Aborts as soon as any word lighter than ``abort_below`` shows up.  A None
    result means nothing was found (only possible for tiny tmax).
    """
    systems = _Systems.build(g)
    best: int | None = None
    for t in range(1, min(tmax, systems.k) + 1):
        for sc in systems.scanners:
            res = sc.scan_level(t, abort_below=abort_below)
            if res.min_weight is not None and (best is None or res.min_weight < best):
                best = res.min_weight
            if best is not None and best < abort_below:
                return best
    return best


def codewords_of_weight(g: BitMatrix, w: int) -> list[int]:
    """All codewords of weight exactly w, exactly (deduplicated across sets)."""
    if w == 0:
        return [0]
    systems = _Systems.build(g)
    t = min(w // len(systems.sets), systems.k)
    seen: set[bytes] = set()
    for sc in systems.scanners:
        for lvl in range(1, t + 1):
            res = sc.scan_level(lvl, targets=(w,))
            seen |= res.collected[w]
    return [_unpack_bytes(b) for b in seen]


def count_weight(g: BitMatrix, w: int) -> int:
    """Exact number of codewords of weight w."""
    return len(codewords_of_weight(g, w))


def weight_profile(g: BitMatrix, wmax: int) -> "WeightProfile":
    """Exact counts of all weights up to wmax."""
    systems = _Systems.build(g)
    t = min(wmax // len(systems.sets), systems.k)
    targets = tuple(range(1, wmax + 1))
    pools: dict[int, set[bytes]] = {w: set() for w in targets}
    for sc in systems.scanners:
        for lvl in range(1, t + 1):
            res = sc.scan_level(lvl, targets=targets)
            for w in targets:
                pools[w] |= res.collected[w]
    counts = {0: 1}
    counts.update({w: len(pools[w]) for w in targets if pools[w]})
    return WeightProfile(g.cols, counts, wmax)


@dataclass(frozen=True)
class WeightProfile:
    """Exact low-weight prefix of a weight distribution."""

    n: int
    counts: dict[int, int]
    complete_to: int

    def count(self, w: int) -> int:
        if w > self.complete_to:
            raise IncompleteCoverage(f"profile complete only to {self.complete_to}")
        return self.counts.get(w, 0)


def intersection_number_from_words(words: list[int], n: int, dist: int) -> int:
    """Unordered pairs of the given codewords at Hamming distance ``dist``."""
    if len(words) < 2:
        return 0
    arr = _pack_rows(sorted(words), n)
    m = len(arr)
    total = 0
    block = 512
    for s in range(0, m, block):
        a = arr[s : s + block]
        x = a[:, None, :] ^ arr[None, s:, :]
        wts = np.bitwise_count(x).sum(axis=2, dtype=np.uint16)
        rows_idx, cols_idx = np.nonzero(wts == dist)
        # pair (s+i, s+j) is strictly upper-triangular iff j > i
        total += int(np.count_nonzero(cols_idx > rows_idx))
    return total


def intersection_number(g: BitMatrix, d: int, j: int) -> int:
    """Number of unordered pairs of weight-d codewords at distance j."""
    return intersection_number_from_words(codewords_of_weight(g, d), g.cols, j)


def griesmer_check(n: int, k: int, d: int) -> bool:
    """True iff [n, k, d] passes the Griesmer bound."""
    if k < 1:
        raise ValueError("k must be positive")
    return n >= sum(-(-d >> i) for i in range(k))


# ---------------------------------------------------------------------------
# shadow of a singly even self-dual code


@dataclass(frozen=True)
class ShadowDecomposition:
    """Doubly even subcode and coset representatives t1, t2, t3.

    The dual of the doubly even subcode C0 splits as
    C0 + (t1 + C0) + (t2 + C0) + (t3 + C0) with C = C0 + (t2 + C0); the
    shadow is the union of the t1 and t3 cosets.
    """

    n: int
    c0_gen: BitMatrix
    t1: int
    t2: int
    t3: int


def shadow(g: BitMatrix) -> ShadowDecomposition:
    """Decompose a singly even self-dual code around its doubly even subcode."""
    if not gf2.is_self_dual(g):
        raise ValueError("shadow is defined for self-dual codes")
    reduced, pivots = gf2._rref_ints(g.int_rows(), g.cols)
    phi = [(r.bit_count() // 2) & 1 for r in reduced]
    if not any(phi):
        raise DoublyEvenCode("code is doubly even; its shadow degenerates to C")
    r0 = next(reduced[i] for i in range(len(reduced)) if phi[i])
    c0_rows = [row if not f else row ^ r0 for row, f in zip(reduced, phi) if row != r0]
    c0_reduced, c0_piv = gf2._rref_ints(c0_rows, g.cols)
    c0_gen = BitMatrix.from_ints(g.cols, c0_reduced)
    dual_rows = gf2._dual_ints(c0_reduced, g.cols)
    t1 = None
    for y in dual_rows:
        if not gf2.row_space_member(reduced, pivots, y):
            t1 = y
            break
    if t1 is None:
        raise AssertionError("dual of C0 does not exceed C")
    return ShadowDecomposition(g.cols, c0_gen, t1, r0, t1 ^ r0)


def coset_weight_counts(
    gen: BitMatrix, rep: int, wmax: int
) -> dict[int, int]:
    """Exact counts of weights <= wmax in the coset rep + rowspace(gen)."""
    k = gen.nrows
    if k <= 20:
        counts: dict[int, int] = {}
        rows = gen.int_rows()
        for m in range(1 << k):
            v = rep
            mm = m
            while mm:
                low = mm & -mm
                v ^= rows[low.bit_length() - 1]
                mm ^= low
            w = v.bit_count()
            if w <= wmax:
                counts[w] = counts.get(w, 0) + 1
        return counts

    sets = disjoint_information_sets(gen)
    if len(sets) < 2:
        raise IncompleteCoverage("need two disjoint information sets for coset counts")
    t = wmax // 2
    targets = tuple(range(wmax + 1))
    pools: dict[int, set[bytes]] = {w: set() for w in targets}
    for cols, rows in sets:
        folded = rep
        for i, col in enumerate(cols):
            if (folded >> col) & 1:
                folded ^= rows[i]
        scanner = InfoSetScanner(rows, gen.cols)
        off = _pack_rows([folded], gen.cols)[0]
        for lvl in range(0, min(t, k) + 1):
            res = scanner.scan_level(lvl, offset=off, targets=targets)
            for w in targets:
                pools[w] |= res.collected[w]
    return {w: len(pool) for w, pool in pools.items() if pool}


def shadow_weight_counts(sd: ShadowDecomposition, wmax: int) -> dict[int, int]:
    """Exact low-weight counts of the shadow (both cosets combined)."""
    out: dict[int, int] = {}
    for rep in (sd.t1, sd.t3):
        for w, c in coset_weight_counts(sd.c0_gen, rep, wmax).items():
            out[w] = out.get(w, 0) + c
    return out


# ---------------------------------------------------------------------------
# exact transforms and small-code oracles


def macwilliams_transform(counts: list[int], n: int, k: int) -> list[int]:
    """Exact MacWilliams transform of a full weight distribution."""
    out = []
    for j in range(n + 1):
        acc = 0
        for w, aw in enumerate(counts):
            if aw:
                kraw = sum(
                    (-1) ** i * comb(w, i) * comb(n - w, j - i)
                    for i in range(max(0, j - (n - w)), min(j, w) + 1)
                )
                acc += aw * kraw
        q, r = divmod(acc, 1 << k)
        if r:
            raise ValueError("transform is not integral; counts inconsistent")
        out.append(q)
    return out


def brute_force_weights(g: BitMatrix) -> list[int]:
    """Full weight distribution by codeword enumeration (small codes only)."""
    rows = g.int_rows()
    k = len(rows)
    if k > 26:
        raise ValueError("brute force limited to dimension 26")
    counts = [0] * (g.cols + 1)
    word = 0
    counts[0] = 1
    gray = 0
    for m in range(1, 1 << k):
        new_gray = m ^ (m >> 1)
        bit = (gray ^ new_gray).bit_length() - 1
        gray = new_gray
        word ^= rows[bit]
        counts[word.bit_count()] += 1
    return counts


# ---------------------------------------------------------------------------
# record assembly


@dataclass
class CodeRecord:
    """A constructed code together with its computed invariants."""

    gen: BitMatrix
    d: int
    d_proven: bool
    a_d: int
    i_2d: int | None = None
    a_counts: dict[int, int] = field(default_factory=dict)
    shadow_counts: dict[int, int] | None = None
    beta: int | None = None
    params_record: str | None = None

    def fingerprint(self) -> tuple:
        key = [self.d, self.a_d, self.i_2d]
        if self.shadow_counts is not None:
            key.append(tuple(sorted(self.shadow_counts.items())))
        return tuple(key)

    def to_dict(self) -> dict:
        out = {
            "schema_version": 1,
            "n": self.gen.cols,
            "k": self.gen.nrows,
            "gen": [r.to_hex() for r in self.gen.rows],
            "d": self.d,
            "d_proven": self.d_proven,
            "A_d": self.a_d,
            "I_2d": self.i_2d,
            "A_counts": {str(w): c for w, c in sorted(self.a_counts.items())},
        }
        if self.shadow_counts is not None:
            out["shadow_counts"] = {
                str(w): c for w, c in sorted(self.shadow_counts.items())
            }
        if self.beta is not None:
            out["beta"] = self.beta
        if self.params_record is not None:
            out["params"] = self.params_record
        return out


# The one-parameter family of weight enumerators realised by [78,39,14]
# codes whose shadow has no word of weight 3 or 7: A_14 = 3705 + 8*beta.
# The constants are re-derived from the Gleason-type system in the tests.
_FAMILY_78_BASE = 3705
_FAMILY_78_STEP = 8


def derive_beta(n: int, d: int, a_d: int) -> int | None:
    """Enumerator parameter for the [78,39,14] family; None when inapplicable."""
    if (n, d) != (78, 14):
        return None
    num = a_d - _FAMILY_78_BASE
    if num % _FAMILY_78_STEP:
        return None
    return num // _FAMILY_78_STEP
