"""Parameter-grid search over dihedral construction points.

A search plan fixes (p, f, target distance) and a list of v-pairs; the grid
enumerates the u-triples of each congruence class against the allowed cycle
permutations for that class.  Every surviving code is identified by the
permutation-invariant fingerprint (d, A_d, I_2d[, shadow prefix]): distinct
fingerprints prove inequivalence, identical fingerprints are recorded for
manual review rather than merged.

Grid iteration order is deterministic, so checkpoint/resume and any worker
partitioning produce identical stores.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace

from sdcodes import analysis, gf2
from sdcodes.analysis import CodeRecord
from sdcodes.cyclic import FieldContext, find_generators
from sdcodes.decomposition import (
    AutomorphismType,
    ConstructionParams,
    build_code,
    default_fixed_gen,
    dihedral_classes,
    format_cycles,
    pair_conditions,
    parse_cycles,
)

# the published reduced v-pair list for p = 19 (orbit representatives of the
# raw pair set under exponent doubling)
V_PUBLISHED_19: tuple[tuple[int, int], ...] = (
    (1, 93), (6, 13), (7, 505), (9, 59), (15, 37), (19, 105), (20, 99),
    (21, 87), (25, 251), (29, 178), (31, 193), (34, 175), (39, 111),
    (43, 246), (45, 61), (46, 255), (49, 119), (63, 190), (73, 219),
    (83, 138), (91, 167), (94, 169), (103, 108), (106, 239), (114, 221),
    (125, 187), (155, 213), (179, 220), (191, 242),
)


@dataclass(frozen=True)
class SearchPlan:
    p: int
    f: int
    target_d: int
    v_pairs: tuple[tuple[int, int], ...]
    classes: tuple[int, ...] = (1, 2, 3, 4)
    budget: int = 0  # max info weight for distance proofs; 0 = derived
    u_slice: tuple[int, int] | None = None  # restrict the first free u coord
    compute_shadow: bool = False
    shadow_wmax: int = 0
    checkpoint_path: str | None = None
    checkpoint_every: int = 2000
    output_path: str | None = None
    threads: int = 1

    @property
    def distance_budget(self) -> int:
        # proving d = target needs info weight (target-2)/2; counting A_d
        # needs target/2
        return self.budget or self.target_d // 2

    def grid(self, ctx: FieldContext) -> list[tuple[tuple[int, int, int], tuple[int, int], tuple[int, ...]]]:
        """The full deterministic grid: (u, v, s) triples, deduplicated."""
        mod = ctx.b_modulus
        pairing = pair_conditions(AutomorphismType(self.p, 4, self.f))
        lo, hi = self.u_slice if self.u_slice else (0, mod)
        points = []
        seen = set()
        for v in self.v_pairs:
            for cls in self.classes:
                if cls == 4:
                    triples = [(0, 0, 0)] if lo == 0 else []
                else:
                    triples = []
                    for x in range(lo, min(hi, mod)):
                        for y in range(mod):
                            if cls == 1:
                                t = (x, y, (x + y) % mod)
                            elif cls == 2:
                                t = ((x + y) % mod, x, y)
                            else:
                                t = (x, (x + y) % mod, y)
                            triples.append(t)
                for u in triples:
                    for s in pairing[cls]:
                        key = (u, v, s)
                        if key not in seen:
                            seen.add(key)
                            points.append(key)
        return points


@dataclass
class StoreEntry:
    record: CodeRecord
    duplicate_params: list[str] = field(default_factory=list)

    @property
    def needs_manual_review(self) -> bool:
        return bool(self.duplicate_params)


@dataclass
class ResultStore:
    entries: list[StoreEntry] = field(default_factory=list)
    index: dict[tuple, int] = field(default_factory=dict)
    processed: int = 0
    complete: bool = False

    def add(self, record: CodeRecord) -> bool:
        """Insert a record; returns True when its fingerprint is new."""
        key = record.fingerprint()
        if key in self.index:
            entry = self.entries[self.index[key]]
            if record.params_record:
                entry.duplicate_params.append(record.params_record)
            return False
        self.index[key] = len(self.entries)
        self.entries.append(StoreEntry(record))
        return True

    def fingerprints(self) -> list[tuple]:
        return [e.record.fingerprint() for e in self.entries]

    def to_jsonl(self) -> str:
        lines = []
        for e in self.entries:
            d = e.record.to_dict()
            d["duplicates"] = e.duplicate_params
            d["needs_manual_review"] = e.needs_manual_review
            lines.append(json.dumps(d, sort_keys=True))
        return "\n".join(lines) + ("\n" if lines else "")

    def csv_summary(self) -> str:
        rows = ["code,u1,u2,u3,v1,v2,s,d,A_d,beta,I_2d"]
        for i, e in enumerate(self.entries, 1):
            rec = e.record
            if rec.params_record:
                parts = rec.params_record.split()
                u = parts[2:5]
                v = parts[5:7]
                s = parts[7]
            else:
                u, v, s = ["", "", ""], ["", ""], ""
            beta = "" if rec.beta is None else str(rec.beta)
            rows.append(
                f"C{i},{u[0]},{u[1]},{u[2]},{v[0]},{v[1]},{s},"
                f"{rec.d},{rec.a_d},{beta},{rec.i_2d}"
            )
        return "\n".join(rows) + "\n"

    def state_dict(self) -> dict:
        return {
            "schema_version": 1,
            "processed": self.processed,
            "complete": self.complete,
            "entries": [
                {
                    "record": e.record.to_dict(),
                    "duplicates": e.duplicate_params,
                }
                for e in self.entries
            ],
        }

    @classmethod
    def from_state(cls, state: dict) -> "ResultStore":
        store = cls()
        store.processed = state["processed"]
        store.complete = state.get("complete", False)
        for item in state["entries"]:
            rd = item["record"]
            gen = gf2.BitMatrix(
                rd["n"],
                tuple(gf2.BitVector.from_hex(rd["n"], h) for h in rd["gen"]),
            )
            rec = CodeRecord(
                gen=gen,
                d=rd["d"],
                d_proven=rd["d_proven"],
                a_d=rd["A_d"],
                i_2d=rd["I_2d"],
                a_counts={int(w): c for w, c in rd.get("A_counts", {}).items()},
                shadow_counts=(
                    {int(w): c for w, c in rd["shadow_counts"].items()}
                    if "shadow_counts" in rd
                    else None
                ),
                beta=rd.get("beta"),
                params_record=rd.get("params"),
            )
            entry = StoreEntry(rec, list(item.get("duplicates", [])))
            store.index[rec.fingerprint()] = len(store.entries)
            store.entries.append(entry)
        return store


def evaluate_grid_point(
    ctx: FieldContext,
    f: int,
    u: tuple[int, int, int],
    v: tuple[int, int],
    s: tuple[int, ...],
    target_d: int,
    budget: int,
    compute_shadow: bool = False,
    shadow_wmax: int = 0,
) -> CodeRecord | None:
    """Build and analyse one grid point; None when rejected early."""
    params = ConstructionParams(
        ctx=ctx, f=f, u=u, v=v, s=s, fixed_gen=default_fixed_gen(4, f)
    )
    g = build_code(params)
    d, proven = analysis.min_distance(g, budget=budget, fail_below=target_d)
    if d < target_d or not proven:
        return None
    words = analysis.codewords_of_weight(g, d)
    i_2d = analysis.intersection_number_from_words(words, g.cols, 2 * d)
    rec = CodeRecord(
        gen=g,
        d=d,
        d_proven=proven,
        a_d=len(words),
        i_2d=i_2d,
        beta=analysis.derive_beta(g.cols, d, len(words)),
        params_record=params.flat_record(),
    )
    if compute_shadow:
        sd = analysis.shadow(g)
        rec.shadow_counts = analysis.shadow_weight_counts(
            sd, shadow_wmax or (d + 1)
        )
    return rec


def run_search(
    plan: SearchPlan,
    ctx: FieldContext | None = None,
    progress=None,
    max_points: int | None = None,
) -> ResultStore:
    """Execute the plan; deterministic result regardless of interruption.

    Honors plan.checkpoint_path for periodic state flushes and resume.
    ``max_points`` truncates the grid (the store is then flagged incomplete).
    """
    if ctx is None:
        ctx = find_generators(plan.p)
    grid = plan.grid(ctx)
    store = ResultStore()
    start_index = 0
    if plan.checkpoint_path:
        try:
            with open(plan.checkpoint_path, "r", encoding="utf-8") as fh:
                state = json.load(fh)
            store = ResultStore.from_state(state)
            start_index = store.processed
            if progress:
                progress(f"resumed at grid index {start_index}")
        except FileNotFoundError:
            pass

    total = len(grid) if max_points is None else min(len(grid), max_points)
    t0 = time.time()
    last_flush = start_index
    for idx in range(start_index, total):
        u, v, s = grid[idx]
        rec = evaluate_grid_point(
            ctx,
            plan.f,
            u,
            v,
            s,
            plan.target_d,
            plan.distance_budget,
            plan.compute_shadow,
            plan.shadow_wmax,
        )
        if rec is not None:
            new = store.add(rec)
            if progress and new:
                progress(
                    f"[{idx + 1}/{total}] new fingerprint {rec.fingerprint()} "
                    f"from {rec.params_record}"
                )
        store.processed = idx + 1
        if (
            plan.checkpoint_path
            and store.processed - last_flush >= plan.checkpoint_every
        ):
            _flush_checkpoint(plan.checkpoint_path, store)
            last_flush = store.processed
        if progress and (idx + 1) % 5000 == 0:
            rate = (idx + 1 - start_index) / max(time.time() - t0, 1e-9)
            progress(
                f"[{idx + 1}/{total}] {len(store.entries)} fingerprints, "
                f"{rate:.0f} points/s"
            )
    store.complete = store.processed >= len(grid) and max_points is None
    if plan.checkpoint_path:
        _flush_checkpoint(plan.checkpoint_path, store)
    if plan.output_path:
        with open(plan.output_path, "w", encoding="utf-8") as fh:
            fh.write(store.to_jsonl())
        with open(plan.output_path + ".csv", "w", encoding="utf-8") as fh:
            fh.write(store.csv_summary())
    return store


def _flush_checkpoint(path: str, store: ResultStore):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(store.state_dict(), fh)
    import os

    os.replace(tmp, path)


def fingerprint(record: CodeRecord) -> tuple:
    """Permutation-invariant identity key of a code record."""
    return record.fingerprint()


# ---------------------------------------------------------------------------
# plan files: plain-text key = value


def parse_plan(text: str) -> SearchPlan:
    kv = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad plan line {line!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        kv[key] = val

    p = int(kv.pop("p"))
    f = int(kv.pop("f"))
    target_d = int(kv.pop("target_d"))
    vsrc = kv.pop("v_pairs", "published")
    if vsrc == "published":
        if p != 19:
            raise ValueError("published v-pair list is only built in for p=19")
        v_pairs = V_PUBLISHED_19
    elif vsrc == "raw":
        from sdcodes.cyclic import find_v_pairs

        v_pairs = tuple(find_v_pairs(find_generators(p)))
    else:
        v_pairs = tuple(
            tuple(int(x) for x in pair.split(",")) for pair in vsrc.split(";")
        )
    plan = SearchPlan(p=p, f=f, target_d=target_d, v_pairs=v_pairs)
    if "classes" in kv:
        plan = replace(
            plan, classes=tuple(int(x) for x in kv.pop("classes").split(","))
        )
    if "budget" in kv:
        plan = replace(plan, budget=int(kv.pop("budget")))
    if "u_slice" in kv:
        lo, hi = kv.pop("u_slice").split(":")
        plan = replace(plan, u_slice=(int(lo), int(hi)))
    if "shadow" in kv:
        plan = replace(plan, compute_shadow=kv.pop("shadow").lower() == "true")
    if "shadow_wmax" in kv:
        plan = replace(plan, shadow_wmax=int(kv.pop("shadow_wmax")))
    if "checkpoint" in kv:
        plan = replace(plan, checkpoint_path=kv.pop("checkpoint"))
    if "checkpoint_every" in kv:
        plan = replace(plan, checkpoint_every=int(kv.pop("checkpoint_every")))
    if "output" in kv:
        plan = replace(plan, output_path=kv.pop("output"))
    if "threads" in kv:
        plan = replace(plan, threads=int(kv.pop("threads")))
    if kv:
        raise ValueError(f"unknown plan keys: {sorted(kv)}")
    return plan
