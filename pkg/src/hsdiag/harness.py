"""Brute-force oracle and seeded random instances, plus the benchmark grid."""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from itertools import combinations

from .hbfhs import NodeCount
from .hstree import resolve_model
from .model import ConfigError, Dpi, Mode, minimize_sets
from .reasoner import is_diagnosis, violates

ORACLE_LIMIT = 20


def _guard(dpi: Dpi):
    if dpi.size > ORACLE_LIMIT:
        raise ConfigError(f"exhaustive enumeration refused for |K|={dpi.size} > {ORACLE_LIMIT}")


def _minimal_by_cardinality(size: int, test) -> list:
    kept = []
    for k in range(size + 1):
        for combo in combinations(range(size), k):
            s = frozenset(combo)
            if any(prev <= s for prev in kept):
                continue
            if test(s):
                kept.append(s)
    return kept


def brute_force_min_diagnoses(dpi: Dpi, model=None) -> list:
    """All minimal diagnoses, best cost first, ties in lexicographic order."""
    _guard(dpi)
    model = resolve_model(dpi, model)
    found = _minimal_by_cardinality(dpi.size, lambda s: is_diagnosis(s, dpi))
    tuples = [tuple(sorted(s)) for s in found]
    return sorted(tuples, key=lambda t: (-model.cost(t), t))


def brute_force_min_conflicts(dpi: Dpi) -> list:
    """All minimal conflicts in cardinality order (sorted id tuples)."""
    _guard(dpi)
    found = _minimal_by_cardinality(dpi.size, lambda s: violates(s, dpi))
    return [tuple(sorted(s)) for s in found]


# -- random instances ---------------------------------------------------------

@dataclass(frozen=True)
class GeneratorParams:
    seed: int = 0
    size: int = 8
    conflict_count: int = 3
    conflict_size: tuple = (2, 3)
    pr_range: tuple = (0.01, 0.3)
    mode: str = "explicit"

    def validate(self):
        lo, hi = self.conflict_size
        if self.size < 1:
            raise ConfigError("need at least one component")
        if self.conflict_count < 0:
            raise ConfigError("conflict_count must be non-negative")
        if not 1 <= lo <= hi:
            raise ConfigError(f"bad conflict size range {self.conflict_size}")
        if hi > self.size:
            raise ConfigError(f"conflict size {hi} exceeds |K|={self.size}")
        plo, phi = self.pr_range
        if not 0.0 < plo <= phi < 1.0:
            raise ConfigError(f"bad probability range {self.pr_range}")
        if self.mode not in ("explicit", "cnf"):
            raise ConfigError(f"unknown generator mode {self.mode!r}")


def component_names(n: int) -> list:
    return [f"ax{i + 1}" for i in range(n)]


def generate_random_dpi(params: GeneratorParams) -> Dpi:
    """Deterministic random instance for ``params`` (same seed, same DPI)."""
    params.validate()
    rng = random.Random(params.seed)
    names = component_names(params.size)
    lo, hi = params.conflict_size
    plo, phi = params.pr_range
    if params.mode == "explicit":
        drawn = [rng.sample(range(params.size), rng.randint(lo, hi))
                 for _ in range(params.conflict_count)]
        probs = [round(rng.uniform(plo, phi), 4) for _ in names]
        return Dpi.from_conflicts(names, minimize_sets(drawn), probs)
    return _generate_cnf(params, rng, names)


def _generate_cnf(params: GeneratorParams, rng: random.Random, names: list) -> Dpi:
    """Implication chains from ``x0`` that end in the forbidden ``z`` or in ``-x0``.

    Every chain of components is a conflict.  Intermediate variables come from
    a small shared pool so chains can cross and share edges.  Components left
    over become implications between distractor variables unreachable from
    ``x0``.
    """
    lo, hi = params.conflict_size
    plo, phi = params.pr_range
    pool = [f"v{i + 1}" for i in range(max(2, params.size // 2))]
    edges = []  # (u, w) literal pairs; one component each
    index = {}

    def edge(u, w):
        key = (u, w)
        if key not in index:
            index[key] = len(edges)
            edges.append(key)

    for k in range(params.conflict_count):
        length = rng.randint(lo, hi)
        budget = params.size - len(edges)
        if budget <= 0:
            break
        length = min(length, budget)
        terminal = "z" if rng.random() < 0.5 else "-x0"
        mids = rng.sample(pool, min(length - 1, len(pool)))
        while len(mids) < length - 1:
            mids.append(rng.choice(pool))
        chain = ["x0", *mids, terminal]
        for u, w in zip(chain, chain[1:]):
            edge(u, w)
    spare = [f"d{i + 1}" for i in range(max(3, params.size))]
    while len(edges) < params.size:
        u, w = rng.sample(spare, 2)
        if (u, w) in index:
            continue
        edge(u, w)
    edges = edges[:params.size]
    rng.shuffle(edges)
    used = {lit.lstrip("-") for e in edges for lit in e} | {"x0", "z"}
    variables = ["x0", "z", *sorted(v for v in used if v not in ("x0", "z"))]
    components = [(name, [[_negate(u), w]]) for name, (u, w) in zip(names, edges)]
    probs = [round(rng.uniform(plo, phi), 4) for _ in names]
    return Dpi.from_cnf(variables, components, positive=[["x0"]], negative=[[["z"]]],
                        probabilities=probs)


def _negate(lit: str) -> str:
    return lit[1:] if lit.startswith("-") else "-" + lit


# -- benchmark ---------------------------------------------------------------

#: HBF-HS switch used by the benchmark; small enough to fire on desk-scale trees
BENCH_SWITCH = NodeCount(20)

CSV_FIELDS = ["scenario", "algorithm", "ld", "mode", "selector", "time_ms",
              "peak_nodes", "conflicts_computed"]


def pick_actual(dpi: Dpi, rng: random.Random, limit: int = 200) -> tuple:
    """A random minimal diagnosis (component names) to act as the hidden fault."""
    from .hstree import hs_tree

    D, _ = hs_tree(dpi, Mode.MIN_CARD, limit)
    return tuple(dpi.names(rng.choice(D)))


def run_bench(seeds=range(10), sizes=(12, 20, 30), algos=("hstree", "rbfhs", "hbfhs"),
              lds=(2, 6, 10, 20), modes=("mincard", "maxprob"), selectors=("spl", "ent"),
              sessions=1, conflict_count=6, conflict_size=(2, 5), gen_mode="explicit",
              criterion=BENCH_SWITCH, progress=None) -> list:
    """Run sequential sessions over the grid; one CSV row per cell.

    Each row sums search time and conflict computations over the session's
    iterations and reports the largest stored-node peak of any iteration.
    """
    from .sequential import run_session

    rows = []
    for size in sizes:
        for seed in seeds:
            params = GeneratorParams(seed=seed, size=size, conflict_count=conflict_count,
                                     conflict_size=(min(conflict_size[0], size),
                                                    min(conflict_size[1], size)),
                                     mode=gen_mode)
            dpi = generate_random_dpi(params)
            scenario = f"k{size}-s{seed}"
            rng = random.Random(seed * 7919 + size)
            actuals = [pick_actual(dpi, rng) for _ in range(sessions)]
            for mode in modes:
                for selector in selectors:
                    for ld in lds:
                        for algo in algos:
                            t = 0.0
                            peak = 0
                            conflicts = 0
                            for actual in actuals:
                                res = run_session(dpi, actual, ld, selector, algo, Mode(mode),
                                                  criterion=criterion)
                                t += sum(s["time_ms"] for s in res.per_iteration)
                                peak = max([peak] + [s["peak_nodes"] for s in res.per_iteration])
                                conflicts += sum(s["conflicts_computed"] for s in res.per_iteration)
                            rows.append({"scenario": scenario, "algorithm": algo, "ld": ld,
                                         "mode": mode, "selector": selector,
                                         "time_ms": round(t, 3), "peak_nodes": peak,
                                         "conflicts_computed": conflicts,
                                         "_conflicts": len(dpi.conflicts or ())})
            if progress:
                progress(scenario)
    return rows


def scenario_factors(rows: list) -> dict:
    """Memory factor per scenario: summed HS-Tree peaks over summed RBF-HS peaks."""
    sums = {}
    for r in rows:
        if r["algorithm"] in ("hstree", "rbfhs"):
            entry = sums.setdefault(r["scenario"], {"hstree": 0, "rbfhs": 0,
                                                    "conflicts": r.get("_conflicts")})
            entry[r["algorithm"]] += r["peak_nodes"]
    return {k: (v["hstree"] / max(v["rbfhs"], 1), v["conflicts"]) for k, v in sums.items()}


def summarize(rows: list) -> list:
    """Memory factor (HS-Tree peak / RBF-HS peak) and time factor per cell."""
    cells = {}
    for r in rows:
        key = (r["scenario"], r["ld"], r["mode"], r["selector"])
        cells.setdefault(key, {})[r["algorithm"]] = r
    out = []
    for (scenario, ld, mode, selector), algos in cells.items():
        if "hstree" not in algos or "rbfhs" not in algos:
            continue
        hs, rb = algos["hstree"], algos["rbfhs"]
        out.append({"scenario": scenario, "ld": ld, "mode": mode, "selector": selector,
                    "conflicts": hs.get("_conflicts"),
                    "memory_factor": hs["peak_nodes"] / max(rb["peak_nodes"], 1),
                    "time_factor": rb["time_ms"] / hs["time_ms"] if hs["time_ms"] else None})
    return out


def rows_to_csv(rows: list, header=True) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore",
                            lineterminator="\n")
    if header:
        writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def summary_to_csv(summary: list) -> str:
    buf = io.StringIO()
    fields = ["scenario", "ld", "mode", "selector", "conflicts", "memory_factor", "time_factor"]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for s in summary:
        row = dict(s)
        row["memory_factor"] = f"{s['memory_factor']:.3f}"
        row["time_factor"] = "" if s["time_factor"] is None else f"{s['time_factor']:.3f}"
        writer.writerow(row)
    return buf.getvalue()


def space_bound(conflicts) -> int:
    """``|C_max| * |minC|`` for a list of minimal conflicts."""
    conflicts = list(conflicts)
    if not conflicts:
        return 0
    return max(len(c) for c in conflicts) * len(conflicts)
