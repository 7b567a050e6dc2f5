"""Exhaustive, deterministic search for tuple solutions up to a bound.

The fast path indexes 1..N by psi value, enumerates equal-class multisets
per class, and decomposes each residual into a sum of f k-th powers.  The
brute-force oracle at the bottom re-derives the same sets with plain
nested loops and no shared machinery; differential tests compare the two.

Bound semantics: N limits equal-class entries only; free entries are
bounded by the residual automatically.  Output is always the canonical
sorted list, independent of the parallelism degree.
"""

from __future__ import annotations

from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Sequence

import numpy as np

from .arith import PsiSieve, build_sieve, int_kth_root, is_perfect_kth_power
from .tuples import Solution, TupleKind, sort_solutions

__all__ = [
    "SearchConfig",
    "PsiClassIndex",
    "build_class_index",
    "decompose_sum_of_powers",
    "search",
    "brute_force_oracle",
    "max_safe_bound",
    "ORACLE_MAX_BOUND",
]

ORACLE_MAX_BOUND = 500

_UINT128_MAX = (1 << 128) - 1

# Above this many (b1, b2) prefix pairs, a four-entry decomposition switches
# from recursive descent to the sorted pair-sum table.
_MITM_PAIR_THRESHOLD = 2_000


def max_safe_bound(power: int) -> int:
    """Largest bound N with psi(N)**power provably inside 128 bits.

    Conservative: uses psi(n) < 4n, which holds for every n below the
    primorial of 31 (far beyond any sieve that fits in memory).
    """
    return int_kth_root(_UINT128_MAX, power) // 4


@dataclass(frozen=True, slots=True)
class SearchConfig:
    kind: TupleKind
    bound: int
    jobs: int = 1
    emit_partial: bool = False

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        safe = max_safe_bound(self.kind.power)
        if self.bound > safe:
            raise ValueError(
                f"bound {self.bound} unsafe for power {self.kind.power}; "
                f"maximum safe bound is {safe}"
            )


@dataclass(frozen=True)
class PsiClassIndex:
    """Map psi value -> sorted list of all n <= bound with that psi."""

    bound: int
    classes: dict[int, list[int]]


def build_class_index(sieve: PsiSieve, bound: int | None = None) -> PsiClassIndex:
    """Index 1..bound by psi value; bound defaults to the sieve limit."""
    if bound is None:
        bound = sieve.limit
    if not 1 <= bound <= sieve.limit:
        raise ValueError(f"bound must be in 1..{sieve.limit}")
    classes: dict[int, list[int]] = {}
    for n, v in enumerate(sieve.psi[1 : bound + 1].tolist(), start=1):
        classes.setdefault(v, []).append(n)
    return PsiClassIndex(bound=bound, classes=classes)


# --- sum-of-k-th-powers decomposition ------------------------------------


class _PairSumTable:
    """All sums x**p + y**p with 1 <= x <= y <= cap, sorted, with (x, y).

    int64 throughout; only built when 4 * cap**p fits, so sums and the
    residuals probed against them cannot overflow.
    """

    __slots__ = ("power", "cap", "sums", "xs", "ys", "pow_np")

    def __init__(self, power: int, cap: int):
        self.power = power
        self.cap = cap
        pw = np.arange(cap + 1, dtype=np.int64) ** power
        counts = np.arange(cap, 0, -1, dtype=np.int64)
        xs = np.repeat(np.arange(1, cap + 1, dtype=np.int64), counts)
        offsets = np.repeat(np.cumsum(counts) - counts, counts)
        ys = xs + (np.arange(xs.size, dtype=np.int64) - offsets)
        sums = pw[xs] + pw[ys]
        order = np.argsort(sums, kind="stable")
        self.sums = sums[order]
        self.xs = xs[order].astype(np.int32)
        self.ys = ys[order].astype(np.int32)
        self.pow_np = pw

    @staticmethod
    def feasible(power: int, cap: int) -> bool:
        # int64 headroom plus a memory guard on the pair count
        return cap >= 2 and 4 * cap**power < 2**63 and cap * (cap + 1) // 2 <= 300_000_000


def _floor_root_vec(vals: np.ndarray, power: int) -> np.ndarray:
    """Vectorized floor(vals ** (1/power)) for nonnegative int64 input."""
    r = np.power(np.maximum(vals, 0).astype(np.float64), 1.0 / power).astype(np.int64)
    r = np.maximum(r, 0)
    for _ in range(3):
        r += (r + 1) ** power <= vals
        r -= np.minimum(r, 1) * (r**power > vals)
    return r


def _two_pointer(residual: int, power: int, lo: int, cap: int) -> list[tuple[int, int]]:
    """All pairs lo <= x <= y <= cap with x**p + y**p == residual, ascending."""
    out: list[tuple[int, int]] = []
    if residual < 2:
        return out
    x = lo
    y = min(cap, int_kth_root(residual - 1, power))
    while x <= y:
        s = x**power + y**power
        if s == residual:
            out.append((x, y))
            x += 1
            y -= 1
        elif s < residual:
            x += 1
        else:
            y -= 1
    return out


def _descend(
    residual: int,
    slots_left: int,
    power: int,
    lo: int,
    cap: int,
    prefix: tuple[int, ...],
    out: list[tuple[int, ...]],
) -> None:
    """Recursive descent with monotone residual pruning; pairs via two-pointer."""
    if slots_left == 2:
        for x, y in _two_pointer(residual, power, lo, cap):
            out.append(prefix + (x, y))
        return
    if slots_left == 1:
        r = is_perfect_kth_power(residual, power)
        if r is not None and lo <= r <= cap:
            out.append(prefix + (r,))
        return
    # smallest remaining entry b satisfies slots_left * b**p <= residual
    hi = min(cap, int_kth_root(residual // slots_left, power))
    for b in range(lo, hi + 1):
        _descend(residual - b**power, slots_left - 1, power, b, cap, prefix + (b,), out)


def _mitm4(
    residual: int, power: int, cap: int, table: _PairSumTable
) -> list[tuple[int, ...]]:
    """Four-entry decomposition via the sorted pair-sum table.

    Enumerates (b1, b2) prefixes vectorized and looks the tail pair up by
    value; the b2 <= x junction keeps each canonical 4-tuple unique.
    """
    out: list[tuple[int, ...]] = []
    pw = table.pow_np
    b1_max = min(cap, int_kth_root(residual // 4, power), table.cap)
    if b1_max < 1:
        return out
    b1s = np.arange(1, b1_max + 1, dtype=np.int64)
    r1s = residual - pw[b1s]
    b2_hi = np.minimum(_floor_root_vec(r1s // 3, power), min(cap, table.cap))
    counts = b2_hi - b1s + 1
    keep = counts > 0
    b1s, counts = b1s[keep], counts[keep]
    if b1s.size == 0:
        return out
    b1_flat = np.repeat(b1s, counts)
    offsets = np.repeat(np.cumsum(counts) - counts, counts)
    b2_flat = b1_flat + (np.arange(b1_flat.size, dtype=np.int64) - offsets)
    rem2 = residual - pw[b1_flat] - pw[b2_flat]
    # probe a residual-bounded slice with sorted needles: far fewer cache
    # misses than independent binary searches over the whole table
    hay_len = int(np.searchsorted(table.sums, residual, side="right"))
    if hay_len == 0:
        return out
    hay = table.sums[:hay_len]
    order = np.argsort(rem2, kind="stable")
    needles = rem2[order]
    idx = np.searchsorted(hay, needles, side="left")
    safe = np.minimum(idx, hay_len - 1)
    hits = (idx < hay_len) & (hay[safe] == needles)
    sums, xs, ys = table.sums, table.xs, table.ys
    for pos in np.flatnonzero(hits):
        i = int(order[pos])
        b2 = int(b2_flat[i])
        want = int(needles[pos])
        j = int(idx[pos])
        while j < hay_len and sums[j] == want:
            x = int(xs[j])
            y = int(ys[j])
            if b2 <= x and y <= cap:
                out.append((int(b1_flat[i]), b2, x, y))
            j += 1
    return out


def decompose_sum_of_powers(
    residual: int,
    count: int,
    power: int,
    cap: int,
    pair_table: _PairSumTable | None = None,
) -> list[tuple[int, ...]]:
    """All non-decreasing count-tuples of positive integers <= cap whose
    power-th powers sum to residual, in lexicographic order.

    count == 1 is a perfect-power test; count == 2 a two-pointer sweep;
    larger counts recurse with monotone residual pruning.  Four-entry
    decompositions switch to a meet-in-the-middle pair-sum table once the
    prefix enumeration would dominate (recursive descent is quartically
    slower at table scale; see decisions on defaults).
    """
    if power not in (2, 3, 4, 5):
        raise ValueError("power must be in 2..5")
    if count < 1:
        raise ValueError("count must be >= 1")
    if residual < 0:
        raise ValueError("residual must be nonnegative")
    if cap < 1 or residual < count:  # entries are >= 1, so sum >= count
        return []
    if count == 1:
        r = is_perfect_kth_power(residual, power)
        return [(r,)] if r is not None and r <= cap else []
    if count == 2:
        return _two_pointer(residual, power, 1, cap)
    if count == 4 and residual < 2**62:  # the table path is int64-only
        root = int_kth_root(residual, power)
        est_pairs = root * root // 2
        if est_pairs > _MITM_PAIR_THRESHOLD:
            table_cap = min(cap, root)
            if pair_table is not None and pair_table.power == power and pair_table.cap >= table_cap:
                return sorted(_mitm4(residual, power, cap, pair_table))
            if _PairSumTable.feasible(power, table_cap):
                return sorted(_mitm4(residual, power, cap, _PairSumTable(power, table_cap)))
    out: list[tuple[int, ...]] = []
    _descend(residual, count, power, 1, cap, (), out)
    return out


# --- the search proper -----------------------------------------------------


def _needs_pair_table(kind: TupleKind, sieve: PsiSieve, bound: int) -> _PairSumTable | None:
    """Build the shared tail-pair table when the kind can profit from it."""
    if kind.free != 4:
        return None
    cap = int(sieve.psi[1 : bound + 1].max()) if bound >= 1 else 1
    root = cap  # residual < psi(a)**p, so free entries stay below max psi
    if root * root // 2 <= _MITM_PAIR_THRESHOLD:
        return None
    if not _PairSumTable.feasible(kind.power, root):
        return None
    return _PairSumTable(kind.power, root)


def _search_a_range(
    kind: TupleKind,
    lo: int,
    hi: int,
    psi_list: list[int],
    table: _PairSumTable | None,
) -> list[Solution]:
    """Equal class of size 1: iterate a in lo..hi directly."""
    p, f = kind.power, kind.free
    out: list[Solution] = []
    for a in range(lo, hi + 1):
        v = psi_list[a]
        target = v**p
        residual = target - a**p
        if residual < f:
            continue
        cap = int_kth_root(residual, p)
        for frees in decompose_sum_of_powers(residual, f, p, cap, table):
            out.append(Solution(kind, (a,), frees, v, target))
    return out


def _search_classes(
    kind: TupleKind,
    keys: Sequence[int],
    index: PsiClassIndex,
    table: _PairSumTable | None,
) -> list[Solution]:
    """Equal class of size >= 2: enumerate multisets within each psi class."""
    p, e, f = kind.power, kind.equal, kind.free
    out: list[Solution] = []
    for v in keys:
        members = index.classes[v]
        target = v**p
        if e * members[0] ** p + f > target:
            continue
        for multiset in combinations_with_replacement(members, e):
            residual = target - sum(a**p for a in multiset)
            if residual < f:
                continue
            cap = int_kth_root(residual, p)
            for frees in decompose_sum_of_powers(residual, f, p, cap, table):
                out.append(Solution(kind, multiset, frees, v, target))
    return out


# Worker-side state for process pools: each worker builds the sieve (and
# index/table as needed) once, keyed by the search bound.
_worker_state: dict = {}


def _init_worker(kind: TupleKind, bound: int) -> None:
    sieve = build_sieve(bound)
    _worker_state["psi_list"] = sieve.psi[: bound + 1].tolist()
    _worker_state["index"] = build_class_index(sieve, bound) if kind.equal >= 2 else None
    _worker_state["table"] = _needs_pair_table(kind, sieve, bound)


def _run_chunk(payload: tuple) -> list[Solution]:
    kind, chunk = payload
    if chunk[0] == "range":
        _, lo, hi = chunk
        return _search_a_range(kind, lo, hi, _worker_state["psi_list"], _worker_state["table"])
    _, keys = chunk
    return _search_classes(kind, keys, _worker_state["index"], _worker_state["table"])


def search(
    config: SearchConfig,
    sieve: PsiSieve | None = None,
    progress: Callable[[int, int, list[Solution]], None] | None = None,
) -> list[Solution]:
    """All canonical solutions of config.kind with equal-class max <= bound.

    Deterministic for any jobs value: the outer space is split into fixed
    contiguous chunks, workers return locally collected results, and the
    merged list is sorted canonically.  progress (if given) is called with
    (chunk_index, chunk_count, chunk_solutions) as chunks complete.
    """
    kind, bound = config.kind, config.bound
    if sieve is None or sieve.limit < bound:
        sieve = build_sieve(bound)

    if kind.equal == 1:
        chunks = [("range", lo, min(lo + _chunk_len(bound, config.jobs) - 1, bound))
                  for lo in range(1, bound + 1, _chunk_len(bound, config.jobs))]
    else:
        index = build_class_index(sieve, bound)
        keys = sorted(index.classes)
        step = _chunk_len(len(keys), config.jobs)
        chunks = [("classes", keys[i : i + step]) for i in range(0, len(keys), step)]

    use_pool = config.jobs > 1 and len(chunks) > 1
    results: list[Solution] = []
    if not use_pool:
        psi_list = sieve.psi[: bound + 1].tolist()
        index_local = build_class_index(sieve, bound) if kind.equal >= 2 else None
        table = _needs_pair_table(kind, sieve, bound)
        for i, chunk in enumerate(chunks):
            if chunk[0] == "range":
                part = _search_a_range(kind, chunk[1], chunk[2], psi_list, table)
            else:
                part = _search_classes(kind, chunk[1], index_local, table)
            if progress is not None:
                progress(i, len(chunks), part)
            results.extend(part)
    else:
        with ProcessPoolExecutor(
            max_workers=config.jobs,
            initializer=_init_worker,
            initargs=(kind, bound),
        ) as pool:
            for i, part in enumerate(pool.map(_run_chunk, [(kind, c) for c in chunks])):
                if progress is not None:
                    progress(i, len(chunks), part)
                results.extend(part)
    return sort_solutions(results)


def _chunk_len(total: int, jobs: int) -> int:
    if jobs <= 1:
        return max(total, 1)
    # many small chunks per worker: per-entry cost grows steeply with a, so
    # coarse contiguous chunks would leave the pool idle on the cheap ones
    return max(1, -(-total // (jobs * 16)))


# --- brute-force oracle ----------------------------------------------------


def _psi_trial(n: int) -> int:
    """Straight trial-division psi, independent of the sieve code path."""
    res, m = n, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            res = res // p * (p + 1)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        res = res // m * (m + 1)
    return res


def brute_force_oracle(config: SearchConfig) -> list[Solution]:
    """Ground-truth search by plain nested loops; bound capped at 500.

    No psi-class index, no two-pointer, no pair-sum table: equal-class
    multisets come straight from itertools with a psi-equality filter, and
    free entries are nested ascending loops whose innermost entry is read
    off a plain table of k-th powers.  Arbitrary-precision arithmetic
    throughout.
    """
    if config.bound > ORACLE_MAX_BOUND:
        raise ValueError(f"oracle bound capped at {ORACLE_MAX_BOUND}")
    kind, N = config.kind, config.bound
    p, e, f = kind.power, kind.equal, kind.free
    psis = [0] + [_psi_trial(a) for a in range(1, N + 1)]
    max_target = max(psis) ** p

    pw = [0]
    while pw[-1] <= max_target:
        pw.append(len(pw) ** p)
    root_of = {val: b for b, val in enumerate(pw)}

    out: list[Solution] = []
    for multiset in combinations_with_replacement(range(1, N + 1), e):
        v = psis[multiset[0]]
        if any(psis[a] != v for a in multiset[1:]):
            continue
        target = v**p
        residual = target - sum(a**p for a in multiset)
        if residual < f:
            continue
        for frees in _oracle_free_part(residual, f, pw, root_of):
            out.append(Solution(kind, multiset, frees, v, target))
    return sort_solutions(out)


def _oracle_free_part(
    residual: int, f: int, pw: list[int], root_of: dict[int, int]
) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    if f == 1:
        b = root_of.get(residual)
        if b is not None:
            out.append((b,))
        return out
    if f == 2:
        b1 = 1
        while 2 * pw[b1] <= residual:
            b2 = root_of.get(residual - pw[b1])
            if b2 is not None and b2 >= b1:
                out.append((b1, b2))
            b1 += 1
        return out
    if f == 4:
        b1 = 1
        while 4 * pw[b1] <= residual:
            r1 = residual - pw[b1]
            b2 = b1
            while 3 * pw[b2] <= r1:
                r2 = r1 - pw[b2]
                hi3 = bisect_right(pw, r2 // 2) - 1
                for b3 in range(b2, hi3 + 1):
                    b4 = root_of.get(r2 - pw[b3])
                    if b4 is not None:
                        out.append((b1, b2, b3, b4))
                b2 += 1
            b1 += 1
        return out
    # general fallback: peel the smallest entry and recurse
    b = 1
    while f * pw[b] <= residual:
        for rest in _oracle_free_part(residual - pw[b], f - 1, pw, root_of):
            if rest[0] >= b:
                out.append((b,) + rest)
        b += 1
    return out
