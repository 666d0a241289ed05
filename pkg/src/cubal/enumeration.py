"""Backtracking enumeration of all associative Cayley tables on {1, .., m}.

Cells are filled in row-major order with values tried in increasing order,
so tables come out in lexicographic order.  After each assignment every
associativity triple whose four products are already determined is checked,
which prunes dead branches as early as possible; a full m^(m^2) scan is
hopeless beyond m = 3.

The search tree can be partitioned along the assignments of the first-row
cells, which gives embarrassingly parallel subtrees; partial results are
concatenated in prefix order so the output never depends on the worker
count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .errors import CapacityError
from .operations import Operation, act, all_permutations, orbit

HARD_MAX_M = 6
DEFAULT_MAX_M = 5
DEFAULT_ORBIT_MAX_M = 4


def _check_budget(m: int, max_m: int, what: str) -> None:
    if not isinstance(m, int) or m < 1:
        raise CapacityError(f"m must be a positive integer, got {m!r}")
    cap = min(max_m, HARD_MAX_M)
    if m > cap:
        hint = (
            f"raise the budget explicitly (max_m=..., or CUBAL_MAX_M for the CLI)"
            if m <= HARD_MAX_M
            else f"sizes beyond {HARD_MAX_M} are not supported"
        )
        raise CapacityError(f"{what} for m={m} exceeds the budget of {cap}; {hint}")


def _consistent(t: list[int], m: int, pos: int, v: int, val_cells, forced, trail) -> bool:
    """Process every associativity triple touched by assigning cell pos = v.

    A triple (x, y, z) compares t[t[x,y], z] with t[x, t[y,z]]; it is visited
    as soon as any of its four contributing cells is filled, which is exactly
    when the new cell plays one of the four roles below.  Fully determined
    triples are checked; triples with a single undetermined cell pin that
    cell's value in ``forced`` (recorded on ``trail`` for undo), so later
    cells are branched on only when genuinely free.  The caller must have
    stored v in t[pos] already: a triple may mention its own inner-product
    cell (for instance when t[x,y] = x), and those lookups must resolve to v.
    """
    i, j = divmod(pos, m)
    base_i = i * m
    base_j = j * m
    base_v = v * m
    # role 1: the new cell is the inner product of (i, j, z)
    for z in range(m):
        q = t[base_j + z]
        if q >= 0:
            lhs = t[base_v + z]
            rhs = t[base_i + q]
            if lhs >= 0:
                if rhs >= 0:
                    if lhs != rhs:
                        return False
                else:
                    c = base_i + q
                    w = forced[c]
                    if w < 0:
                        forced[c] = lhs
                        trail.append(c)
                    elif w != lhs:
                        return False
            elif rhs >= 0:
                c = base_v + z
                w = forced[c]
                if w < 0:
                    forced[c] = rhs
                    trail.append(c)
                elif w != rhs:
                    return False
    # role 2: the new cell is the inner product of (x, i, j)
    for x in range(m):
        p = t[x * m + i]
        if p >= 0:
            lhs = t[p * m + j]
            rhs = t[x * m + v]
            if lhs >= 0:
                if rhs >= 0:
                    if lhs != rhs:
                        return False
                else:
                    c = x * m + v
                    w = forced[c]
                    if w < 0:
                        forced[c] = lhs
                        trail.append(c)
                    elif w != lhs:
                        return False
            elif rhs >= 0:
                c = p * m + j
                w = forced[c]
                if w < 0:
                    forced[c] = rhs
                    trail.append(c)
                elif w != rhs:
                    return False
    # role 3: the new cell is the outer-left product of (x, y, j), t[x,y] = i
    for c0 in val_cells[i]:
        q = t[(c0 % m) * m + j]
        if q >= 0:
            c = (c0 // m) * m + q
            rhs = t[c]
            if rhs >= 0:
                if rhs != v:
                    return False
            else:
                w = forced[c]
                if w < 0:
                    forced[c] = v
                    trail.append(c)
                elif w != v:
                    return False
    # role 4: the new cell is the outer-right product of (i, y, z), t[y,z] = j
    for c0 in val_cells[j]:
        p = t[base_i + c0 // m]
        if p >= 0:
            c = p * m + c0 % m
            lhs = t[c]
            if lhs >= 0:
                if lhs != v:
                    return False
            else:
                w = forced[c]
                if w < 0:
                    forced[c] = v
                    trail.append(c)
                elif w != v:
                    return False
    return True


def _search(m: int, t: list[int], val_cells, forced, pos: int, stop: int):
    """Yield every consistent completion of t up to cell ``stop`` as a tuple."""
    if pos == stop:
        yield tuple(t[:stop])
        return
    f = forced[pos]
    for v in range(m) if f < 0 else (f,):
        t[pos] = v
        trail: list[int] = []
        if _consistent(t, m, pos, v, val_cells, forced, trail):
            val_cells[v].append(pos)
            yield from _search(m, t, val_cells, forced, pos + 1, stop)
            val_cells[v].pop()
        for c in trail:
            forced[c] = -1
    t[pos] = -1


def _fresh_state(m: int):
    return [-1] * (m * m), [[] for _ in range(m)], [-1] * (m * m)


def _resume_state(m: int, prefix: tuple[int, ...]):
    """Rebuild the search state after the given (known consistent) prefix.

    Assignments are replayed through the consistency pass so the forced-value
    bookkeeping matches what a direct search would hold at this point.
    """
    t, val_cells, forced = _fresh_state(m)
    for pos, v in enumerate(prefix):
        t[pos] = v
        ok = _consistent(t, m, pos, v, val_cells, forced, [])
        assert ok, "prefix from the search must replay cleanly"
        val_cells[v].append(pos)
    return t, val_cells, forced


def _to_operation(m: int, flat: tuple[int, ...]) -> Operation:
    rows = tuple(tuple(v + 1 for v in flat[r * m : (r + 1) * m]) for r in range(m))
    return Operation(rows, unchecked=True)


def _prefixes(m: int, depth: int) -> list[tuple[int, ...]]:
    t, val_cells, forced = _fresh_state(m)
    return list(_search(m, t, val_cells, forced, 0, depth))


def _count_completions(args) -> int:
    m, prefix = args
    t, val_cells, forced = _resume_state(m, prefix)
    return sum(1 for _ in _search(m, t, val_cells, forced, len(prefix), m * m))


def _collect_completions(args) -> list[tuple[int, ...]]:
    m, prefix = args
    t, val_cells, forced = _resume_state(m, prefix)
    return list(_search(m, t, val_cells, forced, len(prefix), m * m))


def _map_over_prefixes(m: int, worker, jobs: int):
    """Apply ``worker`` to every first-row search prefix, in prefix order."""
    depth = m if m > 1 else 0
    tasks = [(m, p) for p in _prefixes(m, depth)]
    if jobs > 1 and len(tasks) > 1:
        ctx = multiprocessing.get_context()
        with ctx.Pool(processes=jobs) as pool:
            yield from pool.imap(worker, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
    else:
        for task in tasks:
            yield worker(task)


def enumerate_operations(m: int, *, max_m: int = DEFAULT_MAX_M):
    """Yield every associative operation on {1, .., m} once, in lexicographic order."""
    _check_budget(m, max_m, "enumeration")
    t, val_cells, forced = _fresh_state(m)
    for flat in _search(m, t, val_cells, forced, 0, m * m):
        yield _to_operation(m, flat)


def count_operations(m: int, *, jobs: int = 1, max_m: int = DEFAULT_MAX_M) -> int:
    """The number of associative operations on {1, .., m}, without keeping tables."""
    _check_budget(m, max_m, "counting")
    return sum(_map_over_prefixes(m, _count_completions, jobs))


def collect_operations(m: int, *, jobs: int = 1, max_m: int = DEFAULT_MAX_M) -> list[Operation]:
    """The full census as a list, in lexicographic order."""
    _check_budget(m, max_m, "enumeration")
    ops: list[Operation] = []
    for chunk in _map_over_prefixes(m, _collect_completions, jobs):
        ops.extend(_to_operation(m, flat) for flat in chunk)
    return ops


def canonical_representative(a: Operation) -> Operation:
    """The lexicographic minimum of the orbit of a; constant on orbits."""
    return min(orbit(a), key=Operation.flat)


@dataclass(frozen=True)
class CensusResult:
    """An orbit classification of the full census for one m."""

    m: int
    total: int
    representatives: tuple[tuple[Operation, int], ...]

    @property
    def orbit_count(self) -> int:
        return len(self.representatives)

    def orbit_sizes(self) -> list[int]:
        return [size for _, size in self.representatives]


def orbit_census(
    m: int, *, jobs: int = 1, max_m: int = DEFAULT_ORBIT_MAX_M
) -> CensusResult:
    """Enumerate the census and partition it into relabeling orbits.

    Representatives are the lexicographic minima of their orbits and are
    reported in lexicographic order.
    """
    _check_budget(m, max_m, "orbit classification")
    ops = collect_operations(m, jobs=jobs, max_m=max_m)
    perms = list(all_permutations(m))
    assigned: set[Operation] = set()
    representatives: list[tuple[Operation, int]] = []
    for op in ops:
        if op in assigned:
            continue
        members = frozenset(act(pi, op) for pi in perms)
        # ops arrive in lexicographic order, so the first member seen is minimal
        representatives.append((op, len(members)))
        assigned.update(members)
    return CensusResult(m=m, total=len(ops), representatives=tuple(representatives))
