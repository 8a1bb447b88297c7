"""Face-spiral sequences: parsing, winding, canonicalization, enumeration.

A fullerene on n atoms has m = n/2 + 2 facets (12 pentagons, n/2 - 10
hexagons).  A face spiral orders the facets so that each one shares an
edge with its predecessor; the 12 pentagon positions along the spiral
encode the whole combinatorial isomer.  Winding rebuilds the dual facet
graph (a sphere triangulation with one vertex per facet) from those
positions; unwinding peels it back into a position vector.  The
canonical spiral of an isomer is the lexicographically smallest vector
over all unwindings, and isomers are indexed by the rank of their
canonical spiral.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from multiprocessing import get_context

from .errors import InfeasibleN, InvalidSpiral, NotSpiralable, ParseError

PENTAGON_COUNT = 12

#: Sentinel label ordering above any real facet label (5 or 6).
_LABEL_SENTINEL = 7


def is_feasible(n):
    """True iff a fullerene with n atoms exists (n = 20 or even n >= 24)."""
    return n == 20 or (n >= 24 and n % 2 == 0)


def face_count(n):
    return n // 2 + 2


def hexagon_count(n):
    return n // 2 - 10


@dataclass(frozen=True)
class SpiralSequence:
    """Pentagon positions (1-based, strictly increasing) of one spiral.

    The positions live in [1, m] with m = n/2 + 2; position k means the
    k-th facet of the spiral is a pentagon.
    """

    n: int
    positions: tuple[int, ...]

    def __post_init__(self):
        if not is_feasible(self.n):
            raise InfeasibleN(self.n)
        pos = tuple(int(p) for p in self.positions)
        object.__setattr__(self, "positions", pos)
        if len(pos) != PENTAGON_COUNT:
            raise InvalidSpiral(None, f"need {PENTAGON_COUNT} pentagon positions, got {len(pos)}")
        m = face_count(self.n)
        if any(p < 1 or p > m for p in pos):
            raise InvalidSpiral(None, f"positions must lie in [1, {m}]")
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise InvalidSpiral(None, "positions must be strictly increasing")

    @property
    def m(self):
        return face_count(self.n)

    def labels(self):
        """Facet valency list (5/6) in spiral order, 0-based."""
        lab = bytearray(b"\x06" * self.m)
        for p in self.positions:
            lab[p - 1] = 5
        return bytes(lab)

    def __str__(self):
        return f"{self.n} " + " ".join(str(p) for p in self.positions)


def _positions_from_labels(labels):
    return tuple(i + 1 for i, v in enumerate(labels) if v == 5)


@dataclass(frozen=True)
class FullereneDual:
    """Dual facet graph: one vertex per facet, edges between adjacent facets.

    Facet ids are 0-based in spiral order internally; all file formats
    use 1-based ids.  `isomer_index` is the 1-based lexicographic rank
    of the canonical spiral when known.
    """

    n: int
    pentagon_flags: tuple[bool, ...]
    neighbors: tuple[tuple[int, ...], ...]
    isomer_index: int | None = None

    @property
    def m(self):
        return face_count(self.n)

    @property
    def faces(self):
        return tuple("pentagon" if f else "hexagon" for f in self.pentagon_flags)

    @property
    def edge_count(self):
        return sum(len(nb) for nb in self.neighbors) // 2

    @cached_property
    def _adj_masks(self):
        masks = [0] * self.m
        for u, nb in enumerate(self.neighbors):
            acc = 0
            for w in nb:
                acc |= 1 << w
            masks[u] = acc
        return masks

    @cached_property
    def _labels(self):
        return bytes(5 if f else 6 for f in self.pentagon_flags)

    def edges(self):
        """Sorted list of (u, w) pairs with u < w, 0-based."""
        return [(u, w) for u, nb in enumerate(self.neighbors) for w in nb if u < w]

    def with_index(self, isomer_index):
        return FullereneDual(self.n, self.pentagon_flags, self.neighbors, isomer_index)

    def validate(self):
        """Check the structural fullerene-dual invariants; raise on violation."""
        m = self.m
        if len(self.pentagon_flags) != m or len(self.neighbors) != m:
            raise InvalidSpiral(None, "facet record count mismatch")
        if sum(self.pentagon_flags) != PENTAGON_COUNT:
            raise InvalidSpiral(None, "pentagon count != 12")
        for u, nb in enumerate(self.neighbors):
            want = 5 if self.pentagon_flags[u] else 6
            if len(nb) != want or len(set(nb)) != len(nb) or u in nb:
                raise InvalidSpiral(None, f"facet {u + 1} valency/simplicity broken")
            for w in nb:
                if u not in self.neighbors[w]:
                    raise InvalidSpiral(None, "adjacency not symmetric")
        if self.edge_count != 3 * self.n // 2:
            raise InvalidSpiral(None, "edge count != 3n/2")
        seen = {0}
        stack = [0]
        while stack:
            for w in self.neighbors[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != m:
            raise InvalidSpiral(None, "dual not connected")
        # every internal face a triangle: edge-wise triangle count equals 3n
        masks = self._adj_masks
        tri = 0
        for u, w in self.edges():
            tri += (masks[u] & masks[w]).bit_count()
        if tri != 3 * self.n:
            raise InvalidSpiral(None, "dual is not a sphere triangulation")


# ---------------------------------------------------------------------------
# Winding
# ---------------------------------------------------------------------------
#
# The boundary of the partially wound patch is a deque of facet ids in
# cyclic order: tail (front) .. head (back), with the head adjacent to
# the tail across the seam.  rem[f] counts the unused edge slots of
# facet f.  A new facet bonds the head and the tail, then its bonded
# arc grows by forced moves: an arc-end facet left with no open slots
# is buried (its triangle fan must close now or never), exposing the
# next facet around the cycle, which the new facet must bond in turn
# unless the arc has already wrapped onto it.  A new facet left without
# open slots cannot host its successor, so the winding fails fast.


def _wind_labels(labels):
    """Wind a 5/6 label string into adjacency bitmasks.

    Returns the list of per-facet neighbor masks, or raises
    InvalidSpiral with the 1-based facet index that failed.
    """
    m = len(labels)
    rem = [0] * m
    adj = [0] * m
    rem[0] = labels[0] - 1
    rem[1] = labels[1] - 1
    adj[0] = 2
    adj[1] = 1
    bnd = deque((0, 1))
    for u in range(2, m - 1):
        h = bnd[-1]
        t = bnd[0]
        if rem[h] == 0:
            raise InvalidSpiral(u + 1, "head facet saturated")
        ubit = 1 << u
        au = (1 << h) | (1 << t)
        adj[h] |= ubit
        adj[t] |= ubit
        rem[h] -= 1
        rem[t] -= 1
        slots = labels[u] - 2
        while True:
            b = bnd[-1]
            if rem[b] == 0:
                bnd.pop()
                if not bnd:
                    raise InvalidSpiral(u + 1, "patch closed prematurely")
                nb = bnd[-1]
                nbit = 1 << nb
                if not au & nbit:
                    if slots == 0:
                        raise InvalidSpiral(u + 1, "facet out of slots at the seam")
                    au |= nbit
                    adj[nb] |= ubit
                    rem[nb] -= 1
                    slots -= 1
                continue
            f = bnd[0]
            if rem[f] == 0:
                bnd.popleft()
                nf = bnd[0]
                nbit = 1 << nf
                if not au & nbit:
                    if slots == 0:
                        raise InvalidSpiral(u + 1, "facet out of slots at the seam")
                    au |= nbit
                    adj[nf] |= ubit
                    rem[nf] -= 1
                    slots -= 1
                continue
            break
        if slots == 0:
            raise InvalidSpiral(u + 1, "facet saturated at attachment")
        adj[u] = au
        rem[u] = slots
        bnd.append(u)
    u = m - 1
    if len(bnd) != labels[u]:
        raise InvalidSpiral(u + 1, "final hole does not match the last facet")
    ubit = 1 << u
    acc = 0
    for f in bnd:
        if rem[f] != 1:
            raise InvalidSpiral(u + 1, "final hole does not match the last facet")
        acc |= 1 << f
        adj[f] |= ubit
    adj[u] = acc
    return adj


def _masks_to_neighbors(adj):
    out = []
    for mask in adj:
        nb = []
        while mask:
            low = mask & -mask
            nb.append(low.bit_length() - 1)
            mask ^= low
        out.append(tuple(nb))
    return tuple(out)


def wind(spiral):
    """Wind a spiral sequence into its dual facet graph.

    Raises InvalidSpiral when the positions do not close into a sphere
    triangulation; during enumeration that is the common case, not a
    fault.
    """
    labels = spiral.labels()
    adj = _wind_labels(labels)
    flags = tuple(v == 5 for v in labels)
    return FullereneDual(spiral.n, flags, _masks_to_neighbors(adj))


# ---------------------------------------------------------------------------
# Unwinding and canonicalization
# ---------------------------------------------------------------------------


def _unwind(adj, vals, m, f1, f2, f3, bound):
    """Peel the dual into a label string starting from facets f1, f2, f3.

    Simulates the winding against the actual graph so that the result,
    if any, is a genuine spiral of this dual: every bond the winding
    would make must be an edge of the graph, and each facet must have
    no graph edges into the patch beyond those bonds.  Comparison with
    `bound` is incremental; the peel aborts once its labels exceed
    `bound` at the first differing position (such a spiral can never be
    the lexicographic minimum).

    Returns (labels, tight) on completion, where tight means the labels
    equal `bound`; returns None when the peel fails or aborts.
    """
    v = vals[f1]
    tight = True
    d = v - bound[0]
    if d > 0:
        return None
    if d < 0:
        tight = False
    out = bytearray(m)
    out[0] = v

    v = vals[f2]
    if tight:
        d = v - bound[1]
        if d > 0:
            return None
        if d < 0:
            tight = False
    out[1] = v

    v = vals[f3]
    if tight:
        d = v - bound[2]
        if d > 0:
            return None
        if d < 0:
            tight = False
    out[2] = v

    rem = [0] * m
    rem[f1] = vals[f1] - 2
    rem[f2] = vals[f2] - 2
    rem[f3] = vals[f3] - 2
    placed = (1 << f1) | (1 << f2) | (1 << f3)
    bnd = deque((f1, f2, f3))

    for i in range(3, m - 1):
        h = bnd[-1]
        t = bnd[0]
        cand = adj[h] & adj[t] & ~placed
        if cand == 0 or cand & (cand - 1):
            return None
        u = cand.bit_length() - 1
        v = vals[u]
        if tight:
            d = v - bound[i]
            if d > 0:
                return None
            if d < 0:
                tight = False
        out[i] = v
        real = adj[u]
        prior = (real & placed).bit_count()
        if rem[h] == 0:
            return None
        bonds = (1 << h) | (1 << t)
        rem[h] -= 1
        rem[t] -= 1
        slots = v - 2
        while True:
            b = bnd[-1]
            if rem[b] == 0:
                bnd.pop()
                if not bnd:
                    return None
                nb = bnd[-1]
                nbit = 1 << nb
                if not bonds & nbit:
                    if slots == 0 or not real & nbit:
                        return None
                    bonds |= nbit
                    rem[nb] -= 1
                    slots -= 1
                continue
            f = bnd[0]
            if rem[f] == 0:
                bnd.popleft()
                nf = bnd[0]
                nbit = 1 << nf
                if not bonds & nbit:
                    if slots == 0 or not real & nbit:
                        return None
                    bonds |= nbit
                    rem[nf] -= 1
                    slots -= 1
                continue
            break
        if slots == 0 or prior != bonds.bit_count():
            return None
        rem[u] = slots
        placed |= 1 << u
        bnd.append(u)

    full = (1 << m) - 1
    last = full & ~placed
    u = last.bit_length() - 1
    v = vals[u]
    if tight:
        d = v - bound[m - 1]
        if d > 0:
            return None
        if d < 0:
            tight = False
    out[m - 1] = v
    if len(bnd) != v:
        return None
    acc = 0
    for f in bnd:
        if rem[f] != 1:
            return None
        acc |= 1 << f
    if adj[u] != acc:
        return None
    return bytes(out), tight


def _starts(adj, vals, m):
    """All ordered (f1, f2, f3) peel starts: facet, incident edge, orientation.

    Sorted so that starts promising small label strings come first;
    order affects only how quickly non-minimal spirals are rejected.
    """
    starts = []
    for f1 in range(m):
        nb1 = adj[f1]
        rest = nb1
        while rest:
            low = rest & -rest
            rest ^= low
            f2 = low.bit_length() - 1
            mates = nb1 & adj[f2]
            while mates:
                mlow = mates & -mates
                mates ^= mlow
                f3 = mlow.bit_length() - 1
                starts.append((vals[f1], vals[f2], vals[f3], f1, f2, f3))
    starts.sort()
    return starts


def _min_spiral_labels(adj, vals, m):
    """Lexicographically smallest complete label string, or None."""
    best = bytes([_LABEL_SENTINEL]) * m
    found = False
    for _, _, _, f1, f2, f3 in _starts(adj, vals, m):
        res = _unwind(adj, vals, m, f1, f2, f3, best)
        if res is not None and not res[1]:
            best = res[0]
            found = True
    return best if found else None


def _is_lex_min(adj, vals, m):
    """True iff `vals` (the label string that wound `adj`) is canonical."""
    for _, _, _, f1, f2, f3 in _starts(adj, vals, m):
        res = _unwind(adj, vals, m, f1, f2, f3, vals)
        if res is not None and not res[1]:
            return False
    return True


def canonical_spiral(dual):
    """Lexicographically smallest pentagon-position vector of `dual`.

    Minimizes over every peel start: each facet, each incident edge,
    both orientations.  Raises NotSpiralable when no peel closes (never
    the case for n <= 60, but reported rather than mis-canonicalized).
    """
    labels = _min_spiral_labels(dual._adj_masks, dual._labels, dual.m)
    if labels is None:
        raise NotSpiralable(f"no face spiral closes for this C{dual.n} dual")
    return SpiralSequence(dual.n, _positions_from_labels(labels))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
#
# Depth-first search over label strings (pentagon before hexagon, so
# complete spirals appear in lexicographic order), winding incrementally
# and undoing on backtrack.  A complete spiral is emitted iff it is the
# canonical spiral of its dual, so every isomer is emitted exactly once
# and already in index order.


def _dfs_canonical(n, prefix, out, ipr_prune=False):
    """Collect (positions, ipr) for every canonical spiral extending `prefix`.

    With ipr_prune, branches that place two adjacent pentagons are cut
    (only isolated-pentagon isomers can be reached below them).
    """
    m = face_count(n)
    m6 = hexagon_count(n)
    vals = bytearray(m)
    rem = [0] * m
    adj = [0] * m
    bnd = deque()
    counts = [0, 0]  # pentagons, hexagons used
    pent = [0]  # bitmask of placed pentagons
    front_log = []
    back_log = []

    def attach(u, v):
        """Place facet u with valency v; return an undo record or None."""
        if u == 0:
            vals[0] = v
            rem[0] = v
            bnd.append(0)
            return 0, 0, 0
        if u == 1:
            vals[1] = v
            rem[0] -= 1
            rem[1] = v - 1
            adj[0] = 2
            adj[1] = 1
            bnd.append(1)
            return 0, 0, 1
        h = bnd[-1]
        t = bnd[0]
        ubit = 1 << u
        au = (1 << h) | (1 << t)
        adj[h] |= ubit
        adj[t] |= ubit
        rem[h] -= 1
        rem[t] -= 1
        slots = v - 2
        fpops = 0
        bpops = 0
        ok = True
        while True:
            b = bnd[-1]
            if rem[b] == 0:
                back_log.append(bnd.pop())
                bpops += 1
                if not bnd:
                    ok = False
                    break
                nb = bnd[-1]
                nbit = 1 << nb
                if not au & nbit:
                    if slots == 0:
                        ok = False
                        break
                    au |= nbit
                    adj[nb] |= ubit
                    rem[nb] -= 1
                    slots -= 1
                continue
            f = bnd[0]
            if rem[f] == 0:
                front_log.append(bnd.popleft())
                fpops += 1
                nf = bnd[0]
                nbit = 1 << nf
                if not au & nbit:
                    if slots == 0:
                        ok = False
                        break
                    au |= nbit
                    adj[nf] |= ubit
                    rem[nf] -= 1
                    slots -= 1
                continue
            break
        if ok and slots == 0:
            ok = False
        if ok and ipr_prune and v == 5 and au & pent[0]:
            ok = False
        if not ok:
            mask = au
            while mask:
                low = mask & -mask
                mask ^= low
                f = low.bit_length() - 1
                adj[f] ^= ubit
                rem[f] += 1
            for _ in range(bpops):
                bnd.append(back_log.pop())
            for _ in range(fpops):
                bnd.appendleft(front_log.pop())
            return None
        adj[u] = au
        vals[u] = v
        rem[u] = slots
        bnd.append(u)
        return fpops, bpops, au

    def undo(u, rec):
        fpops, bpops, au = rec
        bnd.pop()
        if u == 0:
            rem[0] = 0
            return
        if u == 1:
            rem[0] += 1
            rem[1] = 0
            adj[0] = 0
            adj[1] = 0
            return
        ubit = 1 << u
        adj[u] = 0
        rem[u] = 0
        mask = au
        while mask:
            low = mask & -mask
            mask ^= low
            f = low.bit_length() - 1
            adj[f] ^= ubit
            rem[f] += 1
        for _ in range(bpops):
            bnd.append(back_log.pop())
        for _ in range(fpops):
            bnd.appendleft(front_log.pop())

    last = m - 1

    def close_and_emit():
        v = 5 if counts[0] < PENTAGON_COUNT else 6
        if len(bnd) != v:
            return
        for f in bnd:
            if rem[f] != 1:
                return
        acc = 0
        for f in bnd:
            acc |= 1 << f
        if ipr_prune and v == 5 and acc & pent[0]:
            return
        ubit = 1 << last
        for f in bnd:
            adj[f] |= ubit
        adj[last] = acc
        vals[last] = v
        if _is_lex_min(adj, vals, m):
            pent_mask = pent[0] | (ubit if v == 5 else 0)
            rest = pent_mask
            ipr = True
            while rest:
                low = rest & -rest
                rest ^= low
                if adj[low.bit_length() - 1] & pent_mask:
                    ipr = False
                    break
            out.append((_positions_from_labels(bytes(vals)), ipr))
        adj[last] = 0
        vals[last] = 0
        for f in bnd:
            adj[f] ^= ubit

    def go(k):
        if k == last:
            close_and_emit()
            return
        left = m - k
        if PENTAGON_COUNT - counts[0] > left or m6 - counts[1] > left:
            return
        for v, ci, budget in ((5, 0, PENTAGON_COUNT), (6, 1, m6)):
            if counts[ci] == budget:
                continue
            rec = attach(k, v)
            if rec is None:
                continue
            counts[ci] += 1
            if v == 5:
                pent[0] |= 1 << k
            go(k + 1)
            if v == 5:
                pent[0] ^= 1 << k
            counts[ci] -= 1
            undo(k, rec)

    # replay the fixed prefix, then search below it
    recs = []
    ok = True
    for k, v in enumerate(prefix):
        ci = 0 if v == 5 else 1
        budget = PENTAGON_COUNT if v == 5 else m6
        if counts[ci] == budget:
            ok = False
            break
        rec = attach(k, v)
        if rec is None:
            ok = False
            break
        counts[ci] += 1
        if v == 5:
            pent[0] |= 1 << k
        recs.append((k, rec, ci))
    if ok:
        go(len(prefix))
    for k, rec, ci in reversed(recs):
        counts[ci] -= 1
        if prefix[k] == 5:
            pent[0] ^= 1 << k
        undo(k, rec)


def _viable_prefixes(n, min_tasks):
    """Label prefixes partitioning the search tree into >= min_tasks pieces."""
    m6 = hexagon_count(n)
    level = [()]
    depth = 0
    max_depth = face_count(n) - 2
    while len(level) < min_tasks and depth < max_depth:
        nxt = []
        for prefix in level:
            p5 = sum(1 for v in prefix if v == 5)
            p6 = len(prefix) - p5
            for v in (5, 6):
                if v == 5 and p5 == PENTAGON_COUNT:
                    continue
                if v == 6 and p6 == m6:
                    continue
                cand = prefix + (v,)
                if _prefix_winds(n, cand):
                    nxt.append(cand)
        level = nxt
        depth += 1
    return level


def _prefix_winds(n, prefix):
    """True iff the label prefix can be wound as the start of a spiral."""
    m = face_count(n)
    if len(prefix) >= m:
        return False
    probe = []
    _dfs_probe = _dfs_canonical  # reuse attach semantics via a tiny local run
    rem = [0] * m
    adj = [0] * m
    bnd = deque()
    for u, v in enumerate(prefix):
        if u == 0:
            rem[0] = v
            bnd.append(0)
            continue
        if u == 1:
            rem[0] -= 1
            rem[1] = v - 1
            adj[0] = 2
            adj[1] = 1
            bnd.append(1)
            continue
        h = bnd[-1]
        t = bnd[0]
        ubit = 1 << u
        au = (1 << h) | (1 << t)
        adj[h] |= ubit
        adj[t] |= ubit
        rem[h] -= 1
        rem[t] -= 1
        slots = v - 2
        while True:
            b = bnd[-1]
            if rem[b] == 0:
                bnd.pop()
                if not bnd:
                    return False
                nb = bnd[-1]
                nbit = 1 << nb
                if not au & nbit:
                    if slots == 0:
                        return False
                    au |= nbit
                    adj[nb] |= ubit
                    rem[nb] -= 1
                    slots -= 1
                continue
            f = bnd[0]
            if rem[f] == 0:
                bnd.popleft()
                nf = bnd[0]
                nbit = 1 << nf
                if not au & nbit:
                    if slots == 0:
                        return False
                    au |= nbit
                    adj[nf] |= ubit
                    rem[nf] -= 1
                    slots -= 1
                continue
            break
        if slots == 0:
            return False
        adj[u] = au
        rem[u] = slots
        bnd.append(u)
    return True


def _worker_enumerate(args):
    n, prefix = args
    out = []
    _dfs_canonical(n, prefix, out)
    return out


def _worker_enumerate_ipr(args):
    n, prefix = args
    out = []
    _dfs_canonical(n, prefix, out, ipr_prune=True)
    return [rec for rec in out if rec[1]]


def enumerate_isomers(n, ipr_only=False, threads=None):
    """All combinatorial isomers of C_n as (isomer_index, SpiralSequence).

    Entries are keyed by canonical spiral and sorted lexicographically;
    `isomer_index` is the 1-based rank within the full enumeration, so
    IPR filtering keeps the indices of the unfiltered list.  Above
    n = 60 a resource warning is issued.
    """
    if not is_feasible(n):
        raise InfeasibleN(n)
    if n > 60:
        warnings.warn(
            f"enumerating C{n} isomers may take very long; n <= 60 is the supported scale",
            ResourceWarning,
            stacklevel=2,
        )
    if threads is None:
        threads = 1
    records = []
    if threads <= 1:
        _dfs_canonical(n, (), records)
    else:
        tasks = [(n, p) for p in _viable_prefixes(n, 4 * threads)]
        if len(tasks) <= 1:
            _dfs_canonical(n, (), records)
        else:
            with get_context("fork").Pool(threads) as pool:
                for part in pool.map(_worker_enumerate, tasks, chunksize=1):
                    records.extend(part)
    records.sort()
    out = []
    for index, (positions, ipr) in enumerate(records, start=1):
        if ipr_only and not ipr:
            continue
        out.append((index, SpiralSequence(n, positions)))
    return out


def enumerate_ipr_spirals(n, threads=None):
    """Canonical spirals of IPR isomers via a pentagon-adjacency pruned search.

    Ranks are relative to the IPR subset, not the full enumeration; the
    absolute C_{n,i} indices are not computable without the full search.
    Intended as the long-running path for large n.
    """
    if not is_feasible(n):
        raise InfeasibleN(n)
    records = []
    if threads is None or threads <= 1:
        _dfs_canonical(n, (), records, ipr_prune=True)
        records = [rec for rec in records if rec[1]]
    else:
        tasks = [(n, p) for p in _viable_prefixes(n, 4 * threads)]
        with get_context("fork").Pool(threads) as pool:
            for part in pool.map(_worker_enumerate_ipr, tasks, chunksize=1):
                records.extend(part)
    records.sort()
    return [(rank, SpiralSequence(n, pos)) for rank, (pos, _) in enumerate(records, start=1)]


# ---------------------------------------------------------------------------
# Spiral files
# ---------------------------------------------------------------------------


def write_spiral_file(path, entries):
    """One isomer per line: n then the 12 positions, whitespace separated."""
    with open(path, "w", encoding="ascii") as fh:
        for entry in entries:
            spiral = entry[1] if isinstance(entry, tuple) else entry
            fh.write(str(spiral) + "\n")


def read_spiral_file(path):
    """Parse a spiral file; '#' lines are comments."""
    out = []
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 1 + PENTAGON_COUNT:
                raise ParseError(f"{path}:{lineno}: need 13 integers, got {len(parts)}")
            try:
                values = [int(p) for p in parts]
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            out.append(SpiralSequence(values[0], tuple(values[1:])))
    return out
