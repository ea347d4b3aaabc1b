"""Compiled inner loops for the orderly generator and bitset BFS.

Adjacency inside the kernels is an ``int64`` array ``nb`` with bit ``w`` of
``nb[v]`` set when ``v`` and ``w`` are adjacent.

The generator emits exactly one labelled representative per isomorphism
class: the one whose upper-triangle rows, read top to bottom with column
``v + 1`` most significant in row ``v``, form the lexicographically largest
code. Rows are filled one at a time and a partial matrix is abandoned as soon
as a relabelling of its already complete rows beats it.
"""
from __future__ import annotations

import numpy as np
from numba import njit

UNREACHABLE = -1


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def eccentricity(nb, n, s, bound):
    """Hop eccentricity of ``s``; -1 if some vertex is unreachable.

    Stops early and returns ``bound + 1`` once the eccentricity is known to
    exceed ``bound`` (pass ``n`` to disable).
    """
    full = (np.int64(1) << n) - 1
    reached = np.int64(1) << s
    frontier = reached
    d = 0
    while reached != full:
        nxt = np.int64(0)
        f = frontier
        while f:
            low = f & -f
            v = 0
            t = low
            while t > 1:
                t >>= 1
                v += 1
            nxt |= nb[v]
            f ^= low
        nxt &= ~reached
        if nxt == 0:
            return UNREACHABLE
        d += 1
        if d > bound:
            return bound + 1
        reached |= nxt
        frontier = nxt
    return d


@njit(cache=True)
def diameter(nb, n, bound):
    """Diameter, -1 if disconnected, ``bound + 1`` if it exceeds ``bound``."""
    best = 0
    for s in range(n):
        e = eccentricity(nb, n, s, bound)
        if e == UNREACHABLE:
            return UNREACHABLE
        if e > best:
            best = e
            if best > bound:
                return best
    return best


@njit(cache=True)
def _row_code(nb, n, p):
    # upper part of row p with column p+1 as the most significant bit
    code = np.int64(0)
    row = nb[p]
    for q in range(p + 1, n):
        code <<= 1
        if (row >> q) & 1:
            code |= 1
    return code


@njit(cache=True)
def lexmax_test(nb, n, r, codes, order, starts, choice, buf):
    """False if some relabelling beats the code of rows ``0..r``.

    Only rows of vertices ``<= r`` are trusted; branches that would need the
    row of a later vertex are abandoned as inconclusive. With ``r = n - 1``
    this is the exact test for being the lexicographic maximum.
    ``order`` is an ``(n + 1, n)`` scratch array; the rest are scratch
    vectors of length ``n + 1``.
    """
    for p in range(r + 1):
        codes[p] = _row_code(nb, n, p)
    for v in range(n):
        order[0, v] = v
    starts[0] = np.int64(1)  # one cell covering every position
    depth = 0
    choice[0] = 0
    while depth >= 0:
        p = depth
        cells = starts[p]
        # end of the cell holding position p
        e = p + 1
        while e < n and not (cells >> e) & 1:
            e += 1
        i = choice[p]
        if p + i >= e:
            depth -= 1
            continue
        choice[p] = i + 1
        u = order[p, p + i]
        if u > r:
            continue
        row = nb[u]
        nxt = order[p + 1]
        for q in range(p):
            nxt[q] = order[p, q]
        nxt[p] = u
        # remaining members of p's cell, order kept
        w = p + 1
        for q in range(p, e):
            if q != p + i:
                nxt[w] = order[p, q]
                w += 1
        for q in range(e, n):
            nxt[q] = order[p, q]
        new_cells = cells
        if p + 1 < n:
            new_cells |= np.int64(1) << (p + 1)
        code = np.int64(0)
        s = p + 1
        while s < n:
            t = s + 1
            while t < n and not (new_cells >> t) & 1:
                t += 1
            # stable split of [s, t): neighbours of u first
            c = 0
            for q in range(s, t):
                if (row >> nxt[q]) & 1:
                    c += 1
            if 0 < c < t - s:
                tmp_in = s
                tmp_out = 0
                for q in range(s, t):
                    x = nxt[q]
                    if (row >> x) & 1:
                        nxt[tmp_in] = x
                        tmp_in += 1
                    else:
                        buf[tmp_out] = x
                        tmp_out += 1
                for q in range(tmp_out):
                    nxt[tmp_in + q] = buf[q]
                new_cells |= np.int64(1) << (s + c)
            code = (code << (t - s)) | (((np.int64(1) << c) - 1) << (t - s - c))
            s = t
        if code > codes[p]:
            return False
        if code < codes[p] or p == r:
            continue
        starts[p + 1] = new_cells
        depth = p + 1
        choice[depth] = 0
    return True


@njit(cache=True)
def _residual_ok(res, lo, n):
    """Erdos-Gallai on the residual degrees of vertices ``lo..n-1``."""
    m = n - lo
    if m <= 0:
        return True
    seq = np.empty(m, dtype=np.int64)
    total = 0
    for j in range(m):
        x = res[lo + j]
        if x < 0 or x > m - 1:
            return False
        seq[j] = x
        total += x
    if total & 1:
        return False
    seq = np.sort(seq)[::-1]
    left = 0
    for kk in range(1, m + 1):
        left += seq[kk - 1]
        right = kk * (kk - 1)
        for j in range(kk, m):
            right += min(seq[j], kk)
        if left > right:
            return False
    return True


@njit(cache=True)
def _closed_component(nb, n, r):
    # True if vertex 0's component is finished (all members <= r) but partial
    reached = np.int64(1)
    frontier = reached
    while frontier:
        nxt = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= nb[v]
        nxt &= ~reached
        reached |= nxt
        frontier = nxt
    full = (np.int64(1) << n) - 1
    if reached == full:
        return False
    done = (np.int64(1) << (r + 1)) - 1
    return (reached & ~done) == 0


@njit(cache=True)
def _two_step_ok(nb, n, r):
    # vertex r is complete: every complete vertex must be within distance 2
    for i in range(r):
        if (nb[r] >> i) & 1:
            continue
        if nb[r] & nb[i] == 0:
            return False
    return True


@njit(cache=True)
def _grow(out, count):
    bigger = np.empty((out.shape[0] * 2, out.shape[1]), dtype=np.int64)
    bigger[:count] = out[:count]
    return bigger


@njit(cache=True)
def generate(tdeg, connected, max_diam, store_mode, exact, split_row, res,
             mod, node_budget):
    """Run the orderly generator for the target degree vector ``tdeg``.

    Returns ``(graphs, hist, stats)`` with ``stats = [nodes, emitted,
    aborted, best_diameter]``. ``hist[d]`` counts emitted graphs of diameter
    ``d``; index ``n`` collects disconnected ones. Without ``exact`` the BFS
    stops once a graph is worse than the best diameter seen so far and such
    graphs all land in ``hist[n - 1]``.

    ``store_mode``: -1 keeps nothing, -2 keeps the graphs of the best
    diameter seen, ``d >= 0`` keeps every graph of diameter ``<= d``.
    ``max_diam > 0`` drops graphs of larger diameter; ``max_diam == 2`` also
    prunes partial matrices whose finished vertices are too far apart.
    Nodes at row ``split_row`` are numbered and only those with number
    ``res`` modulo ``mod`` are expanded.
    """
    n = tdeg.shape[0]
    nb = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    hist = np.zeros(n + 1, dtype=np.int64)
    stats = np.zeros(4, dtype=np.int64)
    out = np.empty((1024, n), dtype=np.int64)
    count = 0
    order = np.empty((n + 1, n), dtype=np.int64)
    starts = np.zeros(n + 1, dtype=np.int64)
    codes = np.zeros(n + 1, dtype=np.int64)
    incumbent = n + 1

    # row 0: neighbours 1..tdeg[0]
    d0 = tdeg[0]
    if d0 > n - 1:
        return out[:0], hist, stats
    for j in range(1, d0 + 1):
        nb[0] |= np.int64(1) << j
        nb[j] |= np.int64(1)
        deg[j] += 1
    deg[0] = d0

    resid = np.empty(n, dtype=np.int64)
    # explicit stack: candidate row masks per row, flattened
    cand_start = np.zeros(n + 1, dtype=np.int64)
    cand_pos = np.zeros(n + 1, dtype=np.int64)
    cand = np.empty(1 << 16, dtype=np.int64)
    split_counter = 0

    # per-row block bookkeeping
    bsize = np.empty(n, dtype=np.int64)
    bfirst = np.empty(n, dtype=np.int64)
    take = np.empty(n, dtype=np.int64)
    rem_at = np.empty(n + 1, dtype=np.int64)
    suffix = np.empty(n + 1, dtype=np.int64)
    scratch = np.empty(n + 1, dtype=np.int64)
    choice = np.empty(n + 1, dtype=np.int64)

    r = 1
    # validate row 0 before descending
    ok0 = True
    for v in range(n):
        resid[v] = tdeg[v] - deg[v]
    if not _residual_ok(resid, 1, n):
        ok0 = False
    if connected and n > 1 and _closed_component(nb, n, 0):
        ok0 = False
    if not ok0:
        return out[:0], hist, stats

    if n == 1:
        hist[0] += 1
        out[0, 0] = 0
        stats[1] = 1
        return out[:1], hist, stats

    need_fill = True
    cand_start[1] = 0
    while r >= 1:
        if need_fill:
            need_fill = False
            # enumerate candidate masks for row r
            base = cand_start[r]
            cnt = 0
            need = tdeg[r] - deg[r]
            if r == n - 1:
                if need == 0:
                    cand[base] = 0
                    cnt = 1
            elif need >= 0:
                # blocks of equal columns among r+1..n-1
                nblocks = 0
                low = (np.int64(1) << r) - 1
                j = r + 1
                while j < n:
                    colj = nb[j] & low
                    t = j + 1
                    while t < n and (nb[t] & low) == colj:
                        t += 1
                    bfirst[nblocks] = j
                    if deg[j] >= tdeg[j]:
                        bsize[nblocks] = 0
                    else:
                        bsize[nblocks] = t - j
                    nblocks += 1
                    j = t
                suffix[nblocks] = 0
                for b in range(nblocks - 1, -1, -1):
                    suffix[b] = suffix[b + 1] + bsize[b]
                if suffix[0] >= need and nblocks > 0:
                    # every split of `need` over the blocks, largest first
                    rem_at[0] = need
                    b = 0
                    take[0] = min(bsize[0], need)
                    while True:
                        while b < nblocks - 1:
                            rem_at[b + 1] = rem_at[b] - take[b]
                            b += 1
                            take[b] = min(bsize[b], rem_at[b])
                        if take[b] == rem_at[b]:
                            m = np.int64(0)
                            for bb in range(nblocks):
                                for q in range(take[bb]):
                                    m |= np.int64(1) << (bfirst[bb] + q)
                            if base + cnt >= cand.shape[0]:
                                bigger = np.empty(cand.shape[0] * 2, dtype=np.int64)
                                bigger[:base + cnt] = cand[:base + cnt]
                                cand = bigger
                            cand[base + cnt] = m
                            cnt += 1
                        while b >= 0:
                            if take[b] > 0 and rem_at[b] - take[b] + 1 <= suffix[b + 1]:
                                take[b] -= 1
                                break
                            b -= 1
                        if b < 0:
                            break
            cand_pos[r] = base
            cand_start[r + 1] = base + cnt
        # try next candidate at row r
        if cand_pos[r] >= cand_start[r + 1]:
            # exhausted: undo row r-1 choice
            r -= 1
            if r >= 1:
                m = nb[r] & ~((np.int64(1) << (r + 1)) - 1)
                # clear previous choice of row r
                mm = m
                while mm:
                    low_b = mm & -mm
                    q = 0
                    tt = low_b
                    while tt > 1:
                        tt >>= 1
                        q += 1
                    nb[q] &= ~(np.int64(1) << r)
                    deg[q] -= 1
                    mm ^= low_b
                nb[r] &= ~m
                deg[r] -= _popcount(m)
            continue
        m = cand[cand_pos[r]]
        cand_pos[r] += 1
        stats[0] += 1
        if node_budget > 0 and stats[0] > node_budget:
            stats[2] = 1
            break
        # apply
        mm = m
        while mm:
            low_b = mm & -mm
            q = 0
            tt = low_b
            while tt > 1:
                tt >>= 1
                q += 1
            nb[q] |= np.int64(1) << r
            deg[q] += 1
            mm ^= low_b
        nb[r] |= m
        deg[r] += _popcount(m)

        ok = True
        for v in range(r + 1, n):
            resid[v] = tdeg[v] - deg[v]
        if not _residual_ok(resid, r + 1, n):
            ok = False
        if ok and connected and _closed_component(nb, n, r):
            ok = False
        if ok and max_diam == 2 and not _two_step_ok(nb, n, r):
            ok = False
        if ok and r == split_row and mod > 1:
            if split_counter % mod != res:
                ok = False
            split_counter += 1
        if ok and r < n - 2 and not lexmax_test(nb, n, r, codes, order, starts, choice, scratch):
            ok = False
        if ok and r >= n - 2:
            # row n-1 is forced once row n-2 is placed
            if r == n - 2 and deg[n - 1] != tdeg[n - 1]:
                ok = False
            if ok and lexmax_test(nb, n, n - 1, codes, order, starts, choice, scratch):
                bound = n
                if max_diam > 0:
                    bound = max_diam
                if not exact and incumbent < bound:
                    bound = incumbent
                dia = diameter(nb, n, bound)
                if dia == UNREACHABLE:
                    if not connected:
                        hist[n] += 1
                        stats[1] += 1
                elif max_diam <= 0 or dia <= max_diam:
                    stats[1] += 1
                    if dia <= n - 1:
                        hist[dia] += 1
                    else:
                        # early exit: only known to exceed the incumbent
                        hist[n - 1] += 1
                    keep = False
                    if store_mode == -2:
                        if dia < incumbent:
                            incumbent = dia
                            count = 0
                        keep = dia == incumbent
                    elif store_mode >= 0:
                        keep = dia <= store_mode
                    if keep:
                        if count == out.shape[0]:
                            out = _grow(out, count)
                        for v in range(n):
                            out[count, v] = nb[v]
                        count += 1
                    if dia < incumbent:
                        incumbent = dia
            ok = False
        if ok:
            r += 1
            need_fill = True
            continue
        # undo
        mm = m
        while mm:
            low_b = mm & -mm
            q = 0
            tt = low_b
            while tt > 1:
                tt >>= 1
                q += 1
            nb[q] &= ~(np.int64(1) << r)
            deg[q] -= 1
            mm ^= low_b
        nb[r] &= ~m
        deg[r] -= _popcount(m)
    stats[3] = incumbent
    return out[:count], hist, stats


@njit(cache=True)
def excess_distance(nb, n, target):
    """Sum over ordered pairs of how far their distance exceeds ``target``;
    unreachable pairs count ``n``."""
    full = (np.int64(1) << n) - 1
    total = 0
    for s in range(n):
        reached = np.int64(1) << s
        frontier = reached
        d = 0
        while reached != full:
            nxt = np.int64(0)
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= nb[v]
            nxt &= ~reached
            if nxt == 0:
                total += n * _popcount(full & ~reached)
                break
            d += 1
            if d > target:
                total += (d - target) * _popcount(nxt)
            reached |= nxt
            frontier = nxt
    return total


@njit(cache=True)
def triangle_count(nb, n):
    t = 0
    for v in range(n):
        for w in range(v + 1, n):
            if (nb[v] >> w) & 1:
                t += _popcount(nb[v] & nb[w] & ~((np.int64(1) << (w + 1)) - 1))
    return t


@njit(cache=True)
def _random_pairing(tdeg, nb, stubs, max_tries):
    # pair stubs at random; stubs that would form a loop or repeat are
    # re-paired among themselves, the whole pairing restarts if stuck
    n = tdeg.shape[0]
    for _ in range(max_tries):
        for v in range(n):
            nb[v] = 0
        m = 0
        for v in range(n):
            for _j in range(tdeg[v]):
                stubs[m] = v
                m += 1
        stuck = False
        while m > 0 and not stuck:
            for i in range(m - 1, 0, -1):
                j = np.random.randint(0, i + 1)
                t = stubs[i]
                stubs[i] = stubs[j]
                stubs[j] = t
            left = 0
            for i in range(0, m, 2):
                a = stubs[i]
                b = stubs[i + 1]
                if a != b and not (nb[a] >> b) & 1:
                    nb[a] |= np.int64(1) << b
                    nb[b] |= np.int64(1) << a
                else:
                    stubs[left] = a
                    stubs[left + 1] = b
                    left += 2
            if left == m:
                # nothing placed this round: any legal pair left?
                possible = False
                for i in range(m):
                    for j in range(i + 1, m):
                        a = stubs[i]
                        b = stubs[j]
                        if a != b and not (nb[a] >> b) & 1:
                            possible = True
                if not possible:
                    stuck = True
            m = left
        if not stuck:
            return True
    return False


@njit(cache=True)
def codegree_square_sum(nb, n):
    t = 0
    for v in range(n):
        for w in range(v + 1, n):
            c = _popcount(nb[v] & nb[w])
            t += c * c
    return t


@njit(cache=True)
def _score(nb, n, target, sparse, key):
    key[0] = diameter(nb, n, n)
    if key[0] == UNREACHABLE:
        key[0] = n
    key[1] = excess_distance(nb, n, target)
    if sparse:
        key[2] = triangle_count(nb, n)
        key[3] = codegree_square_sum(nb, n)
    else:
        key[2] = 0
        key[3] = 0


@njit(cache=True)
def _cmp(a, b):
    for i in range(a.shape[0]):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


@njit(cache=True)
def swap_search(tdeg, target, attempts, max_swaps, seed, sparse, stall):
    """Random pairing graphs improved by degree-preserving double-edge swaps.

    The walk minimises (diameter, total excess distance over ``target``)
    and never accepts a swap that makes this worse. Plain walks stop once
    the diameter reaches ``target``. With ``sparse`` the walk goes on inside
    the target region, also minimising the triangle count and then the sum
    of squared co-degrees, until ``stall`` swaps pass without improvement;
    every strictly better graph within the target is recorded.

    Returns the rows of the recorded graphs and the number of swaps tried.
    """
    np.random.seed(seed)
    n = tdeg.shape[0]
    nb = np.zeros(n, dtype=np.int64)
    stubs = np.empty(int(tdeg.sum()), dtype=np.int64)
    m = int(tdeg.sum()) // 2
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    out = np.empty((16, n), dtype=np.int64)
    key = np.zeros(4, dtype=np.int64)
    trial = np.zeros(4, dtype=np.int64)
    count = 0
    swaps = 0
    for _a in range(attempts):
        if not _random_pairing(tdeg, nb, stubs, 100):
            continue
        e = 0
        for v in range(n):
            for w in range(v + 1, n):
                if (nb[v] >> w) & 1:
                    eu[e] = v
                    ev[e] = w
                    e += 1
        _score(nb, n, target, sparse, key)
        if key[0] <= target:
            if count == out.shape[0]:
                out = _grow(out, count)
            out[count] = nb
            count += 1
            if not sparse:
                continue
        since = 0
        step = 0
        while step < max_swaps and since < stall:
            if not sparse and key[0] <= target:
                break
            step += 1
            since += 1
            swaps += 1
            i = np.random.randint(0, m)
            j = np.random.randint(0, m)
            if i == j:
                continue
            a = eu[i]
            b = ev[i]
            c = eu[j]
            d = ev[j]
            if np.random.randint(0, 2) == 1:
                t = c
                c = d
                d = t
            # (a,b),(c,d) -> (a,c),(b,d)
            if a == c or b == d or (nb[a] >> c) & 1 or (nb[b] >> d) & 1:
                continue
            nb[a] ^= (np.int64(1) << b) | (np.int64(1) << c)
            nb[b] ^= (np.int64(1) << a) | (np.int64(1) << d)
            nb[c] ^= (np.int64(1) << d) | (np.int64(1) << a)
            nb[d] ^= (np.int64(1) << c) | (np.int64(1) << b)
            _score(nb, n, target, sparse, trial)
            order = _cmp(trial, key)
            if order <= 0:
                if order < 0:
                    since = 0
                    if trial[0] <= target:
                        if count == out.shape[0]:
                            out = _grow(out, count)
                        out[count] = nb
                        count += 1
                key[:] = trial
                eu[i] = min(a, c)
                ev[i] = max(a, c)
                eu[j] = min(b, d)
                ev[j] = max(b, d)
            else:
                nb[a] ^= (np.int64(1) << b) | (np.int64(1) << c)
                nb[b] ^= (np.int64(1) << a) | (np.int64(1) << d)
                nb[c] ^= (np.int64(1) << d) | (np.int64(1) << a)
                nb[d] ^= (np.int64(1) << c) | (np.int64(1) << b)
    return out[:count], swaps
