"""Pure-Python exchange scan; same contract as the compiled ``_exchange``.

Inputs describe a finite domain laid out in a mixed-radix box:

* ``coords``: N x d member coordinates, in canonical order
* ``lin``: linear box index of each member
* ``pos``: box index -> member position, or -1 outside the domain
* ``vals``: encoded index values (ranks for ordinal modes, scaled ints
  for the cardinal ones)
* ``strides``: box strides per coordinate

``scan`` returns the first ``(i, j, a)`` for which no admissible direction
satisfies the mode's exchange condition, or ``None``.
"""

ORDINAL, MNAT, M, PSEUDO, PSEUDO_PLUS, SEMISTRICT = range(6)


def scan(mode, coords, lin, pos, vals, strides):
    coords = [list(map(int, row)) for row in coords]
    lin = [int(v) for v in lin]
    pos = [int(v) for v in pos]
    vals = [int(v) for v in vals]
    strides = [int(s) for s in strides]
    n, d = len(coords), len(strides)
    with_empty = mode != M
    for i in range(n):
        xi, li, fx = coords[i], lin[i], vals[i]
        for j in range(n):
            if i == j:
                continue
            eta, lj, fy = coords[j], lin[j], vals[j]
            opts = [b for b in range(d) if xi[b] < eta[b]]
            if with_empty:
                opts.insert(0, -1)
            for a in range(d):
                if xi[a] <= eta[a]:
                    continue
                if not _exchange_ok(mode, j, li, lj, fx, fy, a, opts, pos, vals, strides):
                    return i, j, a
    return None


def _moves(li, lj, a, b, pos, strides):
    sb = strides[b] if b >= 0 else 0
    return pos[li - strides[a] + sb], pos[lj + strides[a] - sb]


def _exchange_ok(mode, j, li, lj, fx, fy, a, opts, pos, vals, strides):
    low = min(fx, fy)
    if mode == PSEUDO_PLUS:
        up_p = up_q = False
        for b in opts:
            p, q = _moves(li, lj, a, b, pos, strides)
            up_p = up_p or (p >= 0 and vals[p] > fx)
            up_q = up_q or (q >= 0 and vals[q] > fy)
    for b in opts:
        p, q = _moves(li, lj, a, b, pos, strides)
        if mode == ORDINAL:
            if p >= 0 and vals[p] > fx:
                return True
            if q >= 0 and vals[q] > fy:
                return True
            if p >= 0 and q >= 0 and vals[p] == fx and vals[q] == fy:
                return True
            continue
        if p < 0 or q < 0:
            continue
        vp, vq = vals[p], vals[q]
        if mode == MNAT or mode == M:
            if vp + vq >= fx + fy:
                return True
        elif mode == PSEUDO:
            if min(vp, vq) >= low:
                return True
        elif mode == SEMISTRICT:
            m = min(vp, vq)
            if m > low or (m == low and (fx == fy or p == j)):
                return True
        else:
            if min(vp, vq) < low:
                continue
            if fx > vp and fy == vq and not up_q:
                continue
            if fy > vq and fx == vp and not up_p:
                continue
            return True
    return False
