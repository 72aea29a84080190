"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

from collections import defaultdict


def rtt_bracket(a, b):
    """[T_a, T_b] for labels (i, j, r) as {word: coeff}, written straight from the RTT relation."""
    (i, j, r), (k, l, s) = a, b
    out = defaultdict(int)
    for t in range(min(r, s)):
        hi = r + s - 1 - t
        # T_kj^(t) T_il^(hi) - T_kj^(hi) T_il^(t), with T^(0) the identity matrix
        for left, right, sign in (((k, j, t), (i, l, hi), 1), ((k, j, hi), (i, l, t), -1)):
            word = []
            ok = True
            for g in (left, right):
                if g[2] == 0:
                    if g[0] != g[1]:
                        ok = False
                else:
                    word.append(g)
            if ok:
                out[tuple(word)] += sign
    return dict(out)


def naive_normal_form(word, p, bracket=rtt_bracket):
    """Bubble-sort rewriting of a word of labels, no memoization."""
    todo = {tuple(word): 1}
    done = defaultdict(int)
    while todo:
        w, c = todo.popitem()
        c %= p
        if not c:
            continue
        for pos in range(len(w) - 1):
            if w[pos] > w[pos + 1]:
                break
        else:
            done[w] = (done[w] + c) % p
            continue
        x, y = w[pos], w[pos + 1]
        head, tail = w[:pos], w[pos + 2 :]
        rewrites = {head + (y, x) + tail: 1}
        for mid, v in bracket(x, y).items():
            key = head + mid + tail
            rewrites[key] = rewrites.get(key, 0) + v
        for key, v in rewrites.items():
            todo[key] = (todo.get(key, 0) + c * v) % p
    return {w: c for w, c in done.items() if c}


def element_as_labels(x):
    """Element -> {tuple of labels: coeff} for comparison with the naive oracle."""
    alg = x.alg
    return {tuple(alg.decode(g) for g in m): c for m, c in x.terms.items()}


def lie_bracket_current(a, b):
    """[e_ij t^r, e_kl t^s] = delta_kj e_il t^{r+s} - delta_li e_kj t^{r+s}."""
    (i, j, r), (k, l, s) = a, b
    out = defaultdict(int)
    if k == j:
        out[((i, l, r + s),)] += 1
    if l == i:
        out[((k, j, r + s),)] -= 1
    return dict(out)
