"""Brute-force reference implementations used to freeze expected values.

Everything here works by labelling elements and tracking where they land,
without touching the library's own index arithmetic.
"""

from itertools import product


def lex_positions(m, n):
    """Map each pair of {1..m} x {1..n} to its 1-based position in lex order."""
    return {pair: pos for pos, pair in enumerate(product(range(1, m + 1), range(1, n + 1)), 1)}


def relabel(source_labels, target_labels):
    """Send-convention images of the bijection matching equal labels."""
    where = {lab: pos for pos, lab in enumerate(target_labels, 1)}
    assert len(where) == len(target_labels)
    return tuple(where[lab] for lab in source_labels)


def block(r, s):
    src = [("a", i) for i in range(r)] + [("b", k) for k in range(s)]
    tgt = [("b", k) for k in range(s)] + [("a", i) for i in range(r)]
    return relabel(src, tgt)


def swap(r, s):
    src = [(i, k) for i in range(1, r + 1) for k in range(1, s + 1)]
    tgt = [(i, k) for k in range(1, s + 1) for i in range(1, r + 1)]
    return relabel(src, tgt)


def distribute(m, n, p):
    """m (x) (n + p) -> (m (x) n) + (m (x) p) on non-basepoints."""
    src = [(i, x) for i in range(1, m + 1) for x in range(1, n + p + 1)]
    tgt = [(i, x) for i in range(1, m + 1) for x in range(1, n + 1)]
    tgt += [(i, n + y) for i in range(1, m + 1) for y in range(1, p + 1)]
    return relabel(src, tgt)


def regroup(sizes, order):
    """Bijection on the wedge of ``sizes`` moving summand ``order[t]`` to slot ``t``."""
    src = [(t, x) for t, n in enumerate(sizes) for x in range(n)]
    tgt = [(t, x) for t in order for x in range(sizes[t])]
    return relabel(src, tgt)


def product_fn(phi, s, psi, w):
    pos_dom = lex_positions(len(phi), len(psi))
    pos_cod = lex_positions(s, w)
    out = [None] * len(pos_dom)
    for (i, p), t in pos_dom.items():
        out[t - 1] = pos_cod[(phi[i - 1], psi[p - 1])]
    return tuple(out)


def after(g, f):
    """Pointed composite ``g . f`` of image lists (0 is the basepoint)."""
    return tuple(0 if y == 0 else g[y - 1] for y in f)


def L_pointed(values_dom, values_cod, phi, comps):
    """``L`` of a Bs(pointed finite sets) morphism, evaluated element by element.

    ``comps[k]`` is the image list of component ``k``; monomial ``i`` feeds
    component ``phi[i]`` at an offset equal to the sizes of earlier monomials
    in the same fiber.
    """
    offsets_cod = [sum(values_cod[:k]) for k in range(len(values_cod))]
    out = []
    for i, v in enumerate(values_dom):
        k = phi[i] - 1
        offset = sum(values_dom[j] for j in range(i) if phi[j] - 1 == k)
        for t in range(1, v + 1):
            y = comps[k][offset + t - 1]
            out.append(0 if y == 0 else offsets_cod[k] + y)
    return tuple(out)


def product_component(vals_a, phi, comps_x, vals_b, vals_c, psi, comps_y, vals_d, k, y):
    """Component ``(k, y)`` of ``x (x) y`` in Bs(pointed finite sets), by pair tracking.

    Domain summands are ``a_i (x) c_p`` over ``(i, p)`` in the fiber, in lex
    order; an element is ``(i, p, s, t)``.  It goes to the pair
    ``(g^k(off_i + s), h^y(off_p + t))`` in ``b_k (x) d_y``.
    """
    fib_x = [i for i in range(1, len(vals_a) + 1) if phi[i - 1] == k]
    fib_y = [p for p in range(1, len(vals_c) + 1) if psi[p - 1] == y]
    off_x = {i: sum(vals_a[j - 1] for j in fib_x if j < i) for i in fib_x}
    off_y = {p: sum(vals_c[q - 1] for q in fib_y if q < p) for p in fib_y}
    target = lex_positions(vals_b[k - 1], vals_d[y - 1])
    out = []
    for i in fib_x:
        for p in fib_y:
            for s in range(1, vals_a[i - 1] + 1):
                for t in range(1, vals_c[p - 1] + 1):
                    u = comps_x[k - 1][off_x[i] + s - 1]
                    v = comps_y[y - 1][off_y[p] + t - 1]
                    out.append(0 if u == 0 or v == 0 else target[(u, v)])
    return tuple(out)
