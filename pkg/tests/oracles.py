"""Independent reference computations used by the tests.

Nothing here calls PLMap evaluation, composition or equality; maps are read
only through their stored breakpoint lists and evaluated with Fractions.
"""

from fractions import Fraction

from thompson.words import Presentation, Word, random_word, relators_for


def node_list(f):
    pts = [(x.to_fraction(), y.to_fraction()) for x, y in f.points]
    if f.domain == "unit":
        pts = [(Fraction(0), Fraction(0))] + pts + [(Fraction(1), Fraction(1))]
    return pts


def oracle_eval(f, t):
    t = Fraction(t)
    nodes = node_list(f)
    if f.domain == "real":
        if not nodes or t <= nodes[0][0]:
            return t + f.left_tail
        if t >= nodes[-1][0]:
            return t + f.right_tail
    for (x0, y0), (x1, y1) in zip(nodes, nodes[1:]):
        if x0 <= t <= x1:
            return y0 + (t - x0) * (y1 - y0) / (x1 - x0)
    raise ValueError(f"{t} outside domain")


def probe_points(f, g):
    xs = sorted({x for x, _ in node_list(f)} | {x for x, _ in node_list(g)})
    probes = set(xs)
    probes.update((a + b) / 2 for a, b in zip(xs, xs[1:]))
    if f.domain == "real":
        lo, hi = (xs[0], xs[-1]) if xs else (Fraction(0), Fraction(0))
        probes.update({lo - 1, lo - Fraction(1, 2), hi + Fraction(1, 2), hi + 1})
    return sorted(probes)


def oracle_equal(f, g):
    """Pointwise comparison on merged breakpoints, midpoints and tail probes."""
    return all(oracle_eval(f, t) == oracle_eval(g, t) for t in probe_points(f, g))


# -- phi chart, tabulated from its nodes ---------------------------------------


def t_nodes(lo=-60, hi=60):
    out = []
    for k in range(lo, hi + 1):
        t = 1 - Fraction(1, 2 ** (k + 1)) if k >= 0 else Fraction(1, 2 ** (1 - k))
        out.append((t, Fraction(k)))
    return out


_PHI = t_nodes()


def _interp(table, v):
    for (a0, b0), (a1, b1) in zip(table, table[1:]):
        if a0 <= v <= a1:
            return b0 + (v - a0) * (b1 - b0) / (a1 - a0)
    raise ValueError(f"{v} outside tabulated range")


def oracle_phi(t):
    return _interp(_PHI, Fraction(t))


def oracle_phi_inv(u):
    return _interp([(b, a) for a, b in _PHI], Fraction(u))


def oracle_phi_inf(t):
    table = [(Fraction(0), Fraction(-1))] + [p for p in _PHI if p[1] >= 0]
    return _interp(table, Fraction(t))


def oracle_phi_inf_inv(u):
    table = [(Fraction(0), Fraction(-1))] + [p for p in _PHI if p[1] >= 0]
    return _interp([(b, a) for a, b in table], Fraction(u))


# -- random elements -------------------------------------------------------------


FAMILY_RANGES = {
    "x": (0, 5),
    "G": (-4, 4),
    "y": (-3, 3),
    "xt": (0, 4),
}


def random_family_word(rng, family=None, max_length=6):
    family = family or rng.choice(sorted(FAMILY_RANGES))
    lo, hi = FAMILY_RANGES[family]
    return random_word(rng, family, lo, hi, max_length)


def insert_relator(rng, w, family):
    """``w`` with a random relator instance spliced in; realizes to the same map."""
    if family == "G":
        rels = relators_for(Presentation.integers("G"), (-3, 3), "G")
    elif family == "x":
        rels = relators_for(Presentation.naturals("X"), (0, 4), "x")
    elif family == "y":
        rels = relators_for(Presentation.integers("X"), (-2, 2), "y")
    else:
        rels = relators_for(Presentation.naturals("X"), (0, 3), "xt")
    r = rng.choice(rels).word
    if rng.random() < 0.5:
        r = ~r
    cut = rng.randint(0, len(w.letters))
    return Word(w.letters[:cut]) * r * Word(w.letters[cut:])
