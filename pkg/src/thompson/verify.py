"""Instance-checking harness for the presentations and the identities behind them.

Every check returns a :class:`Report`.  An instance records whether an
identity was *expected* to hold and whether it was *observed* to hold; the
instance passes when the two agree, so negative witnesses (things that must
not commute, substitutions that must break a relation) are first-class.
"""

from __future__ import annotations

import csv
import functools
import inspect
import io
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .dyadic import Dyadic
from .generators import (
    conj_phi,
    conj_phi_inf,
    conj_phi_n,
    gen_g_finite,
    gen_Gt,
    gen_x,
    gen_xt,
    gen_y,
    phi_n_map,
    s_node,
)
from .morphisms import commutator, make_h, rho, sigma
from .plmap import Interval, PLMap, membership, support
from .words import GenSym, Presentation, Word, random_word, realize, relators_for

DEFAULT_SEED = 20090101

__all__ = [
    "DEFAULT_SEED",
    "Instance",
    "Report",
    "check_presentations",
    "check_isomorphisms",
    "check_remark_identity",
    "check_lemma41",
    "check_h_and_sigma",
    "check_cost_witnesses",
    "check_noncommute_pattern",
    "SUITES",
    "run_suite",
    "format_text",
    "format_records",
]


@dataclass(frozen=True)
class Instance:
    kind: str
    indices: Tuple[int, ...]
    expected: bool
    observed: bool
    detail: str = ""
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    @property
    def label(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        return f"{self.kind}({idx})"

    def sort_key(self):
        return (self.kind, self.indices)


@dataclass
class Report:
    check: str
    params: Dict[str, object]
    instances: List[Instance]
    seed: Optional[int] = None
    notes: List[str] = field(default_factory=list)
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        self.instances = sorted(self.instances, key=Instance.sort_key)

    @property
    def passed(self) -> bool:
        return all(i.ok for i in self.instances)

    @property
    def counts(self) -> Tuple[int, int]:
        return sum(i.ok for i in self.instances), len(self.instances)

    def failures(self) -> List[Instance]:
        return [i for i in self.instances if not i.ok]

    def params_text(self) -> str:
        items = dict(self.params)
        if self.seed is not None:
            items["seed"] = self.seed
        return ";".join(f"{k}={_fmt_param(v)}" for k, v in sorted(items.items()))


def _fmt_param(v) -> str:
    if isinstance(v, tuple) and len(v) == 2:
        return f"{v[0]}..{v[1]}"
    return str(v)


def _counterexample(word: Optional[Word], f: PLMap) -> str:
    head = f"word: {word}\n" if word is not None else ""
    return head + f.to_text()


def _word_instance(kind, indices, word: Word, expected=True, overrides=None, detail="") -> Instance:
    f = realize(word, overrides)
    observed = f.is_identity()
    cx = None if observed == expected else _counterexample(word, f)
    return Instance(kind, tuple(indices), expected, observed, detail or str(word), cx)


def _map_instance(kind, indices, lhs: PLMap, rhs: PLMap, expected=True, detail="") -> Instance:
    observed = lhs == rhs
    cx = None
    if observed != expected:
        cx = "lhs:\n" + lhs.to_text() + "rhs:\n" + rhs.to_text()
    return Instance(kind, tuple(indices), expected, observed, detail, cx)


def _value_instance(kind, indices, got: Dyadic, want: Dyadic, detail="") -> Instance:
    ok = got == want
    cx = None if ok else f"got {got}, want {want}"
    return Instance(kind, tuple(indices), True, ok, detail or f"{got} == {want}", cx)


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    return wrapper


def _G(i: int) -> Word:
    return Word.letter(GenSym("G", i))


# -- checks ---------------------------------------------------------------------


@_timed
def check_presentations(
    x_max: int = 10,
    y_window: Tuple[int, int] = (-6, 6),
    g_window: Tuple[int, int] = (-8, 8),
    levels: Tuple[int, int] = (4, 8),
    remark_window: Tuple[int, int] = (-5, 5),
    neg_range: int = 7,
) -> Report:
    """Relator instances realize to the identity; the negative witnesses do not."""
    inst = []
    for rel in relators_for(Presentation.naturals("X"), (0, x_max), "x"):
        inst.append(_word_instance("x." + rel.schema, rel.indices, rel.word))
    for rel in relators_for(Presentation.integers("X"), y_window, "y"):
        inst.append(_word_instance("y." + rel.schema, rel.indices, rel.word))
    for rel in relators_for(Presentation.integers("G"), g_window, "G"):
        inst.append(_word_instance("G." + rel.schema, rel.indices, rel.word))
    for n in range(levels[0], levels[1] + 1):
        for rel in relators_for(Presentation("G", 0, n), (0, n), "g", level=n):
            inst.append(_word_instance(f"g@{n}." + rel.schema, rel.indices, rel.word))
    for rel in relators_for(Presentation.integers("G"), remark_window, "rG"):
        inst.append(_word_instance("rG." + rel.schema, rel.indices, rel.word))

    for i in range(-neg_range, neg_range + 1):
        inst.append(_word_instance("G.adjacent_noncommute", (i, i + 1), commutator(_G(i), _G(i + 1)), expected=False))

    # y_0 replaced by xt_0 must break y_j y_i = y_i y_{j+1} at (i, j) = (-1, 0)
    naive = {GenSym("y", 0): gen_xt(0)}
    rel = next(r for r in relators_for(Presentation.integers("X"), (-1, 0), "y") if r.indices == (-1, 0))
    inst.append(_word_instance("y.naive_substitution", (-1, 0), rel.word, expected=False, overrides=naive))

    params = dict(x_max=x_max, y_window=y_window, g_window=g_window, levels=levels,
                  remark_window=remark_window, neg_range=neg_range)
    return Report("presentations", params, inst)


@_timed
def check_isomorphisms(
    levels: Tuple[int, int] = (4, 8),
    x_max: int = 6,
    samples: int = 20,
    max_length: int = 6,
    seed: int = DEFAULT_SEED,
) -> Report:
    """phi_n g_k phi_n^-1 = Gt_k, the printed point values, and the phi / phi_inf images."""
    rng = random.Random(seed)
    inst = []
    half = Dyadic(1, 1)
    for n in range(levels[0], levels[1] + 1):
        p = phi_n_map(n)
        for k in range(-1, n + 2):
            inst.append(_value_instance("phi_n.node", (n, k), p(s_node(k, n)), Dyadic(k)))
        for k in range(n + 1):
            img = conj_phi_n(gen_g_finite(k, n), n)
            inst.append(_map_instance("phi_n.g_to_G", (n, k), img, gen_Gt(k), detail=f"phi_{n} g_{k} phi_{n}^-1 == G[{k}]"))
            inst.append(_value_instance("phi_n.value_at_k", (n, k), img(k), Dyadic(k) - half))
            inst.append(_value_instance("phi_n.value_at_k_half", (n, k), img(Dyadic(k) + half), Dyadic(k)))
            if k < n:
                inst.append(_map_instance("phi_inf.g_to_G", (n, k), conj_phi_inf(gen_g_finite(k, n)), gen_Gt(k)))
        # random elements of D as words in g_0..g_{n-1}
        for s in range(samples):
            w = random_word(rng, "g", 0, n - 1, max_length, level=n)
            f = realize(w, domain="unit")
            h = conj_phi_inf(f)
            as_G = Word(tuple((GenSym("G", sym.index), e) for sym, e in w.letters))
            inst.append(_map_instance("phi_inf.sample", (n, s), h, realize(as_G), detail=str(w)))
            inst.append(Instance("phi_inf.support", (n, s), True, membership(h, "F(a,b)", Interval(-1, n + 1)), str(w)))

    for n in range(x_max + 1):
        inst.append(_map_instance("phi.x_to_xt", (n,), conj_phi(gen_x(n)), gen_xt(n)))
    x0, x1 = gen_x(0), gen_x(1)
    inst.append(_map_instance("phi.xbar0_to_y0", (0,), conj_phi(x0 * x1 * x0.inverse()), gen_y(0)))
    for s in range(samples):
        u = realize(random_word(rng, "x", 0, 4, max_length), domain="unit")
        v = realize(random_word(rng, "x", 0, 4, max_length), domain="unit")
        inst.append(_map_instance("phi.multiplicative", (s,), conj_phi(u * v), conj_phi(u) * conj_phi(v)))

    params = dict(levels=levels, x_max=x_max, samples=samples, max_length=max_length)
    return Report("isomorphisms", params, inst, seed=seed)


REMARK_CHAIN = (
    "rx[0]^-1*rG[0]*rx[0]",
    "rx[1]^-1*rx[0]",
    "rx[4]^-1*rG[3]^-1*rG[2]^-1*rG[1]^-1*rG[0]*rG[1]*rG[2]*rG[3]*rx[4]",
    "rG[3]^-1*rG[2]^-1*rx[4]^-1*rG[3]^-1*rG[1]^-1*rG[0]*rG[1]*rG[3]*rx[4]*rG[2]*rG[3]",
    "rG[3]^-1*rG[2]^-1*rG[1]^-1*rG[0]*rG[1]*rG[2]*rG[3]",
)


@_timed
def check_remark_identity(shift_range: int = 5) -> Report:
    """``x_0^-1 G_0 x_0`` through every displayed line, in the translation-based family."""
    inst = []
    chain = [Word.parse(t) for t in REMARK_CHAIN]
    start = chain[0]
    for i, w in enumerate(chain[1:], 1):
        inst.append(_word_instance("chain", (i,), start * ~w, detail=f"{start} == {w}"))

    # g_1..g_4 = G_1, G_2, G_3, x_4 satisfy both relation schemas
    g = {1: "rG[1]", 2: "rG[2]", 3: "rG[3]", 4: "rx[4]"}
    for i in (2, 3):
        lhs = Word.parse(f"{g[i-1]}*{g[i]}*{g[i+1]}")
        rhs = Word.parse(f"{g[i]}*{g[i+1]}*{g[i-1]}*{g[i]}")
        inst.append(_word_instance("g_family.braid", (i - 1, i, i + 1), lhs * ~rhs))
    for i, j in ((1, 3), (1, 4), (2, 4)):
        inst.append(_word_instance("g_family.commute", (i, j), commutator(Word.parse(g[i]), Word.parse(g[j]))))

    s = Word.parse("rs")
    for i in range(-shift_range, shift_range + 1):
        Gi, Gj = Word.parse(f"rG[{i}]"), Word.parse(f"rG[{i + 1}]")
        inst.append(_word_instance("s_shift", (i,), ~s * Gi * s * ~Gj))
    return Report("remark-identity", dict(shift_range=shift_range), inst)


@_timed
def check_lemma41(k_max: int = 4, samples: int = 200, max_length: int = 6, seed: int = DEFAULT_SEED) -> Report:
    """``[rho_n(g), h] = 1`` once ``n >= 2k+2``; records the smallest n that already works."""
    rng = random.Random(seed)
    inst = []
    minimal: Dict[int, List[int]] = {}
    for s in range(samples):
        k = s % (k_max + 1)
        g = random_word(rng, "G", -k, k, max_length)
        h = random_word(rng, "G", -k, k, max_length)
        n = 2 * k + 2
        c = commutator(rho(n, g), h)
        inst.append(_word_instance("pair", (s, k), c, detail=f"g={g or '1'}; h={h or '1'}; n={n}"))
        hmap = realize(h)
        # smallest n0 with commutation for every n in [n0, 2k+2]
        n0 = n
        while n0 > 0 and commutator(realize(rho(n0 - 1, g)), hmap).is_identity():
            n0 -= 1
        minimal.setdefault(k, []).append(n0)

    G0 = _G(0)
    inst.append(_word_instance("witness", (1,), commutator(rho(1, G0), G0), expected=False))
    inst.append(_word_instance("empty", (0,), commutator(Word(), G0)))
    notes = [
        f"k={k}: bound n=2k+2={2 * k + 2}, largest minimal commuting n observed={max(v)}, "
        f"histogram={sorted((x, v.count(x)) for x in set(v))}"
        for k, v in sorted(minimal.items())
    ]
    params = dict(k_max=k_max, samples=samples, max_length=max_length)
    return Report("lemma41", params, inst, seed=seed, notes=notes)


@_timed
def check_h_and_sigma(
    k_max: int = 5,
    n_max: int = 6,
    m_max: int = 3,
    samples: int = 10,
    max_length: int = 6,
    seed: int = DEFAULT_SEED,
) -> Report:
    """``h^-1 G_i h = G_{i+n}`` for ``|i| <= k``; sigma_m agrees with the shift by 2m+2."""
    rng = random.Random(seed)
    inst = []
    for k in range(k_max + 1):
        for n in range(1, n_max + 1):
            h = make_h(k, n)
            inst.append(Instance("h.in_Ft'", (k, n), True, membership(h, "Ft'"), f"support {support(h)}"))
            inst.append(_value_instance("h.plateau", (k, n), h(n), Dyadic(0)))
            hinv = h.inverse()
            for i in range(-k, k + 1):
                inst.append(_map_instance("h.conjugation", (k, n, i), hinv * gen_Gt(i) * h, gen_Gt(i + n)))
    for m in range(1, m_max + 1):
        for i in range(-m, m + 1):
            inst.append(_map_instance("sigma.generator", (m, i), sigma(m, gen_Gt(i)), gen_Gt(i + 2 * m + 2)))
        for s in range(samples):
            g = random_word(rng, "G", -m, m, max_length)
            h = random_word(rng, "G", -m, m, max_length)
            sg = sigma(m, realize(g))
            inst.append(_map_instance("sigma.matches_shift", (m, s), sg, realize(sigma(m, g)), detail=str(g)))
            inst.append(Instance("sigma.commutes", (m, s), True,
                                 commutator(sg, realize(h)).is_identity(), f"g={g}; h={h}"))
    params = dict(k_max=k_max, n_max=n_max, m_max=m_max, samples=samples, max_length=max_length)
    return Report("h-sigma", params, inst, seed=seed)


@_timed
def check_cost_witnesses(r: int = 6) -> Report:
    """Even-index generators commute; conjugation by g_{+-1} fixes the far half."""
    inst = []
    evens = [i for i in range(-r, r + 1) if i % 2 == 0]
    for a in evens:
        for b in evens:
            if a < b:
                inst.append(_word_instance("even_commute", (a, b), commutator(_G(a), _G(b))))
    for a in evens:
        if a < 0:
            inst.append(_word_instance("g1_fixes", (a,), ~_G(1) * _G(a) * _G(1) * ~_G(a)))
        if a > 0:
            inst.append(_word_instance("gm1_fixes", (a,), ~_G(-1) * _G(a) * _G(-1) * ~_G(a)))
    for a in (0, 2):
        inst.append(_word_instance("g1_moves", (a,), ~_G(1) * _G(a) * _G(1) * ~_G(a), expected=False))
    return Report("cost", dict(r=r), inst)


@_timed
def check_noncommute_pattern(r: int = 4) -> Report:
    """``[G_{3i}, G_{3i+1}] != 1`` and ``[G_i, G_j] = 1`` for ``|i - j| >= 2``."""
    inst = []
    for i in range(-r, r + 1):
        inst.append(_word_instance("adjacent", (3 * i, 3 * i + 1), commutator(_G(3 * i), _G(3 * i + 1)), expected=False))
    lo, hi = -3 * r, 3 * r + 1
    for i in range(lo, hi + 1):
        for j in range(i + 2, hi + 1):
            inst.append(_word_instance("far", (i, j), commutator(_G(i), _G(j))))
    return Report("noncommute", dict(r=r), inst)


SUITES: Dict[str, Callable[..., Report]] = {
    "cost": check_cost_witnesses,
    "h-sigma": check_h_and_sigma,
    "isomorphisms": check_isomorphisms,
    "lemma41": check_lemma41,
    "noncommute": check_noncommute_pattern,
    "presentations": check_presentations,
    "remark-identity": check_remark_identity,
}


def run_suite(name: str, **kwargs) -> List[Report]:
    """Run one suite (or ``all``); keyword arguments go to the suites that accept them."""
    if name == "all":
        names = sorted(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    reports = []
    for n in names:
        fn = SUITES[n]
        accepted = inspect.signature(fn).parameters
        reports.append(fn(**{k: v for k, v in kwargs.items() if k in accepted}))
    return sorted(reports, key=lambda r: r.check)


def format_text(reports: Sequence[Report], timing: bool = False, verbose: bool = False) -> str:
    out = []
    for rep in reports:
        ok, total = rep.counts
        status = "PASS" if rep.passed else "FAIL"
        line = f"[{status}] {rep.check} ({rep.params_text()}): {ok}/{total} instances"
        if timing:
            line += f" in {rep.elapsed:.3f}s"
        out.append(line)
        for note in rep.notes:
            out.append(f"    note: {note}")
        for inst in rep.instances:
            if verbose or not inst.ok:
                verdict = "pass" if inst.ok else "FAIL"
                want = "holds" if inst.expected else "fails"
                out.append(f"    {verdict} {inst.label} expected {want}: {inst.detail}")
                if inst.counterexample:
                    out.extend("        " + ln for ln in inst.counterexample.splitlines())
    total_ok = sum(r.counts[0] for r in reports)
    total = sum(r.counts[1] for r in reports)
    out.append(f"{'ALL PASS' if all(r.passed for r in reports) else 'FAILURES'}: {total_ok}/{total} instances")
    return "\n".join(out) + "\n"


def format_records(reports: Sequence[Report]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "params", "instance", "verdict"])
    for rep in reports:
        params = rep.params_text()
        for inst in rep.instances:
            writer.writerow([rep.check, params, inst.label, "pass" if inst.ok else "fail"])
    return buf.getvalue()
