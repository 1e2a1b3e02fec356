"""Free-group words over indexed generator alphabets, relator schemas and realization.

Word grammar::

    word := term (('*' | ' ') term)*       (empty text is the empty word)
    term := name ['[' int ']'] ['@' uint] ['^' int]

Known names: ``x[i]`` (unit interval), ``xt[i]``, ``y[i]``, ``G[i]`` (real
line), ``g[k]@n`` (finite family at level n), ``rs``, ``rx[i]``, ``rG[i]``
(translation-based family on the real line).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import generators as gens
from .plmap import REAL, UNIT, PLMap, compose, identity

__all__ = [
    "WordError",
    "GenSym",
    "Word",
    "Presentation",
    "Relator",
    "free_reduce",
    "multiply",
    "invert",
    "relators_for",
    "realize",
    "is_identity",
    "theorem_i_images",
    "substitute",
    "generator_map",
    "random_word",
]


class WordError(ValueError):
    pass


# family -> (alphabet tag, domain, needs index)
FAMILIES = {
    "x": ("X", UNIT, True),
    "xt": ("Ft", REAL, True),
    "y": ("Ft", REAL, True),
    "G": ("Ft", REAL, True),
    "g": ("g", UNIT, True),
    "rs": ("R", REAL, False),
    "rx": ("R", REAL, True),
    "rG": ("R", REAL, True),
}


@dataclass(frozen=True, order=True)
class GenSym:
    family: str
    index: Optional[int] = None
    level: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise WordError(f"unknown generator name {self.family!r}")
        needs_index = FAMILIES[self.family][2]
        if needs_index and self.index is None:
            raise WordError(f"{self.family} needs an index")
        if not needs_index and self.index is not None:
            raise WordError(f"{self.family} takes no index")
        if (self.family == "g") != (self.level is not None):
            raise WordError("a level '@n' is required for g and only for g")

    @property
    def alphabet(self) -> str:
        tag = FAMILIES[self.family][0]
        return f"g@{self.level}" if tag == "g" else tag

    @property
    def domain(self) -> str:
        return FAMILIES[self.family][1]

    def shifted(self, n: int) -> "GenSym":
        return GenSym(self.family, self.index + n, self.level)

    def __str__(self):
        s = self.family
        if self.index is not None:
            s += f"[{self.index}]"
        if self.level is not None:
            s += f"@{self.level}"
        return s


Letter = Tuple[GenSym, int]


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for sym, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == sym:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((sym, e))
    return tuple(out)


_TERM = re.compile(r"^([A-Za-z]+)(?:\[([+-]?\d+)\])?(?:@(\d+))?(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()
    alphabet: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        letters = free_reduce(self.letters)
        alphabets = {sym.alphabet for sym, _ in letters}
        if len(alphabets) > 1:
            raise WordError(f"mixed alphabets in word: {sorted(alphabets)}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet", alphabets.pop() if alphabets else None)

    @classmethod
    def letter(cls, sym: GenSym, exp: int = 1) -> "Word":
        return cls(((sym, exp),))

    @classmethod
    def parse(cls, text: str) -> "Word":
        letters = []
        text = text.strip()
        tokens = re.split(r"\s*\*\s*|\s+", text) if text else []
        for token in tokens:
            m = _TERM.match(token)
            if m is None:
                raise WordError(f"malformed term {token!r}")
            name, idx, lvl, exp = m.groups()
            sym = GenSym(
                name,
                None if idx is None else int(idx),
                None if lvl is None else int(lvl),
            )
            letters.append((sym, 1 if exp is None else int(exp)))
        return cls(tuple(letters))

    def format(self) -> str:
        return "*".join(str(s) if e == 1 else f"{s}^{e}" for s, e in self.letters)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Word({self.format()!r})"

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** -n
        return Word(self.letters * n)

    def symbols(self):
        return [s for s, _ in self.letters]


def multiply(u: Word, v: Word) -> Word:
    if u.alphabet and v.alphabet and u.alphabet != v.alphabet:
        raise WordError(f"alphabet mismatch: {u.alphabet} vs {v.alphabet}")
    return Word(u.letters + v.letters)


def invert(w: Word) -> Word:
    return Word(tuple((s, -e) for s, e in reversed(w.letters)))


def substitute(w: Word, image: Callable[[GenSym], Word]) -> Word:
    out = Word()
    for sym, e in w.letters:
        out = out * image(sym) ** e
    return out


# -- presentations ----------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """A relator schema over a range of indices (None means unbounded).

    For the ``G`` schema the index set is the set of generator indices.  For
    the ``X`` schema it is the range of the pair ``(i, j)``; the relator for a
    pair also mentions ``x_{j+1}``.
    """

    schema: str
    lo: Optional[int] = None
    hi: Optional[int] = None

    def __post_init__(self):
        if self.schema not in ("X", "G"):
            raise WordError(f"unknown schema {self.schema!r}")

    @classmethod
    def naturals(cls, schema: str) -> "Presentation":
        return cls(schema, 0, None)

    @classmethod
    def integers(cls, schema: str) -> "Presentation":
        return cls(schema, None, None)

    @classmethod
    def lemma_finite(cls, n: int) -> "Presentation":
        """x_0..x_n with x_j x_i = x_i x_{j+1} for 0 <= i < j <= n-1."""
        return cls("X", 0, n - 1)

    def contains(self, a: int, b: int) -> bool:
        return (self.lo is None or self.lo <= a) and (self.hi is None or b <= self.hi)


@dataclass(frozen=True, order=True)
class Relator:
    schema: str
    indices: Tuple[int, ...]
    word: Word = field(compare=False)

    def __str__(self):
        return f"{self.schema}{self.indices}: {self.word}"


def _sym(family: str, i: int, level: Optional[int]) -> GenSym:
    return GenSym(family, i, level if family == "g" else None)


def relators_for(
    p: Presentation,
    window: Tuple[int, int],
    family: Optional[str] = None,
    level: Optional[int] = None,
) -> List[Relator]:
    """All schema instances with every index inside ``window``, sorted."""
    a, b = window
    if a > b:
        raise WordError(f"empty window {window}")
    if not p.contains(a, b):
        raise WordError(f"window {window} outside the presentation's index set")
    family = family or ("G" if p.schema == "G" else "x")

    def w(*terms):
        return Word(tuple((_sym(family, i, level), e) for i, e in terms))

    rels = []
    if p.schema == "G":
        for i in range(a + 1, b):
            lhs = w((i - 1, 1), (i, 1), (i + 1, 1))
            rhs = w((i, 1), (i + 1, 1), (i - 1, 1), (i, 1))
            rels.append(Relator("braid", (i - 1, i, i + 1), lhs * ~rhs))
        for i in range(a, b + 1):
            for j in range(i + 2, b + 1):
                rels.append(Relator("commute", (i, j), w((i, 1), (j, 1), (i, -1), (j, -1))))
    else:
        for i in range(a, b + 1):
            for j in range(i + 1, b + 1):
                rels.append(Relator("xshift", (i, j), w((j, 1), (i, 1), (j + 1, -1), (i, -1))))
    return sorted(rels)


# -- realization --------------------------------------------------------------


def generator_map(sym: GenSym) -> PLMap:
    f, i = sym.family, sym.index
    try:
        if f == "x":
            return gens.gen_x(i)
        if f == "xt":
            return gens.gen_xt(i)
        if f == "y":
            return gens.gen_y(i)
        if f == "G":
            return gens.gen_Gt(i)
        if f == "g":
            return gens.gen_g_finite(i, sym.level)
        if f == "rs":
            return gens.gen_rs()
        if f == "rx":
            return gens.gen_rx(i)
        if f == "rG":
            return gens.gen_rG(i)
    except ValueError as exc:
        raise WordError(f"cannot realize {sym}: {exc}") from None
    raise WordError(f"no realization for {sym}")


def realize(
    w: Word,
    overrides: Optional[Dict[GenSym, PLMap]] = None,
    domain: Optional[str] = None,
) -> PLMap:
    """The product of the generator maps of ``w``.

    ``overrides`` replaces individual generators (used for substitution
    experiments).  ``domain`` picks the identity's domain for the empty word;
    it defaults to the real line.
    """
    if not w.letters:
        return identity(domain or REAL)
    result = None
    for sym, e in w.letters:
        g = overrides.get(sym) if overrides else None
        if g is None:
            g = generator_map(sym)
        term = g ** e
        result = term if result is None else compose(result, term)
    return result


def is_identity(w: Word, overrides: Optional[Dict[GenSym, PLMap]] = None) -> bool:
    return realize(w, overrides).is_identity()


def theorem_i_images(direction: str, n: int) -> Callable[[Word], Word]:
    """Word homomorphisms between the x-generators and the g-generators at level n.

    ``"x->g"``: ``x_k -> g_k g_{k+1} ... g_n``; ``"g->x"``: ``g_k -> x_k x_{k+1}^-1``
    for k < n and ``g_n -> x_n``.
    """
    if n < 4:
        raise WordError(f"level must be >= 4, got {n}")

    def g(k):
        return GenSym("g", k, n)

    def x(k):
        return GenSym("x", k)

    def check(sym, family):
        if sym.family != family or (family == "g" and sym.level != n):
            raise WordError(f"{sym} is not a {family}-generator at level {n}")
        if not 0 <= sym.index <= n:
            raise WordError(f"index of {sym} outside [0, {n}]")

    if direction == "x->g":
        def image(sym):
            check(sym, "x")
            return Word(tuple((g(j), 1) for j in range(sym.index, n + 1)))
    elif direction == "g->x":
        def image(sym):
            check(sym, "g")
            k = sym.index
            return Word.letter(x(k)) if k == n else Word(((x(k), 1), (x(k + 1), -1)))
    else:
        raise WordError(f"unknown direction {direction!r}")
    return lambda w: substitute(w, image)


def random_word(
    rng: random.Random,
    family: str,
    lo: int,
    hi: int,
    max_length: int,
    level: Optional[int] = None,
) -> Word:
    length = rng.randint(0, max_length)
    return Word(
        tuple(
            (_sym(family, rng.randint(lo, hi), level), rng.choice((-1, 1)))
            for _ in range(length)
        )
    )
