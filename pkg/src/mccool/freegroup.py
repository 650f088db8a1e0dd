"""Free group words and endomorphisms, used to check McCool's relations.

Composition convention: ``compose(f, g)`` applies ``g`` first. A McCool word
``[s_1, ..., s_r]`` evaluates to ``s_1 ∘ s_2 ∘ ... ∘ s_r`` (left to right as
written, each syllable composed on the right).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

Letter = Tuple[int, int]  # (generator index, exponent ±1)
Syllable = Tuple[int, int, int]  # (i, j, exponent ±1) for alpha_{i,j}^{±1}

FULL = "full"
PLUS = "plus"


def reduce_word(letters: Iterable[Letter], n: int) -> "FreeWord":
    out: List[Letter] = []
    for k, e in letters:
        if not 1 <= k <= n:
            raise ValueError(f"generator index {k} outside 1..{n}")
        if e not in (1, -1):
            raise ValueError(f"exponent {e} is not ±1")
        if out and out[-1] == (k, -e):
            out.pop()
        else:
            out.append((k, e))
    return FreeWord(tuple(out), n)


@dataclass(frozen=True)
class FreeWord:
    letters: Tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if a[0] == b[0] and a[1] == -b[1]:
                raise ValueError("word is not freely reduced; use reduce_word")
        for k, _ in self.letters:
            if not 1 <= k <= self.rank:
                raise ValueError(f"generator index {k} outside 1..{self.rank}")

    @classmethod
    def gen(cls, k: int, n: int, e: int = 1) -> "FreeWord":
        return reduce_word([(k, e)], n)

    @classmethod
    def identity(cls, n: int) -> "FreeWord":
        return cls((), n)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return reduce_word(self.letters + other.letters, self.rank)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((k, -e) for k, e in reversed(self.letters)), self.rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{k}" if e == 1 else f"x{k}^-1" for k, e in self.letters)


@dataclass(frozen=True)
class FreeEndo:
    """Endomorphism of F_n; ``images[k-1]`` is the image of x_k."""

    rank: int
    images: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError("need one image per generator")
        if any(w.rank != self.rank for w in self.images):
            raise ValueError("image rank mismatch")

    @classmethod
    def identity(cls, n: int) -> "FreeEndo":
        return cls(n, tuple(FreeWord.gen(k, n) for k in range(1, n + 1)))

    @classmethod
    def from_images(cls, n: int, images: Sequence[Iterable[Letter]]) -> "FreeEndo":
        return cls(n, tuple(reduce_word(w, n) for w in images))

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endo(self, w)

    def __mul__(self, other: "FreeEndo") -> "FreeEndo":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self == FreeEndo.identity(self.rank)

    def total_length(self) -> int:
        return sum(len(w) for w in self.images)

    def to_json(self) -> List[str]:
        return [str(w) for w in self.images]

    def __str__(self) -> str:
        return ", ".join(f"x{k} -> {w}" for k, w in enumerate(self.images, 1))


def apply_endo(f: FreeEndo, w: FreeWord) -> FreeWord:
    if f.rank != w.rank:
        raise ValueError("rank mismatch")
    letters: List[Letter] = []
    for k, e in w.letters:
        img = f.images[k - 1]
        letters.extend(img.letters if e == 1 else img.inverse().letters)
    return reduce_word(letters, f.rank)


def compose(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """``f ∘ g``: x_k maps to f(g(x_k))."""
    if f.rank != g.rank:
        raise ValueError("rank mismatch")
    return FreeEndo(f.rank, tuple(apply_endo(f, w) for w in g.images))


def power(f: FreeEndo, m: int) -> FreeEndo:
    out = FreeEndo.identity(f.rank)
    for _ in range(m):
        out = compose(out, f)
    return out


# ----------------------------------------------------------- named automorphisms


def mccool_generator(n: int, i: int, j: int, exponent: int = 1) -> FreeEndo:
    """alpha_{i,j}: x_i -> x_j x_i x_j^-1, or its inverse for exponent -1."""
    if i == j:
        raise ValueError("alpha_{i,j} needs i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must lie in 1..{n}")
    if exponent not in (1, -1):
        raise ValueError("exponent must be ±1")
    images = [[(k, 1)] for k in range(1, n + 1)]
    images[i - 1] = [(j, exponent), (i, 1), (j, -exponent)]
    return FreeEndo.from_images(n, images)


def flip(n: int, i: int) -> FreeEndo:
    """rho_i: x_i -> x_i^-1."""
    images = [[(k, 1)] for k in range(1, n + 1)]
    images[i - 1] = [(i, -1)]
    return FreeEndo.from_images(n, images)


def swap(n: int, i: int) -> FreeEndo:
    """tau_i: exchange x_i and x_{i+1}."""
    if not 1 <= i < n:
        raise ValueError(f"swap index must lie in 1..{n - 1}")
    images = [[(k, 1)] for k in range(1, n + 1)]
    images[i - 1] = [(i + 1, 1)]
    images[i] = [(i, 1)]
    return FreeEndo.from_images(n, images)


def conjugation(w: FreeWord) -> FreeEndo:
    """Inner automorphism x -> w x w^-1."""
    n = w.rank
    winv = w.inverse()
    return FreeEndo(n, tuple(w * FreeWord.gen(k, n) * winv for k in range(1, n + 1)))


@dataclass(frozen=True)
class McCoolWord:
    rank: int
    syllables: Tuple[Syllable, ...]
    plus: bool = False

    def __post_init__(self):
        for i, j, e in self.syllables:
            if i == j or not (1 <= i <= self.rank and 1 <= j <= self.rank):
                raise ValueError(f"bad syllable {(i, j, e)} for n={self.rank}")
            if e not in (1, -1):
                raise ValueError("exponent must be ±1")
            if self.plus and not i < j:
                raise ValueError("plus-variant syllables need i < j")

    def inverse(self) -> "McCoolWord":
        return McCoolWord(self.rank, tuple((i, j, -e) for i, j, e in reversed(self.syllables)), self.plus)

    def __mul__(self, other: "McCoolWord") -> "McCoolWord":
        return McCoolWord(self.rank, self.syllables + other.syllables, self.plus and other.plus)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(f"a{i},{j}" + ("" if e == 1 else "^-1") for i, j, e in self.syllables)


def evaluate_mccool_word(w: McCoolWord) -> FreeEndo:
    out = FreeEndo.identity(w.rank)
    for i, j, e in w.syllables:
        out = compose(out, mccool_generator(w.rank, i, j, e))
    return out


def _a(n: int, *syllables: Syllable) -> McCoolWord:
    return McCoolWord(n, tuple(syllables))


def commutator(x: McCoolWord, y: McCoolWord) -> McCoolWord:
    """[x, y] = x y x^-1 y^-1."""
    return x * y * x.inverse() * y.inverse()


# ------------------------------------------------------------------ reports


@dataclass
class RelationReport:
    n: int
    variant: str
    instances: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.instances)

    def to_dict(self) -> dict:
        d = {"check": "mccool-presentation", "n": self.n, "variant": self.variant,
             "pass": self.passed, "count": len(self.instances), "instances": self.instances}
        if not self.instances:
            d["note"] = f"no relations at n={self.n}"
        return d


def relation_instances(n: int, variant: str = FULL) -> List[Tuple[str, Tuple[int, ...], McCoolWord]]:
    """Every instance of the three relator families, as McCool words."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if variant not in (FULL, PLUS):
        raise ValueError(f"unknown variant {variant!r}")
    plus = variant == PLUS

    def ok(*pairs):
        return not plus or all(a < b for a, b in pairs)

    out = []
    idx = range(1, n + 1)
    for i, j, k, l in itertools.permutations(idx, 4):
        if ok((i, j), (k, l)):
            out.append(("disjoint", (i, j, k, l), commutator(_a(n, (i, j, 1)), _a(n, (k, l, 1)))))
    for i, j, k in itertools.permutations(idx, 3):
        if ok((i, j), (k, j)):
            out.append(("common-target", (i, j, k), commutator(_a(n, (i, j, 1)), _a(n, (k, j, 1)))))
    for i, j, k in itertools.permutations(idx, 3):
        if ok((i, j), (i, k), (j, k)):
            out.append(("triangle", (i, j, k),
                        commutator(_a(n, (i, j, 1)), _a(n, (i, k, 1), (j, k, 1)))))
    if plus:
        out = [(f, t, McCoolWord(n, w.syllables, True)) for f, t, w in out]
    return out


def verify_mccool_presentation(n: int, variant: str = FULL) -> RelationReport:
    rep = RelationReport(n, variant)
    for family, idx, word in relation_instances(n, variant):
        rep.instances.append({"family": family, "indices": list(idx),
                              "pass": evaluate_mccool_word(word).is_identity()})
    return rep


def center_element(n: int) -> McCoolWord:
    """c = alpha_{1,n} alpha_{2,n} ... alpha_{n-1,n}."""
    return McCoolWord(n, tuple((i, n, 1) for i in range(1, n)), plus=True)


@dataclass
class CenterReport:
    n: int
    power_bound: int
    commutes: List[dict]
    nontrivial_powers: bool
    lengths: List[int]

    @property
    def length_growth(self) -> bool:
        return all(a < b for a, b in zip(self.lengths, self.lengths[1:]))

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.commutes) and self.nontrivial_powers and self.length_growth

    def to_dict(self) -> dict:
        return {"check": "center", "n": self.n, "pass": self.passed,
                "element": str(center_element(self.n)), "power_bound": self.power_bound,
                "nontrivial_powers": self.nontrivial_powers,
                "image_lengths": self.lengths, "strict_growth": self.length_growth,
                "commutators": self.commutes}


def verify_center(n: int, power_bound: int = 16) -> CenterReport:
    if n < 2:
        raise ValueError("n must be at least 2")
    c = center_element(n)
    cf = evaluate_mccool_word(c)
    commutes = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        comm = commutator(c, McCoolWord(n, ((i, j, 1),), True))
        commutes.append({"generator": [i, j], "pass": evaluate_mccool_word(comm).is_identity()})
    lengths = []
    nontrivial = True
    p = FreeEndo.identity(n)
    for _ in range(power_bound):
        p = compose(p, cf)
        nontrivial &= not p.is_identity()
        lengths.append(p.total_length())
    return CenterReport(n, power_bound, commutes, nontrivial, lengths)


@dataclass
class ActionReport:
    n: int
    instances: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.instances)

    def to_dict(self) -> dict:
        return {"check": "semidirect-action", "n": self.n, "pass": self.passed,
                "count": len(self.instances), "instances": self.instances}


def action_expected(n: int, i: int, j: int, p: int, q: int) -> McCoolWord:
    if q == j:
        return McCoolWord(n, ((i, p, 1), (i, q, 1), (i, p, -1)), True)
    return McCoolWord(n, ((i, q, 1),), True)


def verify_semidirect_action(n: int) -> ActionReport:
    """alpha_{j,p}^-1 alpha_{i,q} alpha_{j,p} against the closed formula."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rep = ActionReport(n)
    for i, j, p in itertools.combinations(range(1, n + 1), 3):
        for q in range(i + 1, n + 1):
            lhs = McCoolWord(n, ((j, p, -1), (i, q, 1), (j, p, 1)), True)
            rhs = action_expected(n, i, j, p, q)
            ok = evaluate_mccool_word(lhs) == evaluate_mccool_word(rhs)
            rep.instances.append({"i": i, "j": j, "p": p, "q": q, "pass": ok})
    return rep
