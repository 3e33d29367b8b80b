"""Free group words, substitution endomorphisms, and the representation mu.

The representation mu_n : VT_n -> Aut(F_n) acts on generators by

    mu(s_i): x_i -> x_i x_{i+1},  x_{i+1} -> x_{i+1}^{-1}
    mu(r_i): x_i <-> x_{i+1}

with all other generators fixed.  For a word the rightmost letter's
substitution is applied first, i.e. mu(uv) = mu(u) o mu(v) where the right
operand acts first.  The relation set of VT_n is closed under word
reversal, so this convention is consistent; verify_relations() checks it
instance by instance.

Equality proved by mu is sound: if the images differ the words differ in
VT_n.  No faithfulness is claimed, so a separation failure proves nothing.

Free words are stored flat as tuples of signed generator indices
(+i for x_i, -i for x_i^{-1}); the display format is ``x1 x2^-1 ...``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RankMismatch
from .words import REAL, VIRTUAL, Letter, TwinWord

# ---------------------------------------------------------------------------
# free words


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...]  # signed indices, never 0, abs value <= rank

    def __post_init__(self) -> None:
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"letter {a} out of range for rank {self.rank}")

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)


def reduce_free(w: FreeWord) -> FreeWord:
    """Cancel adjacent x x^-1 pairs; the normal form is unique."""
    out: list[int] = []
    for a in w.letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return FreeWord(w.rank, tuple(out))


def inverse_free(w: FreeWord) -> FreeWord:
    return FreeWord(w.rank, tuple(-a for a in reversed(w.letters)))


def generator(rank: int, i: int) -> FreeWord:
    return FreeWord(rank, (i,))


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class FreeEndomorphism:
    """Substitution on free generators; images are kept reduced.

    Equality is syllable-wise equality of the reduced images, which is the
    right notion because reduced forms are unique.
    """

    rank: int
    images: tuple[FreeWord, ...]  # images[k-1] = image of x_k, reduced

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError("one image required per generator")
        for img in self.images:
            if img.rank != self.rank:
                raise ValueError("image rank mismatch")
            if reduce_free(img) != img:
                raise ValueError(f"image {img} is not reduced")

    @classmethod
    def identity(cls, rank: int) -> "FreeEndomorphism":
        return cls(rank, tuple(generator(rank, i) for i in range(1, rank + 1)))

    def image(self, i: int) -> FreeWord:
        return self.images[i - 1]

    def apply(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise RankMismatch(f"rank {w.rank} word under rank {self.rank} map")
        out: list[int] = []
        for a in w.letters:
            img = self.images[abs(a) - 1]
            piece = img.letters if a > 0 else tuple(-b for b in reversed(img.letters))
            for b in piece:
                if out and out[-1] == -b:
                    out.pop()
                else:
                    out.append(b)
        return FreeWord(self.rank, tuple(out))


def compose(f: FreeEndomorphism, g: FreeEndomorphism) -> FreeEndomorphism:
    """f o g, the map applying g first: x_k -> f(g(x_k)), reduced."""
    if f.rank != g.rank:
        raise RankMismatch(f"cannot compose ranks {f.rank} and {g.rank}")
    return FreeEndomorphism(f.rank, tuple(f.apply(img) for img in g.images))


def mu_letter(let: Letter, rank: int) -> FreeEndomorphism:
    i = let.index
    images = [generator(rank, k) for k in range(1, rank + 1)]
    if let.kind == REAL:
        images[i - 1] = FreeWord(rank, (i, i + 1))
        images[i] = FreeWord(rank, (-(i + 1),))
    else:
        images[i - 1] = generator(rank, i + 1)
        images[i] = generator(rank, i)
    return FreeEndomorphism(rank, tuple(images))


def mu(w: TwinWord) -> FreeEndomorphism:
    """mu(w) at rank = strand count; rightmost letter acts first."""
    acc = FreeEndomorphism.identity(w.strands)
    for let in w.letters:
        acc = compose(acc, mu_letter(let, w.strands))
    return acc


# ---------------------------------------------------------------------------
# defining relations


@dataclass(frozen=True)
class RelationInstance:
    family: str
    lhs: TwinWord
    rhs: TwinWord
    holds: bool


def relation_instances(n: int) -> list[tuple[str, TwinWord, TwinWord]]:
    """Every instance of the seven defining relation families at rank n.

    Commutation families use unordered index pairs for the s-s and r-r
    relations and ordered pairs for the mixed r-s relation, matching how
    the relation list is written.
    """
    if n < 2:
        raise RankMismatch(f"relations need n >= 2, got {n}")

    def w(*letters: Letter) -> TwinWord:
        return TwinWord(n, letters)

    s = lambda i: Letter(REAL, i)
    r = lambda i: Letter(VIRTUAL, i)
    empty = TwinWord(n, ())

    out: list[tuple[str, TwinWord, TwinWord]] = []
    for i in range(1, n):
        out.append((f"s{i}^2=1", w(s(i), s(i)), empty))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"s{i}s{j}=s{j}s{i}", w(s(i), s(j)), w(s(j), s(i))))
    for i in range(1, n):
        out.append((f"r{i}^2=1", w(r(i), r(i)), empty))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"r{i}r{j}=r{j}r{i}", w(r(i), r(j)), w(r(j), r(i))))
    for i in range(1, n - 1):
        out.append(
            (
                f"r{i}r{i+1}r{i}=r{i+1}r{i}r{i+1}",
                w(r(i), r(i + 1), r(i)),
                w(r(i + 1), r(i), r(i + 1)),
            )
        )
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                out.append((f"r{i}s{j}=s{j}r{i}", w(r(i), s(j)), w(s(j), r(i))))
    for i in range(1, n - 1):
        out.append(
            (
                f"r{i}r{i+1}s{i}=s{i+1}r{i}r{i+1}",
                w(r(i), r(i + 1), s(i)),
                w(s(i + 1), r(i), r(i + 1)),
            )
        )
    return out


def relation_count(n: int) -> int:
    """Closed-form instance count, kept independent of the enumeration."""
    gap_unordered = (n - 2) * (n - 3) // 2
    return 2 * (n - 1) + 2 * gap_unordered + 2 * (n - 2) + 2 * gap_unordered


def verify_relations(n: int) -> list[RelationInstance]:
    """Evaluate both sides of every relation instance under mu."""
    report = []
    for family, lhs, rhs in relation_instances(n):
        report.append(RelationInstance(family, lhs, rhs, mu(lhs) == mu(rhs)))
    return report


# ---------------------------------------------------------------------------
# sound separation


def separating_generator(u: TwinWord, v: TwinWord) -> int | None:
    """Least generator index where mu(u) and mu(v) disagree, if any.

    A witness proves u != v in VT_n; None proves nothing on its own.
    """
    if u.strands != v.strands:
        raise RankMismatch(f"strand counts differ: {u.strands} vs {v.strands}")
    fu, fv = mu(u), mu(v)
    for i in range(1, u.strands + 1):
        if fu.image(i) != fv.image(i):
            return i
    return None


def separates(u: TwinWord, v: TwinWord) -> bool:
    return separating_generator(u, v) is not None
