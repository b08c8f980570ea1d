"""Braid words on n strands: reduction, Garside normal form, Markov moves, closures.

Words are sequences of letters (i, s) meaning the Artin generator with index
1 <= i <= n-1 raised to the sign s in {+1, -1}.  Words multiply left to right.

Composition convention, fixed once and used everywhere: the product p * q of
permutations is the map i -> p(q(i)), and a word's underlying permutation is
the product of its letters' transpositions taken left to right.  Under this
convention the word [1, 2] on three strands maps to the cycle 1 -> 2 -> 3 -> 1.

Normal forms follow the usual left-weighted Garside scheme: every braid is
written uniquely as D^k p_1 ... p_l where D is the positive half twist, each
p_i is a permutation braid (stored as its permutation) other than the identity
or D, and consecutive factors satisfy  starting set of p_{i+1}  contained in
finishing set of p_i.  For a permutation braid these sets are the left and
right descent sets of its permutation.  Two words are equal in the braid group
exactly when their normal forms coincide componentwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}, stored as the tuple (r(1), ..., r(n))."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {self.images} are not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def half_twist(cls, n: int) -> Permutation:
        """The order-reversing permutation, underlying the positive half twist."""
        return cls(tuple(range(n, 0, -1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (p * q)(i) = p(q(i))."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def right_descents(self) -> set[int]:
        """Indices i with r(i) > r(i+1); the finishing set of the permutation braid."""
        return {i for i in range(1, len(self.images)) if self.images[i - 1] > self.images[i]}

    def left_descents(self) -> set[int]:
        """The starting set of the permutation braid."""
        return self.inverse().right_descents()

    def length(self) -> int:
        """Coxeter length: number of inversions."""
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def cycle_count(self) -> int:
        seen = [False] * len(self.images)
        count = 0
        for start in range(len(self.images)):
            if seen[start]:
                continue
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
        return count

    def reduced_word(self) -> list[int]:
        """A positive word whose letters multiply left to right to this permutation."""
        word: list[int] = []
        p = self
        while True:
            descents = p.right_descents()
            if not descents:
                break
            s = min(descents)
            word.append(s)
            p = p * Permutation.transposition(p.size, s)
        word.reverse()
        return word


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on `strands` strands."""

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"letter index {i} out of range for n={self.strands}")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    @classmethod
    def from_ints(cls, strands: int, values: Iterable[int]) -> BraidWord:
        """Build from signed integers: k > 0 is generator k, k < 0 its inverse."""
        letters = []
        for v in values:
            if v == 0:
                raise ValueError("0 is not a valid letter")
            letters.append((abs(v), 1 if v > 0 else -1))
        return cls(strands, tuple(letters))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)


@dataclass(frozen=True)
class GroupCode:
    """A finite presentation: generator count plus relator words.

    Relators are stored as braid-word-shaped sequences over generator_count
    symbols (strand count generator_count + 1).  Arbitrary codes are accepted
    for test-pair generation only; no word-problem claim is made for them.
    """

    generator_count: int
    relators: tuple[BraidWord, ...]

    def __post_init__(self):
        for r in self.relators:
            if r.strands != self.generator_count + 1:
                raise ValueError("relator strand count must equal generator_count + 1")


def artin_code(n: int) -> GroupCode:
    """The built-in code of the braid group on n strands: both Artin relator families."""
    if n < 2:
        raise ValueError("the braid group code needs n >= 2")
    relators = []
    for i in range(1, n - 1):
        j = i + 1
        relators.append(BraidWord.from_ints(n, [i, j, i, -j, -i, -j]))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            relators.append(BraidWord.from_ints(n, [i, j, -i, -j]))
    return GroupCode(n - 1, tuple(relators))


# -- elementary operations ----------------------------------------------------


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[tuple[int, int]] = []
    for letter in word.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(word.strands, tuple(stack))


def permutation_of(word: BraidWord) -> Permutation:
    """Image of the word under the quotient map to the symmetric group."""
    p = Permutation.identity(word.strands)
    for i, _ in word.letters:
        p = p * Permutation.transposition(word.strands, i)
    return p


def is_pure(word: BraidWord) -> bool:
    return permutation_of(word).is_identity


# -- Garside normal form -------------------------------------------------------


@dataclass(frozen=True)
class GarsideNormalForm:
    """Left-weighted factorisation D^inf p_1 ... p_l of a braid word."""

    strands: int
    inf: int
    factors: tuple[Permutation, ...]

    def __post_init__(self):
        delta = Permutation.half_twist(self.strands)
        ident = Permutation.identity(self.strands)
        for f in self.factors:
            if f.size != self.strands:
                raise ValueError("factor size mismatch")
            if f == ident or f == delta:
                raise ValueError("factors may be neither the identity nor the half twist")
        if not self.is_left_weighted():
            raise ValueError("factors are not left-weighted")

    def is_left_weighted(self) -> bool:
        """Check starting set of each factor is contained in the previous finishing set."""
        return all(
            self.factors[k + 1].left_descents() <= self.factors[k].right_descents()
            for k in range(len(self.factors) - 1)
        )

    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        """Re-multiply the factorisation into a braid word."""
        delta_word = Permutation.half_twist(self.strands).reduced_word()
        values: list[int] = []
        if self.inf >= 0:
            values.extend(delta_word * self.inf)
        else:
            values.extend([-i for i in reversed(delta_word)] * (-self.inf))
        for f in self.factors:
            values.extend(f.reduced_word())
        return BraidWord.from_ints(self.strands, values)


# The normalisation loop works on raw image tuples; constructing validated
# Permutation objects inside the sliding moves would dominate the runtime.


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
    identity = tuple(range(1, n + 1))
    delta = tuple(range(n, 0, -1))
    transpositions = []
    for i in range(1, n):
        im = list(identity)
        im[i - 1], im[i] = im[i], im[i - 1]
        transpositions.append(tuple(im))
    return identity, delta, tuple(transpositions)


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[j - 1] for j in b)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, v in enumerate(a, start=1):
        out[v - 1] = i
    return tuple(out)


def _slide_pair(a: list[int], b_inv: list[int]) -> bool:
    # Move head letters of b into the tail of a until the pair is
    # left-weighted.  a <- a * t_s swaps positions s, s+1 of a's images;
    # b <- t_s * b swaps the same positions of b's inverse images.
    n = len(a)
    moved = False
    while True:
        s = 0
        for i in range(n - 1):
            if b_inv[i] > b_inv[i + 1] and a[i] < a[i + 1]:
                s = i
                break
        else:
            return moved
        a[s], a[s + 1] = a[s + 1], a[s]
        b_inv[s], b_inv[s + 1] = b_inv[s + 1], b_inv[s]
        moved = True


def _normalize_factors(n: int, factors: list[tuple[int, ...]]) -> tuple[int, list[tuple[int, ...]]]:
    identity, delta, _ = _tables(n)
    work = [list(f) for f in factors if f != identity]
    inverses = [list(_inv(tuple(f))) for f in work]
    ident = list(identity)
    while True:
        changed = False
        for k in range(len(work) - 1):
            if _slide_pair(work[k], inverses[k + 1]):
                work[k + 1] = list(_inv(tuple(inverses[k + 1])))
                inverses[k] = list(_inv(tuple(work[k])))
                changed = True
        if not changed:
            break
        keep = [k for k in range(len(work)) if work[k] != ident]
        work = [work[k] for k in keep]
        inverses = [inverses[k] for k in keep]
    result = [tuple(f) for f in work]
    lead = 0
    while lead < len(result) and result[lead] == delta:
        lead += 1
    return lead, result[lead:]


def left_normal_form(word: BraidWord) -> GarsideNormalForm:
    """The unique left-weighted Garside factorisation equal to the word."""
    n = word.strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    identity, delta, transpositions = _tables(n)
    # Each letter contributes a permutation-braid factor, inverse letters with
    # a leading D^-1 that is then pushed to the front through the factors.
    factors: list[tuple[int, ...]] = []
    delta_powers: list[int] = []
    for i, s in word.letters:
        t = transpositions[i - 1]
        if s == 1:
            factors.append(t)
            delta_powers.append(0)
        else:
            factors.append(_mul(delta, t))
            delta_powers.append(-1)
    total = 0
    for k in range(len(factors) - 1, -1, -1):
        if total % 2:
            factors[k] = _mul(delta, _mul(factors[k], delta))
        total += delta_powers[k]
    lead, normalized = _normalize_factors(n, factors)
    return GarsideNormalForm(n, total + lead, tuple(Permutation(f) for f in normalized))


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide u = v in the braid group by comparing left normal forms."""
    if u.strands != v.strands:
        raise ValueError("words live on different strand counts")
    return left_normal_form(u) == left_normal_form(v)


def insert_relator(word: BraidWord, code: GroupCode, relator_index: int, position: int,
                   conjugator: BraidWord | None = None) -> BraidWord:
    """Splice a relator (optionally conjugated) into the word at the position.

    The output is equal to the input in the presented group; this is the
    test-pair generator backing the word-problem checks.
    """
    if not 0 <= relator_index < len(code.relators):
        raise ValueError(f"relator index {relator_index} out of range")
    if not 0 <= position <= len(word.letters):
        raise ValueError(f"position {position} out of range")
    relator = code.relators[relator_index]
    if relator.strands > word.strands:
        raise ValueError("relator does not fit on the word's strand count")
    piece = BraidWord(word.strands, relator.letters)
    if conjugator is not None:
        if conjugator.strands != word.strands:
            raise ValueError("conjugator strand count mismatch")
        piece = conjugator * piece * conjugator.inverse()
    letters = word.letters[:position] + piece.letters + word.letters[position:]
    return BraidWord(word.strands, letters)


# -- Markov moves and closures --------------------------------------------------


def conjugate(word: BraidWord, by: BraidWord) -> BraidWord:
    """Markov conjugation: returns by * word * by^{-1} on the same strand count."""
    if word.strands != by.strands:
        raise ValueError("conjugator strand count mismatch")
    return by * word * by.inverse()


def stabilize(word: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilisation: append the new top generator, adding one strand."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = word.strands + 1
    return BraidWord(n, word.letters + ((n - 1, sign),))


def destabilize(word: BraidWord) -> BraidWord:
    """Markov destabilisation, checked syntactically after free reduction.

    The reduced word must end in the top generator (either sign) and use it
    nowhere else.
    """
    n = word.strands
    if n < 2:
        raise ValueError("cannot destabilise a word on fewer than 2 strands")
    reduced = free_reduce(word)
    top = n - 1
    offenders = [(pos, i * s) for pos, (i, s) in enumerate(reduced.letters[:-1]) if i == top]
    if not reduced.letters or reduced.letters[-1][0] != top or offenders:
        detail = (
            f"letters {offenders} also use index {top}" if offenders
            else f"reduced word does not end in generator {top}"
        )
        raise ValueError(f"destabilisation precondition failed: {detail}")
    return BraidWord(n - 1, reduced.letters[:-1])


def markov_move(word: BraidWord, move: str, *, by: BraidWord | None = None, sign: int = 1) -> BraidWord:
    """Dispatch a Markov move by name: 'conjugate', 'stabilize' or 'destabilize'."""
    if move == "conjugate":
        if by is None:
            raise ValueError("conjugation needs a conjugator word")
        return conjugate(word, by)
    if move == "stabilize":
        return stabilize(word, sign)
    if move == "destabilize":
        return destabilize(word)
    raise ValueError(f"unknown Markov move {move!r}")


@dataclass(frozen=True)
class ClosureSummary:
    """Orientation-independent data of the closed braid: component count and writhe."""

    components: int
    exponent_sum: int
    strands: int

    def __post_init__(self):
        if not 1 <= self.components <= self.strands:
            raise ValueError("component count must lie in 1..strands")


def closure_summary(word: BraidWord) -> ClosureSummary:
    return ClosureSummary(
        components=permutation_of(word).cycle_count(),
        exponent_sum=word.exponent_sum(),
        strands=word.strands,
    )


@dataclass(frozen=True)
class BraidCobordism:
    """The tautological one-dimensional cobordism carried by a braid word.

    n disjoint intervals, with top boundary points (i, 0, 1) and bottom
    boundary points (r(i), 0, 0) for the word's underlying permutation r.
    """

    intervals: int
    top_points: tuple[tuple[int, int, int], ...]
    bottom_points: tuple[tuple[int, int, int], ...]
    permutation: Permutation

    def __post_init__(self):
        if len(self.top_points) != self.intervals or len(self.bottom_points) != self.intervals:
            raise ValueError("boundary point counts must equal the interval count")


def braid_cobordism(word: BraidWord) -> BraidCobordism:
    r = permutation_of(word)
    n = word.strands
    return BraidCobordism(
        intervals=n,
        top_points=tuple((i, 0, 1) for i in range(1, n + 1)),
        bottom_points=tuple((r(i), 0, 0) for i in range(1, n + 1)),
        permutation=r,
    )


# -- serialisation ---------------------------------------------------------------


def word_to_text(word: BraidWord) -> str:
    """Text form: header line n=<strands>, then the signed letters."""
    return f"n={word.strands}\n" + " ".join(str(v) for v in word.to_ints())


def word_from_text(text: str) -> BraidWord:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise ValueError("braid word text must start with an n=<strands> header")
    strands = int(lines[0][2:])
    body = " ".join(lines[1:])
    values = [int(tok) for tok in body.split()]
    return BraidWord.from_ints(strands, values)


def word_to_json_obj(word: BraidWord) -> dict:
    return {"n": word.strands, "word": word.to_ints()}


def word_from_json_obj(obj) -> BraidWord:
    return BraidWord.from_ints(int(obj["n"]), obj["word"])


def normal_form_to_json_obj(nf: GarsideNormalForm) -> dict:
    return {"n": nf.strands, "inf": nf.inf, "factors": [list(f.images) for f in nf.factors]}


def normal_form_from_json_obj(obj) -> GarsideNormalForm:
    return GarsideNormalForm(
        strands=int(obj["n"]),
        inf=int(obj["inf"]),
        factors=tuple(Permutation(tuple(images)) for images in obj["factors"]),
    )


def word_to_json(word: BraidWord) -> str:
    return json.dumps(word_to_json_obj(word), sort_keys=True)


def word_from_json(text: str) -> BraidWord:
    return word_from_json_obj(json.loads(text))
