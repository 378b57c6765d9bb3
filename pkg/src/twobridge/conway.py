"""Conway notation, continued fractions, and Schubert classification
for two-bridge links.

A Conway word is an odd-length tuple of nonzero integers
(a1, b1, a2, ..., bm, a(m+1)); odd positions hold horizontal twist
counts a_i, even positions vertical twist counts b_j.  The word
evaluates by a plain right-to-left continued fraction

    cont(c1, ..., cn) = c1 + 1/cont(c2, ..., cn)

to a fraction p/q classifying the link up to Schubert equivalence.
The convention is pinned by an independent oracle: p equals the
checkerboard (Goeritz) determinant of the plat diagram built from the
same word, and the test suite enforces that identity on an exhaustive
corpus.

All arithmetic in this module is exact integer/rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConwaySyntaxError,
    DegenerateFractionError,
    EvenLengthError,
    NotReducedAlternatingError,
    ZeroEntryError,
)

DEFAULT_SUM_BOUND = 40
DEFAULT_LENGTH_BOUND = 11


@dataclass(frozen=True)
class ConwayWord:
    """Odd-length sequence of nonzero twist counts."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        for e in entries:
            if e == 0:
                raise ZeroEntryError(f"zero entry in {entries}")
        if len(entries) % 2 == 0:
            raise EvenLengthError(
                f"{len(entries)} entries; Conway forms have odd length 2m+1"
            )

    @property
    def m(self) -> int:
        return (len(self.entries) - 1) // 2

    @property
    def a_entries(self) -> tuple[int, ...]:
        return self.entries[0::2]

    @property
    def b_entries(self) -> tuple[int, ...]:
        return self.entries[1::2]

    @property
    def sum_abs(self) -> int:
        return sum(abs(e) for e in self.entries)

    def __str__(self) -> str:
        return format_conway(self)


@dataclass(frozen=True)
class SchubertFraction:
    """Normalized classifying fraction: 0 < q < p, gcd(p, q) = 1.

    ``q_inverse`` is the multiplicative inverse of q mod p; its
    existence witnesses coprimality.
    """

    p: int
    q: int
    q_inverse: int

    def __post_init__(self):
        if self.p < 2:
            raise DegenerateFractionError(f"p = {self.p} < 2")
        if not 0 < self.q < self.p:
            raise DegenerateFractionError(f"q = {self.q} outside (0, {self.p})")
        if (self.q * self.q_inverse) % self.p != 1:
            raise DegenerateFractionError(
                f"{self.q_inverse} is not the inverse of {self.q} mod {self.p}"
            )

    @classmethod
    def normalized(cls, p: int, q: int) -> "SchubertFraction":
        """Reduce (p, q) with p possibly negative, q arbitrary, to canonical form."""
        if p < 0:
            p, q = -p, -q
        if p < 2:
            raise DegenerateFractionError(f"|p| = {p} < 2: not a two-bridge fraction")
        q %= p
        if q == 0:
            raise DegenerateFractionError(f"q = 0 mod {p}: not coprime")
        try:
            inv = pow(q, -1, p)
        except ValueError:
            raise DegenerateFractionError(f"gcd({p}, {q}) != 1") from None
        return cls(p, q, inv)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class EquivalencePolicy:
    """Controls whether b(p,q) and b(p,p-q) are identified.

    The flag is always explicit: equivalence queries take a policy, the
    library sets no hidden default.
    """

    allow_mirror: bool


@dataclass(frozen=True)
class FailureReport:
    """Outcome of an exhausted even-b search; never a claim of nonexistence."""

    word: ConwayWord
    fraction: SchubertFraction
    sum_bound: int
    length_bound: int
    note: str


def parse_conway(text: str) -> ConwayWord:
    """Parse ``C(e1,e2,...)`` or ``[e1,e2,...]`` notation, whitespace-insensitive."""
    compact = "".join(text.split())
    if compact.startswith("C(") and compact.endswith(")"):
        body = compact[2:-1]
    elif compact.startswith("[") and compact.endswith("]"):
        body = compact[1:-1]
    else:
        raise ConwaySyntaxError(f"not Conway notation: {text!r}")
    if not body:
        raise ConwaySyntaxError(f"empty entry list: {text!r}")
    entries = []
    for token in body.split(","):
        if not token or not (token.lstrip("-").isdigit() and token.count("-") <= 1):
            raise ConwaySyntaxError(f"bad integer {token!r} in {text!r}")
        if token.startswith("-") and len(token) == 1:
            raise ConwaySyntaxError(f"bad integer {token!r} in {text!r}")
        entries.append(int(token))
    return ConwayWord(tuple(entries))


def format_conway(word: ConwayWord) -> str:
    """Canonical text form: ``C(e1,e2,...)`` with no spaces."""
    return "C(" + ",".join(str(e) for e in word.entries) + ")"


def _continuant(entries: tuple[int, ...]) -> tuple[int, int]:
    """Projective right-to-left continued fraction; no divisions, exact.

    Returns coprime (P, Q) with cont(entries) = P/Q (Q may be 0 when the
    value is formally infinite; that only happens with |P| = 1).
    """
    num, den = entries[-1], 1
    for c in reversed(entries[:-1]):
        num, den = c * num + den, num
    return num, den


def fraction_of(word: ConwayWord) -> SchubertFraction:
    """Evaluate the word's continued fraction and normalize to 0 < q < p."""
    p, q = _continuant(word.entries)
    return SchubertFraction.normalized(p, q)


def schubert_equivalent(
    f1: SchubertFraction, f2: SchubertFraction, policy: EquivalencePolicy
) -> bool:
    """True iff p1 = p2 and q2 is q1 or its inverse mod p (plus negations
    of both when the policy allows mirrors)."""
    if f1.p != f2.p:
        return False
    p = f1.p
    images = {f1.q, f1.q_inverse}
    if policy.allow_mirror:
        images |= {(p - f1.q) % p, (p - f1.q_inverse) % p}
    return f2.q in images


def component_count(f: SchubertFraction) -> int:
    """2 components iff p is even, else 1; agrees with plat strand tracing."""
    return 2 if f.p % 2 == 0 else 1


def all_b_even(word: ConwayWord) -> bool:
    """Every vertical twist count is even (vacuously true when m = 0)."""
    return all(b % 2 == 0 for b in word.b_entries)


def is_reduced_alternating(word: ConwayWord) -> bool:
    """The plat diagram is reduced alternating iff all entries >= 2 or all <= -2."""
    return all(e >= 2 for e in word.entries) or all(e <= -2 for e in word.entries)


def twist_number(word: ConwayWord) -> int:
    """Number of crossing equivalence classes of the reduced alternating
    diagram: 2m + 1, the number of twist regions."""
    if not is_reduced_alternating(word):
        raise NotReducedAlternatingError(
            f"{format_conway(word)} has an entry of magnitude 1 or mixed signs"
        )
    return len(word.entries)


def transform(word: ConwayWord, kind: str) -> ConwayWord:
    """``mirror`` negates every entry, ``reverse`` reverses the sequence."""
    if kind == "mirror":
        return ConwayWord(tuple(-e for e in word.entries))
    if kind == "reverse":
        return ConwayWord(tuple(reversed(word.entries)))
    raise ValueError(f"unknown transform {kind!r}")


def _expansion_targets(f: SchubertFraction) -> list[Fraction]:
    """Rational targets whose words normalize into f's mirror-free class.

    cont(w) = X/Y lands on f exactly when |X| = p and sign(X)*Y is q or
    q^{-1} mod p, so we sweep small representatives Y of those residues.
    """
    p = f.p
    targets = []
    seen = set()
    for base in (f.q, f.q_inverse):
        for eps in (1, -1):
            for k in range(-2, 3):
                y = eps * base + k * p
                if y == 0 or abs(y) > 2 * p:
                    continue
                t = Fraction(eps * p, y)
                if t not in seen:
                    seen.add(t)
                    targets.append(t)
    targets.sort(key=lambda t: (abs(t.denominator), t < 0))
    return targets


def _expand_target(
    target: Fraction,
    length_bound: int,
    sum_bound: int,
    witnesses: list[tuple[int, ...]],
) -> None:
    """Depth-first expansion of ``target`` into words with even b-entries.

    Candidate entries stay within distance 2 of the running value; that
    window always contains the greedy nearest-integer (or nearest-even)
    choices on both sides.
    """

    def min_tail(position: int) -> int:
        # Cheapest legal completion: end now costs >= 1; if the next
        # position is a b-slot, at least one even entry plus a final a.
        return 1 if position % 2 == 1 else 3

    def rec(t: Fraction, position: int, prefix: list[int], used: int) -> None:
        a_slot = position % 2 == 1
        if a_slot and t.denominator == 1:
            c = int(t)
            if c != 0 and used + abs(c) <= sum_bound:
                witnesses.append(tuple(prefix + [c]))
        if position >= length_bound:
            return
        lo = int(t) - 2
        cands = [c for c in range(lo, lo + 6) if c != 0 and abs(Fraction(c) - t) <= 2]
        if not a_slot:
            cands = [c for c in cands if c % 2 == 0]
        cands.sort(key=lambda c: (abs(Fraction(c) - t), c))
        for c in cands:
            r = t - c
            if r == 0:
                continue
            nxt = used + abs(c)
            if nxt + min_tail(position + 1) > sum_bound:
                continue
            rec(1 / r, position + 1, prefix + [c], nxt)

    rec(target, 1, [], 0)


def even_b_normalize(
    word: ConwayWord,
    sum_bound: int = DEFAULT_SUM_BOUND,
    length_bound: int = DEFAULT_LENGTH_BOUND,
) -> ConwayWord | FailureReport:
    """Find an odd-length all-even-b word Schubert-equivalent (mirror off)
    to ``word``; returns the input unchanged when it already qualifies.

    The search expands continued fractions toward every small-denominator
    representative of the fraction's class and keeps the minimal witness
    by (length, sum of magnitudes, entries).  A FailureReport records the
    searched bounds; it never claims nonexistence.
    """
    if all_b_even(word):
        return word
    f = fraction_of(word)
    policy = EquivalencePolicy(allow_mirror=False)
    targets = _expansion_targets(f)
    for length_cap in range(1, length_bound + 1, 2):
        witnesses: list[tuple[int, ...]] = []
        for target in targets:
            _expand_target(target, length_cap, sum_bound, witnesses)
        valid = []
        for entries in set(witnesses):
            candidate = ConwayWord(entries)
            try:
                if schubert_equivalent(fraction_of(candidate), f, policy):
                    valid.append(candidate)
            except DegenerateFractionError:  # pragma: no cover
                continue
        if valid:
            return min(valid, key=lambda w: (len(w.entries), w.sum_abs, w.entries))
    return FailureReport(
        word=word,
        fraction=f,
        sum_bound=sum_bound,
        length_bound=length_bound,
        note=(
            "no even-b word found by targeted continued-fraction expansion "
            f"within sum {sum_bound} and length {length_bound}; "
            "existence is not excluded"
        ),
    )
