"""An independent PBW verifier built on noncommutative rewriting.

The deformed algebra is presented by generators {v1, v2, g^1, ..., g^(p-1)}
and the straightening relations drawn from a parameter set.  This module
orients those relations into rewrite rules

    (R1)  g^m * v1   ->  v1 * g^m + lambda(g^m, v1)
    (R2)  g^m * v2   ->  m * v1 * g^m + v2 * g^m + lambda(g^m, v2)
    (R3)  v2 * v1    ->  v1 * v2 - kappa^C - kappa^L terms
    (R4)  g^m * g^m' ->  g^(m+m' mod p)   (empty word when the sum is 0)

and reduces free words to the normal shape v1^i v2^j g^m.  The parameter
set passes exactly when the induced product on normal words is associative
up to a degree bound and the count of irreducible words matches the
polynomial growth of the undeformed algebra.  None of this shares code with
the six-condition checker, so agreement between the two is evidence, not
tautology.

Words are tuples of ints: positive m encodes g^m, V1 and V2 are negative
sentinels, and the empty tuple is the identity.  lambda values are read
from the stored table for every power of g separately, so a broken
group-compatibility table shows up as an associativity defect instead of
being silently repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_algebra import GroupAlgebraElement
from .params import DeformationParams

V1 = -1
V2 = -2

Word = tuple[int, ...]


def word_degree(word: Word) -> int:
    """Filtered degree: v-letters count 1, group letters count 0."""
    return sum(1 for x in word if x < 0)


def letter_to_text(letter: int) -> str:
    if letter == V1:
        return "v1"
    if letter == V2:
        return "v2"
    return f"g^{letter}"


def word_to_text(word: Word) -> str:
    return "*".join(letter_to_text(x) for x in word) if word else "1"


class NCPolynomial:
    """A finite F_p-linear combination of free words.

    Zero coefficients are never stored; iteration follows the canonical
    (degree, length, word) order.
    """

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict[Word, int]):
        self.p = p
        self.terms = {w: c % p for w, c in terms.items() if c % p}

    @classmethod
    def from_word(cls, p: int, word: Word, coeff: int = 1) -> "NCPolynomial":
        return cls(p, {tuple(word): coeff})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPolynomial)
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPolynomial(self.p, out)

    def scale(self, c: int) -> "NCPolynomial":
        return NCPolynomial(self.p, {w: c * x for w, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(
            self.terms.items(), key=lambda wc: (word_degree(wc[0]), len(wc[0]), wc[0])
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + word_to_text(w) for w, c in self.sorted_terms()
        )

    def __repr__(self):
        return f"NCPolynomial({self.to_text()})"


@dataclass(frozen=True)
class NormalWord:
    """An irreducible word v1^i v2^j g^m."""

    i: int
    j: int
    m: int

    @property
    def degree(self) -> int:
        return self.i + self.j

    def word(self) -> Word:
        return (V1,) * self.i + (V2,) * self.j + ((self.m,) if self.m else ())


def normal_words(p: int, max_degree: int) -> list[NormalWord]:
    """All normal words of filtered degree <= max_degree, by (degree, i, j, m)."""
    out = []
    for deg in range(max_degree + 1):
        for i in range(deg, -1, -1):
            j = deg - i
            out.extend(NormalWord(i, j, m) for m in range(p))
    return out


def _element_words(x: GroupAlgebraElement, prefix: Word = ()) -> dict[Word, int]:
    """The words of prefix * x, one per nonzero coefficient (g^0 contributes prefix)."""
    return {
        prefix + ((m,) if m else ()): c for m, c in enumerate(x.coeffs) if c
    }


class RuleSet:
    """The oriented relations of one parameter set, plus reduction caches."""

    def __init__(self, params: DeformationParams):
        p = params.p
        self.p = p
        self.params = params
        table: dict[tuple[int, int], dict[Word, int]] = {}
        for m in range(1, p):
            # R1: g^m * v1 -> v1 * g^m + lambda(g^m, v1)
            rhs = {(V1, m): 1}
            _accumulate(rhs, _element_words(params.lam[m][0]))
            table[(m, V1)] = rhs
            # R2: g^m * v2 -> m * v1 * g^m + v2 * g^m + lambda(g^m, v2)
            rhs = {(V1, m): m % p, (V2, m): 1}
            _accumulate(rhs, _element_words(params.lam[m][1]))
            table[(m, V2)] = rhs
        # R3: v2 * v1 -> v1 * v2 - kappa^C - kappa^L
        rhs = {(V1, V2): 1}
        _accumulate(rhs, _element_words(-params.kappaC))
        _accumulate(rhs, _element_words(-params.kappaL.row1, prefix=(V1,)))
        _accumulate(rhs, _element_words(-params.kappaL.row2, prefix=(V2,)))
        table[(V2, V1)] = rhs
        # R4: g^m * g^m' -> g^(m+m' mod p)
        for m in range(1, p):
            for m2 in range(1, p):
                s = (m + m2) % p
                table[(m, m2)] = {((s,) if s else ()): 1}
        self.table = {pair: {w: c % p for w, c in rhs.items() if c % p}
                      for pair, rhs in table.items()}
        self._memo: dict[Word, dict[Word, int]] = {}
        self._memo_rl: dict[Word, dict[Word, int]] = {}

    def rule_id(self, pair: tuple[int, int]) -> str:
        a, b = pair
        if a > 0 and b == V1:
            return "R1"
        if a > 0 and b == V2:
            return "R2"
        if (a, b) == (V2, V1):
            return "R3"
        return "R4"

    def reduce_word(self, word: Word, rightmost: bool = False) -> dict[Word, int]:
        """Normal form of a single word as a raw {word: coeff} dict.

        The canonical strategy rewrites the leftmost reducible pair; the
        rightmost strategy exists for the confluence cross-check.  Results
        are memoized per strategy.
        """
        memo = self._memo_rl if rightmost else self._memo
        hit = memo.get(word)
        if hit is not None:
            return hit
        p, table = self.p, self.table
        n = len(word) - 1
        positions = range(n - 1, -1, -1) if rightmost else range(n)
        for i in positions:
            rhs = table.get((word[i], word[i + 1]))
            if rhs is None:
                continue
            prefix, suffix = word[:i], word[i + 2:]
            out: dict[Word, int] = {}
            for u, cu in rhs.items():
                for w2, c2 in self.reduce_word(prefix + u + suffix, rightmost).items():
                    c = (out.get(w2, 0) + cu * c2) % p
                    if c:
                        out[w2] = c
                    elif w2 in out:
                        del out[w2]
            memo[word] = out
            return out
        result = {word: 1}
        memo[word] = result
        return result

    def reduce_poly(
        self, terms: dict[Word, int], rightmost: bool = False
    ) -> dict[Word, int]:
        p = self.p
        out: dict[Word, int] = {}
        for w, cw in terms.items():
            for w2, c2 in self.reduce_word(w, rightmost).items():
                c = (out.get(w2, 0) + cw * c2) % p
                if c:
                    out[w2] = c
                elif w2 in out:
                    del out[w2]
        return out


def rules_from_params(params: DeformationParams) -> RuleSet:
    """Orient the defining relations of the parameter set into a rule set."""
    return RuleSet(params)


def _accumulate(target: dict[Word, int], extra: dict[Word, int]) -> None:
    for w, c in extra.items():
        target[w] = target.get(w, 0) + c


def reduce(x: NCPolynomial, rules: RuleSet, rightmost: bool = False) -> NCPolynomial:
    """Rewrite to the fixed point; every surviving word is normal.

    Terminates because every rule application strictly lowers the word
    measure (v-degree, g-before-v inversions, v2-before-v1 inversions,
    length) in lexicographic order.
    """
    return NCPolynomial(rules.p, rules.reduce_poly(x.terms, rightmost))


def oracle_multiply(x: NormalWord, y: NormalWord, rules: RuleSet) -> NCPolynomial:
    """The induced product: reduce the concatenation of two normal words."""
    return NCPolynomial(rules.p, rules.reduce_word(x.word() + y.word()))


def check_associativity(
    rules: RuleSet, degree_bound: int = 4
) -> tuple[bool, dict | None]:
    """Test reduce((xy)z) == reduce(x(yz)) over all normal-word triples of
    total filtered degree <= degree_bound; returns the first failure.

    Triples are swept in increasing total degree, so a defect (always
    present in low degree for a non-PBW parameter set) is found early.
    """
    if degree_bound < 3:
        raise ValueError(f"degree bound must be >= 3, got {degree_bound}")
    words = normal_words(rules.p, degree_bound)
    by_degree: dict[int, list[NormalWord]] = {}
    for w in words:
        by_degree.setdefault(w.degree, []).append(w)
    p = rules.p
    for total in range(degree_bound + 1):
        for dx in range(total + 1):
            for dy in range(total - dx + 1):
                dz = total - dx - dy
                for x in by_degree[dx]:
                    xw = x.word()
                    for y in by_degree[dy]:
                        xy = rules.reduce_word(xw + y.word())
                        yw = y.word()
                        for z in by_degree[dz]:
                            zw = z.word()
                            lhs: dict[Word, int] = {}
                            for w, cw in xy.items():
                                for w2, c2 in rules.reduce_word(w + zw).items():
                                    c = (lhs.get(w2, 0) + cw * c2) % p
                                    if c:
                                        lhs[w2] = c
                                    elif w2 in lhs:
                                        del lhs[w2]
                            yz = rules.reduce_word(yw + zw)
                            rhs: dict[Word, int] = {}
                            for w, cw in yz.items():
                                for w2, c2 in rules.reduce_word(xw + w).items():
                                    c = (rhs.get(w2, 0) + cw * c2) % p
                                    if c:
                                        rhs[w2] = c
                                    elif w2 in rhs:
                                        del rhs[w2]
                            if lhs != rhs:
                                witness = {
                                    "x": word_to_text(xw),
                                    "y": word_to_text(yw),
                                    "z": word_to_text(zw),
                                    "lhs": NCPolynomial(p, lhs).to_text(),
                                    "rhs": NCPolynomial(p, rhs).to_text(),
                                }
                                return False, witness
    return True, None


def irreducible_words(rules: RuleSet, max_degree: int) -> list[Word]:
    """Every word irreducible under the rule table, up to filtered degree max_degree.

    Depth-first extension with pruning: a word is extendable only while no
    adjacent pair matches a rule left-hand side.  Since every group letter
    must be final in an irreducible word, the search space stays small.
    """
    letters = [V1, V2] + list(range(1, rules.p))
    out: list[Word] = []

    def extend(word: Word, degree: int) -> None:
        out.append(word)
        for letter in letters:
            deg = degree + (1 if letter < 0 else 0)
            if deg > max_degree:
                continue
            if word and (word[-1], letter) in rules.table:
                continue
            extend(word + (letter,), deg)

    extend((), 0)
    return out


def check_dimension(rules: RuleSet, degree_bound: int) -> tuple[bool, list[dict]]:
    """Compare irreducible-word counts against p * C(d+2, 2) for d <= degree_bound,
    and confirm that reduce fixes each irreducible word."""
    p = rules.p
    words = irreducible_words(rules, degree_bound)
    rows = []
    ok = True
    for d in range(degree_bound + 1):
        count = sum(1 for w in words if word_degree(w) <= d)
        expected = p * (d + 2) * (d + 1) // 2
        idempotent = all(
            rules.reduce_word(w) == {w: 1} for w in words if word_degree(w) <= d
        )
        good = count == expected and idempotent
        ok = ok and good
        rows.append(
            {"degree": d, "count": count, "expected": expected, "passed": good}
        )
    return ok, rows


def trace_reduction(word: Word, rules: RuleSet) -> list[str]:
    """Line-oriented replay of a leftmost normalization, for failure triage.

    Each line is "<word> --<rule>--> <polynomial>"; rewriting proceeds on
    the first non-normal word in canonical order until none remain.
    """
    p = rules.p
    poly = {tuple(word): 1}
    lines: list[str] = []
    while True:
        target = None
        for w, _ in sorted(poly.items(), key=lambda wc: (word_degree(wc[0]), len(wc[0]), wc[0])):
            for i in range(len(w) - 1):
                if (w[i], w[i + 1]) in rules.table:
                    target, pos = w, i
                    break
            if target is not None:
                break
        if target is None:
            return lines
        pair = (target[pos], target[pos + 1])
        rhs = rules.table[pair]
        replacement = {
            target[:pos] + u + target[pos + 2:]: c for u, c in rhs.items()
        }
        lines.append(
            f"{word_to_text(target)} --{rules.rule_id(pair)}--> "
            f"{NCPolynomial(p, replacement).to_text()}"
        )
        coeff = poly.pop(target)
        for w2, c2 in replacement.items():
            c = (poly.get(w2, 0) + coeff * c2) % p
            if c:
                poly[w2] = c
            elif w2 in poly:
                del poly[w2]
