"""Formal rational-linear combinations of words in graded letters.

One engine serves both the free graded algebra case (single vertex, words
are products read left to right in composition order: (g, f) means g o f)
and the graded path-category case (letters carry endpoints).  The
differential follows the Koszul sign rule

    d(w1 ... wk) = sum_i (-1)^{|w1| + ... + |w_{i-1}|} w1 ... d(w_i) ... wk,

which specializes to d(uv) = d(u) v + (-1)^{|u|} u d(v) for algebras and to
d(g o f) = d(g) o f + (-1)^{|g|} g o d(f) for composition in dg categories.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import frac


class Alphabet:
    """Graded letters with optional endpoints.  For algebras every letter has
    src == tgt == 'o' (a single formal vertex).  A word (a, b) denotes the
    product/composite a o b, so its source is src(last letter)."""

    def __init__(self, letters, vertices=None):
        # letters: iterable of (name, degree) or (name, degree, src, tgt)
        self.degree = {}
        self.src = {}
        self.tgt = {}
        self.order = []
        for entry in letters:
            if len(entry) == 2:
                name, deg = entry
                s = t = "o"
            else:
                name, deg, s, t = entry
            if name in self.degree:
                raise ValueError(f"duplicate letter {name}")
            self.degree[name] = int(deg)
            self.src[name] = s
            self.tgt[name] = t
            self.order.append(name)
        self.vertices = list(vertices) if vertices is not None else \
            sorted({v for name in self.order for v in (self.src[name], self.tgt[name])} or {"o"})

    def extend(self, letters) -> "Alphabet":
        combined = [(n, self.degree[n], self.src[n], self.tgt[n]) for n in self.order]
        for entry in letters:
            combined.append(entry if len(entry) == 4 else (entry[0], entry[1], "o", "o"))
        return Alphabet(combined, vertices=self.vertices)

    def word_degree(self, word: tuple) -> int:
        return sum(self.degree[x] for x in word)

    def word_endpoints(self, word: tuple, vertex=None):
        """(src, tgt) of a word in composition order; empty words need the
        vertex they sit at."""
        if not word:
            if vertex is None and len(self.vertices) == 1:
                vertex = self.vertices[0]
            if vertex is None:
                raise ValueError("empty word needs an explicit vertex")
            return (vertex, vertex)
        for a, b in zip(word, word[1:]):
            if self.src[a] != self.tgt[b]:
                raise ValueError(f"word {word} is not composable at {a} o {b}")
        return (self.src[word[-1]], self.tgt[word[0]])

    def composable(self, word: tuple) -> bool:
        return all(self.src[a] == self.tgt[b] for a, b in zip(word, word[1:]))


class Poly:
    """Linear combination of words.  Keys are (vertex, word) pairs where
    `vertex` disambiguates empty words (identities); for nonempty words the
    vertex slot stores the word's source."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        self.terms: dict = {}
        if terms:
            for key, coeff in terms.items():
                c = frac(coeff)
                if c:
                    self.terms[key] = self.terms.get(key, Fraction(0)) + c
            self.terms = {k: v for k, v in self.terms.items() if v}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(alphabet) -> "Poly":
        return Poly(alphabet)

    @staticmethod
    def unit(alphabet, vertex=None) -> "Poly":
        if vertex is None:
            if len(alphabet.vertices) != 1:
                raise ValueError("unit needs a vertex in the multi-object case")
            vertex = alphabet.vertices[0]
        return Poly(alphabet, {(vertex, ()): Fraction(1)})

    @staticmethod
    def letter(alphabet, name, coeff=1) -> "Poly":
        return Poly(alphabet, {(alphabet.src[name], (name,)): frac(coeff)})

    @staticmethod
    def word(alphabet, letters, coeff=1, vertex=None) -> "Poly":
        letters = tuple(letters)
        if letters:
            if not alphabet.composable(letters):
                raise ValueError(f"non-composable word {letters}")
            vertex = alphabet.src[letters[-1]]
        elif vertex is None:
            if len(alphabet.vertices) != 1:
                raise ValueError("empty word needs a vertex")
            vertex = alphabet.vertices[0]
        return Poly(alphabet, {(vertex, letters): frac(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return Poly(self.alphabet, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return Poly(self.alphabet, out)

    def __neg__(self):
        return Poly(self.alphabet, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        c = frac(c)
        return Poly(self.alphabet, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product: (self) o (other)."""
        if not isinstance(other, Poly):
            return self.scale(other)
        A = self.alphabet
        out: dict = {}
        for (v1, w1), c1 in self.terms.items():
            for (v2, w2), c2 in other.terms.items():
                # compose: self after other; endpoints must match
                src1 = A.word_endpoints(w1, v1)[0]
                tgt2 = A.word_endpoints(w2, v2)[1]
                if src1 != tgt2:
                    continue
                word = w1 + w2
                vertex = v2 if not word else A.src[word[-1]]
                key = (vertex, word)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(A, out)

    __rmul__ = scale

    def degree(self):
        """Degree when homogeneous; None for 0; raises when mixed."""
        degs = {self.alphabet.word_degree(w) for (_, w) in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial with degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.alphabet.word_degree(w) for (_, w) in self.terms}) <= 1

    def homogeneous_component(self, n: int) -> "Poly":
        return Poly(self.alphabet,
                    {k: c for k, c in self.terms.items()
                     if self.alphabet.word_degree(k[1]) == n})

    def endpoints(self):
        """(src, tgt) when all terms agree; raises otherwise."""
        eps = {self.alphabet.word_endpoints(w, v) for (v, w) in self.terms}
        if not eps:
            return None
        if len(eps) > 1:
            raise ValueError(f"mixed endpoints {eps}")
        return eps.pop()

    def max_word_length(self) -> int:
        return max((len(w) for (_, w) in self.terms), default=0)

    def map_letters(self, images: dict, unit_at=None) -> "Poly":
        """Substitute each letter by a Poly (a dg map on generators).
        `unit_at` maps vertices to identity Polys of the target."""
        first = next(iter(images.values()), None)
        target_alph = first.alphabet if first is not None else self.alphabet
        out = None
        for (v, w), c in self.terms.items():
            if not w:
                piece = (unit_at(v) if unit_at else Poly.unit(target_alph)).scale(c)
            else:
                piece = None
                for letter in w:
                    factor = images[letter]
                    piece = factor if piece is None else piece * factor
                piece = piece.scale(c)
            out = piece if out is None else out + piece
        return out if out is not None else Poly(target_alph)

    def differential(self, d_of_letter: dict) -> "Poly":
        """Koszul-rule differential given d on letters (name -> Poly)."""
        A = self.alphabet
        total = Poly(A)
        for (v, w), c in self.terms.items():
            sign = 1
            for i, letter in enumerate(w):
                dx = d_of_letter[letter]
                if not dx.is_zero():
                    left = Poly.word(A, w[:i]) if w[:i] else None
                    right = Poly.word(A, w[i + 1:]) if w[i + 1:] else None
                    piece = dx
                    if left is not None:
                        piece = left * piece
                    if right is not None:
                        piece = piece * right
                    total = total + piece.scale(c * sign)
                sign *= (-1) ** (A.degree[letter] & 1)
        return total

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (v, w), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0])):
            word = "*".join(w) if w else f"1_{v}"
            if c == 1:
                bits.append(word)
            elif c == -1:
                bits.append(f"-{word}")
            else:
                bits.append(f"{c}*{word}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.pretty()})"
