"""Weyl group elements with canonical equality and reduced-word machinery.

An element is stored as its exact integer matrix acting on simple-root
coordinates; equality and hashing use only that matrix, so any two words for
the same element compare equal.  Length is intrinsic (the number of positive
roots sent to negative roots), never the length of whatever word produced
the element.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import ResourceCapError
from .roots import (
    CartanMatrix,
    is_negative_root_vector,
    simple_reflection_action,
)

DEFAULT_REDUCED_WORD_CAP = 16


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element.

    ``action`` is the matrix sending root coordinates c to (action @ c),
    ``witness_word`` is one reduced word (1-based node indices), and
    ``length`` is the inversion count, which always equals
    ``len(witness_word)``.
    """

    action: tuple[tuple[int, ...], ...]
    length: int
    witness_word: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __repr__(self):
        word = word_to_str(self.witness_word) or "e"
        return f"WeylElement({word})"

    def apply(self, v) -> tuple[int, ...]:
        """Image of a root-coordinate vector under this element."""
        return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in self.action)

    def is_identity(self) -> bool:
        return self.length == 0


def word_to_str(word) -> str:
    """Serialize a word as comma-separated 1-based node indices."""
    return ",".join(str(i) for i in word)


def word_from_str(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


class WeylGroup:
    """Weyl group of a Cartan matrix.

    Holds the per-group caches (positive roots, reduced-word memo tables);
    memo access is lock-guarded, and all returned values are immutable.
    """

    def __init__(self, cartan: CartanMatrix, reduced_word_cap: int = DEFAULT_REDUCED_WORD_CAP):
        self.cartan = cartan
        self.rank = cartan.rank
        self.reduced_word_cap = reduced_word_cap
        n = cartan.rank
        self._identity_matrix = tuple(
            tuple(1 if r == c else 0 for c in range(n)) for r in range(n)
        )
        self._reflection_matrices = {
            j: self._build_reflection_matrix(j) for j in cartan.nodes()
        }
        self._lock = threading.Lock()
        self._count_memo: dict[tuple, int] = {}
        self._words_memo: dict[tuple, frozenset] = {}
        self._longest_memo: dict[tuple[int, ...], WeylElement] = {}

    def _build_reflection_matrix(self, j):
        n = self.rank
        cols = [simple_reflection_action(self.cartan, j,
                                         tuple(1 if k == i else 0 for k in range(n)))
                for i in range(n)]
        return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))

    # -- construction ---------------------------------------------------

    @property
    def identity(self) -> WeylElement:
        return WeylElement(self._identity_matrix, 0, ())

    def simple_reflection(self, i: int) -> WeylElement:
        return WeylElement(self._reflection_matrices[i], 1, (i,))

    def length_of_matrix(self, action) -> int:
        """Inversion count: positive roots whose image is negative."""
        count = 0
        for beta in self.cartan.positive_roots():
            img = tuple(sum(row[k] * beta[k] for k in range(self.rank))
                        for row in action)
            if is_negative_root_vector(img):
                count += 1
        return count

    def right_descends(self, w: WeylElement, i: int) -> bool:
        """True iff l(w s_i) < l(w), i.e. w(alpha_i) is a negative root."""
        col = tuple(row[i - 1] for row in w.action)
        return is_negative_root_vector(col)

    def right_multiply(self, w: WeylElement, i: int) -> WeylElement:
        action = _mat_mul(w.action, self._reflection_matrices[i])
        if self.right_descends(w, i):
            return WeylElement(action, w.length - 1, self._delete_letter(w, i))
        return WeylElement(action, w.length + 1, w.witness_word + (i,))

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        w = u
        for i in v.witness_word:
            w = self.right_multiply(w, i)
        return w

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(tuple(reversed(w.witness_word)))

    def _delete_letter(self, w: WeylElement, j: int) -> tuple[int, ...]:
        """Reduced word for w s_j when s_j is a right descent of w.

        Exchange condition: scanning the reduced word b_1..b_m of w from the
        right, the first position i with s_{b_{i+1}}..s_{b_m}(alpha_j) equal
        to alpha_{b_i} can be deleted.
        """
        word = w.witness_word
        n = self.rank
        gamma = tuple(1 if k == j - 1 else 0 for k in range(n))
        for pos in range(len(word) - 1, -1, -1):
            b = word[pos]
            if gamma == tuple(1 if k == b - 1 else 0 for k in range(n)):
                return word[:pos] + word[pos + 1:]
            gamma = simple_reflection_action(self.cartan, b, gamma)
        raise AssertionError("no deletion position found for a right descent")

    def from_word(self, word) -> WeylElement:
        """Element of a word (not necessarily reduced).

        The witness word is the input when it is already reduced, otherwise a
        reduced word obtained by repeated deletion.
        """
        word = tuple(int(i) for i in word)
        for i in word:
            if not 1 <= i <= self.rank:
                raise IndexError(f"node index {i} out of range 1..{self.rank}")
        w = self.identity
        for i in word:
            w = self.right_multiply(w, i)
        if len(word) == w.length:
            w = WeylElement(w.action, w.length, word)
        return w

    # -- parabolic data -------------------------------------------------

    def longest_element(self, K) -> WeylElement:
        """Longest element w_K of the parabolic subgroup on the nodes K.

        Greedy ascent: repeatedly right-multiply by the smallest generator
        in K that increases length.
        """
        key = tuple(sorted(set(K)))
        with self._lock:
            cached = self._longest_memo.get(key)
        if cached is not None:
            return cached
        w = self.identity
        while True:
            for i in key:
                if not self.right_descends(w, i):
                    w = self.right_multiply(w, i)
                    break
            else:
                break
        with self._lock:
            self._longest_memo[key] = w
        return w

    def v_K(self, K) -> WeylElement:
        """Product of the simple reflections of K in ascending node order."""
        word = tuple(sorted(set(K)))
        v = self.from_word(word)
        assert v.length == len(word), "v_K must be reduced"
        return v

    # -- reduced words ---------------------------------------------------

    def count_reduced_words(self, w: WeylElement) -> int:
        """Number of reduced words: sum over right descents s of the count
        for ws, with the identity counting 1.  Memoized per group."""
        cached = self._count_memo.get(w.action)
        if cached is not None:
            return cached
        if w.is_identity():
            total = 1
        else:
            total = sum(
                self.count_reduced_words(self.right_multiply(w, i))
                for i in self.cartan.nodes()
                if self.right_descends(w, i)
            )
        with self._lock:
            self._count_memo[w.action] = total
        return total

    def enumerate_reduced_words(self, w: WeylElement) -> frozenset:
        """The full set of reduced words for w.

        Raises ResourceCapError when l(w) exceeds the configured cap; the
        enumeration is never silently truncated.
        """
        if w.length > self.reduced_word_cap:
            raise ResourceCapError(
                f"reduced-word enumeration for length {w.length} exceeds "
                f"cap {self.reduced_word_cap}")

        def rec(u: WeylElement) -> frozenset:
            with self._lock:
                cached = self._words_memo.get(u.action)
            if cached is not None:
                return cached
            if u.is_identity():
                words = frozenset({()})
            else:
                acc = set()
                for i in self.cartan.nodes():
                    if self.right_descends(u, i):
                        for prefix in rec(self.right_multiply(u, i)):
                            acc.add(prefix + (i,))
                words = frozenset(acc)
            with self._lock:
                self._words_memo[u.action] = words
            return words

        words = rec(w)
        assert len(words) == self.count_reduced_words(w)
        return words

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Subword criterion: some reduced word of v embeds as a subword of
        the fixed reduced word of w."""
        if v.length > w.length:
            return False
        if v.length == 0:
            return True
        target = w.witness_word
        for word in self.enumerate_reduced_words(v):
            it = iter(target)
            if all(letter in it for letter in word):
                return True
        return False

    # -- bounded enumeration of the group ---------------------------------

    def elements_up_to_length(self, max_length: int, limit: int = 200_000):
        """All elements of length <= max_length, BFS order (layer by layer)."""
        seen = {self.identity.action}
        layer = [self.identity]
        out = [self.identity]
        for _ in range(max_length):
            nxt = []
            for w in layer:
                for i in self.cartan.nodes():
                    if not self.right_descends(w, i):
                        u = self.right_multiply(w, i)
                        if u.action not in seen:
                            seen.add(u.action)
                            nxt.append(u)
                            if len(seen) > limit:
                                raise ResourceCapError(
                                    f"group enumeration exceeded {limit} elements")
            out.extend(nxt)
            layer = nxt
            if not layer:
                break
        return out

    def all_elements(self, limit: int = 200_000):
        """The whole group; guarded by an element-count cap."""
        n_pos = len(self.cartan.positive_roots())
        return self.elements_up_to_length(n_pos, limit=limit)
