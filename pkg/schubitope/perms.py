# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Permutations, compositions and the Bruhat order.

Permutations are bijections on [n] written in one-line notation
w = w_1 ... w_n. Vectors are acted on from the right:

    v . w = (v_{w_1}, ..., v_{w_n})

so that w . s_i swaps the entries in positions i and i + 1, while
s_i . w swaps the values i and i + 1.
"""

import collections
import itertools
import logging

from schubitope import config
from schubitope import constants
from schubitope import exceptions
from schubitope import utils

LOG = logging.getLogger(__name__)


class Permutation(object):
    __slots__ = ("_entries",)

    def __init__(self, entries):
        entries = tuple(entries)
        n = len(entries)
        if (not all(utils.is_integer(v) for v in entries) or
                sorted(entries) != list(range(1, n + 1))):
            raise exceptions.InvalidPermutationException(
                "Not a bijection on [%d]: %s" % (n, list(entries)))
        self._entries = entries

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n):
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, n, i):
        _check_simple_index(n, i)
        return cls.identity(n).right_multiply(i)

    @classmethod
    def from_word(cls, word, n):
        entries = list(range(1, n + 1))
        for i in word:
            _check_simple_index(n, i)
            entries[i - 1], entries[i] = entries[i], entries[i - 1]
        return cls(entries)

    @classmethod
    def parse(cls, text, field="perm"):
        text = text.strip()
        try:
            if "," in text:
                entries = [int(x) for x in text.split(",")]
            else:
                entries = [int(c) for c in text]
        except ValueError:
            raise exceptions.InvalidPermutationException(
                "Cannot parse permutation %r" % text, field=field)
        try:
            return cls(entries)
        except exceptions.InvalidPermutationException as ex:
            raise exceptions.InvalidPermutationException(
                "%s (from %r)" % (ex, text), field=field)

    @property
    def entries(self):
        return self._entries

    @property
    def degree(self):
        return len(self._entries)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __call__(self, i):
        return self._entries[i - 1]

    def __eq__(self, other):
        return (isinstance(other, Permutation) and
                self._entries == other._entries)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._entries < other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return "Permutation(%s)" % str(self)

    def __str__(self):
        if self.degree <= 9:
            return "".join(str(v) for v in self._entries)
        return ",".join(str(v) for v in self._entries)

    def length(self):
        entries = self._entries
        n = len(entries)
        return sum(1 for i in range(n) for j in range(i + 1, n)
                   if entries[i] > entries[j])

    def inverse(self):
        inv = [0] * self.degree
        for i, v in enumerate(self._entries):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def right_multiply(self, i):
        """Returns w.s_i: the entries in positions i, i + 1 swapped."""
        _check_simple_index(self.degree, i)
        entries = list(self._entries)
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
        return Permutation(entries)

    def left_multiply(self, i):
        """Returns s_i.w: the values i, i + 1 swapped."""
        _check_simple_index(self.degree, i)
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(v, v) for v in self._entries)

    def position(self, value):
        return self._entries.index(value) + 1

    def is_identity(self):
        return all(v == i + 1 for i, v in enumerate(self._entries))


class Composition(object):
    __slots__ = ("_parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        for part in parts:
            if not utils.is_integer(part) or part < 0:
                raise exceptions.InvalidCompositionException(
                    "Parts must be non-negative integers: %s" % list(parts))
        self._parts = parts

    @classmethod
    def parse(cls, text, field="alpha"):
        try:
            return cls(utils.parse_int_list(text, field))
        except exceptions.InvalidCompositionException as ex:
            raise exceptions.InvalidCompositionException(str(ex), field=field)

    @property
    def parts(self):
        return self._parts

    @property
    def degree(self):
        return len(self._parts)

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other):
        return (isinstance(other, Composition) and
                self._parts == other._parts)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._parts < other._parts

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return "Composition(%s)" % str(self)

    def __str__(self):
        return ",".join(str(p) for p in self._parts)

    def total(self):
        return sum(self._parts)

    def is_partition(self):
        return all(self._parts[i] >= self._parts[i + 1]
                   for i in range(len(self._parts) - 1))

    def ascents(self):
        """Indices r (1-based) with alpha_r < alpha_{r+1}."""
        return [r + 1 for r in range(len(self._parts) - 1)
                if self._parts[r] < self._parts[r + 1]]

    def act(self, w):
        return Composition(act(self._parts, w))

    def swap(self, r):
        """Returns alpha.s_r."""
        return self.act(Permutation.simple(self.degree, r))


def _check_simple_index(n, i):
    if not utils.is_integer(i) or i < 1 or i >= n:
        raise exceptions.DomainException(
            "Adjacent transposition index %r is not in [1, %d]" % (i, n - 1),
            field="index")


def _check_same_degree(u, w):
    if u.degree != w.degree:
        raise exceptions.DimensionMismatchException(u.degree, w.degree)


def all_permutations(n):
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def all_compositions(n, max_part):
    for parts in itertools.product(range(max_part + 1), repeat=n):
        yield Composition(parts)


def act(v, w):
    v = tuple(v)
    if len(v) != w.degree:
        raise exceptions.DimensionMismatchException(w.degree, len(v))
    return tuple(v[k - 1] for k in w.entries)


def bruhat_leq(u, w):
    """Tests u <= w in the strong Bruhat order.

    Uses the rank-matrix criterion: u <= w iff for all i, j
    #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}.
    """
    _check_same_degree(u, w)
    n = u.degree
    count_u = [0] * (n + 1)
    count_w = [0] * (n + 1)
    for a in range(n):
        for j in range(1, u.entries[a] + 1):
            count_u[j] += 1
        for j in range(1, w.entries[a] + 1):
            count_w[j] += 1
        for j in range(1, n + 1):
            if count_u[j] > count_w[j]:
                return False
    return True


def reduced_word(w):
    """Returns i_1 ... i_k with w = s_{i_1} ... s_{i_k} and k = l(w)."""
    entries = list(w.entries)
    word = []
    descent = True
    while descent:
        descent = False
        for i in range(len(entries) - 1):
            if entries[i] > entries[i + 1]:
                entries[i], entries[i + 1] = entries[i + 1], entries[i]
                word.append(i + 1)
                descent = True
                break
    word.reverse()
    return tuple(word)


def bruhat_leq_subword(u, w):
    """Subword Property oracle for the Bruhat order.

    u <= w iff some subexpression of a fixed reduced word of w is a
    reduced expression of u. Only subexpressions of length l(u) can be
    reduced expressions of u, so only those are enumerated.
    """
    _check_same_degree(u, w)
    word = reduced_word(w)
    config.enforce_limit("subword enumeration", len(word),
                         "max_subword_length", 16)
    target_length = u.length()
    for positions in itertools.combinations(range(len(word)), target_length):
        subword = [word[p] for p in positions]
        if Permutation.from_word(subword, w.degree) == u:
            return True
    return False


def bruhat_covers(w):
    """Permutations covered by w: w.t_{ij} with length l(w) - 1."""
    entries = w.entries
    n = len(entries)
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if entries[i] < entries[j]:
                continue
            if any(entries[j] < entries[k] < entries[i]
                   for k in range(i + 1, j)):
                continue
            swapped = list(entries)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            covers.append(Permutation(swapped))
    return covers


def lower_interval(w):
    """Returns the Bruhat interval [e, w], sorted lexicographically."""
    seen = set([w])
    queue = collections.deque([w])
    while queue:
        sigma = queue.popleft()
        for tau in bruhat_covers(sigma):
            if tau not in seen:
                seen.add(tau)
                queue.append(tau)
    LOG.debug("Lower interval of %s has %d elements", w, len(seen))
    return sorted(seen)


def lambda_of(alpha):
    return Composition(sorted(alpha.parts, reverse=True))


def w_of(alpha):
    """Shortest permutation w with lambda(alpha).w = alpha.

    The largest part receives labels 1, 2, ... at its positions from left
    to right, the second largest part the next labels, and so on.
    """
    positions = collections.defaultdict(list)
    for i, part in enumerate(alpha.parts):
        positions[part].append(i)
    entries = [0] * alpha.degree
    label = 1
    for part in sorted(positions, reverse=True):
        for i in positions[part]:
            entries[i] = label
            label += 1
    return Permutation(entries)


def _pick(indices, choice):
    if not indices:
        return None
    if choice == constants.CHAIN_FIRST:
        return indices[0]
    if choice == constants.CHAIN_LAST:
        return indices[-1]
    raise exceptions.DomainException(
        "Unknown recursion choice: %s" % choice, field="chain")


def sorting_word(alpha, choice=constants.CHAIN_FIRST):
    """Reduced word of w(alpha) from the recursion w(alpha) = w(alpha.s_r)s_r.
    """
    word = []
    current = alpha
    r = _pick(current.ascents(), choice)
    while r is not None:
        word.append(r)
        current = current.swap(r)
        r = _pick(current.ascents(), choice)
    word.reverse()
    return tuple(word)


def composition_leq(beta, alpha):
    if beta.degree != alpha.degree:
        raise exceptions.DimensionMismatchException(alpha.degree, beta.degree)
    if lambda_of(beta) != lambda_of(alpha):
        return False
    return bruhat_leq(w_of(beta), w_of(alpha))


def t_swap(alpha, i, j):
    parts = list(alpha.parts)
    parts[i - 1], parts[j - 1] = parts[j - 1], parts[i - 1]
    return Composition(parts)


def composition_leq_searles(beta, alpha):
    """Oracle: beta is reachable from alpha by swaps t_{i,j}, i < j, that
    move a larger later part in front of a smaller earlier one.
    """
    if beta.degree != alpha.degree:
        raise exceptions.DimensionMismatchException(alpha.degree, beta.degree)
    if sorted(beta.parts) != sorted(alpha.parts):
        return False
    n = alpha.degree
    seen = set([alpha])
    queue = collections.deque([alpha])
    while queue:
        current = queue.popleft()
        if current == beta:
            return True
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if current[i - 1] < current[j - 1]:
                    nxt = t_swap(current, i, j)
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
    return False


def vertex_compositions(alpha):
    """V(alpha) = {lambda(alpha).sigma : sigma <= w(alpha)}, sorted."""
    lam = lambda_of(alpha)
    result = set(lam.act(sigma) for sigma in lower_interval(w_of(alpha)))
    return sorted(result)


def vertex_compositions_recursive(alpha, choice=constants.CHAIN_FIRST):
    """V(alpha) through V(alpha) = V(alpha') u {v.s_r : v in V(alpha')}."""
    memo = {}

    def _recurse(current):
        if current in memo:
            return memo[current]
        r = _pick(current.ascents(), choice)
        if r is None:
            result = frozenset([current])
        else:
            below = _recurse(current.swap(r))
            result = below | frozenset(v.swap(r) for v in below)
        memo[current] = result
        return result

    return sorted(_recurse(alpha))
