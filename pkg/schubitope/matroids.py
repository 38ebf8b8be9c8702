# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Schubert matroids SM_n(S) and the Gale order on k-subsets of [n]."""

import itertools
import logging

from schubitope import config
from schubitope import exceptions
from schubitope import utils

LOG = logging.getLogger(__name__)


def _check_subset(subset, n):
    subset = frozenset(subset)
    for i in subset:
        if not utils.is_integer(i) or i < 1 or i > n:
            raise exceptions.InvalidSubsetException(
                "Element %r is not in [1, %d]" % (i, n))
    return subset


def gale_leq(t, s):
    """T <= S iff #T = #S and sorted T is entrywise at most sorted S."""
    if len(t) != len(s):
        return False
    return all(a <= b for a, b in zip(sorted(t), sorted(s)))


def check_enumeration_size(n, k):
    config.enforce_limit("basis enumeration degree", n, "max_oracle_degree",
                         12)
    config.enforce_limit("basis enumeration column", k, "max_oracle_column",
                         12)


def schubert_matroid_bases(s, n):
    """Returns the bases {T : T <= S} of SM_n(S), sorted."""
    s = _check_subset(s, n)
    check_enumeration_size(n, len(s))
    top = max(s) if s else 0
    bases = [frozenset(t)
             for t in itertools.combinations(range(1, top + 1), len(s))
             if gale_leq(t, s)]
    LOG.debug("SM_%d(%s) has %d bases", n, sorted(s), len(bases))
    return sorted(bases, key=sorted)


def matroid_rank(s, n, subset):
    """max #(subset & B) over the bases B of SM_n(S)."""
    subset = _check_subset(subset, n)
    return max(len(subset & b) for b in schubert_matroid_bases(s, n))


def indicator_vector(subset, n):
    return tuple(1 if i in subset else 0 for i in range(1, n + 1))


def matroid_polytope_vertices(column):
    """{e_B : B a basis of SM_n(C)} for a column C."""
    return sorted(set(indicator_vector(b, column.n)
                      for b in schubert_matroid_bases(column.rows, column.n)))
