# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Sparse integer polynomials, divided differences and Demazure operators.

Schubert polynomials are computed downwards from the longest permutation
and key polynomials upwards from the sorted composition; both serve as
independent oracles for Newton polytopes.
"""

import functools
import logging

import six

from schubitope import config
from schubitope import constants
from schubitope import exceptions
from schubitope import utils

LOG = logging.getLogger(__name__)


class Polynomial(object):
    __slots__ = ("_n", "_terms")

    def __init__(self, n, terms=None):
        if not utils.is_integer(n) or n < 0:
            raise exceptions.InvalidPolynomialException(
                "Number of variables must be a non-negative integer: %r" %
                (n,))
        checked = {}
        for exponent, coefficient in six.iteritems(terms or {}):
            exponent = tuple(exponent)
            if len(exponent) != n:
                raise exceptions.DimensionMismatchException(n, len(exponent))
            if not all(utils.is_integer(e) and e >= 0 for e in exponent):
                raise exceptions.InvalidPolynomialException(
                    "Exponents must be non-negative integers: %s" %
                    list(exponent))
            if not utils.is_integer(coefficient):
                raise exceptions.InvalidPolynomialException(
                    "Coefficients must be integers: %r" % (coefficient,))
            if coefficient:
                checked[exponent] = coefficient
        self._n = n
        self._terms = checked

    @classmethod
    def _from_clean_terms(cls, n, terms):
        poly = cls.__new__(cls)
        poly._n = n
        poly._terms = dict((e, c) for e, c in six.iteritems(terms) if c)
        return poly

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coefficient})

    @classmethod
    def constant(cls, n, value):
        return cls(n, {(0,) * n: value})

    @classmethod
    def variable(cls, n, i):
        exponent = [0] * n
        exponent[i - 1] = 1
        return cls.monomial(exponent)

    @property
    def n(self):
        return self._n

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), 0)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check_compatible(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial.constant(self._n, other)
        if other._n != self._n:
            raise exceptions.DimensionMismatchException(self._n, other._n)
        return other

    def __add__(self, other):
        other = self._check_compatible(other)
        terms = dict(self._terms)
        for e, c in six.iteritems(other._terms):
            terms[e] = terms.get(e, 0) + c
        return Polynomial._from_clean_terms(self._n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean_terms(
            self._n, dict((e, -c) for e, c in six.iteritems(self._terms)))

    def __sub__(self, other):
        return self + (-self._check_compatible(other))

    def __mul__(self, other):
        other = self._check_compatible(other)
        terms = {}
        for e1, c1 in six.iteritems(self._terms):
            for e2, c2 in six.iteritems(other._terms):
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial._from_clean_terms(self._n, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self._n == other._n and
                self._terms == other._terms)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, frozenset(self._terms.items())))

    def __repr__(self):
        return "Polynomial(%s)" % str(self)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            monomial = "*".join(
                "x%d" % (i + 1) if k == 1 else "x%d^%d" % (i + 1, k)
                for i, k in enumerate(e) if k)
            if not monomial:
                body = str(abs(c))
            elif abs(c) == 1:
                body = monomial
            else:
                body = "%d*%s" % (abs(c), monomial)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def swap(self, i):
        """s_i f: exchanges x_i and x_{i+1}."""
        _check_index(self._n, i)
        terms = {}
        for e, c in six.iteritems(self._terms):
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            terms[tuple(e)] = c
        return Polynomial._from_clean_terms(self._n, terms)

    def to_json_dict(self):
        return {"n": self._n,
                "terms": [{"e": list(e), "c": self._terms[e]}
                          for e in sorted(self._terms)]}

    @classmethod
    def from_json_dict(cls, doc):
        n = utils.require_int(doc, "n", "terms")
        terms = {}
        for entry in utils.require_list(doc, "terms", "terms"):
            exponent = utils.require_list(entry, "e", "terms")
            if not utils.is_integer(entry.get("c")):
                raise exceptions.InvalidPolynomialException(
                    "Term coefficients must be integers")
            if tuple(exponent) in terms:
                raise exceptions.InvalidPolynomialException(
                    "Repeated exponent %s" % exponent)
            terms[tuple(exponent)] = entry["c"]
        return cls(n, terms)


def _check_index(n, i):
    if not utils.is_integer(i) or i < 1 or i >= n:
        raise exceptions.DomainException(
            "Operator index %r is not in [1, %d]" % (i, n - 1),
            field="index")


def _check_division():
    return config.get_app_config().get_bool_value(
        "check_division", "debug", False)


def divided_difference(f, i, check_exact=None):
    """(f - s_i f) / (x_i - x_{i+1}), divided term by term.

    A term x_i^a x_{i+1}^b contributes
    x_i^m x_{i+1}^m (x_i^d - x_{i+1}^d) / (x_i - x_{i+1}) with m = min(a, b)
    and d = |a - b|, negated when a < b.
    """
    _check_index(f.n, i)
    terms = {}
    for e, c in six.iteritems(f.terms):
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        low = min(a, b)
        d = abs(a - b)
        sign = 1 if a > b else -1
        for k in range(d):
            q = list(e)
            q[i - 1] = low + d - 1 - k
            q[i] = low + k
            q = tuple(q)
            terms[q] = terms.get(q, 0) + sign * c
    quotient = Polynomial._from_clean_terms(f.n, terms)
    if check_exact is None:
        check_exact = _check_division()
    if check_exact:
        divisor = Polynomial.variable(f.n, i) - Polynomial.variable(f.n, i + 1)
        if quotient * divisor != f - f.swap(i):
            raise exceptions.InvariantViolationException(
                "Division by x%d - x%d was not exact for %s" % (i, i + 1, f))
    return quotient


def demazure(f, i, check_exact=None):
    """pi_i f = d_i(x_i f)."""
    return divided_difference(Polynomial.variable(f.n, i) * f, i,
                              check_exact)


def _check_chain(chain):
    if chain not in (constants.CHAIN_FIRST, constants.CHAIN_LAST):
        raise exceptions.DomainException(
            "Unknown recursion chain: %s" % chain, field="chain")


def _pick(indices, chain):
    return indices[0] if chain == constants.CHAIN_FIRST else indices[-1]


@functools.lru_cache(maxsize=None)
def _schubert(entries, chain):
    n = len(entries)
    ascents = [i + 1 for i in range(n - 1) if entries[i] < entries[i + 1]]
    if not ascents:
        return Polynomial.monomial(range(n - 1, -1, -1))
    i = _pick(ascents, chain)
    longer = list(entries)
    longer[i - 1], longer[i] = longer[i], longer[i - 1]
    return divided_difference(_schubert(tuple(longer), chain), i)


def schubert_polynomial(w, chain=constants.CHAIN_FIRST):
    """S_w = d_i S_{w s_i} for an ascent w_i < w_{i+1}, from
    S_{w_0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
    """
    config.enforce_limit("Schubert polynomial degree", w.degree,
                         "max_schubert_degree", 7)
    _check_chain(chain)
    return _schubert(w.entries, chain)


@functools.lru_cache(maxsize=None)
def _key(parts, chain):
    ascents = [r + 1 for r in range(len(parts) - 1)
               if parts[r] < parts[r + 1]]
    if not ascents:
        return Polynomial.monomial(parts)
    r = _pick(ascents, chain)
    swapped = list(parts)
    swapped[r - 1], swapped[r] = swapped[r], swapped[r - 1]
    return demazure(_key(tuple(swapped), chain), r)


def key_polynomial(alpha, chain=constants.CHAIN_FIRST):
    """kappa_alpha = pi_r kappa_{alpha s_r} for alpha_r < alpha_{r+1}, from
    kappa_alpha = x^alpha for weakly decreasing alpha.
    """
    config.enforce_limit("key polynomial degree", alpha.degree,
                         "max_key_degree", 6)
    config.enforce_limit("key polynomial part", max(alpha.parts or (0,)),
                         "max_key_part", 4)
    _check_chain(chain)
    return _key(alpha.parts, chain)


def newton_exponents(f):
    """The support of f, sorted lexicographically."""
    return sorted(f.terms)


def clear_caches():
    _schubert.cache_clear()
    _key.cache_clear()


def cache_stats():
    return {"schubert": _schubert.cache_info(), "key": _key.cache_info()}

