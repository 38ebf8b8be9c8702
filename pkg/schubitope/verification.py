# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Cross-validation of the library against brute-force oracles.

Every check enumerates instances up to a degree n, compares two
independent computations and stops at the first counterexample. Sampled
checks draw from a random.Random seeded with "<seed>:<check name>", so a
run is reproducible from its seed regardless of scheduling.
"""

import asyncio
import collections
from concurrent import futures
import itertools
import logging
import random

from oslo_utils import excutils
from oslo_utils import timeutils

from schubitope import certify
from schubitope import config
from schubitope import constants
from schubitope import diagrams
from schubitope import exceptions
from schubitope import fillings
from schubitope import matroids
from schubitope import perms
from schubitope import polynomials
from schubitope import polytope
from schubitope import utils

LOG = logging.getLogger(__name__)

# Column words of this diagram for S = {1, 3} are known, n = 5
WORD_EXAMPLE_BOXES = [(1, 1), (2, 4), (2, 5), (3, 2), (3, 4), (4, 1),
                      (5, 1), (5, 3), (5, 4)]
WORD_EXAMPLE_SUBSET = frozenset([1, 3])
WORD_EXAMPLE_WORDS = [u"★())", u"(★", u"(()", u"()★)", u"()("]
WORD_EXAMPLE_THETAS = [2, 1, 1, 2, 1]

_CHECKS = collections.OrderedDict()


def _check(name):
    def _register(func):
        _CHECKS[name] = func
        return func
    return _register


def get_check_names():
    return list(_CHECKS)


class CheckContext(object):
    def __init__(self, name, n, seed, max_part, random_diagrams):
        self.name = name
        self.n = n
        self.seed = seed
        self.max_part = max_part
        self.random_diagrams = random_diagrams
        self.rng = random.Random("%s:%s" % (seed, name))

    def scope(self, cap):
        if self.n > cap:
            LOG.warning("Check %s clamped from n=%d to n=%d",
                        self.name, self.n, cap)
            return cap
        return self.n

    def compositions(self, m):
        return perms.all_compositions(m, min(self.max_part, m))

    def diagram_corpus(self, m):
        """Random diagrams plus every Rothe and skyline diagram of size m,
        smallest first.
        """
        corpus = set(diagrams.random_diagram(m, self.rng)
                     for _ in range(self.random_diagrams))
        corpus.update(diagrams.rothe(w) for w in perms.all_permutations(m))
        corpus.update(diagrams.skyline(alpha)
                      for alpha in perms.all_compositions(m, m))
        return sorted(corpus, key=lambda d: (len(d), d.boxes))


class CheckResult(object):
    def __init__(self, name, instances=0, counterexample=None, elapsed=0.0):
        self.name = name
        self.instances = instances
        self.counterexample = counterexample
        self.elapsed = elapsed

    @property
    def status(self):
        if self.counterexample is None:
            return constants.STATUS_PASS
        return constants.STATUS_FAIL

    def to_json_dict(self):
        return {"name": self.name, "status": self.status,
                "instances": self.instances,
                "counterexample": self.counterexample}

    @classmethod
    def from_json_dict(cls, doc):
        if not isinstance(doc, dict) or "name" not in doc:
            raise exceptions.DomainException(
                "Checks must be objects with a name", field="report")
        return cls(doc["name"], utils.require_int(doc, "instances", "report"),
                   doc.get("counterexample"))


class Report(object):
    def __init__(self, checks, n=None, seed=None):
        self.checks = list(checks)
        self.n = n
        self.seed = seed

    @property
    def status(self):
        if all(c.status == constants.STATUS_PASS for c in self.checks):
            return constants.STATUS_PASS
        return constants.STATUS_FAIL

    @property
    def passed(self):
        return self.status == constants.STATUS_PASS

    def failures(self):
        return [c for c in self.checks if c.status != constants.STATUS_PASS]

    def to_json_dict(self):
        return {"status": self.status, "n": self.n, "seed": self.seed,
                "checks": [c.to_json_dict() for c in self.checks]}

    @classmethod
    def from_json_dict(cls, doc):
        checks = [CheckResult.from_json_dict(c)
                  for c in utils.require_list(doc, "checks", "report")]
        return cls(checks, doc.get("n"), doc.get("seed"))


def _subsets(m):
    return [utils.subset_from_mask(mask, m) for mask in utils.iter_masks(m)]


def _columns(m):
    return [diagrams.Column(m, s) for s in _subsets(m)]


def _memoized(f):
    cache = {}

    def _f(subset):
        subset = frozenset(subset)
        if subset not in cache:
            cache[subset] = f(subset)
        return cache[subset]
    return _f


def _certified_newton_vertices(exponents, h):
    """Vertex set of conv(exponents), certified against h.

    When every exponent lies in h and the vertices of h that are exponents
    pass certification, conv(exponents) = h.
    """
    for e in exponents:
        if not polytope.member(h, e):
            return None, {"exponent": list(e)}
    expected, _ = certify.hrep_vertices(h)
    support = set(exponents)
    candidates = [v for v in expected if v in support]
    report = certify.certify_vertices(h, candidates)
    if not report.passed:
        return None, report.to_json_dict()
    return candidates, None


@_check("perms.w_of_minimal")
def _check_w_of_minimal(ctx):
    m = ctx.scope(4)
    all_perms = list(perms.all_permutations(m))
    count = 0
    for alpha in ctx.compositions(m):
        count += 1
        lam = perms.lambda_of(alpha)
        w = perms.w_of(alpha)
        shortest = min(s.length() for s in all_perms if lam.act(s) == alpha)
        if lam.act(w) != alpha or w.length() != shortest:
            return count, {"alpha": str(alpha), "w": str(w)}
        for chain in (constants.CHAIN_FIRST, constants.CHAIN_LAST):
            word = perms.sorting_word(alpha, chain)
            if (len(word) != w.length() or
                    perms.Permutation.from_word(word, m) != w):
                return count, {"alpha": str(alpha), "chain": chain,
                               "word": list(word)}
    return count, None


@_check("perms.bruhat_subword")
def _check_bruhat_subword(ctx):
    m = ctx.scope(5)
    all_perms = list(perms.all_permutations(m))
    count = 0
    for w in all_perms:
        word = perms.reduced_word(w)
        if (len(word) != w.length() or
                perms.Permutation.from_word(word, m) != w):
            return count, {"w": str(w), "word": list(word)}
        for u in all_perms:
            count += 1
            if perms.bruhat_leq(u, w) != perms.bruhat_leq_subword(u, w):
                return count, {"u": str(u), "w": str(w)}
    return count, None


@_check("perms.composition_searles")
def _check_composition_searles(ctx):
    m = ctx.scope(4)
    alphas = list(ctx.compositions(m))
    count = 0
    for alpha in alphas:
        for beta in alphas:
            count += 1
            if (perms.composition_leq(beta, alpha) !=
                    perms.composition_leq_searles(beta, alpha)):
                return count, {"beta": str(beta), "alpha": str(alpha)}
    return count, None


@_check("perms.prop_recursion")
def _check_prop_recursion(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha in ctx.compositions(m):
        direct = set(perms.vertex_compositions(alpha))
        for r in alpha.ascents():
            count += 1
            below = perms.vertex_compositions(alpha.swap(r))
            union = set(below) | set(v.swap(r) for v in below)
            if union != direct:
                return count, {"alpha": str(alpha), "r": r}
    return count, None


@_check("perms.recursion_independence")
def _check_recursion_independence(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha in ctx.compositions(m):
        count += 1
        direct = perms.vertex_compositions(alpha)
        for chain in (constants.CHAIN_FIRST, constants.CHAIN_LAST):
            if perms.vertex_compositions_recursive(alpha, chain) != direct:
                return count, {"alpha": str(alpha), "chain": chain}
    return count, None


@_check("diagrams.rothe_length")
def _check_rothe_length(ctx):
    m = ctx.scope(5)
    count = 0
    for w in perms.all_permutations(m):
        count += 1
        if len(diagrams.rothe(w)) != w.length():
            return count, {"w": str(w)}
    for alpha in perms.all_compositions(m, m):
        count += 1
        if len(diagrams.skyline(alpha)) != alpha.total():
            return count, {"alpha": str(alpha)}
    return count, None


@_check("diagrams.word_example")
def _check_word_example(ctx):
    diagram = diagrams.Diagram(5, WORD_EXAMPLE_BOXES)
    words = [str(polytope.column_word(diagram, j, WORD_EXAMPLE_SUBSET))
             for j in range(1, 6)]
    thetas = polytope.theta_columns(diagram, WORD_EXAMPLE_SUBSET)
    rank = fillings.rank_diagram(diagram, WORD_EXAMPLE_SUBSET)
    if (words != WORD_EXAMPLE_WORDS or thetas != WORD_EXAMPLE_THETAS or
            rank != 7):
        return 1, {"words": words, "theta": thetas, "rank": rank}
    return 1, None


@_check("fillings.order_independence")
def _check_order_independence(ctx):
    m = ctx.scope(5)
    count = 0
    for column in _columns(m):
        for subset in _subsets(m):
            if len(subset) <= 4:
                orders = itertools.permutations(sorted(subset))
            else:
                orders = [ctx.rng.sample(sorted(subset), len(subset))
                          for _ in range(5)]
            ranks = set()
            for order in orders:
                count += 1
                ranks.add(fillings.fill_column(column, order).size)
            if len(ranks) > 1:
                return count, {"column": column.sorted_rows(), "n": m,
                               "set": sorted(subset)}
    return count, None


@_check("fillings.rank_agreement")
def _check_rank_agreement(ctx):
    m = ctx.scope(5)
    count = 0
    for column in _columns(m):
        for subset in _subsets(m):
            count += 1
            ranks = [fillings.rank_filling(column, subset),
                     fillings.rank_brute(column, subset),
                     fillings.rank_max_filling(column, subset)]
            if len(set(ranks)) > 1:
                return count, {"column": column.sorted_rows(), "n": m,
                               "set": sorted(subset), "ranks": ranks}
    return count, None


@_check("fillings.fill_invariants")
def _check_fill_invariants(ctx):
    m = ctx.scope(5)
    count = 0
    for column in _columns(m):
        for w in perms.all_permutations(m):
            count += 1
            filling = fillings.fill_column(column, w.entries)
            if not filling.is_flagged() or not filling.is_column_strict():
                return count, {"column": column.sorted_rows(), "n": m,
                               "w": str(w)}
    return count, None


def _flagged_fillings(column):
    rows = column.sorted_rows()

    def _extend(index, used, entries):
        if index == len(rows):
            yield dict(entries)
            return
        row = rows[index]
        for entry in _extend(index + 1, used, entries):
            yield entry
        for v in range(1, row + 1):
            if v not in used:
                used.add(v)
                entries[row] = v
                for entry in _extend(index + 1, used, entries):
                    yield entry
                del entries[row]
                used.remove(v)

    for entries in _extend(0, set(), {}):
        yield fillings.ColumnFilling(column, entries)


@_check("fillings.sort_standardize")
def _check_sort_standardize(ctx):
    m = ctx.scope(4)
    count = 0
    for column in _columns(m):
        for filling in _flagged_fillings(column):
            count += 1
            values = sorted(filling.ordered_values())
            ordered = fillings.sort_filling(filling)
            standard = fillings.standardize(ordered)
            if (ordered.occupied_rows() != filling.occupied_rows() or
                    sorted(ordered.ordered_values()) != values or
                    not ordered.is_increasing() or
                    sorted(standard.ordered_values()) != values or
                    not standard.is_flagged() or
                    not standard.is_increasing() or
                    fillings.standardize(standard) != standard):
                return count, {"column": column.sorted_rows(), "n": m,
                               "entries": sorted(filling.entries.items())}
    return count, None


@_check("fillings.submodular")
def _check_rank_submodular(ctx):
    m = ctx.scope(4)
    count = 0
    for diagram in ctx.diagram_corpus(m):
        count += 1
        violation = polytope.is_submodular(polytope.rank_function(diagram), m)
        if violation is not None:
            subset, i, j = violation
            return count, {"diagram": diagram.to_json_dict(),
                           "set": sorted(subset), "i": i, "j": j}
    return count, None


@_check("fillings.monotone_step")
def _check_monotone_step(ctx):
    m = ctx.scope(5)
    count = 0
    for column in _columns(m):
        for subset in _subsets(m):
            rank = fillings.rank_filling(column, subset)
            for s in subset:
                count += 1
                step = rank - fillings.rank_filling(column, subset - set([s]))
                if step not in (0, 1):
                    return count, {"column": column.sorted_rows(), "n": m,
                                   "set": sorted(subset), "removed": s}
    return count, None


@_check("polytope.theta_rank")
def _check_theta_rank(ctx):
    m = ctx.scope(4)
    count = 0
    for diagram in ctx.diagram_corpus(m):
        for subset in _subsets(m):
            count += 1
            theta = polytope.theta(diagram, subset)
            rank = fillings.rank_diagram(diagram, subset)
            if theta != rank:
                return count, {"diagram": diagram.to_json_dict(),
                               "set": sorted(subset), "theta": theta,
                               "rank": rank}
    return count, None


@_check("polytope.greedy_filling")
def _check_greedy_filling(ctx):
    m = ctx.scope(4)
    count = 0
    for diagram in ctx.diagram_corpus(m):
        rank = _memoized(polytope.rank_function(diagram))
        for w in perms.all_permutations(m):
            count += 1
            x = fillings.vertex_vector(diagram, w)
            greedy = polytope.edmonds_vertex(rank, w)
            if x != greedy:
                return count, {"diagram": diagram.to_json_dict(),
                               "w": str(w), "filling": list(x),
                               "greedy": list(greedy)}
    return count, None


@_check("polytope.greedy_tightness")
def _check_greedy_tightness(ctx):
    m = ctx.scope(4)
    count = 0
    for diagram in ctx.diagram_corpus(m):
        rank = _memoized(polytope.rank_function(diagram))
        theta = _memoized(polytope.theta_function(diagram))
        for w in perms.all_permutations(m):
            count += 1
            x = fillings.vertex_vector(diagram, w)
            for k in range(1, m + 1):
                prefix = w.entries[:k]
                lhs = sum(x[i - 1] for i in prefix)
                if not lhs == rank(prefix) == theta(prefix):
                    return count, {"diagram": diagram.to_json_dict(),
                                   "w": str(w), "prefix": list(prefix)}
    return count, None


@_check("polytope.minkowski")
def _check_minkowski(ctx):
    m = ctx.scope(4)
    count = 0
    for diagram in ctx.diagram_corpus(m):
        count += 1
        sums = polytope.column_vertex_sums(diagram)
        h = polytope.hrep(diagram)
        outside = [p for p in sums if not polytope.member(h, p)]
        missing = set(polytope.vertices(diagram)) - set(sums)
        if outside or missing:
            return count, {"diagram": diagram.to_json_dict(),
                           "outside": [list(p) for p in outside[:1]],
                           "missing": [list(p) for p in sorted(missing)[:1]]}
    return count, None


@_check("polytope.matroid_polytope")
def _check_matroid_polytope(ctx):
    m = ctx.scope(5)
    count = 0
    for column in _columns(m):
        count += 1
        diagram = column.as_diagram()
        found = polytope.vertices(diagram)
        expected = matroids.matroid_polytope_vertices(column)
        report = certify.certify_vertices(polytope.hrep(diagram), found)
        if found != expected or not report.passed:
            return count, {"column": column.sorted_rows(), "n": m,
                           "certification": report.to_json_dict()}
    return count, None


@_check("polytope.skyline_vertices")
def _check_skyline_vertices(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha in ctx.compositions(m):
        count += 1
        swept = polytope.vertices(diagrams.skyline(alpha))
        expected = sorted(c.parts for c in perms.vertex_compositions(alpha))
        if swept != expected:
            return count, {"alpha": str(alpha)}
    return count, None


def _swap_instances(ctx, m):
    for alpha in ctx.compositions(m):
        for r in alpha.ascents():
            for w in perms.all_permutations(m):
                if w.position(r) < w.position(r + 1):
                    yield alpha, r, w


@_check("polytope.swap_symmetry")
def _check_swap_symmetry(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha, r, w in _swap_instances(ctx, m):
        count += 1
        diagram = diagrams.skyline(alpha)
        x = fillings.vertex_vector(diagram, w)
        other = fillings.vertex_vector(diagram, w.left_multiply(r))
        if x != perms.act(other, perms.Permutation.simple(m, r)):
            return count, {"alpha": str(alpha), "r": r, "w": str(w)}
    return count, None


@_check("polytope.swap_stability")
def _check_swap_stability(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha, r, w in _swap_instances(ctx, m):
        count += 1
        x = fillings.vertex_vector(diagrams.skyline(alpha), w)
        other = fillings.vertex_vector(diagrams.skyline(alpha.swap(r)), w)
        if x != other:
            return count, {"alpha": str(alpha), "r": r, "w": str(w)}
    return count, None


@_check("polytope.theta_submodular")
def _check_theta_submodular(ctx):
    m = ctx.scope(4)
    count = 0
    for diagram in ctx.diagram_corpus(m):
        count += 1
        violation = polytope.is_submodular(polytope.theta_function(diagram),
                                           m)
        if violation is not None:
            subset, i, j = violation
            return count, {"diagram": diagram.to_json_dict(),
                           "set": sorted(subset), "i": i, "j": j}
    return count, None


def _random_polynomial(rng, n, degree=4, terms=4):
    poly = {}
    for _ in range(rng.randint(1, terms)):
        exponent = [0] * n
        for _ in range(rng.randint(0, degree)):
            exponent[rng.randrange(n)] += 1
        poly[tuple(exponent)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return polynomials.Polynomial(n, poly)


@_check("polynomials.operator_relations")
def _check_operator_relations(ctx):
    m = max(ctx.scope(4), 2)
    count = 0
    for _ in range(50):
        f = _random_polynomial(ctx.rng, m)
        for i in range(1, m):
            count += 1
            d = polynomials.divided_difference(f, i, check_exact=True)
            p = polynomials.demazure(f, i, check_exact=True)
            if (not polynomials.divided_difference(d, i).is_zero() or
                    polynomials.demazure(p, i) != p):
                return count, {"poly": f.to_json_dict(), "i": i}
            if i + 1 < m:
                left = polynomials.divided_difference(
                    polynomials.divided_difference(d, i + 1), i)
                right = polynomials.divided_difference(
                    polynomials.divided_difference(
                        polynomials.divided_difference(f, i + 1), i), i + 1)
                if left != right:
                    return count, {"poly": f.to_json_dict(), "i": i,
                                   "relation": "braid"}
    return count, None


@_check("polynomials.well_defined")
def _check_well_defined(ctx):
    m = ctx.scope(4)
    count = 0
    for w in perms.all_permutations(m):
        count += 1
        if (polynomials.schubert_polynomial(w, constants.CHAIN_FIRST) !=
                polynomials.schubert_polynomial(w, constants.CHAIN_LAST)):
            return count, {"w": str(w)}
    for alpha in ctx.compositions(m):
        count += 1
        if (polynomials.key_polynomial(alpha, constants.CHAIN_FIRST) !=
                polynomials.key_polynomial(alpha, constants.CHAIN_LAST)):
            return count, {"alpha": str(alpha)}
    return count, None


@_check("polynomials.key_newton")
def _check_key_newton(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha in ctx.compositions(m):
        count += 1
        exponents = polynomials.newton_exponents(
            polynomials.key_polynomial(alpha))
        found, witness = _certified_newton_vertices(
            exponents, polytope.hrep(diagrams.skyline(alpha)))
        expected = sorted(c.parts for c in perms.vertex_compositions(alpha))
        if found != expected:
            return count, {"alpha": str(alpha), "witness": witness}
    return count, None


@_check("polynomials.schubert_newton")
def _check_schubert_newton(ctx):
    m = ctx.scope(4)
    count = 0
    for w in perms.all_permutations(m):
        count += 1
        diagram = diagrams.rothe(w)
        h = polytope.hrep(diagram)
        exponents = polynomials.newton_exponents(
            polynomials.schubert_polynomial(w))
        found = polytope.vertices(diagram)
        outside = [e for e in exponents if not polytope.member(h, e)]
        report = certify.certify_vertices(h, found)
        if (outside or not set(found) <= set(exponents) or
                not report.passed):
            return count, {"w": str(w),
                           "outside": [list(e) for e in outside[:1]],
                           "certification": report.to_json_dict()}
    return count, None


@_check("polynomials.bruhat_interval")
def _check_bruhat_interval(ctx):
    m = ctx.scope(4)
    all_perms = list(perms.all_permutations(m))
    count = 0
    for w in all_perms:
        count += 1
        alpha = perms.Composition(w.entries)
        exponents = polynomials.newton_exponents(
            polynomials.key_polynomial(alpha))
        found, witness = _certified_newton_vertices(
            exponents, polytope.hrep(diagrams.skyline(alpha)))
        expected = sorted(v.entries for v in all_perms
                          if perms.bruhat_leq(w, v))
        if found != expected:
            return count, {"w": str(w), "witness": witness}
    return count, None


@_check("polynomials.schur_permutohedron")
def _check_schur_permutohedron(ctx):
    m = ctx.scope(4)
    count = 0
    for alpha in ctx.compositions(m):
        if not all(a <= b for a, b in zip(alpha.parts, alpha.parts[1:])):
            continue
        count += 1
        exponents = polynomials.newton_exponents(
            polynomials.key_polynomial(alpha))
        found, witness = _certified_newton_vertices(
            exponents, polytope.hrep(diagrams.skyline(alpha)))
        expected = sorted(set(itertools.permutations(alpha.parts)))
        if found != expected:
            return count, {"alpha": str(alpha), "witness": witness}
    return count, None


@_check("polynomials.positivity")
def _check_positivity(ctx):
    m = ctx.scope(4)
    count = 0
    for w in perms.all_permutations(m):
        count += 1
        poly = polynomials.schubert_polynomial(w)
        if poly.is_zero() or min(poly.terms.values()) <= 0:
            return count, {"w": str(w)}
    for alpha in ctx.compositions(m):
        count += 1
        poly = polynomials.key_polynomial(alpha)
        if poly.is_zero() or min(poly.terms.values()) <= 0:
            return count, {"alpha": str(alpha)}
    return count, None


def run_check(name, n, seed, max_part, random_diagrams, config_files=None):
    """Runs one named check; the entry point of the worker processes."""
    if config_files is not None:
        config.use_config_files(config_files)
    func = _CHECKS[name]
    ctx = CheckContext(name, n, seed, max_part, random_diagrams)
    LOG.info("Starting check %s (n=%d)", name, n)
    with timeutils.StopWatch() as watch:
        try:
            instances, counterexample = func(ctx)
        except exceptions.InvariantViolationException as ex:
            instances, counterexample = 0, {"error": str(ex)}
        except Exception:
            with excutils.save_and_reraise_exception():
                LOG.exception("Check %s raised", name)
    result = CheckResult(name, instances, counterexample, watch.elapsed())
    if counterexample is not None:
        LOG.warning("Check %s failed: %s", name,
                    utils.to_json(counterexample))
    LOG.info("Finished check %s: %s, %d instances in %.3fs", name,
             result.status, instances, result.elapsed)
    return result


async def _gather_checks(loop, executor, names, args):
    tasks = [loop.run_in_executor(executor, run_check, name, *args)
             for name in names]
    return await asyncio.gather(*tasks)


def get_verify_value(name, default):
    return config.get_app_config().get_int_value(name, "verify", default)


def run_verification(n=None, seed=None, jobs=None, checks=None,
                     max_part=None, random_diagrams=None):
    if n is None:
        n = get_verify_value("degree", 4)
    if seed is None:
        seed = get_verify_value("seed", 0)
    if jobs is None or jobs <= 0:
        jobs = get_verify_value("jobs", 0) or utils.get_cpu_count()
    if max_part is None:
        max_part = get_verify_value("max_part", 3)
    if random_diagrams is None:
        random_diagrams = get_verify_value("random_diagrams", 200)
    if n < 1:
        raise exceptions.DomainException(
            "Verification degree must be positive: %d" % n, field="n")

    names = checks or get_check_names()
    for name in names:
        if name not in _CHECKS:
            raise exceptions.DomainException(
                "Unknown check: %s" % name, field="check")

    LOG.info("Running %d checks with n=%d, seed=%d, %d jobs",
             len(names), n, seed, jobs)
    if jobs == 1 or len(names) == 1:
        results = [run_check(name, n, seed, max_part, random_diagrams)
                   for name in names]
    else:
        args = (n, seed, max_part, random_diagrams,
                config.get_app_config().paths)
        loop = asyncio.new_event_loop()
        try:
            with futures.ProcessPoolExecutor(max_workers=jobs) as executor:
                results = loop.run_until_complete(
                    _gather_checks(loop, executor, names, args))
        finally:
            loop.close()
    report = Report(results, n, seed)
    LOG.info("Verification %s", report.status)
    return report
