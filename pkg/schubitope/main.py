# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

import argparse
import logging
import sys

from schubitope import certify
from schubitope import config
from schubitope import constants
from schubitope import diagrams
from schubitope import exceptions
from schubitope import fillings
from schubitope import perms
from schubitope import polynomials
from schubitope import polytope
from schubitope import render
from schubitope import utils
from schubitope import verification

LOG = logging.getLogger(__name__)

_LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise exceptions.UsageException(message)


def _config_logging(level, log_file=None):
    log_format = ("%(asctime)-15s %(levelname)s %(module)s %(funcName)s "
                  "%(lineno)d %(thread)d %(threadName)s %(message)s")
    if log_file:
        logging.basicConfig(filename=log_file, level=level,
                            format=log_format)
    else:
        logging.basicConfig(level=level, format=log_format)
    logging.getLogger().setLevel(level)
    logging.info("{0} - {1}".format(constants.PRODUCT_NAME, constants.VERSION))


def _get_log_level(args):
    if args.debug:
        return logging.DEBUG
    if args.verbose:
        return logging.INFO
    app_config = config.get_app_config()
    name = app_config.get_config_value("level", "logging", "WARNING")
    if name.upper() not in _LOG_LEVELS:
        raise exceptions.ConfigFileErrorException(
            "Unknown log level: %s" % name)
    return _LOG_LEVELS[name.upper()]


def _add_diagram_source(parser, allow_hrep=False):
    group = parser.add_mutually_exclusive_group(required=True)
    if allow_hrep:
        group.add_argument("--hrep", metavar="FILE",
                           help="JSON or H-format halfspace description")
    group.add_argument("--diagram", metavar="FILE",
                       help="JSON diagram document")
    group.add_argument("--rothe", metavar="PERM",
                       help="Rothe diagram of a permutation")
    group.add_argument("--skyline", metavar="COMP",
                       help="skyline diagram of a composition")


def _add_format(parser, choices, default):
    parser.add_argument("--format", choices=choices, default=default)


def _create_parser():
    json_text = [constants.FORMAT_JSON, constants.FORMAT_TEXT]
    parser = _ArgumentParser(
        prog=constants.PRODUCT_NAME,
        description="Vertices and halfspace descriptions of Schubitopes")
    parser.add_argument("--config", metavar="FILE",
                        help="INI file overriding the shipped defaults")
    parser.add_argument("--debug", action="store_true")
    parser.add_argument("--verbose", action="store_true")
    subparsers = parser.add_subparsers(dest="verb")
    subparsers.required = True

    p = subparsers.add_parser("rothe", help="Rothe diagram D(w)")
    p.add_argument("--perm", required=True)
    _add_format(p, json_text, constants.FORMAT_JSON)

    p = subparsers.add_parser("skyline", help="skyline diagram D(alpha)")
    p.add_argument("--alpha", required=True)
    _add_format(p, json_text, constants.FORMAT_JSON)

    p = subparsers.add_parser("fill", help="greedy filling F_w(D)")
    _add_diagram_source(p)
    p.add_argument("--perm", required=True)
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("vertices", help="vertices of S_D")
    _add_diagram_source(p)
    p.add_argument("--method", choices=[constants.ENUMERATOR_SWEEP,
                                        constants.ENUMERATOR_SKYLINE],
                   default=constants.ENUMERATOR_SWEEP)
    p.add_argument("--fibers", action="store_true",
                   help="list the permutations generating each vertex")
    p.add_argument("--certify", action="store_true",
                   help="certify the vertex set against the H-description")
    _add_format(p, json_text, constants.FORMAT_JSON)

    p = subparsers.add_parser("hrep", help="halfspace description of S_D")
    _add_diagram_source(p)
    _add_format(p, json_text + [constants.FORMAT_HFORM],
                constants.FORMAT_JSON)

    p = subparsers.add_parser("theta", help="theta_D(S) with its columns")
    _add_diagram_source(p)
    p.add_argument("--set", required=True, dest="subset")
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("rank", help="rank r_D(S) with its columns")
    _add_diagram_source(p)
    p.add_argument("--set", required=True, dest="subset")
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("member", help="membership of a point in S_D")
    _add_diagram_source(p, allow_hrep=True)
    p.add_argument("--point", required=True)
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("key", help="key polynomial")
    p.add_argument("--alpha", required=True)
    p.add_argument("--chain", choices=[constants.CHAIN_FIRST,
                                       constants.CHAIN_LAST],
                   default=constants.CHAIN_FIRST)
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("schubert", help="Schubert polynomial")
    p.add_argument("--perm", required=True)
    p.add_argument("--chain", choices=[constants.CHAIN_FIRST,
                                       constants.CHAIN_LAST],
                   default=constants.CHAIN_FIRST)
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("bruhat", help="Bruhat comparison u <= w")
    p.add_argument("--u", required=True)
    p.add_argument("--w", required=True)
    _add_format(p, json_text, constants.FORMAT_TEXT)

    p = subparsers.add_parser("verify", help="cross-validation suite")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--check", action="append", dest="checks",
                   choices=verification.get_check_names())
    _add_format(p, json_text, constants.FORMAT_TEXT)
    return parser


def _load_diagram(args):
    if args.diagram:
        return diagrams.load_diagram(args.diagram)
    if args.rothe:
        return diagrams.rothe(perms.Permutation.parse(args.rothe, "rothe"))
    return diagrams.skyline(perms.Composition.parse(args.skyline, "skyline"),
                            "skyline")


def _parse_perm(text, n, field="perm"):
    w = perms.Permutation.parse(text, field)
    if w.degree != n:
        raise exceptions.InvalidPermutationException(
            "Expected a permutation of [%d], got %s" % (n, w), field=field)
    return w


def _emit_json(stdout, doc):
    stdout.write(utils.to_json(doc) + "\n")


def _emit_text(stdout, text):
    if text:
        stdout.write(text.rstrip("\n") + "\n")


def _cmd_rothe(args, stdout):
    diagram = diagrams.rothe(perms.Permutation.parse(args.perm))
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, diagram.to_json_dict())
    else:
        _emit_text(stdout, diagram.render_text())


def _cmd_skyline(args, stdout):
    diagram = diagrams.skyline(perms.Composition.parse(args.alpha))
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, diagram.to_json_dict())
    else:
        _emit_text(stdout, diagram.render_text())


def _cmd_fill(args, stdout):
    diagram = _load_diagram(args)
    w = _parse_perm(args.perm, diagram.n)
    filling = fillings.fill_diagram(diagram, w)
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, filling.to_json_dict())
    else:
        _emit_text(stdout, filling.render_text())
        _emit_text(stdout, "x(%s) = %s" % (w, utils.format_csv(
            filling.counts())))


def _cmd_vertices(args, stdout):
    diagram = _load_diagram(args)
    points = polytope.vertices(diagram, args.method)
    fibers = polytope.vertex_fibers(diagram) if args.fibers else None
    report = None
    if args.certify:
        report = certify.certify_vertices(polytope.hrep(diagram), points)

    if args.format == constants.FORMAT_JSON:
        doc = polytope.vertex_set_to_json_dict(points)
        if fibers is not None:
            doc["fibers"] = [{"x": list(x), "w": [str(w) for w in ws]}
                             for x, ws in fibers.items()]
        if report is not None:
            doc["certification"] = report.to_json_dict()
        _emit_json(stdout, doc)
    else:
        if fibers is not None:
            _emit_text(stdout, render.render_fibers_text(fibers))
        else:
            _emit_text(stdout, render.render_points_text(points))
        if report is not None:
            _emit_text(stdout, render.render_certification_text(report))
    if report is not None and not report.passed:
        return constants.EXIT_FAILURE
    return constants.EXIT_SUCCESS


def _cmd_hrep(args, stdout):
    h = polytope.hrep(_load_diagram(args))
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, h.to_json_dict())
    elif args.format == constants.FORMAT_HFORM:
        _emit_text(stdout, render.render_hform(h))
    else:
        _emit_text(stdout, render.render_hrep_text(h))


def _cmd_theta(args, stdout):
    diagram = _load_diagram(args)
    subset = utils.parse_subset(args.subset, diagram.n)
    words = [str(polytope.column_word(diagram, j, subset))
             for j in range(1, diagram.n + 1)]
    values = polytope.theta_columns(diagram, subset)
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, {"S": sorted(subset), "theta": sum(values),
                            "columns": values, "words": words})
    else:
        _emit_text(stdout, render.render_theta_text(sum(values), words,
                                                    values))


def _cmd_rank(args, stdout):
    diagram = _load_diagram(args)
    subset = utils.parse_subset(args.subset, diagram.n)
    values = [fillings.rank_filling(c, subset) for c in diagram.columns()]
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, {"S": sorted(subset), "rank": sum(values),
                            "columns": values})
    else:
        _emit_text(stdout, render.render_theta_text(
            sum(values), [None] * len(values), values))


def _load_hrep(path):
    try:
        with open(path, "r") as f:
            text = f.read()
    except (IOError, OSError) as ex:
        raise exceptions.DomainException(
            "Cannot read %s: %s" % (path, ex), field="hrep")
    if text.lstrip().startswith("{"):
        return polytope.HRep.from_json_dict(utils.load_json(text, "hrep"))
    return polytope.HRep.from_hform(text)


def _cmd_member(args, stdout):
    if args.hrep:
        h = _load_hrep(args.hrep)
    else:
        h = polytope.hrep(_load_diagram(args))
    point = utils.parse_point(args.point, h.n)
    result = polytope.member(h, point)
    violated = polytope.violated_bound(h, point)
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, {"point": [utils.format_rational(c)
                                      for c in point],
                            "member": result})
    else:
        _emit_text(stdout, "true" if result else "false")
        if violated is not None:
            mask, lhs, bound = violated
            _emit_text(stdout, "violated: x(%s) = %s > %d" % (
                utils.format_csv(sorted(utils.subset_from_mask(mask, h.n))),
                utils.format_rational(lhs), bound))
        elif sum(point) != h.total:
            _emit_text(stdout, "violated: sum(x) = %s != %d" % (
                utils.format_rational(sum(point)), h.total))


def _emit_polynomial(args, stdout, poly):
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, poly.to_json_dict())
    else:
        _emit_text(stdout, str(poly))


def _cmd_key(args, stdout):
    alpha = perms.Composition.parse(args.alpha)
    _emit_polynomial(args, stdout,
                     polynomials.key_polynomial(alpha, args.chain))


def _cmd_schubert(args, stdout):
    w = perms.Permutation.parse(args.perm)
    _emit_polynomial(args, stdout,
                     polynomials.schubert_polynomial(w, args.chain))


def _cmd_bruhat(args, stdout):
    u = perms.Permutation.parse(args.u, "u")
    w = _parse_perm(args.w, u.degree, "w")
    result = perms.bruhat_leq(u, w)
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, {"u": str(u), "w": str(w), "leq": result})
    else:
        _emit_text(stdout, "true" if result else "false")


def _cmd_verify(args, stdout):
    report = verification.run_verification(
        n=args.n, seed=args.seed, jobs=args.jobs, checks=args.checks)
    if args.format == constants.FORMAT_JSON:
        _emit_json(stdout, report.to_json_dict())
    else:
        _emit_text(stdout, render.render_report_text(report))
    if not report.passed:
        return constants.EXIT_FAILURE
    return constants.EXIT_SUCCESS


_COMMANDS = {
    "rothe": _cmd_rothe,
    "skyline": _cmd_skyline,
    "fill": _cmd_fill,
    "vertices": _cmd_vertices,
    "hrep": _cmd_hrep,
    "theta": _cmd_theta,
    "rank": _cmd_rank,
    "member": _cmd_member,
    "key": _cmd_key,
    "schubert": _cmd_schubert,
    "bruhat": _cmd_bruhat,
    "verify": _cmd_verify,
}


def _format_error(ex):
    field = getattr(ex, "field", None)
    if field:
        return "error: %s: %s" % (field, ex)
    return "error: %s" % ex


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _create_parser()
    custom_config = False
    try:
        args = parser.parse_args(argv)
        if args.config:
            config.use_config_files([config.get_default_config_path(),
                                     args.config])
            custom_config = True
        app_config = config.get_app_config()
        _config_logging(_get_log_level(args),
                        app_config.get_config_value("file", "logging"))
        LOG.debug("Running %s", args.verb)
        status = _COMMANDS[args.verb](args, stdout)
        return constants.EXIT_SUCCESS if status is None else status
    except exceptions.InvariantViolationException as ex:
        LOG.exception(ex)
        stderr.write(_format_error(ex) + "\n")
        return constants.EXIT_FAILURE
    except exceptions.BaseSchubitopeException as ex:
        LOG.debug("Command failed: %s", ex)
        stderr.write(_format_error(ex) + "\n")
        return constants.EXIT_USAGE
    except SystemExit as ex:
        return ex.code or constants.EXIT_SUCCESS
    except Exception as ex:
        LOG.exception(ex)
        stderr.write(_format_error(ex) + "\n")
        return constants.EXIT_FAILURE
    finally:
        if custom_config:
            config.reset_app_config()


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
