# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Text and H-format writers."""

import logging
import os

import jinja2

from schubitope import constants
from schubitope import utils

LOG = logging.getLogger(__name__)


def _get_template_path(name):
    return os.path.join(utils.get_resources_dir(), name)


def render_template(name, params):
    env = jinja2.Environment(trim_blocks=True, lstrip_blocks=True)
    with open(_get_template_path(name), "rb") as f:
        template = env.from_string(f.read().decode("utf-8"))
    LOG.debug("Rendering %s", name)
    return template.render(params)


def render_hform(h):
    return render_template("hform.template", {
        "n": h.n, "total": h.total, "bounds": h.items()})


def render_hrep_text(h):
    lines = ["sum(x) = %d" % h.total]
    for mask, bound in h.items():
        subset = sorted(utils.subset_from_mask(mask, h.n))
        lines.append("x(%s) <= %d" % (",".join(str(i) for i in subset),
                                       bound))
    return "\n".join(lines)


def render_points_text(points):
    return "\n".join(utils.format_csv(p) for p in points)


def render_fibers_text(fibers):
    lines = []
    for x, ws in fibers.items():
        lines.append("%s <- %s" % (utils.format_csv(x),
                                   " ".join(str(w) for w in ws)))
    return "\n".join(lines)


def render_theta_text(total, words, values):
    lines = ["%d" % total]
    for j, (word, value) in enumerate(zip(words, values)):
        lines.append("column %d: %s %d" % (j + 1, word or "-", value))
    return "\n".join(lines)


def render_certification_text(report):
    return render_template("certification.template", {
        "status": report.status,
        "method": report.method,
        "checks": [{"name": c.name, "passed": c.passed,
                    "witness": utils.to_json(c.witness)
                    if c.witness is not None else None}
                   for c in report.checks]})


def render_report_text(report):
    return render_template("report.template", {
        "product": constants.PRODUCT_NAME,
        "version": constants.VERSION,
        "n": report.n,
        "seed": report.seed,
        "status": report.status,
        "checks": [{"name": c.name, "status": c.status,
                    "instances": c.instances, "elapsed": c.elapsed,
                    "counterexample": utils.to_json(c.counterexample)
                    if c.counterexample is not None else None}
                   for c in report.checks]})
