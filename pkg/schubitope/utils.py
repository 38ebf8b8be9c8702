# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

import fractions
import json
import os

import psutil
import six

from schubitope import exceptions


def get_base_dir():
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def get_resources_dir():
    return os.path.join(get_base_dir(), "resources")


def get_cpu_count():
    return psutil.cpu_count(logical=True) or 1


def is_integer(value):
    return (isinstance(value, six.integer_types) and
            not isinstance(value, bool))


def mask_from_subset(subset, n):
    mask = 0
    for i in subset:
        if not is_integer(i) or i < 1 or i > n:
            raise exceptions.InvalidSubsetException(
                "Element %r is not in [1, %d]" % (i, n))
        mask |= 1 << (i - 1)
    return mask


def subset_from_mask(mask, n):
    return frozenset(i + 1 for i in range(n) if mask >> i & 1)


def full_mask(n):
    return (1 << n) - 1


def iter_masks(n):
    """Yields every subset of [n] as a bitmask, in increasing order."""
    return six.moves.range(1 << n)


def iter_proper_masks(n):
    """Yields the proper nonempty subsets of [n], in increasing order."""
    return six.moves.range(1, (1 << n) - 1)


def parse_int_list(text, field):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise exceptions.DomainException(
            "Expected comma-separated integers, got %r" % text, field=field)


def parse_subset(text, n, field="set"):
    values = parse_int_list(text, field)
    if len(set(values)) != len(values):
        raise exceptions.InvalidSubsetException(
            "Repeated element in %r" % text, field=field)
    for i in values:
        if i < 1 or i > n:
            raise exceptions.InvalidSubsetException(
                "Element %d is not in [1, %d]" % (i, n), field=field)
    return frozenset(values)


def parse_rational(text, field):
    text = text.strip()
    try:
        value = fractions.Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise exceptions.DomainException(
            "Expected an integer or a rational p/q, got %r" % text,
            field=field)
    if value.denominator == 1:
        return value.numerator
    return value


def parse_rational_list(text, field):
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(x, field) for x in text.split(","))


def format_rational(value):
    value = fractions.Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def format_csv(values):
    return ",".join(format_rational(v) for v in values)


def to_json(doc):
    return json.dumps(doc, separators=(",", ":"))


def load_json(text, field):
    try:
        return json.loads(text)
    except ValueError as ex:
        raise exceptions.DomainException(
            "Malformed JSON document: %s" % ex, field=field)


def read_json_file(path, field):
    try:
        with open(path, 'r') as f:
            return load_json(f.read(), field)
    except (IOError, OSError) as ex:
        raise exceptions.DomainException(
            "Cannot read %s: %s" % (path, ex), field=field)


def require_int(doc, key, field, minimum=0):
    if not isinstance(doc, dict) or key not in doc:
        raise exceptions.DomainException(
            "Missing key %r" % key, field=field)
    value = doc[key]
    if not is_integer(value) or value < minimum:
        raise exceptions.DomainException(
            "Key %r must be an integer >= %d, got %r" % (key, minimum, value),
            field=field)
    return value


def require_list(doc, key, field):
    if not isinstance(doc, dict) or not isinstance(doc.get(key), list):
        raise exceptions.DomainException(
            "Key %r must be a list" % key, field=field)
    return doc[key]


def parse_point(text, n, field="point"):
    values = parse_rational_list(text, field)
    if len(values) != n:
        raise exceptions.DomainException(
            "Expected %d coordinates, got %d" % (n, len(values)), field=field)
    return values
