# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.


class BaseSchubitopeException(Exception):
    def __init__(self, message=None):
        super(BaseSchubitopeException, self).__init__(message)


class DimensionMismatchException(BaseSchubitopeException):
    def __init__(self, expected=None, actual=None, message=None):
        if message is None:
            message = "Dimension mismatch: expected %s, got %s" % (
                expected, actual)
        super(DimensionMismatchException, self).__init__(message)
        self.expected = expected
        self.actual = actual


class DomainException(BaseSchubitopeException):
    def __init__(self, message="Value outside of its domain", field=None):
        super(DomainException, self).__init__(message)
        self.field = field


class InvalidPermutationException(DomainException):
    def __init__(self, message="Not a permutation", field="perm"):
        super(InvalidPermutationException, self).__init__(message, field)


class InvalidCompositionException(DomainException):
    def __init__(self, message="Not a composition", field="alpha"):
        super(InvalidCompositionException, self).__init__(message, field)


class InvalidDiagramException(DomainException):
    def __init__(self, message="Not a diagram", field="diagram"):
        super(InvalidDiagramException, self).__init__(message, field)


class InvalidSubsetException(DomainException):
    def __init__(self, message="Not a subset of [n]", field="set"):
        super(InvalidSubsetException, self).__init__(message, field)


class InvalidPolynomialException(DomainException):
    def __init__(self, message="Not a polynomial", field="terms"):
        super(InvalidPolynomialException, self).__init__(message, field)


class UsageException(DomainException):
    def __init__(self, message="Invalid command line", field="usage"):
        super(UsageException, self).__init__(message, field)


class SizeLimitExceededException(BaseSchubitopeException):
    def __init__(self, what, size, limit):
        msg = "%s: size %s exceeds the configured limit %s" % (
            what, size, limit)
        super(SizeLimitExceededException, self).__init__(msg)
        self.what = what
        self.size = size
        self.limit = limit


class InvariantViolationException(BaseSchubitopeException):
    def __init__(self, message="Internal invariant violated"):
        super(InvariantViolationException, self).__init__(message)


class ConfigFileErrorException(BaseSchubitopeException):
    pass
