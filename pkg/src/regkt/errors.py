"""Exception hierarchy shared by every module."""


class RegktError(Exception):
    """Base class; `code` names the error class in reports."""

    @property
    def code(self):
        return type(self).__name__


class ParseError(RegktError):
    pass


class CapExceeded(RegktError):
    pass


class NotNormal(RegktError):
    pass


class NotHomomorphism(RegktError):
    pass


class UnmappedGenerator(RegktError):
    pass


class NotMember(RegktError):
    pass


class NotPerfect(RegktError):
    pass


class NotFull(RegktError):
    pass


class InfiniteKernel(RegktError):
    pass


class NotFinite(RegktError):
    pass


class MalformedCandidate(RegktError):
    pass


class Unsupported(RegktError):
    pass
