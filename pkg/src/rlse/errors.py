"""Exceptions raised by the toolkit.

Failed law checks are *not* exceptions; they come back as a failing
:class:`~rlse.algebra.Verdict`. Exceptions signal broken preconditions.
"""


class RlseError(Exception):
    """Base class for all toolkit errors."""


class NotAPartialOrder(RlseError):
    def __init__(self, law, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"relation is not a partial order: {law} fails at {witness}")


class PreconditionFailed(RlseError):
    """An input does not satisfy the structure an operation requires."""

    def __init__(self, verdict, message=None):
        self.verdict = verdict
        super().__init__(message or f"precondition failed: {verdict.describe()}")


class NotAnRlse(PreconditionFailed):
    pass


class NotOrthomodular(PreconditionFailed):
    pass


class InternalInconsistency(RlseError):
    """A constructed object failed a property that must hold by theory."""


class InvalidIndex(RlseError, IndexError):
    pass


class TooLarge(RlseError):
    pass


class AmbientTooLarge(TooLarge):
    pass


class SpaceMismatch(RlseError, ValueError):
    pass


class OutOfRange(RlseError, ValueError):
    pass


class NotTwoValued(RlseError, ValueError):
    pass


class NotMember(RlseError, KeyError):
    pass


class NotClosed(RlseError):
    def __init__(self, p, q, op):
        self.p, self.q, self.op = p, q, op
        super().__init__(f"family not closed: {op}({p}, {q}) is not a member")


class ParseError(RlseError, ValueError):
    pass
