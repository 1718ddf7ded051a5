"""Exception hierarchy.

Three families matter to callers: validation errors (bad input), cap
violations (input too large for the configured desk-scale limits), and
internal invariant violations (conditions the underlying theory proves
impossible; raising one signals a bug, never bad input).
"""


class BurnsideError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(BurnsideError):
    """Input rejected before any computation ran."""


class NotAGroup(ValidationError):
    """A multiplication table fails the group axioms."""


class InvalidPermutation(ValidationError):
    """A generator is not a bijection on 0..degree-1."""


class AmbientMismatch(ValidationError):
    """Operands live over incompatible source/target groups."""


class ClassMismatch(ValidationError):
    """A pair class does not belong to the basis it is used with."""


class NotEffective(ValidationError):
    """A set-level construction was asked of a virtual element."""


class NotPIsotropy(ValidationError):
    """Element support contains a class whose subgroup is not a p-group."""


class CapExceeded(BurnsideError):
    """A configured size limit was exceeded."""


class OrderCapExceeded(CapExceeded):
    pass


class SizeCapExceeded(CapExceeded):
    pass


class InternalInvariantError(BurnsideError):
    """A provably-true invariant failed; indicates an implementation bug."""


class PAdicIntegralityViolation(InternalInvariantError):
    """An idempotent coefficient acquired a denominator divisible by p."""


class SingularDiagonal(InternalInvariantError):
    """A transporter matrix diagonal entry vanished."""


class DependentBasis(InternalInvariantError):
    """A provably independent family came out linearly dependent."""
