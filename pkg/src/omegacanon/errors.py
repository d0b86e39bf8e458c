"""Exception hierarchy shared by the library and the command line."""


class OmegaError(Exception):
    """Base class for all library errors."""


class InputError(OmegaError, ValueError):
    """Malformed machine, word or document."""


class CapacityError(OmegaError):
    """A desk-scale enumeration limit was exceeded."""


class DomainError(OmegaError):
    """The input language is outside the domain of a construction."""


class ContractError(OmegaError):
    """An operation was called outside its precondition, or an internal
    consistency check failed."""
