"""Exception hierarchy shared by all modules.

The CLI maps these onto its exit-code contract: InputError -> 2,
EstimatorError -> 3, PairingError -> 4.
"""


class IdcorError(Exception):
    """Base class for all library errors."""


class InputError(IdcorError):
    """Invalid data, file, or parameter."""


class PairingError(IdcorError):
    """Row counts of two datasets that must be sample-aligned disagree."""


class EstimatorError(IdcorError):
    """A numeric procedure failed on otherwise valid input."""
