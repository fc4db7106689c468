"""Exception types shared across the package."""


class HodgelimError(Exception):
    """Base class for package errors."""


class FormatError(HodgelimError):
    """Malformed input data (files, JSON payloads)."""


class VerificationError(HodgelimError):
    """A construction's mathematical postcondition failed."""
