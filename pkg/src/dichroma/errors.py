"""Exception hierarchy shared by all dichroma modules.

The CLI maps these onto process exit codes: identity failures exit 1,
bad input exits 2, size caps exit 3.
"""


class DichromaError(Exception):
    """Base class for all errors raised by this package."""


class NonExactDivision(DichromaError):
    """Polynomial division left a nonzero remainder where exactness was required."""


class AxiomViolation(DichromaError):
    """A rank table failed one of the matroid axioms; message names the witness."""


class IdentityError(DichromaError):
    """A quantity violated an identity every valid input must satisfy (fatal bug detector)."""


class SizeCapExceeded(DichromaError):
    """Requested computation exceeds the configured enumeration caps."""


class InputError(DichromaError):
    """Malformed user input (file format, parameters out of range)."""
