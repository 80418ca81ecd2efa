"""Exception hierarchy shared by the library and the CLI.

Exit-code mapping used by the command-line tool:
  1  negative verdict (not contact, not K-contact, ...)
  2  InputError       (malformed or precondition-violating input)
  3  InternalInvariantError (a proved identity failed; always a bug)
"""


class ContactLieError(Exception):
    """Base class for all library errors."""


class InputError(ContactLieError):
    """Malformed input or violated precondition."""


class InternalInvariantError(ContactLieError):
    """A mathematically guaranteed identity failed to hold.

    Raised when a theorem-backed postcondition is violated; signals a bug
    (or corrupted input that slipped past validation), never a finding.
    """


class SingularSystemError(InputError):
    """A linear system expected to have a unique solution does not."""
