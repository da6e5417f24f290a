"""Exception hierarchy shared across the package.

Two roots matter for callers: InputError covers anything wrong with the
caller's data (the CLI maps it to exit code 2), ResourceLimit covers
desk-scale guards and search budgets (exit code 3). Concrete subclasses
live next to the code that raises them.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ResourceLimit(RuntimeError):
    """An instance-size guard or search budget was hit."""
