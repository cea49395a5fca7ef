"""Error taxonomy shared by the whole package.

Three failure modes are distinguished because the CLI maps them to
different exit codes and callers are expected to branch on them:

* InvalidArgumentError: the input object itself is malformed for the
  operation (wrong shape, out-of-range ids, a multidigraph where a
  digraph is required).  CLI exit code 2.
* PreconditionViolatedError: the input is well-formed but outside the
  operation's stated hypothesis (too few vertices, not 2k-edge-connected
  where required, infeasible instance passed to a witness builder).
  CLI exit code 3.
* UnsupportedError: the instance falls outside the hypothesis of the
  underlying construction in a way that is recognised rather than
  guessed at (independence number below 3, tournament without a digon).
  CLI exit code 3.
"""


class ArcinvertError(Exception):
    """Base class for all package-specific errors."""


class InvalidArgumentError(ArcinvertError, ValueError):
    pass


class PreconditionViolatedError(ArcinvertError):
    pass


class UnsupportedError(ArcinvertError):
    pass


class ParseError(ArcinvertError, ValueError):
    """Raised on malformed .mdg input; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
