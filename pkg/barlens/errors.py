"""
Exceptions raised by barlens.

Input errors subclass ValueError and map to exit status 2 in the CLI.
Internal-consistency errors subclass RuntimeError: seeing one means a
computed identity failed, which is a bug rather than bad input.
"""


class BarlensError(Exception):
    pass


# ── Input errors ──────────────────────────────────────────────────────────────

class InvalidPartition(BarlensError, ValueError):
    pass


class NotDoubledForm(BarlensError, ValueError):
    pass


class SizeTooSmall(BarlensError, ValueError):
    pass


class BadModulus(BarlensError, ValueError):
    pass


class NotABar(BarlensError, ValueError):
    pass


class NotAPart(BarlensError, ValueError):
    pass


class NotACore(BarlensError, ValueError):
    pass


# ── Internal-consistency errors ───────────────────────────────────────────────

class StructureViolation(BarlensError, RuntimeError):
    pass


class InexactDivision(BarlensError, RuntimeError):
    pass


class MismatchWithBarFormula(BarlensError, RuntimeError):
    pass


class MultisetUnderflow(BarlensError, RuntimeError):
    pass


class ModifiedLengthCollision(BarlensError, RuntimeError):
    pass
