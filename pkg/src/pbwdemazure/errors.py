"""
# pbwdemazure.errors

Exception hierarchy shared by the library and the command layer.

`InputError` marks malformed user input (usage errors, exit code 2) and `ConsistencyError`
marks a violated internal invariant (exit code 3). Failed certificate checks are not exceptions;
they are reported as data by the modules that run them.
"""



class PbwError(Exception):
    """
    Base class for all errors raised by `pbwdemazure`.
    """
    exit_code = 2


class InputError(PbwError, ValueError):
    """
    Raised when a permutation, weight, level, index or polynomial text is malformed.
    """
    exit_code = 2


class ConsistencyError(PbwError):
    """
    Raised when two computations that must agree do not (e.g. a negative kernel cell).
    """
    exit_code = 3
