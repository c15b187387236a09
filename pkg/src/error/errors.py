class AmoebaError(Exception):
    """Base for every error the toolkit raises on purpose"""
    error_type = "AMOEBA_ERROR"
    exit_code = 1


class ParseError(AmoebaError):
    """Malformed matrix file, entry, subset list or generator arguments"""
    error_type = "PARSE_ERROR"
    exit_code = 2


class ZeroColumnError(AmoebaError):
    """A zero column would make M_V have a loop"""
    error_type = "ZERO_COLUMN"
    exit_code = 3

    def __init__(self, column: int):
        self.column = column
        super().__init__(f"column {column + 1} is zero (the matroid would have a loop)")


class LoopError(AmoebaError):
    """Some singleton has rank 0"""
    error_type = "LOOP"
    exit_code = 3

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element + 1} is a loop (rank of singleton is 0)")


class VerificationFailedError(AmoebaError):
    error_type = "VERIFICATION_FAILED"
    exit_code = 4


class GroundTooLargeError(AmoebaError):
    error_type = "GROUND_TOO_LARGE"
    exit_code = 5

    def __init__(self, size: int, limit: int, what: str = "ground set"):
        self.size = size
        self.limit = limit
        super().__init__(f"{what} has {size} elements, limit is {limit}")


class InvalidParamsError(AmoebaError):
    error_type = "INVALID_PARAMS"


class RankZeroError(AmoebaError):
    error_type = "RANK_ZERO"


class EmptyMemberError(AmoebaError):
    error_type = "EMPTY_MEMBER"


class SupportMismatchError(AmoebaError):
    error_type = "SUPPORT_MISMATCH"


class NotSubsetOfBError(AmoebaError):
    error_type = "NOT_SUBSET_OF_B"


class BTooLargeError(AmoebaError):
    error_type = "B_TOO_LARGE"


class CertificationFailedError(AmoebaError):
    error_type = "CERTIFICATION_FAILED"


class LatticeViolationError(AmoebaError):
    """Join/meet of optimal partitions was not optimal; signals a bug"""
    error_type = "LATTICE_VIOLATION"


class RankDeficientInputError(AmoebaError):
    error_type = "RANK_DEFICIENT_INPUT"


class SamplingError(AmoebaError):
    error_type = "SAMPLING_FAILED"
