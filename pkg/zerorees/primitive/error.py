# Copyright (c) OpenMMLab. All rights reserved.
from enum import Enum


class ErrorCode(Enum):
    """Define an enumerated type for error codes, each has a numeric value and
    a description.

    The numeric value is also the exit code of the `zerorees` command line,
    so every failure raised by the library maps onto exactly one exit status.
    """
    SUCCESS = 0, 'success'
    INTERNAL_ERROR = 1, 'Internal error'
    PARSE_ERROR = 2, 'Input could not be parsed or a parameter is out of range'  # noqa E501
    INVALID_INSTANCE = 3, 'Instance violates a precondition (regularity, zero entries, zero start cell)'  # noqa E501
    SIZE_LIMIT = 4, 'Instance exceeds a configured size guard'
    ORACLE_MISMATCH = 5, 'Formula result disagrees with the brute-force oracle'  # noqa E501

    def __new__(cls, value, description):
        """Create new instance of ErrorCode."""
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description
        return obj

    def __int__(self):
        """Return the integer representation of the error code."""
        return self.value

    def __str__(self):
        """Return the str representation of the error code."""
        return self.description

    def describe(self):
        """Return the description of the error code."""
        return self.description

    @classmethod
    def format(cls, code):
        """Format the error code into a JSON result.

        Args:
            code (ErrorCode): Error code to be formatted.

        Returns:
            dict: A dictionary that includes the error code and its description.  # noqa E501

        Raises:
            TypeError: If the input is not an instance of ErrorCode.
        """
        if isinstance(code, cls):
            return {'code': int(code), 'message': code.describe()}
        raise TypeError(f'Expected type {cls}, got {type(code)}')


class ZeroReesError(Exception):
    """Base error, carries an ErrorCode and a detail dict for reporting."""
    code = ErrorCode.INTERNAL_ERROR

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def to_dict(self) -> dict:
        ret = ErrorCode.format(self.code)
        ret['reason'] = self.message
        if self.detail:
            ret['detail'] = {k: str(v) for k, v in self.detail.items()}
        return ret


class ParseError(ZeroReesError, ValueError):
    code = ErrorCode.PARSE_ERROR


class InvalidOrderError(ZeroReesError, ValueError):
    code = ErrorCode.PARSE_ERROR


class GroupAxiomError(ZeroReesError, ValueError):
    """A Cayley table broke a group axiom, `witness` names the elements."""
    code = ErrorCode.PARSE_ERROR

    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f'group axiom `{axiom}` violated at {witness}',
                         axiom=axiom,
                         witness=witness)
        self.axiom = axiom
        self.witness = witness


class GenerationError(ZeroReesError, ValueError):
    code = ErrorCode.PARSE_ERROR


class StepRangeError(ZeroReesError, IndexError):
    code = ErrorCode.PARSE_ERROR


class InvalidMatrixError(ZeroReesError, ValueError):
    code = ErrorCode.INVALID_INSTANCE


class CompletelySimpleError(ZeroReesError, ValueError):
    code = ErrorCode.INVALID_INSTANCE

    def __init__(self, message: str = '', **detail):
        if not message:
            message = ('sandwich matrix has no zero entry, the semigroup is '
                       'completely simple and handled by the zero-free theory')
        super().__init__(message, **detail)


class NotAZeroError(ZeroReesError, ValueError):
    code = ErrorCode.INVALID_INSTANCE


class NoZeroError(ZeroReesError, ValueError):
    code = ErrorCode.INVALID_INSTANCE


class ComponentMismatchError(ZeroReesError, ValueError):
    code = ErrorCode.INVALID_INSTANCE


class EmptyGraphError(ZeroReesError, ValueError):
    code = ErrorCode.INVALID_INSTANCE


class SizeLimitError(ZeroReesError):
    code = ErrorCode.SIZE_LIMIT


class OracleMismatchError(ZeroReesError):
    code = ErrorCode.ORACLE_MISMATCH

    def __init__(self, message: str, mismatches: dict = None, **detail):
        super().__init__(message, **detail)
        self.mismatches = mismatches or {}
