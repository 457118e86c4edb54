"""
Обработка ошибок: типы, исключение и коды выхода CLI
"""
from enum import Enum
from typing import Any, Dict, Optional
import time


class ErrorType(Enum):
    """Типы ошибок"""
    PARSE_ERROR = "parse_error"
    WIDTH_ERROR = "width_error"
    TAUTOLOGY_ERROR = "tautology_error"
    EMPTY_CLAUSE = "empty_clause"
    UNDEFINED_VARIABLE = "undefined_variable"
    NOT_BIJECTIVE = "not_bijective"
    NOT_SINGULAR = "not_singular"
    ZERO_LENGTH_PATH = "zero_length_path"
    NOT_NEARLY_REGULAR = "not_nearly_regular"
    VERTEX_NOT_PRESENT = "vertex_not_present"
    SAME_VARIABLE = "same_variable"
    MISSING_UNIT = "missing_unit"
    IDENTICAL_UNITS = "identical_units"
    SATISFIABLE_INPUT = "satisfiable_input"
    PRECONDITION = "precondition"
    INCONSISTENT_LENGTHS = "inconsistent_lengths"
    INVALID_INSTANCE = "invalid_instance"
    INVARIANT_VIOLATION = "invariant_violation"
    SIZE_BOUND = "size_bound"
    FLAG_ERROR = "flag_error"


class ExitCode(Enum):
    """Коды выхода CLI"""
    FOUND = 0
    NOT_FOUND = 1
    INPUT_ERROR = 2
    RESOURCE_BOUND = 3


class TwoMusError(Exception):
    """Ошибка библиотеки"""

    def __init__(self,
                 error_type: ErrorType,
                 message: str,
                 details: Optional[Dict[str, Any]] = None):
        self.error_type = error_type
        self.message = message
        self.details = dict(details or {})
        self.timestamp = time.time()

        super().__init__(f"[{error_type.value.upper()}] {message}")


class ErrorHandler:
    """Обработчик ошибок"""

    # Маппинг типов ошибок на коды выхода
    EXIT_CODE_MAP = {
        ErrorType.PARSE_ERROR: ExitCode.INPUT_ERROR,
        ErrorType.WIDTH_ERROR: ExitCode.INPUT_ERROR,
        ErrorType.TAUTOLOGY_ERROR: ExitCode.INPUT_ERROR,
        ErrorType.EMPTY_CLAUSE: ExitCode.INPUT_ERROR,
        ErrorType.UNDEFINED_VARIABLE: ExitCode.INPUT_ERROR,
        ErrorType.NOT_BIJECTIVE: ExitCode.INPUT_ERROR,
        ErrorType.NOT_SINGULAR: ExitCode.INPUT_ERROR,
        ErrorType.ZERO_LENGTH_PATH: ExitCode.INPUT_ERROR,
        ErrorType.NOT_NEARLY_REGULAR: ExitCode.INPUT_ERROR,
        ErrorType.VERTEX_NOT_PRESENT: ExitCode.INPUT_ERROR,
        ErrorType.SAME_VARIABLE: ExitCode.INPUT_ERROR,
        ErrorType.MISSING_UNIT: ExitCode.INPUT_ERROR,
        ErrorType.IDENTICAL_UNITS: ExitCode.INPUT_ERROR,
        ErrorType.SATISFIABLE_INPUT: ExitCode.NOT_FOUND,
        ErrorType.PRECONDITION: ExitCode.INPUT_ERROR,
        ErrorType.INCONSISTENT_LENGTHS: ExitCode.INPUT_ERROR,
        ErrorType.INVALID_INSTANCE: ExitCode.INPUT_ERROR,
        ErrorType.INVARIANT_VIOLATION: ExitCode.INPUT_ERROR,
        ErrorType.SIZE_BOUND: ExitCode.RESOURCE_BOUND,
        ErrorType.FLAG_ERROR: ExitCode.INPUT_ERROR,
    }

    @staticmethod
    def exit_code(error: TwoMusError) -> int:
        """Код выхода для ошибки"""
        return ErrorHandler.EXIT_CODE_MAP.get(error.error_type, ExitCode.INPUT_ERROR).value

    @staticmethod
    def format_error_message(error: TwoMusError) -> str:
        """Форматировать сообщение об ошибке"""
        return f"[{error.error_type.value}] {error.message}"
