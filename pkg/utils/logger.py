"""
Логирование с поддержкой callback-ов (трасса csDP, трасса перечисления)
"""
import logging
import sys
import threading
from datetime import datetime
from typing import Callable, Dict, Optional, Union

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

_handler: Optional[logging.Handler] = None
_handler_lock = threading.Lock()


def _shared_handler() -> logging.Handler:
    """Общий stderr-хендлер: stdout занят под DIMACS/JSON"""
    global _handler
    if _handler is None:
        with _handler_lock:
            if _handler is None:
                handler = logging.StreamHandler(sys.stderr)
                handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
                root = logging.getLogger('TwoMus')
                root.addHandler(handler)
                root.setLevel(logging.WARNING)
                root.propagate = False
                _handler = handler
    return _handler


def configure_logging(level: Union[str, int] = 'WARNING') -> None:
    """Установить уровень для всех логгеров TwoMus.*"""
    _shared_handler()
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.getLogger('TwoMus').setLevel(level)


class TraceLogger:
    """Логгер с опциональным callback-ом на каждую запись"""

    def __init__(self, name: str, log_callback: Optional[Callable] = None):
        if not isinstance(name, str) or not name:
            raise ValueError("name должно быть непустой строкой")

        self.name = name
        self.log_callback = log_callback

        _shared_handler()
        self.logger = logging.getLogger(name)

    def set_callback(self, callback: Optional[Callable]) -> None:
        if callback is not None and not callable(callback):
            raise TypeError("callback должен быть callable")
        self.log_callback = callback

    def _emit(self, level: str, message: str) -> None:
        if self.log_callback is None:
            return

        log_entry = {
            'timestamp': datetime.now().isoformat(),
            'level': level,
            'message': message,
        }

        try:
            self.log_callback(log_entry)
        except Exception as e:
            self.logger.error(f"✗ Ошибка callback логирования: {e}")

    def debug(self, msg: str) -> None:
        self.logger.debug(msg)
        self._emit('DEBUG', str(msg))

    def info(self, msg: str) -> None:
        self.logger.info(msg)
        self._emit('INFO', str(msg))

    def warning(self, msg: str) -> None:
        self.logger.warning(msg)
        self._emit('WARNING', str(msg))

    def error(self, msg: str) -> None:
        self.logger.error(msg)
        self._emit('ERROR', str(msg))

    def is_enabled_for(self, level: int) -> bool:
        return self.logger.isEnabledFor(level)


_loggers: Dict[str, TraceLogger] = {}
_logger_lock = threading.Lock()


def get_logger(name: str = 'TwoMus') -> TraceLogger:
    """Логгер по имени (один экземпляр на имя)"""
    logger = _loggers.get(name)
    if logger is None:
        with _logger_lock:
            logger = _loggers.get(name)
            if logger is None:
                logger = TraceLogger(name)
                _loggers[name] = logger
    return logger
