"""
Декораторы для обработчиков команд
"""
import functools
import logging
from typing import Any, Callable

import click

from oodq.exceptions import OodqError

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (OodqError, OSError, UnicodeDecodeError)


def error_handler(func: Callable) -> Callable:
    """Ошибки входных данных печатаются в stderr и превращаются в код выхода 2"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        try:
            return func(*args, **kwargs)
        except INPUT_ERRORS as e:
            logger.debug(f"Ошибка в {func.__name__}", exc_info=True)
            logger.error(f"Ошибка в {func.__name__}: {e}")
            click.echo(f"⚠️ {_describe(e)}", err=True)
            return EXIT_INPUT_ERROR

    return wrapper


def _describe(error: Exception) -> str:
    if isinstance(error, OSError) and error.filename is not None:
        return f"{error.strerror or error}: {error.filename}"
    if isinstance(error, UnicodeDecodeError):
        return f"Файл не в кодировке UTF-8: {error.reason}"
    return str(error)


def log_command(func: Callable) -> Callable:
    """Журналирование вызова команды и ее результата"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        shown = ", ".join(f"{key}={value!r}" for key, value in kwargs.items() if value not in (None, (), False))
        logger.info(f"Команда {func.__name__}: {shown}" if shown else f"Команда {func.__name__}")
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.error(f"Необработанная ошибка в {func.__name__}: {e}", exc_info=True)
            raise
        logger.info(f"Команда {func.__name__} завершена с кодом {result or 0}")
        return result

    return wrapper
