"""
Исключения анализатора

Все доменные ошибки наследуются от OodqError (а значит и от ValueError),
поэтому CLI может отличить ошибку входных данных от программной ошибки.
"""
from typing import Optional, Sequence, TYPE_CHECKING

if TYPE_CHECKING:
    from oodq.design.validation import Violation
    from oodq.ingest.lexer import SourcePosition


class OodqError(ValueError):
    """Базовая ошибка анализатора"""


class ConfigError(OodqError):
    """Некорректная конфигурация"""


class UnknownClassError(OodqError, LookupError):
    """Запрошен класс, которого нет в модели"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Класс '{name}' не объявлен в модели")


class InvalidModelError(OodqError):
    """Модель нарушает инварианты ClassModel"""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = tuple(violations)
        details = "; ".join(str(v) for v in self.violations[:5])
        more = f" (и еще {len(self.violations) - 5})" if len(self.violations) > 5 else ""
        super().__init__(f"Модель некорректна: {details}{more}")


class ParseError(OodqError):
    """Синтаксическая ошибка ODL"""

    def __init__(self, position: "SourcePosition", expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"{position}: ожидалось {expected}, найдено {found!r}")


class LexError(ParseError):
    """Лексическая ошибка ODL (незакрытый комментарий или строка)"""


class FormatError(OodqError):
    """Нарушение формата файла обмена, профиля или опроса"""

    def __init__(self, message: str, path: Optional[str] = None, row: Optional[int] = None):
        self.path = path
        self.row = row
        where = ""
        if path is not None:
            where = f" [{path or '/'}]"
        elif row is not None:
            where = f" [строка {row}]"
        super().__init__(f"{message}{where}")


class ConflictError(OodqError):
    """Один и тот же класс объявлен в нескольких частях модели"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Класс '{name}' объявлен более одного раза")


class MissingMetricError(OodqError, LookupError):
    """Для фактора не хватает значения метрики"""

    def __init__(self, metric: str):
        self.metric = metric
        super().__init__(f"Нет EQ-значения для метрики {metric}")


class MissingPairError(OodqError, LookupError):
    """Для пары (метрика, фактор) нет процента согласия"""

    def __init__(self, metric: str, factor: str):
        self.metric = metric
        self.factor = factor
        super().__init__(f"Нет процента согласия для пары ({metric}, {factor})")


class NoDataError(OodqError, LookupError):
    """На пару (метрика, фактор) никто не ответил"""

    def __init__(self, metric: str, factor: str, group: Optional[str] = None):
        self.metric = metric
        self.factor = factor
        self.group = group
        scope = f" в группе {group}" if group else ""
        super().__init__(f"Нет ответов для пары ({metric}, {factor}){scope}")


class WeightProfileError(OodqError):
    """Некорректный профиль весов"""


class ThresholdProfileError(OodqError):
    """Некорректный профиль порогов EQ"""
