"""
Функции валидации пользовательских значений
"""
import re
from fractions import Fraction
from typing import Tuple, Optional, Union

IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

# зарезервированные слова ODL не могут быть именами классов, членов и типов
KEYWORDS = frozenset({"class", "interface", "extends", "public", "protected", "private"})

Number = Union[int, float, str, Fraction]


def is_identifier(name: str) -> bool:
    """Проверка, что строка является идентификатором ODL и не ключевым словом"""
    return isinstance(name, str) and IDENTIFIER_RE.fullmatch(name) is not None and name not in KEYWORDS


def to_fraction(value: Number) -> Fraction:
    """
    Точное рациональное представление числа

    float переводится через десятичную запись, чтобы 0.05 из файла
    профиля стало ровно 1/20, а не ближайшей двоичной дробью.
    """
    if isinstance(value, bool):
        raise TypeError("Логическое значение не является числом")
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def validate_confidence(value: str) -> Tuple[bool, Optional[float], str]:
    """
    Валидация уровня доверия

    Returns:
        Tuple[bool, Optional[float], str]: (success, confidence, error_message)
    """
    try:
        confidence = float(value.replace(',', '.'))
    except ValueError:
        return False, None, "Введите корректное число"
    if not 0 < confidence < 1:
        return False, None, "Уровень доверия должен лежать в интервале (0, 1)"
    return True, confidence, ""


def validate_positive_int(value: str) -> Tuple[bool, Optional[int], str]:
    """
    Валидация положительного целого

    Returns:
        Tuple[bool, Optional[int], str]: (success, number, error_message)
    """
    try:
        number = int(value)
    except ValueError:
        return False, None, "Введите целое число"
    if number < 1:
        return False, None, "Значение должно быть не меньше 1"
    return True, number, ""


def validate_anchors(low: Number, high: Number, levels: int) -> Tuple[bool, str]:
    """
    Валидация якорей шкалы EQ

    Returns:
        Tuple[bool, str]: (success, error_message)
    """
    if levels not in (3, 6):
        return False, f"Число уровней должно быть 3 или 6, получено {levels}"
    try:
        if to_fraction(low) >= to_fraction(high):
            return False, f"Нижний якорь {low} должен быть меньше верхнего {high}"
    except (TypeError, ValueError, ZeroDivisionError):
        return False, "Якоря должны быть числами"
    return True, ""


def validate_weight(weight: Number) -> Tuple[bool, Optional[Fraction], str]:
    """
    Валидация отдельного веса

    Returns:
        Tuple[bool, Optional[Fraction], str]: (success, weight, error_message)
    """
    try:
        value = to_fraction(weight)
    except (TypeError, ValueError):
        return False, None, f"Вес {weight!r} не является числом"
    if value < 0 or value > 1:
        return False, None, f"Вес {weight} должен лежать в [0, 1]"
    return True, value, ""
