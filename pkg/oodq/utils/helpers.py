"""
Вспомогательные функции для форматирования и обработки данных
"""
import hashlib
from fractions import Fraction
from typing import Iterable, Union

Numeric = Union[int, float, Fraction]

CARD_WIDTH = 44


def format_number(value: Numeric, digits: int = 4) -> str:
    """Число для отчета: целые без дробной части, остальные с digits знаками"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.{digits}f}"


def format_percent(value: Numeric) -> str:
    return f"{float(value):.2f}%"


def create_progress_bar(current: Numeric, total: Numeric = 1, length: int = 10) -> str:
    """Создание прогресс-бара"""
    if total == 0:
        return "▱" * length

    percentage = min(Fraction(current) / Fraction(total), Fraction(1))
    filled = int(percentage * length)
    empty = length - filled

    return "▰" * filled + "▱" * empty


def format_card(title: str, lines: Iterable[str]) -> str:
    """Карточка в рамке: заголовок и строки содержимого"""
    rule = "─" * (CARD_WIDTH - 2)
    title = title if len(title) <= CARD_WIDTH - 4 else title[:CARD_WIDTH - 7] + "..."
    card = [f"╭{rule}╮", f"│ {title}", f"├{rule}┤"]
    card.extend(f"│ {line}" for line in lines)
    card.append(f"╰{rule}╯")
    return "\n".join(card)


def content_hash(data: bytes) -> str:
    """SHA-256 содержимого входного файла"""
    return hashlib.sha256(data).hexdigest()
