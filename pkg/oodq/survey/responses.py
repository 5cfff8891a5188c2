"""
Ответы анкеты: модель данных и чтение CSV
"""
import csv
import io
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from oodq.exceptions import FormatError
from oodq.metrics.definitions import METRICS
from oodq.quality.model import FACTOR_IDS

logger = logging.getLogger(__name__)

HEADER = ("respondent", "group", "metric", "factor", "answer")

Pair = Tuple[str, str]


class Answer(str, Enum):
    """Ответ на вопрос «влияет ли метрика на фактор»"""
    YES = "yes"
    NO = "no"
    PARTIAL = "partial"


class Group(str, Enum):
    """Группа респондентов"""
    INDUSTRY = "industry"
    ACADEMIC = "academic"


@dataclass(frozen=True)
class SurveyResponse:
    """Анкета одного респондента"""
    respondent: str
    group: Group
    answers: Mapping[Pair, Answer]


@dataclass(frozen=True)
class SurveySummary:
    respondents: int
    industry: int
    academic: int

    @property
    def industry_share(self) -> Fraction:
        """Доля респондентов из индустрии в процентах"""
        if not self.respondents:
            return Fraction(0)
        return Fraction(100 * self.industry, self.respondents)

    def to_dict(self) -> Dict[str, object]:
        return {
            'respondents': self.respondents,
            'industry': self.industry,
            'academic': self.academic,
            'industry_share': round(float(self.industry_share), 2),
        }


@dataclass(frozen=True)
class SurveyDataset:
    """Все анкеты, упорядоченные по идентификатору респондента"""
    responses: Tuple[SurveyResponse, ...] = ()

    def __iter__(self) -> Iterator[SurveyResponse]:
        return iter(self.responses)

    def answers_for(self, metric: str, factor: str, group: Optional[Group] = None) -> List[Answer]:
        """Ответы на пару (метрика, фактор), при необходимости только одной группы"""
        return [
            response.answers[(metric, factor)]
            for response in self.responses
            if (metric, factor) in response.answers and (group is None or response.group is group)
        ]

    @property
    def summary(self) -> SurveySummary:
        industry = sum(1 for r in self.responses if r.group is Group.INDUSTRY)
        return SurveySummary(
            respondents=len(self.responses),
            industry=industry,
            academic=len(self.responses) - industry,
        )


def _enum_value(enum, raw: str, field_name: str, row: int):
    try:
        return enum(raw)
    except ValueError:
        allowed = ", ".join(member.value for member in enum)
        raise FormatError(f"Поле {field_name}: недопустимое значение {raw!r} (допустимо: {allowed})", row=row) from None


def load_responses(text: str) -> SurveyDataset:
    """
    Чтение ответов из CSV с заголовком respondent,group,metric,factor,answer

    Номер строки в ошибках считается от первой строки файла (заголовка).
    """
    reader = csv.reader(io.StringIO(text.lstrip("\ufeff"), newline=""))
    header = next(reader, None)
    if header is None:
        raise FormatError("Пустой файл ответов: нет заголовка", row=1)
    if tuple(cell.strip() for cell in header) != HEADER:
        raise FormatError(f"Ожидался заголовок {','.join(HEADER)}", row=1)

    groups: Dict[str, Group] = {}
    answers: Dict[str, Dict[Pair, Answer]] = {}
    for cells in reader:
        row = reader.line_num
        if not cells or all(not cell.strip() for cell in cells):
            continue
        if len(cells) != len(HEADER):
            raise FormatError(f"Ожидалось {len(HEADER)} полей, получено {len(cells)}", row=row)

        respondent, group_raw, metric, factor, answer_raw = (cell.strip() for cell in cells)
        if not respondent:
            raise FormatError("Пустой идентификатор респондента", row=row)
        group = _enum_value(Group, group_raw, "group", row)
        if metric not in METRICS:
            raise FormatError(f"Неизвестная метрика {metric!r}", row=row)
        if factor not in FACTOR_IDS:
            raise FormatError(f"Неизвестный фактор {factor!r}", row=row)
        answer = _enum_value(Answer, answer_raw, "answer", row)

        if groups.setdefault(respondent, group) is not group:
            raise FormatError(f"Респондент {respondent} указан в разных группах", row=row)
        given = answers.setdefault(respondent, {})
        if (metric, factor) in given:
            raise FormatError(f"Повторный ответ {respondent} на пару ({metric}, {factor})", row=row)
        given[(metric, factor)] = answer

    dataset = SurveyDataset(tuple(
        SurveyResponse(respondent=name, group=groups[name], answers=answers[name])
        for name in sorted(answers)
    ))
    logger.info(f"Загружено анкет: {len(dataset.responses)}")
    return dataset
