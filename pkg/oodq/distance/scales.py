"""
Шкалы EQ: нормализация значений метрик в [0, 1]

Значение переводится линейно между якорями L (EQ = 0) и H (EQ = 1), обрезается
до [0, 1] и округляется до ближайшего кратного шага (0.2 для шести уровней,
0.5 для трех), половина округляется вверх. Вся арифметика точная.
"""
import hashlib
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Literal, Mapping, Optional

from pydantic import BaseModel, ConfigDict, TypeAdapter, ValidationError

from oodq.exceptions import FormatError, MissingMetricError, ThresholdProfileError
from oodq.ingest.interchange import json_pointer
from oodq.metrics.definitions import METRIC_IDS
from oodq.utils.validators import Number, to_fraction, validate_anchors

logger = logging.getLogger(__name__)

DEFAULT_PROFILE_ID = "default"


@dataclass(frozen=True)
class EqScale:
    """Шкала одной метрики: якоря и число уровней (6 или 3)"""
    metric: str
    low: Fraction
    high: Fraction
    levels: int = 6

    def __post_init__(self):
        ok, error = validate_anchors(self.low, self.high, self.levels)
        if not ok:
            raise ThresholdProfileError(f"{self.metric}: {error}")
        object.__setattr__(self, "low", to_fraction(self.low))
        object.__setattr__(self, "high", to_fraction(self.high))

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.levels - 1)

    def to_dict(self) -> Dict[str, object]:
        return {"low": str(self.low), "high": str(self.high), "levels": self.levels}


def quantize_eq(scale: EqScale, value: Number) -> Fraction:
    """EQ-значение метрики на шкале"""
    ratio = (to_fraction(value) - scale.low) / (scale.high - scale.low)
    ratio = min(max(ratio, Fraction(0)), Fraction(1))
    return math.floor(ratio / scale.step + Fraction(1, 2)) * scale.step


# CAM - отношение в [0, 1], поэтому для него взяты те же якоря, что у DAR
_TABLE_I = (
    ("NOC", 0, 8, 6),
    ("NOH", 0, 5, 6),
    ("NOA", 0, 6, 6),
    ("MDIT", 1, 6, 6),
    ("NAR", 0, 7, 6),
    ("NAH", 0, 5, 6),
    ("CAM", "0.05", "0.80", 6),
    ("NOP", 0, 5, 6),
    ("DAR", "0.05", "0.80", 6),
    ("FA", "0.05", "0.80", 3),
    ("DCC", 1, 5, 3),
    ("NOM", 0, 6, 6),
    ("CIS", 0, 6, 3),
    ("EOD", "0.05", "1.00", 6),
)

DEFAULT_SCALES: Dict[str, EqScale] = {
    metric: EqScale(metric, Fraction(low), Fraction(high), levels)
    for metric, low, high, levels in _TABLE_I
}


@dataclass(frozen=True)
class ThresholdProfile:
    """Набор шкал для всех 14 метрик"""
    scales: Mapping[str, EqScale] = field(default_factory=lambda: dict(DEFAULT_SCALES))
    profile_id: str = DEFAULT_PROFILE_ID

    def __getitem__(self, metric: str) -> EqScale:
        return self.scales[metric]


DEFAULT_PROFILE = ThresholdProfile()


class _ScaleRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    low: float | int | str
    high: float | int | str
    levels: Literal[3, 6] = 6


_PROFILE_FILE = TypeAdapter(Dict[str, _ScaleRecord])


def load_threshold_profile(text: str, source: Optional[str] = None) -> ThresholdProfile:
    """
    Чтение профиля порогов из JSON

    Формат: {"NOC": {"low": 0, "high": 10, "levels": 6}, ...}. Метрики, не
    упомянутые в файле, сохраняют шкалы по умолчанию.
    """
    name = source or "<thresholds>"
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{name}: некорректный JSON: {e.msg} (строка {e.lineno})", path="") from e

    try:
        document = _PROFILE_FILE.validate_python(raw)
    except ValidationError as e:
        error = e.errors()[0]
        raise FormatError(f"{name}: {error['msg']}", path=json_pointer(error["loc"])) from e

    scales = dict(DEFAULT_SCALES)
    for metric, record in document.items():
        if metric not in DEFAULT_SCALES:
            raise ThresholdProfileError(f"{name}: неизвестная метрика {metric}")
        scales[metric] = EqScale(metric, record.low, record.high, record.levels)

    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
    logger.info(f"Профиль порогов {name}: переопределено метрик: {len(document)}")
    return ThresholdProfile(scales=scales, profile_id=f"file:{digest}")


def quantize_all(values: Mapping[str, Number], profile: ThresholdProfile = DEFAULT_PROFILE) -> Dict[str, Fraction]:
    """EQ-значения всех 14 метрик в фиксированном порядке"""
    missing = [metric for metric in METRIC_IDS if metric not in values]
    if missing:
        raise MissingMetricError(missing[0])
    return {metric: quantize_eq(profile[metric], values[metric]) for metric in METRIC_IDS}
