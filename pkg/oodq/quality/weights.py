"""
Профили весов метрик внутри факторов
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Dict, Mapping, Optional, Tuple

from pydantic import TypeAdapter, ValidationError

from oodq.exceptions import FormatError, MissingPairError, WeightProfileError
from oodq.ingest.interchange import json_pointer
from oodq.quality.model import DEFAULT_QUALITY_MODEL, QualityModel
from oodq.utils.validators import Number, to_fraction, validate_weight

logger = logging.getLogger(__name__)

SUM_TOLERANCE = Fraction(1, 10 ** 9)

EQUAL_PROFILE_ID = "equal"
SURVEY_PROFILE_ID = "survey"


@dataclass(frozen=True)
class WeightProfile:
    """Веса (фактор -> метрика -> вес); сумма весов каждого фактора равна 1"""
    weights: Mapping[str, Mapping[str, Fraction]]
    profile_id: str = EQUAL_PROFILE_ID

    def __post_init__(self):
        for factor, weights in self.weights.items():
            for metric, weight in weights.items():
                ok, _, error = validate_weight(weight)
                if not ok:
                    raise WeightProfileError(f"{factor}/{metric}: {error}")
            total = sum((to_fraction(w) for w in weights.values()), Fraction(0))
            if abs(total - 1) > SUM_TOLERANCE:
                raise WeightProfileError(
                    f"Сумма весов фактора {factor} равна {float(total):.6f}, ожидалось 1"
                )

    def weight(self, factor: str, metric: str) -> Fraction:
        try:
            return to_fraction(self.weights[factor][metric])
        except KeyError:
            raise WeightProfileError(f"Нет веса для пары ({metric}, {factor})") from None

    def check_covers(self, model: QualityModel) -> None:
        """Профиль должен задавать вес для каждой пары модели и только для них"""
        for factor in model.factors:
            given = self.weights.get(factor.id)
            if given is None:
                raise WeightProfileError(f"В профиле нет фактора {factor.id}")
            if set(given) != set(factor.metrics):
                extra = sorted(set(given) - set(factor.metrics))
                missing = sorted(set(factor.metrics) - set(given))
                raise WeightProfileError(
                    f"Фактор {factor.id}: лишние метрики {extra}, отсутствуют {missing}"
                )
        unknown = sorted(set(self.weights) - set(model.factor_ids))
        if unknown:
            raise WeightProfileError(f"Неизвестный фактор {unknown[0]}")

    def to_dict(self) -> Dict[str, Dict[str, float]]:
        return {
            factor: {metric: float(weight) for metric, weight in weights.items()}
            for factor, weights in self.weights.items()
        }


def equal_weights(model: QualityModel = DEFAULT_QUALITY_MODEL) -> WeightProfile:
    """Равные веса: ровно 1/n для фактора из n метрик"""
    return WeightProfile(
        weights={
            factor.id: {metric: Fraction(1, len(factor.metrics)) for metric in factor.metrics}
            for factor in model.factors
        },
        profile_id=EQUAL_PROFILE_ID,
    )


def weights_from_survey(
    percentages: Mapping[Tuple[str, str], Number],
    model: QualityModel = DEFAULT_QUALITY_MODEL,
    profile_id: str = SURVEY_PROFILE_ID,
) -> WeightProfile:
    """Вес метрики в факторе пропорционален проценту согласия респондентов"""
    weights: Dict[str, Dict[str, Fraction]] = {}
    for factor in model.factors:
        values = {}
        for metric in factor.metrics:
            if (metric, factor.id) not in percentages:
                raise MissingPairError(metric, factor.id)
            values[metric] = to_fraction(percentages[(metric, factor.id)])
        total = sum(values.values(), Fraction(0))
        if total <= 0:
            raise WeightProfileError(f"Для фактора {factor.id} нет ни одного согласия")
        weights[factor.id] = {metric: value / total for metric, value in values.items()}
    return WeightProfile(weights=weights, profile_id=profile_id)


def published_agreement() -> Dict[Tuple[str, str], Fraction]:
    """Опубликованные проценты согласия из поставляемого файла данных"""
    text = resources.files("oodq.data").joinpath("survey_agreement.json").read_text(encoding="utf-8")
    table = json.loads(text)
    return {
        (metric, factor): to_fraction(pct)
        for factor, row in table.items()
        for metric, pct in row.items()
    }


def survey_weights(model: QualityModel = DEFAULT_QUALITY_MODEL) -> WeightProfile:
    return weights_from_survey(published_agreement(), model)


_WEIGHT_FILE = TypeAdapter(Dict[str, Dict[str, float | int | str]])


def load_weight_profile(
    text: str,
    source: Optional[str] = None,
    model: QualityModel = DEFAULT_QUALITY_MODEL,
) -> WeightProfile:
    """
    Чтение профиля весов из JSON

    Формат: {"functionality": {"NOC": 0.2, ...}, ...}; профиль должен покрывать
    все пары модели, веса каждого фактора в сумме дают 1.
    """
    name = source or "<weights>"
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{name}: некорректный JSON: {e.msg} (строка {e.lineno})", path="") from e

    try:
        document = _WEIGHT_FILE.validate_python(raw)
    except ValidationError as e:
        error = e.errors()[0]
        raise FormatError(f"{name}: {error['msg']}", path=json_pointer(error["loc"])) from e

    weights = {}
    for factor, row in document.items():
        weights[factor] = {}
        for metric, value in row.items():
            ok, weight, error = validate_weight(value)
            if not ok:
                raise WeightProfileError(f"{name}: {factor}/{metric}: {error}")
            weights[factor][metric] = weight

    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
    profile = WeightProfile(weights=weights, profile_id=f"file:{digest}")
    profile.check_covers(model)
    logger.info(f"Профиль весов {name} загружен")
    return profile


def resolve_weights(spec: str, model: QualityModel = DEFAULT_QUALITY_MODEL) -> WeightProfile:
    """Профиль по значению --weights: equal, survey или путь к файлу"""
    if spec == EQUAL_PROFILE_ID:
        return equal_weights(model)
    if spec == SURVEY_PROFILE_ID:
        return survey_weights(model)
    with open(spec, encoding="utf-8") as f:
        return load_weight_profile(f.read(), spec, model)
