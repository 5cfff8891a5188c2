"""
Конфигурация анализатора
"""
import os
import logging
from dataclasses import dataclass, replace
from typing import Optional
from dotenv import load_dotenv

from oodq.exceptions import ConfigError
from oodq.utils.validators import validate_confidence, validate_positive_int

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(log_level: str = "WARNING") -> None:
    """Настройка логирования (все диагностические сообщения идут в stderr)"""
    level = getattr(logging, log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
        ],
        force=True,
    )


def get_env(key: str, default: Optional[str] = None, required: bool = False) -> str:
    """Получение переменной окружения"""
    value = os.getenv(key, default)
    if required and not value:
        raise ConfigError(f"Переменная окружения {key} обязательна")
    return value or ""


@dataclass(frozen=True)
class Config:
    """Конфигурация анализатора"""
    log_level: str
    thresholds_path: str
    weights: str
    confidence: float
    partial_credit: bool
    max_workers: int

    @classmethod
    def from_env(cls, env_file: str = ".env") -> "Config":
        """Создание конфигурации из переменных окружения"""
        try:
            if load_dotenv(env_file):
                logger.info(f"Конфигурация загружена из {env_file}")
        except Exception as e:
            logger.warning(f"Не удалось загрузить {env_file}: {e}")

        ok, confidence, error = validate_confidence(get_env("OODQ_CONFIDENCE", "0.95"))
        if not ok:
            raise ConfigError(f"OODQ_CONFIDENCE: {error}")

        ok, max_workers, error = validate_positive_int(get_env("OODQ_MAX_WORKERS", "4"))
        if not ok:
            raise ConfigError(f"OODQ_MAX_WORKERS: {error}")

        config = cls(
            log_level=get_env("OODQ_LOG_LEVEL", "WARNING"),
            thresholds_path=get_env("OODQ_THRESHOLDS", ""),
            weights=get_env("OODQ_WEIGHTS", "equal"),
            confidence=confidence,
            partial_credit=get_env("OODQ_PARTIAL_CREDIT", "false").lower() == "true",
            max_workers=max_workers,
        )
        config.validate()
        return config

    def with_overrides(self, **changes) -> "Config":
        """Копия конфигурации с параметрами из командной строки"""
        changes = {key: value for key, value in changes.items() if value is not None}
        updated = replace(self, **changes)
        updated.validate()
        return updated

    def validate(self) -> None:
        """Валидация конфигурации"""
        if self.log_level.upper() not in logging.getLevelNamesMapping():
            raise ConfigError(f"Неизвестный уровень логирования: {self.log_level}")

        if not self.weights:
            raise ConfigError("Профиль весов не может быть пустым")

        if not 0 < self.confidence < 1:
            raise ConfigError("Уровень доверия должен лежать в (0, 1)")

        if self.max_workers < 1:
            raise ConfigError("OODQ_MAX_WORKERS должен быть не меньше 1")

        if self.thresholds_path and not os.path.exists(self.thresholds_path):
            logger.warning(f"Файл порогов {self.thresholds_path} не найден")

        logger.debug("Конфигурация валидна")
