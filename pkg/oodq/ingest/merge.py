"""
Объединение частей модели и загрузка дизайна из набора файлов
"""
import asyncio
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

from oodq.design.models import ClassDef, ClassModel
from oodq.design.validation import validate
from oodq.exceptions import ConflictError, FormatError, InvalidModelError
from oodq.ingest.interchange import read_model_file
from oodq.ingest.parser import parse_unit

logger = logging.getLogger(__name__)

ODL_SUFFIX = ".odl"
MODEL_SUFFIXES = (".oodm.json", ".json")


def merge_models(parts: Sequence[ClassModel]) -> ClassModel:
    """
    Объединение классов нескольких частей

    Ребра наследования и агрегации выводятся из объявлений, поэтому ссылки
    между частями разрешаются автоматически после объединения.
    """
    classes: Dict[str, ClassDef] = {}
    files: List[str] = []
    for part in sorted(parts, key=lambda p: p.files):
        for class_def in part.classes:
            if class_def.name in classes:
                raise ConflictError(class_def.name)
            classes[class_def.name] = class_def
        files.extend(part.files)
    return ClassModel(classes=tuple(classes.values()), files=tuple(files))


def load_path(path: Path) -> ClassModel:
    """Чтение одного файла без проверки ссылок: ODL или формат обмена по расширению"""
    text = path.read_text(encoding="utf-8")
    name = path.as_posix()
    if path.name.endswith(ODL_SUFFIX):
        return parse_unit(text, name)
    if path.name.endswith(MODEL_SUFFIXES):
        return read_model_file(text, name)
    raise FormatError(f"Неизвестный тип файла: {name} (ожидается .odl или .oodm.json)")


def expand_paths(paths: Iterable[str]) -> List[Path]:
    """Раскрытие каталогов в списки файлов моделей, результат отсортирован"""
    found = set()
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            for candidate in path.rglob("*"):
                if candidate.is_file() and candidate.name.endswith((ODL_SUFFIX, *MODEL_SUFFIXES)):
                    found.add(candidate)
        else:
            found.add(path)
    return sorted(found, key=lambda p: p.as_posix())


async def _load_all(paths: Sequence[Path], max_workers: int) -> List[ClassModel]:
    semaphore = asyncio.Semaphore(max_workers)

    async def load(path: Path) -> ClassModel:
        async with semaphore:
            return await asyncio.to_thread(load_path, path)

    return list(await asyncio.gather(*(load(path) for path in paths)))


def load_design(paths: Iterable[str], max_workers: int = 4) -> Tuple[ClassModel, Tuple[str, ...]]:
    """
    Загрузка дизайна из файлов и каталогов

    Файлы читаются параллельно, но объединяются строго в порядке путей,
    поэтому результат не зависит от порядка завершения потоков.
    """
    files = expand_paths(paths)
    if not files:
        raise FormatError("Не найдено ни одного файла модели")

    parts = asyncio.run(_load_all(files, max_workers))
    model = merge_models(parts)
    violations = validate(model)
    if violations:
        raise InvalidModelError(violations)

    logger.info(f"Загружено классов: {len(model.classes)} из файлов: {len(files)}")
    return model, tuple(p.as_posix() for p in files)
