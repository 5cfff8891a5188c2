"""
Каноничный формат обмена моделью (.oodm.json)
"""
import json
import logging
from typing import List, Literal

from pydantic import BaseModel, ConfigDict, StrictBool, StrictStr, ValidationError

from oodq.design.models import AttributeDef, ClassDef, ClassKind, ClassModel, MethodDef, Visibility
from oodq.design.validation import DUPLICATE_CLASS, validate
from oodq.exceptions import FormatError, InvalidModelError

logger = logging.getLogger(__name__)


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class AttributeRecord(_Record):
    name: StrictStr
    type: StrictStr
    visibility: Literal["public", "protected", "private"]
    documented: StrictBool = False


class MethodRecord(_Record):
    name: StrictStr
    params: List[StrictStr] = []
    returns: StrictStr = "void"
    visibility: Literal["public", "protected", "private"]
    documented: StrictBool = False


class ClassRecord(_Record):
    name: StrictStr
    kind: Literal["class", "interface"] = "class"
    parents: List[StrictStr] = []
    documented: StrictBool = False
    attributes: List[AttributeRecord] = []
    methods: List[MethodRecord] = []


class ModelFile(_Record):
    classes: List[ClassRecord]


def json_pointer(location) -> str:
    """Путь ошибки pydantic в виде JSON Pointer (RFC 6901)"""
    parts = [str(part).replace("~", "~0").replace("/", "~1") for part in location]
    return "/" + "/".join(parts) if parts else ""


def _to_class(record: ClassRecord) -> ClassDef:
    return ClassDef(
        name=record.name,
        kind=ClassKind(record.kind),
        parents=tuple(record.parents),
        documented=record.documented,
        attributes=tuple(
            AttributeDef(a.name, a.type, Visibility(a.visibility), a.documented)
            for a in record.attributes
        ),
        methods=tuple(
            MethodDef(m.name, tuple(m.params), m.returns, Visibility(m.visibility), m.documented)
            for m in record.methods
        ),
    )


def read_model_file(text: str, file: str = "<input>") -> ClassModel:
    """Чтение модели без проверки инвариантов (ссылки могут вести в другие файлы)"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{file}: некорректный JSON: {e.msg} (строка {e.lineno})", path="") from e

    # отчет analyze --format json содержит модель в поле model
    prefix: tuple = ()
    if isinstance(raw, dict) and "classes" not in raw and isinstance(raw.get("model"), dict):
        raw, prefix = raw["model"], ("model",)

    try:
        document = ModelFile.model_validate(raw)
    except ValidationError as e:
        error = e.errors()[0]
        raise FormatError(f"{file}: {error['msg']}", path=json_pointer(prefix + tuple(error["loc"]))) from e

    model = ClassModel(classes=tuple(_to_class(r) for r in document.classes), files=(file,))
    logger.debug(f"{file}: загружено классов: {len(model.classes)}")
    return model


def load_model_file(text: str, file: str = "<input>") -> ClassModel:
    """Чтение модели из текста формата обмена"""
    model = read_model_file(text, file)
    violations = validate(model)
    if violations:
        first = violations[0]
        position = model.names.index(first.class_name) if first.class_name in model.names else 0
        if first.rule == DUPLICATE_CLASS:
            position = [i for i, n in enumerate(model.names) if n == first.class_name][1]
            raise FormatError(f"{file}: duplicate class '{first.class_name}'", path=f"/classes/{position}/name")
        raise FormatError(f"{file}: {first}", path=f"/classes/{position}")

    return model


def write_model_file(model: ClassModel) -> str:
    """Запись модели в каноничный текст (классы по имени, члены в порядке объявления)"""
    violations = validate(model)
    if violations:
        raise InvalidModelError(violations)
    return json.dumps(model.to_dict(), indent=2, ensure_ascii=False) + "\n"
