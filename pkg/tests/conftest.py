"""
Общие фикстуры и стратегии hypothesis
"""
from pathlib import Path

import pytest
from hypothesis import strategies as st

from oodq.design.models import AttributeDef, ClassDef, ClassModel, MethodDef, Visibility
from oodq.ingest.parser import parse_source

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

CLASS_NAMES = ("C0", "C1", "C2", "C3", "C4")
PRIMITIVES = ("int", "String")


def fixture_path(*parts: str) -> str:
    return str(FIXTURES.joinpath(*parts))


def load_fixture(name: str) -> ClassModel:
    path = FIXTURES / name
    return parse_source(path.read_text(encoding="utf-8"), path.name)


@pytest.fixture
def f0() -> ClassModel:
    return load_fixture("f0.odl")


@pytest.fixture
def f1() -> ClassModel:
    return load_fixture("f1.odl")


@pytest.fixture
def f2() -> ClassModel:
    return load_fixture("f2.odl")


@pytest.fixture
def isolated_env(tmp_path, monkeypatch):
    """Пустой рабочий каталог без .env и без переменных OODQ_*"""
    for key in ("OODQ_LOG_LEVEL", "OODQ_THRESHOLDS", "OODQ_WEIGHTS",
                "OODQ_CONFIDENCE", "OODQ_PARTIAL_CREDIT", "OODQ_MAX_WORKERS"):
        # после теста переменная удаляется, даже если ее выставил load_dotenv
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@st.composite
def class_models(draw, max_classes: int = 5, max_members: int = 3) -> ClassModel:
    """Корректные модели: не больше max_classes классов и max_members членов у каждого"""
    count = draw(st.integers(min_value=0, max_value=max_classes))
    names = CLASS_NAMES[:count]
    types = st.sampled_from(PRIMITIVES + names) if names else st.sampled_from(PRIMITIVES)
    visibility = st.sampled_from(list(Visibility))

    classes = []
    for index, name in enumerate(names):
        # родители только среди ранее объявленных классов, поэтому циклов нет
        parents = draw(st.lists(st.sampled_from(names[:index]), unique=True, max_size=2)) if index else []

        attributes = []
        methods = []
        signatures = set()
        for member in range(draw(st.integers(min_value=0, max_value=max_members))):
            if draw(st.booleans()):
                attributes.append(AttributeDef(
                    f"a{member}", draw(types), draw(visibility), draw(st.booleans()),
                ))
                continue
            method = MethodDef(
                draw(st.sampled_from(("m", "n", "k"))),
                tuple(draw(st.lists(types, max_size=2))),
                "void",
                draw(visibility),
                draw(st.booleans()),
            )
            if method.signature not in signatures:
                signatures.add(method.signature)
                methods.append(method)

        classes.append(ClassDef(
            name=name,
            parents=tuple(parents),
            attributes=tuple(attributes),
            methods=tuple(methods),
            documented=draw(st.booleans()),
        ))

    order = draw(st.permutations(classes))
    return ClassModel(classes=tuple(order))
