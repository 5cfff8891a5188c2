"""
Команда convert: ODL <-> формат обмена
"""
import logging
from pathlib import Path

import click

from oodq.ingest.interchange import load_model_file, write_model_file
from oodq.ingest.merge import MODEL_SUFFIXES, ODL_SUFFIX
from oodq.ingest.parser import parse_source, write_source
from oodq.exceptions import FormatError
from oodq.utils.decorators import error_handler, log_command

logger = logging.getLogger(__name__)


def convert_text(text: str, source: str) -> str:
    """Направление преобразования определяется расширением входного файла"""
    if source.endswith(ODL_SUFFIX):
        return write_model_file(parse_source(text, source))
    if source.endswith(MODEL_SUFFIXES):
        return write_source(load_model_file(text, source))
    raise FormatError(f"Неизвестный тип файла: {source} (ожидается .odl или .oodm.json)")


@click.command("convert")
@click.argument("source", type=click.Path(dir_okay=False))
@click.argument("target", type=click.Path(dir_okay=False))
@log_command
@error_handler
def convert(source: str, target: str) -> int:
    """Преобразование модели из ODL в формат обмена или обратно"""
    text = Path(source).read_text(encoding="utf-8")
    Path(target).write_text(convert_text(text, source), encoding="utf-8", newline="\n")
    logger.info(f"{source} -> {target}")
    return 0
