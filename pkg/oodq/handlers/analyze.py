"""
Команда analyze: метрики, EQ-значения и оценки факторов
"""
import logging
from pathlib import Path
from typing import Optional, Tuple

import click

from oodq.config import Config
from oodq.ingest.interchange import write_model_file
from oodq.reports.builder import analyze_from_config
from oodq.reports.render import analysis_csv, analysis_text, to_json
from oodq.utils.decorators import error_handler, log_command

logger = logging.getLogger(__name__)

RENDERERS = {
    "text": analysis_text,
    "json": lambda report: to_json(report.to_dict()),
    "csv": analysis_csv,
}


@click.command("analyze")
@click.argument("paths", nargs=-1, required=True)
@click.option("--format", "output_format", type=click.Choice(sorted(RENDERERS)), default="text",
              show_default=True, help="Формат вывода")
@click.option("--model-out", type=click.Path(dir_okay=False), help="Сохранить объединенную модель в формате обмена")
@click.pass_obj
@log_command
@error_handler
def analyze(config: Config, paths: Tuple[str, ...], output_format: str, model_out: Optional[str]) -> int:
    """Анализ дизайна из файлов .odl / .oodm.json или каталогов"""
    report = analyze_from_config(paths, config)

    if model_out:
        Path(model_out).write_text(write_model_file(report.model), encoding="utf-8", newline="\n")
        logger.info(f"Модель сохранена: {model_out}")

    click.echo(RENDERERS[output_format](report), nl=False)
    return 0
