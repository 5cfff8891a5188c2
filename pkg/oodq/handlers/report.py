"""
Команда report: анализ дизайна с весами из анкеты и таблицы опроса
"""
from typing import Optional, Tuple

import click

from oodq.config import Config
from oodq.reports.builder import combined_report
from oodq.reports.pdf import write_pdf
from oodq.reports.render import combined_json, combined_text
from oodq.utils.decorators import error_handler, log_command

RENDERERS = {"text": combined_text, "json": combined_json}


@click.command("report")
@click.argument("paths", nargs=-1, required=True)
@click.argument("responses", type=click.Path(dir_okay=False))
@click.option("--format", "output_format", type=click.Choice(sorted(RENDERERS)), default="text", show_default=True)
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False), help="Дополнительно сохранить отчет в PDF")
@click.pass_obj
@log_command
@error_handler
def report(
    config: Config,
    paths: Tuple[str, ...],
    responses: str,
    output_format: str,
    pdf_path: Optional[str],
) -> int:
    """Сводный отчет: метрики, оценки факторов, таблицы и ранжирование метрик"""
    result = combined_report(paths, responses, config)
    if pdf_path:
        write_pdf(result, pdf_path)
    click.echo(RENDERERS[output_format](result), nl=False)
    return 0
