"""
Команда survey: таблицы согласия респондентов
"""
import logging
from pathlib import Path
from typing import Optional

import click

from oodq.config import Config
from oodq.metrics.definitions import METRIC_IDS
from oodq.quality.model import FACTOR_IDS
from oodq.reports.builder import read_survey, survey_derived_weights, survey_report
from oodq.reports.render import survey_csv, survey_json, survey_text, to_json
from oodq.utils.decorators import error_handler, log_command

logger = logging.getLogger(__name__)

RENDERERS = {"text": survey_text, "json": survey_json, "csv": survey_csv}


@click.command("survey")
@click.argument("responses", type=click.Path(dir_okay=False))
@click.option("--factor", type=click.Choice(FACTOR_IDS), help="Только таблица одного фактора")
@click.option("--metric", type=click.Choice(METRIC_IDS), help="Влияние одной метрики на ее факторы")
@click.option("--split-groups", is_flag=True, help="Разбивка на индустрию и академию")
@click.option("--ci", "with_ci", is_flag=True, help="Показать доверительные интервалы")
@click.option("--confidence", type=float, help="Уровень доверия (по умолчанию OODQ_CONFIDENCE)")
@click.option("--partial-credit/--no-partial-credit", default=None,
              help="Засчитывать ответ partial как половину согласия")
@click.option("--weights-out", type=click.Path(dir_okay=False), help="Сохранить профиль весов по ответам")
@click.option("--format", "output_format", type=click.Choice(sorted(RENDERERS)), default="text", show_default=True)
@click.pass_obj
@log_command
@error_handler
def survey(
    config: Config,
    responses: str,
    factor: Optional[str],
    metric: Optional[str],
    split_groups: bool,
    with_ci: bool,
    confidence: Optional[float],
    partial_credit: Optional[bool],
    weights_out: Optional[str],
    output_format: str,
) -> int:
    """Проценты согласия по парам (метрика, фактор)"""
    config = config.with_overrides(confidence=confidence, partial_credit=partial_credit)
    dataset, source = read_survey(responses)
    report = survey_report(
        dataset,
        source,
        confidence=config.confidence,
        partial_credit=config.partial_credit,
        factor=factor,
        split_groups=split_groups,
        metric=metric,
    )

    if weights_out:
        profile = survey_derived_weights(dataset, source, config.partial_credit)
        Path(weights_out).write_text(to_json(profile.to_dict()), encoding="utf-8", newline="\n")
        logger.info(f"Профиль весов сохранен: {weights_out}")

    click.echo(RENDERERS[output_format](report, with_ci), nl=False)
    return 0
