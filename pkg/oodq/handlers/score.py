"""
Команда score: оценки пяти факторов качества
"""
from typing import Optional, Tuple

import click

from oodq.config import Config
from oodq.reports.builder import analyze_from_config
from oodq.reports.render import scores_csv, scores_json, scores_text
from oodq.utils.decorators import error_handler, log_command

RENDERERS = {"text": scores_text, "json": scores_json, "csv": scores_csv}


@click.command("score")
@click.argument("paths", nargs=-1, required=True)
@click.option("--weights", help="Профиль весов: equal, survey или путь к JSON (по умолчанию OODQ_WEIGHTS)")
@click.option("--thresholds", type=click.Path(dir_okay=False),
              help="Профиль порогов EQ (по умолчанию OODQ_THRESHOLDS или встроенный)")
@click.option("--overall", is_flag=True, help="Добавить невзвешенное среднее пяти факторов")
@click.option("--format", "output_format", type=click.Choice(sorted(RENDERERS)), default="text", show_default=True)
@click.pass_obj
@log_command
@error_handler
def score(
    config: Config,
    paths: Tuple[str, ...],
    weights: Optional[str],
    thresholds: Optional[str],
    overall: bool,
    output_format: str,
) -> int:
    """Оценки факторов качества по EQ-значениям метрик"""
    config = config.with_overrides(weights=weights, thresholds_path=thresholds)
    report = analyze_from_config(paths, config, with_overall=overall)
    click.echo(RENDERERS[output_format](report), nl=False)
    return 0
