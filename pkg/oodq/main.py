"""
Точка входа командной строки oodq
"""
import logging
import sys
from typing import Optional, Sequence

import click

from oodq import __version__
from oodq.config import Config, setup_logging
from oodq.exceptions import OodqError
from oodq.handlers import COMMANDS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT_ERROR = 2

VERBOSITY = {1: "INFO", 2: "DEBUG"}


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", count=True, help="Подробнее в stderr (-v INFO, -vv DEBUG)")
@click.version_option(__version__, prog_name="oodq")
@click.pass_context
def cli(ctx: click.Context, verbose: int) -> None:
    """Анализ качества объектно-ориентированного дизайна по метрикам"""
    config = Config.from_env()
    if verbose:
        config = config.with_overrides(log_level=VERBOSITY[min(verbose, 2)])
    setup_logging(config.log_level)
    logger.debug(f"Конфигурация: {config}")
    ctx.obj = config


for command in COMMANDS:
    cli.add_command(command)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Запуск CLI с кодами выхода: 0 - успех, 1 - ошибка использования,
    2 - ошибка входных данных
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args=args, prog_name="oodq", standalone_mode=False)
    except click.UsageError as e:
        if e.ctx is not None:
            click.echo(e.ctx.get_help(), err=True)
        click.echo(f"Ошибка: {e.format_message()}", err=True)
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except OodqError as e:
        click.echo(f"⚠️ {e}", err=True)
        return EXIT_INPUT_ERROR
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
