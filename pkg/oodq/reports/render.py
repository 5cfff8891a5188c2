"""
Представление отчетов: текст, JSON, CSV
"""
import csv
import io
import json
import textwrap
from typing import Any, Iterable, List, Optional, Sequence

from oodq.metrics.definitions import METRICS
from oodq.quality.scoring import FactorScore, rank_contributions
from oodq.reports.builder import AnalysisReport, CombinedReport, SurveyReport
from oodq.utils.helpers import CARD_WIDTH, create_progress_bar, format_card, format_number, format_percent

TOP_CONTRIBUTIONS = 3


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# === АНАЛИЗ ДИЗАЙНА ===

def _summary_card(report: AnalysisReport) -> str:
    lines = [f"🏗️ Классов: {report.class_count}", f"📂 Файлов: {len(report.inputs)}"]
    lines.extend(f"   {path}" for path, _ in report.inputs)
    lines.append(f"📏 Пороги: {report.thresholds_profile}")
    lines.append(f"⚖️ Веса: {report.weights_profile}")
    return format_card(f"oodq {report.version}: анализ дизайна", lines)


def _metrics_card(report: AnalysisReport) -> str:
    lines = [
        f"{row['metric']:<5} {format_number(row['value']):>8}  "
        f"{create_progress_bar(row['eq'])} {format_number(row['eq'], 1)}"
        for row in report.metric_rows()
    ]
    return format_card("📊 Метрики (значение, EQ)", lines)


def _score_lines(score: FactorScore, top: Optional[int] = TOP_CONTRIBUTIONS) -> List[str]:
    lines = [f"{score.factor:<18} {create_progress_bar(score.score)} {format_number(score.score)}"]
    for contribution in rank_contributions(score)[:top]:
        lines.append(
            f"┣ {contribution.metric:<5} EQ {format_number(contribution.eq, 1)} "
            f"× {format_number(contribution.weight)} = {format_number(contribution.term)}"
        )
    return lines


def _scores_card(report: AnalysisReport, top: Optional[int] = TOP_CONTRIBUTIONS) -> str:
    lines: List[str] = []
    for score in report.scores:
        lines.extend(_score_lines(score, top))
    if report.overall is not None:
        lines.append(f"{'overall':<18} {create_progress_bar(report.overall)} {format_number(report.overall)}")
    return format_card("🎯 Оценки факторов", lines)


def analysis_text(report: AnalysisReport) -> str:
    return "\n".join([_summary_card(report), _metrics_card(report), _scores_card(report)]) + "\n"


def analysis_csv(report: AnalysisReport) -> str:
    return _csv(
        ("metric", "name", "value", "exact", "eq"),
        (
            (row['metric'], row['name'], format_number(row['value'], 6), str(row['value']), format_number(row['eq'], 1))
            for row in report.metric_rows()
        ),
    )


def scores_text(report: AnalysisReport) -> str:
    return _scores_card(report, top=None) + "\n"


def scores_json(report: AnalysisReport) -> str:
    data = {
        'weights_profile': report.weights_profile,
        'thresholds_profile': report.thresholds_profile,
        'inputs': [{'path': path, 'sha256': digest} for path, digest in report.inputs],
        'scores': [score.to_dict() for score in report.scores],
    }
    if report.overall is not None:
        data['overall'] = float(report.overall)
    return to_json(data)


def scores_csv(report: AnalysisReport) -> str:
    return _csv(
        ("factor", "score", "metric", "criterion", "eq", "weight", "term"),
        (
            (
                score.factor, format_number(score.score, 6), c.metric, c.criterion,
                format_number(c.eq, 1), format_number(c.weight, 6), format_number(c.term, 6),
            )
            for score in report.scores
            for c in rank_contributions(score)
        ),
    )


# === ОПРОС ===

def survey_text(report: SurveyReport, with_ci: bool = False) -> str:
    summary = report.summary
    cards = [format_card("🗳️ Ответы анкеты", [
        f"👥 Респондентов: {summary.respondents}",
        f"┣ 🏭 Индустрия: {summary.industry} ({format_percent(summary.industry_share)})",
        f"┗ 🎓 Академия: {summary.academic}",
    ])]
    if report.metric is not None:
        info = METRICS[report.metric]
        cards.append(format_card(f"📏 {info.id}: {info.name}", textwrap.wrap(info.definition, CARD_WIDTH - 4)))

    for factor, rows in report.tables.items():
        lines = []
        for row in rows:
            if not row.has_data:
                lines.append(f"{row.metric:<5} нет ответов")
                continue
            line = f"{row.metric:<5} {create_progress_bar(row.agreement_pct, 100)} {format_percent(row.agreement_pct):>7}"
            if with_ci:
                line += f"  [{row.ci_low:.2f}; {row.ci_high:.2f}]"
            lines.append(line)
        for metric, industry, academic in report.splits.get(factor, ()):
            lines.append(
                f"┣ {metric:<5} индустрия {format_percent(industry.agreement_pct) if industry else '-':>7}"
                f"  академия {format_percent(academic.agreement_pct) if academic else '-':>7}"
            )
        cards.append(format_card(f"📈 Влияние метрик на {factor}", lines))

    return "\n".join(cards) + "\n"


def survey_csv(report: SurveyReport, with_ci: bool = False) -> str:
    header = ["factor", "metric", "n", "yes", "partial", "agreement_pct"]
    if with_ci:
        header += ["ci_low", "ci_high"]

    def rows():
        for factor, table in report.tables.items():
            for row in table:
                values = [factor, row.metric, row.n, row.yes_count, row.partial_count, f"{float(row.agreement_pct):.2f}"]
                if with_ci:
                    values += [f"{row.ci_low:.2f}", f"{row.ci_high:.2f}"]
                yield values

    return _csv(header, rows())


def survey_json(report: SurveyReport, with_ci: bool = False) -> str:
    return to_json(report.to_dict(with_ci))


# === СВОДНЫЙ ОТЧЕТ ===

def combined_text(report: CombinedReport) -> str:
    ranking = [
        f"{factor:<18} {' > '.join(metrics[:TOP_CONTRIBUTIONS]) or '-'}"
        for factor, metrics in report.survey.ranking.items()
    ]
    return "".join([
        analysis_text(report.analysis),
        survey_text(report.survey, with_ci=True),
        format_card("🏆 Наиболее влияющие метрики", ranking) + "\n",
    ])


def combined_json(report: CombinedReport) -> str:
    return to_json(report.to_dict())
