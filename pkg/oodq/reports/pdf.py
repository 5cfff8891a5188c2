"""
PDF-версия сводного отчета (reportlab)

Встроенные шрифты PDF не содержат кириллицы, поэтому подписи в документе
на английском.
"""
import logging
from typing import List, Sequence

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.lib.units import mm
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from oodq.metrics.definitions import METRICS
from oodq.quality.scoring import rank_contributions
from oodq.reports.builder import AnalysisReport, CombinedReport, SurveyReport
from oodq.utils.helpers import format_number

logger = logging.getLogger(__name__)

TABLE_STYLE = TableStyle([
    ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#2f4f6f")),
    ("TEXTCOLOR", (0, 0), (-1, 0), colors.white),
    ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
    ("FONTSIZE", (0, 0), (-1, -1), 8),
    ("ALIGN", (1, 1), (-1, -1), "RIGHT"),
    ("GRID", (0, 0), (-1, -1), 0.25, colors.grey),
    ("ROWBACKGROUNDS", (0, 1), (-1, -1), [colors.white, colors.HexColor("#eef2f5")]),
])


def _table(header: Sequence[str], rows: List[Sequence[str]]) -> Table:
    table = Table([list(header)] + [list(row) for row in rows], repeatRows=1, hAlign="LEFT")
    table.setStyle(TABLE_STYLE)
    return table


def definition_flowables(metric_ids: Sequence[str], styles) -> list:
    """Абзацы с определениями метрик"""
    infos = [METRICS[metric] for metric in metric_ids]
    return [Paragraph(f"<b>{info.id}</b> ({info.name}): {info.definition}", styles["Normal"]) for info in infos]


def _analysis_flowables(report: AnalysisReport, styles) -> list:
    story = [
        Paragraph("Design analysis", styles["Heading2"]),
        Paragraph(
            f"Classes: {report.class_count}; thresholds: {report.thresholds_profile}; "
            f"weights: {report.weights_profile}",
            styles["Normal"],
        ),
        Spacer(1, 4 * mm),
        _table(
            ("Metric", "Name", "Value", "EQ"),
            [
                (row["metric"], row["name"], format_number(row["value"]), format_number(row["eq"], 1))
                for row in report.metric_rows()
            ],
        ),
        Spacer(1, 4 * mm),
        Paragraph("Metric definitions", styles["Heading3"]),
        *definition_flowables([row["metric"] for row in report.metric_rows()], styles),
        Spacer(1, 6 * mm),
        Paragraph("Quality factors", styles["Heading2"]),
    ]
    rows = []
    for score in report.scores:
        ranked = rank_contributions(score)
        leaders = ", ".join(c.metric for c in ranked[:3])
        rows.append((score.factor, format_number(score.score), leaders))
    story.append(_table(("Factor", "Score", "Largest contributions"), rows))
    return story


def _survey_flowables(report: SurveyReport, styles) -> list:
    summary = report.summary
    story = [
        Paragraph("Expert survey", styles["Heading2"]),
        Paragraph(
            f"Respondents: {summary.respondents} (industry {summary.industry}, "
            f"academic {summary.academic}); confidence level {report.confidence}",
            styles["Normal"],
        ),
    ]
    for factor, table in report.tables.items():
        story.append(Spacer(1, 4 * mm))
        story.append(Paragraph(f"Impact of metrics on {factor}", styles["Heading3"]))
        story.append(_table(
            ("Metric", "n", "Agreement %", "CI low", "CI high"),
            [
                (row.metric, str(row.n), f"{float(row.agreement_pct):.2f}", f"{row.ci_low:.2f}", f"{row.ci_high:.2f}")
                for row in table
            ],
        ))
    return story


def write_pdf(report: CombinedReport, path: str) -> None:
    """Запись сводного отчета в PDF"""
    styles = getSampleStyleSheet()
    document = SimpleDocTemplate(
        path,
        pagesize=A4,
        title="oodq design quality report",
        author="oodq",
        invariant=1,
    )
    story = [Paragraph(f"oodq {report.analysis.version}: design quality report", styles["Title"])]
    story.extend(_analysis_flowables(report.analysis, styles))
    story.append(Spacer(1, 8 * mm))
    story.extend(_survey_flowables(report.survey, styles))
    document.build(story)
    logger.info(f"PDF-отчет сохранен: {path}")
