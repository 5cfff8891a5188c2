"""
Справочник метрик дизайна
"""
from dataclasses import dataclass
from typing import Dict, Tuple


@dataclass(frozen=True)
class MetricInfo:
    """Описание метрики"""
    id: str
    name: str
    definition: str
    per_class: bool


_METRICS = (
    MetricInfo("NOC", "Number of Classes",
               "Total number of classes in the design", False),
    MetricInfo("NOH", "Number of Hierarchies",
               "Number of class hierarchies in the design", False),
    MetricInfo("NOA", "Number of Ancestors",
               "Number of classes along all paths from the root class(es) to all classes in an inheritance", True),
    MetricInfo("MDIT", "Maximum Depth of Inheritance",
               "Longest path from the class to the root of the hierarchy", True),
    MetricInfo("NAR", "Number of Aggregation Relationships",
               "Number of data declarations whose types are user-defined classes", False),
    MetricInfo("NAH", "Number of Aggregation Hierarchies",
               "Total number of aggregation hierarchies", False),
    MetricInfo("CAM", "Cohesion Among Methods of Class",
               "Summation of the intersection of parameter of a method with the maximum "
               "independent set of all parameter types in the class", True),
    MetricInfo("NOP", "Number of Polymorphic Methods",
               "Total methods exhibiting polymorphic behavior", False),
    MetricInfo("DAR", "Data Access Ratio",
               "Ratio of the number of private (protected) attributes to the total number "
               "of attributes declared in the class", True),
    MetricInfo("FA", "Functional Abstraction",
               "Ratio of the number of methods inherited by a class to the total number of "
               "methods accessible by member methods of the class", True),
    MetricInfo("DCC", "Direct Class Coupling",
               "Count of classes that are directly related by attribute declarations and "
               "message passing (parameters) in methods", True),
    MetricInfo("NOM", "Number of Methods",
               "Number of methods defined in a class", True),
    MetricInfo("CIS", "Class Interface Size",
               "Number of public methods in a class", True),
    MetricInfo("EOD", "Extent of Documentation",
               "Based on the documentation availability", False),
)

METRICS: Dict[str, MetricInfo] = {info.id: info for info in _METRICS}

METRIC_IDS: Tuple[str, ...] = tuple(info.id for info in _METRICS)
