from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.core.config import REPORT_SCHEMA_VERSION


class Verdict(str, Enum):
    """Итог проверки кода"""
    VALID = "valid"
    INVALID = "invalid"


class ConstructionMethod(str, Enum):
    """Рандомизированные конструкторы"""
    LLL = "lll"
    GIRTH5 = "girth5"
    RRG = "rrg"


class ExtremalFamily(str, Enum):
    """Экстремальные семейства"""
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"
    AK = "ak"


class Timing(BaseModel):
    """Время выполнения; единственная часть отчёта, которая меняется между запусками"""
    timestamp: datetime
    elapsed_seconds: float = Field(..., ge=0)
    trial_seconds: List[float] = Field(default_factory=list)


class ViolationOut(BaseModel):
    kind: str
    witnesses: List[int]


class CertificateOut(BaseModel):
    """Сертификат кода: {valid, code, violations}"""
    valid: bool
    verdict: Verdict
    code: List[int]
    size: int = Field(..., ge=0)
    violations: List[ViolationOut] = Field(default_factory=list)
    truncated: bool = False


class SolveResultOut(BaseModel):
    """Результат решателя; optimal=False означает исчерпанный бюджет"""
    gamma: int = Field(..., ge=0)
    optimal: bool
    method: str
    code: List[int]
    nodes: int = Field(0, ge=0)
    timing: Optional[Timing] = None


class BoundRowOut(BaseModel):
    name: str
    value: float
    kind: str
    asymptotic: bool
    formula: str


class LowerBoundsOut(BaseModel):
    log_lower: int
    degree_lower: int
    forced_lower: int
    best_lower: int
    trivial_upper: int


class BoundsReportOut(BaseModel):
    """Таблица оценок: нижние оценки для конкретного графа и справочные формулы"""
    schema_version: int = REPORT_SCHEMA_VERSION
    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    delta: Optional[int] = None
    f_ratio: float = Field(..., gt=0, le=1)
    lower: Optional[LowerBoundsOut] = None
    rows: List[BoundRowOut] = Field(default_factory=list)


class ConstructionOut(BaseModel):
    """Результат рандомизированного конструктора"""
    schema_version: int = REPORT_SCHEMA_VERSION
    method: ConstructionMethod
    seed: Optional[int] = None
    n: int = Field(..., ge=1)
    code: List[int]
    code_size: int = Field(..., ge=0)
    removed_size: int = Field(..., ge=0)
    valid: bool
    restarts_used: int = Field(0, ge=0)
    resamples_used: int = Field(0, ge=0)
    size_target: Optional[float] = None
    met_size_target: bool = False
    p: Optional[float] = None
    stats: Dict[str, Any] = Field(default_factory=dict)


class ExtremalSidecarOut(BaseModel):
    """JSON-компаньон файла графа экстремального семейства"""
    schema_version: int = REPORT_SCHEMA_VERSION
    family: str
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    max_degree: int = Field(..., ge=0)
    claimed_gamma: int = Field(..., ge=0)
    optimal_code: List[int]
    parameters: Dict[str, int] = Field(default_factory=dict)
    port_map: List[List[int]] = Field(default_factory=list)  # пары [порт, f(порт)]


class SampleStatsOut(BaseModel):
    """Статистика модели конфигураций с асимптотическими ориентирами"""
    schema_version: int = REPORT_SCHEMA_VERSION
    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    seed: Optional[int] = None
    trials: int = Field(..., ge=0)
    accepted_simple: int = Field(..., ge=0)
    acceptance_rate: float = Field(..., ge=0, le=1)
    mean_x3: float = Field(..., ge=0)
    mean_x4: float = Field(..., ge=0)
    twin_fraction: float = Field(..., ge=0, le=1)
    references: Dict[str, float] = Field(default_factory=dict)
    timing: Optional[Timing] = None


class ExperimentConfig(BaseModel):
    command: str
    method: str
    seed: int = Field(..., ge=0)
    n: List[int] = Field(..., min_length=1)  # порядки графов
    d: int = Field(..., ge=1)
    trials: int = Field(..., ge=1)


class TrialRecord(BaseModel):
    """Одно испытание: размер проверенного множества и доля от n"""
    trial: int = Field(..., ge=0)
    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    size: int = Field(..., ge=0)
    ratio: float = Field(..., ge=0, le=1)
    valid: bool
    optimal: Optional[bool] = None  # только для точного решателя
    extra: Dict[str, Any] = Field(default_factory=dict)


class ExperimentAggregates(BaseModel):
    mean_ratio: float
    min_ratio: float
    max_ratio: float
    references: Dict[str, float] = Field(default_factory=dict)

    @classmethod
    def create(cls, records: List[TrialRecord], references: Dict[str, float]) -> 'ExperimentAggregates':
        """Агрегаты пересчитываются из записей испытаний"""
        ratios = [r.ratio for r in records]
        return cls(
            mean_ratio=sum(ratios) / len(ratios) if ratios else 0.0,
            min_ratio=min(ratios, default=0.0),
            max_ratio=max(ratios, default=0.0),
            references=references,
        )


class ExperimentReport(BaseModel):
    """Отчёт эксперимента; при одинаковых входах совпадает побайтно вне секции timing"""
    schema_version: int = REPORT_SCHEMA_VERSION
    config: ExperimentConfig
    records: List[TrialRecord]
    aggregates: ExperimentAggregates
    timing: Optional[Timing] = None


class CorpusSummaryOut(BaseModel):
    max_n: int = Field(..., ge=1, le=8)
    counts: Dict[str, int]
    twin_free_counts: Dict[str, int]
    total: int = Field(..., ge=0)


class ErrorDetail(BaseModel):
    code: str
    message: str
    run_id: str
    command: Optional[str] = None


class ErrorResponse(BaseModel):
    """Машиночитаемая причина ошибки команды"""
    error: ErrorDetail


__all__ = [  # экспортируемые классы
    "Verdict",
    "ConstructionMethod",
    "ExtremalFamily",
    "Timing",
    "ViolationOut",
    "CertificateOut",
    "SolveResultOut",
    "BoundRowOut",
    "LowerBoundsOut",
    "BoundsReportOut",
    "ConstructionOut",
    "ExtremalSidecarOut",
    "SampleStatsOut",
    "ExperimentConfig",
    "TrialRecord",
    "ExperimentAggregates",
    "ExperimentReport",
    "CorpusSummaryOut",
    "ErrorDetail",
    "ErrorResponse",
]
