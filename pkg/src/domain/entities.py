from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from src.domain.graph import Graph, VertexSet


class ViolationKind(str, Enum):
    """Виды нарушений идентифицирующего кода"""
    UNDOMINATED = "undominated"
    UNSEPARATED = "unseparated"
    TWINS = "twins"


@dataclass(frozen=True)
class Violation:
    """Одно нарушение с вершинами-свидетелями"""
    kind: ViolationKind
    witnesses: Tuple[int, ...]


@dataclass
class CheckResult:
    """Результат проверки свойства (доминирование, 2-доминирование, разделение)"""
    ok: bool
    witnesses: List[Any] = field(default_factory=list)  # вершины или пары вершин

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class CodeCertificate:
    """
    Кандидат в идентифицирующий код вместе с вердиктом проверки.
    Вердикт точный, даже если список свидетелей обрезан лимитом.
    """
    code: VertexSet
    violations: List[Violation] = field(default_factory=list)
    truncated: bool = False  # свидетелей было больше лимита

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        verdict = "valid" if self.valid else f"invalid ({len(self.violations)} violations)"
        return f"code of size {len(self.code)}: {verdict}"


@dataclass
class ForcedReport:
    """Вынужденные вершины F и доля невынужденных f(G)"""
    forced: VertexSet
    n: int

    @property
    def f_ratio(self) -> Fraction:
        return Fraction(self.n - len(self.forced), self.n)


@dataclass
class BoundReport:
    """Классические нижние оценки и тривиальная верхняя"""
    n: int
    log_lower: int
    degree_lower: int
    forced_lower: int
    trivial_upper: int

    @property
    def best_lower(self) -> int:
        return max(self.log_lower, self.degree_lower, self.forced_lower)


@dataclass(frozen=True)
class ReferenceValue:
    """
    Значение формулы-оценки. Асимптотические строки содержат неизвестные
    o(1)/O(1) члены и никогда не используются как утверждения.
    """
    name: str
    value: float
    kind: str  # upper | lower
    asymptotic: bool
    formula: str


@dataclass(frozen=True)
class LllParameters:
    """Параметры конструктора с локальной леммой"""
    d: int
    f_ratio: float
    k: float
    p: float
    size_target_ratio: float  # f^2 / (103 d); цель |S| = ratio * n

    def size_target(self, n: int) -> float:
        return self.size_target_ratio * n


@dataclass
class ConstructorResult:
    """Результат рандомизированного построения кода"""
    method: str
    code: VertexSet
    removed: VertexSet  # S: вершины вне кода
    seed: Optional[int] = None
    restarts_used: int = 0
    resamples_used: int = 0
    size_target: Optional[float] = None
    met_size_target: bool = False
    p: Optional[float] = None
    stats: Dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.code)


@dataclass
class ExtremalInstance:
    """Граф из экстремального семейства с заверенным оптимальным кодом"""
    family: str  # C1 | C2 | C3 | AkUniversal
    graph: Graph
    optimal_code: VertexSet
    claimed_gamma: int
    parameters: Dict[str, int] = field(default_factory=dict)
    port_map: Dict[int, int] = field(default_factory=dict)  # порт клики -> f(порт) в соседней клике

    def __repr__(self) -> str:
        return f"ExtremalInstance(family={self.family}, n={self.graph.n}, gamma={self.claimed_gamma})"


@dataclass
class SampleStats:
    """Статистика по выборке модели конфигураций"""
    n: int
    d: int
    trials: int  # всего сгенерировано мультиграфов
    accepted_simple: int
    mean_x3: float
    mean_x4: float
    twin_fraction: float
    references: Dict[str, float] = field(default_factory=dict)
    samples: List[Graph] = field(default_factory=list)  # первые принятые графы, если их просили сохранить

    @property
    def acceptance_rate(self) -> float:
        return self.accepted_simple / self.trials if self.trials else 0.0


@dataclass
class ConstraintFamily:
    """
    Семейство ограничений задачи о покрытии: код идентифицирующий тогда и
    только тогда, когда пересекает каждое ограничение.
    """
    n: int
    masks: List[int]
    origins: List[Tuple[str, int, int]]  # ("dominate", u, u) или ("separate", u, v)

    def __len__(self) -> int:
        return len(self.masks)

    def singletons(self) -> VertexSet:
        mask = 0
        for m in self.masks:
            if m.bit_count() == 1:
                mask |= m
        return VertexSet(self.n, mask)

    def is_hit_by(self, code: VertexSet) -> bool:
        return all(m & code.mask for m in self.masks)


@dataclass
class SolveOutcome:
    """Результат решателя: размер, код и флаг доказанной оптимальности"""
    gamma: int
    code: VertexSet
    optimal: bool
    method: str
    nodes: int = 0
    elapsed: float = 0.0
