"""Исключения предметной области: графы, коды, решатели"""


class InvalidGraphError(Exception):
    """Граф нарушает инварианты (петли, кратные рёбра, изолированные вершины)"""
    pass


class InvalidVertexError(InvalidGraphError):
    """Вершина вне диапазона 0..n-1 или недопустимая пара вершин"""
    pass


class TwinsPresentError(Exception):
    """В графе есть близнецы (N[u] = N[v]) - идентифицирующего кода не существует"""

    def __init__(self, message: str, twins: list = None):
        super().__init__(message)
        self.twins = twins or []


class GirthTooSmallError(Exception):
    """Обхват графа меньше требуемого"""
    pass


class MinDegreeTooSmallError(Exception):
    """Минимальная степень графа меньше требуемой"""
    pass


class DomainViolationError(Exception):
    """Параметр вне области определения формулы"""
    pass


class SamplingExhaustedError(Exception):
    """Исчерпан лимит попыток сэмплирования простого графа"""
    pass


class CorpusCapExceededError(Exception):
    """Запрошен корпус графов больше допустимого порядка"""
    pass


class BudgetExceededError(Exception):
    """Решатель не доказал оптимальность за отведённое время"""

    def __init__(self, message: str, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent  # лучшее найденное решение (optimal=False)
