"""Исключения для технической инфраструктуры приложения"""


class StorageError(Exception):
    """Ошибка при работе с хранилищем данных"""
    pass


class GraphFormatError(Exception):
    """Некорректный файл графа в формате списка рёбер"""
    pass


class AppValidationError(Exception):
    """Ошибка при валидации аргументов команды"""
    pass
