"""
Utils модуль - логирование, ошибки, константы, проверка масштабирования
"""
