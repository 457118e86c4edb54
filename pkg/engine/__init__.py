"""
Engine модуль - 2-SAT, csDP, распознавание 2-MU, поиск и перечисление MUS
"""
