"""
Tests модуль - тесты, фикстуры и эталонные прогоны
"""
