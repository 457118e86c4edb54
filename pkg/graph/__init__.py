"""
Graph модуль - импликационный граф, пути, регулярные пути
"""
