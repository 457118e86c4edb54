"""
Oracle модуль - переборные эталоны и генераторы семейств
"""
