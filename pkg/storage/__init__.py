"""
Storage модуль - конфигурация, модели результатов, экспорт MUS
"""
