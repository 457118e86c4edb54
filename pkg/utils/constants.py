"""
Константы приложения
"""

# Границы для переборных проверок
DEFAULT_ORACLE_MAX_CLAUSES = 20
DEFAULT_ORACLE_MAX_VERTICES = 24
DEFAULT_HARDNESS_MAX_VERTICES = 16

# Переменная окружения, переопределяющая все границы перебора
BOUND_ENV_VAR = "TWOMUS_BOUND"

# Файлы
CONFIG_FILE = "twomus.json"

# Семейства 2-MU дефекта 1
FAMILY_TAGS = ('Ia', 'Ib', 'IIa', 'IIb', 'III', 'IV')
NO_FAMILY = '-'

# Трасса перечисления
TRACE_COLUMNS = ('step', 'event', 'y', 'R', 'P', 'notes')
EVENT_INIT = "init call"
EVENT_DFS = "DFS(P,y)"
EVENT_CLASH = "clash"
EVENT_OUTPUT = "output"
EVENT_SILENT = "output (silent)"
NO_VALUE = "--"

# Режимы поиска по unit-клаузам
SWEEP_MODES = ('exactly-two', 'exactly-one', 'at-least-one')

# Проверка масштабирования
DEFAULT_SCALING_SIZES = [10_000, 100_000, 1_000_000]
LINEARITY_RATIO_LIMIT = 15.0
