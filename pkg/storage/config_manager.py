"""
Управление twomus.json и конфигурацией
"""
import copy
import json
import os
from typing import Any, Dict, Optional

from utils.constants import (
    BOUND_ENV_VAR,
    CONFIG_FILE,
    DEFAULT_HARDNESS_MAX_VERTICES,
    DEFAULT_ORACLE_MAX_CLAUSES,
    DEFAULT_ORACLE_MAX_VERTICES,
    DEFAULT_SCALING_SIZES,
)
from utils.logger import get_logger

logger = get_logger('TwoMus.Config')

BOUND_KEYS = ('oracle.max_clauses', 'oracle.max_vertices', 'hardness.max_vertices')


class ConfigManager:
    """Менеджер конфигурации"""

    DEFAULT_CONFIG = {
        'oracle': {
            'max_clauses': DEFAULT_ORACLE_MAX_CLAUSES,
            'max_vertices': DEFAULT_ORACLE_MAX_VERTICES,
        },
        'hardness': {
            'max_vertices': DEFAULT_HARDNESS_MAX_VERTICES,
        },
        'enum': {
            'check_invariants': False,
        },
        'logging': {
            'level': 'WARNING',
        },
        'scaling': {
            'sizes': list(DEFAULT_SCALING_SIZES),
        },
    }

    def __init__(self, config_path: Optional[str] = None, env: Optional[Dict[str, str]] = None):
        """
        Args:
            config_path: Путь к JSON-конфигу (None -> twomus.json, если есть)
            env: Окружение (по умолчанию os.environ)
        """
        if config_path is not None and (not isinstance(config_path, str) or not config_path):
            raise ValueError("config_path должен быть непустой строкой")

        self.config_path = config_path or CONFIG_FILE
        self.env = os.environ if env is None else env
        self.config = self.load()
        self._apply_env_overrides()

        logger.debug(f"✓ ConfigManager инициализирован ({self.config_path})")

    def load(self) -> Dict:
        """Дефолты, поверх них - содержимое файла, если он читается как JSON-объект"""
        merged = copy.deepcopy(self.DEFAULT_CONFIG)
        loaded = self._read_file()
        if loaded is not None:
            _deep_merge(merged, loaded)
            logger.info(f"✓ Конфиг загружен: {self.config_path}")
        return merged

    def _read_file(self) -> Optional[Dict]:
        if not os.path.isfile(self.config_path):
            logger.debug(f"⊘ {self.config_path} отсутствует, только дефолты")
            return None
        try:
            with open(self.config_path, encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"⚠ {self.config_path} не прочитан ({e}), только дефолты")
            return None
        if not isinstance(data, dict):
            logger.warning(f"⚠ {self.config_path}: ожидается JSON-объект, только дефолты")
            return None
        return data

    def _apply_env_overrides(self) -> None:
        """TWOMUS_BOUND перекрывает все границы перебора"""
        raw = self.env.get(BOUND_ENV_VAR, '')
        if not raw:
            return
        bound = int(raw) if raw.isdigit() else 0
        if bound <= 0:
            logger.warning(f"⚠ {BOUND_ENV_VAR}={raw!r} не положительное целое, игнорируется")
            return

        for key in BOUND_KEYS:
            self.set(key, bound)
        logger.info(f"✓ Границы перебора из {BOUND_ENV_VAR}: {bound}")

    def get(self, key: str, default: Any = None) -> Any:
        """Значение по ключу вида 'oracle.max_clauses'"""
        node: Any = self.config
        for part in key.split('.') if key else ():
            node = node.get(part) if isinstance(node, dict) else None
            if node is None:
                return default
        return default if node is self.config else node

    def set(self, key: str, value: Any) -> bool:
        """Записать значение; промежуточные разделы создаются"""
        *sections, leaf = key.split('.')
        node = self.config
        for part in sections:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                logger.error(f"✗ {key}: раздел '{part}' не словарь")
                return False
        node[leaf] = value
        logger.debug(f"✓ {key} = {value}")
        return True

    def merge(self, updates: Dict) -> bool:
        """Глубокое слияние словаря в текущий конфиг"""
        if not isinstance(updates, dict):
            logger.error("✗ merge ожидает dict")
            return False
        _deep_merge(self.config, updates)
        return True


def _deep_merge(target: Dict, source: Dict) -> None:
    for key, value in source.items():
        if isinstance(target.get(key), dict) and isinstance(value, dict):
            _deep_merge(target[key], value)
        else:
            target[key] = value
