#!/usr/bin/env python3
"""
twomus - минимально невыполнимые 2-CNF
Точка входа приложения
"""
import sys
import os

# Добавить текущую директорию в путь
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app import main

if __name__ == '__main__':
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n⏹ Остановлено пользователем", file=sys.stderr)
        sys.exit(130)
