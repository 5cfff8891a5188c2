"""
Точка входа для запуска через python -m oodq
"""
import sys

from oodq.main import run

if __name__ == "__main__":
    sys.exit(run())
