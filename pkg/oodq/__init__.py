"""
Анализатор качества объектно-ориентированного дизайна
"""

__version__ = "1.0.0"
