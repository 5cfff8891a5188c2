"""
Входные форматы: ODL и формат обмена
"""

from .lexer import SourcePosition, Token, TokenType, tokenize
from .parser import parse_source, parse_unit, write_source
from .interchange import load_model_file, read_model_file, write_model_file
from .merge import load_design, load_path, merge_models

__all__ = [
    'SourcePosition', 'Token', 'TokenType', 'tokenize',
    'parse_source', 'parse_unit', 'write_source',
    'load_model_file', 'read_model_file', 'write_model_file',
    'load_design', 'load_path', 'merge_models',
]
