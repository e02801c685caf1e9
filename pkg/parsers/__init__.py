"""Instance file parsers package"""

from .dimacs_parser import DimacsParser, DimacsParseError, parse_dimacs, write_dimacs

__all__ = ['DimacsParser', 'DimacsParseError', 'parse_dimacs', 'write_dimacs']
