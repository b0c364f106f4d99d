"""Script parser, session evaluator and command line interface."""

from .parser import ParseError, parse, parse_poly, parse_vec
from .session import Result, Session, SessionError, run_text

__all__ = ["ParseError", "parse", "parse_poly", "parse_vec", "Result", "Session", "SessionError", "run_text"]
