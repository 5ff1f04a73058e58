"""Query language and command-line tool."""

from .evaluator import Context, Result, evaluate, query
from .grammar import Query, parse, show
from .main import main

__all__ = ["Context", "Query", "Result", "evaluate", "main", "parse", "query", "show"]
