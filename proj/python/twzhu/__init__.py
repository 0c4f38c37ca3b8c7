"""Python access to the twzhu core."""

import json
from fractions import Fraction

from ._twzhu import ConfigError, fusion_bound, hom_dim
from ._twzhu import run_file as _run_file
from ._twzhu import run_text as _run_text
from ._twzhu import twisted_bottom_weight as _twisted_bottom_weight

__all__ = ["ConfigError", "fusion_bound", "hom_dim", "run", "run_file", "twisted_bottom_weight"]


def _unpack(result):
    report, tables, passed = result
    return {"report": json.loads(report), "tables": json.loads(tables) if tables else None, "passed": passed}


def run(text, dump_tables=False, timing=False):
    """Run a scenario given as text; returns a dict with report, tables and passed."""
    return _unpack(_run_text(text, dump_tables, timing))


def run_file(path, dump_tables=False, timing=False):
    return _unpack(_run_file(str(path), dump_tables, timing))


def twisted_bottom_weight():
    return Fraction(_twisted_bottom_weight())
