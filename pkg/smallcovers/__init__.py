"""Exact enumeration and counting of small covers over cubes and products of simplices."""
from smallcovers.runner import Runner

__all__ = ["Runner", "counts", "covers", "dags", "gf2", "schema"]
