"""Kazhdan-Lusztig style polynomials of Hecke and generalized Temperley-Lieb algebras."""

from ._tlkl import GateError, Session, SizeError, table, verify

__all__ = ["GateError", "Session", "SizeError", "table", "verify"]
