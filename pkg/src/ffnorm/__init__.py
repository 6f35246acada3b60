"""Norm equations in global function fields over prime finite fields."""

from .arith import Poly, RatFunc
from .field import FieldElement, FieldError, FunctionField

__all__ = ["FieldElement", "FieldError", "FunctionField", "Poly", "RatFunc"]
