"""Double (bisymmetric) Macdonald polynomials and their superspace relatives."""

from .bialgebra import BiSymPoly
from .bisym import (double_H, double_J, double_kostka, double_P, double_P_factorized,
                    double_P_oracle, double_Q)
from .coeffs import RatFunc, parse
from .partitions import SuperPartition, pairs, parse_pair, parse_super
from .superspace import super_H, super_kostka, super_P
from .symfunc import SymPoly

__all__ = [
    "BiSymPoly", "RatFunc", "SuperPartition", "SymPoly", "double_H", "double_J",
    "double_P", "double_P_factorized", "double_P_oracle", "double_Q", "double_kostka",
    "pairs", "parse", "parse_pair", "parse_super", "super_H", "super_P", "super_kostka",
]
