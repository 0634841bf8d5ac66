"""Exact computations with finite-dimensional coalgebras, comodules and Hopf
algebras: Nakayama functors, Frobenius pairings, cointegrals and the
modular data they determine."""
from .coalgebra import Coalgebra, check_coalgebra
from .comodule import Comodule
from .exactfield import PrimeField, Q, parse_field
from .hopf import HopfAlgebra, check_hopf

__version__ = "0.1.0"

__all__ = ["Coalgebra", "Comodule", "HopfAlgebra", "PrimeField", "Q", "check_coalgebra", "check_hopf",
           "parse_field"]
