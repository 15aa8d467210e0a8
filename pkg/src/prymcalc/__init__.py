"""prymcalc: exact divisor-class calculus for the Prym moduli space in genus 15."""

__version__ = "0.1.0"
__all__ = ["__version__"]
