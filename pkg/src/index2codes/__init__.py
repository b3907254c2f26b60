"""Exact weight distributions of two-zero cyclic codes via index-2 Gauss sums.

The package is organised bottom-up:

* :mod:`index2codes.finite_field` -- prime-power fields, towers, trace, norm, logs
* :mod:`index2codes.exact_numbers` -- cyclotomic and imaginary-quadratic integers
* :mod:`index2codes.character_sums` -- brute-force Gauss and Weil sums
* :mod:`index2codes.gauss_index2` -- closed-form index-2 Gauss sums and lifting
* :mod:`index2codes.code_model` -- the codes, their codewords and character-sum counts
* :mod:`index2codes.predictor` -- closed-form ten-row table and weight enumerators
* :mod:`index2codes.cli` -- command line entry point
"""

__version__ = "0.1.0"
