"""Super Nabla operator on modified Macdonald polynomials, with exact arithmetic
and the combinatorial models used to verify its t=1 expansions."""

__version__ = "0.1.0"
