"""Kronecker coefficients, Horn inequalities and saturated Newton polytopes."""
