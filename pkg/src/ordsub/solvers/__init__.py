"""Specialised solvers: shift algorithms, inclusion DP and the two FPT DPs."""
