"""Code for the solvers module."""
