"""Code for the reductions module."""
