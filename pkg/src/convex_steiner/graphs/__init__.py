"""Code for the graphs module."""
