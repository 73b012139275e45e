"""Exact Steiner sets on convex bipartite graphs."""
