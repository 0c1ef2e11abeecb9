"""Core engine: groups, simplicial objects and the fibration of classifying spaces."""
