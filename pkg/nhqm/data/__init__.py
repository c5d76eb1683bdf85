"""Example operators and states in the JSON matrix format."""
