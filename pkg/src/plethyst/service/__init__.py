"""HTTP service wrapping the plethysm engine."""
