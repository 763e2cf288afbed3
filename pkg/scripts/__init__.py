"""Scripts utilities package."""
