"""General utility classes, functions and constants."""
VERSION = "2026.10.19"
GENERATOR = f"smallcovers {VERSION}"
