"""The validated value models used and emitted by this package."""

__all__ = ["base", "polytopes", "records", "symmetries"]
