"""Service implementations."""

