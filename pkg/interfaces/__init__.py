"""Abstract service interfaces."""
