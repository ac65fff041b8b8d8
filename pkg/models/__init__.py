"""Data models: isometries, points, words, reports and configuration."""
