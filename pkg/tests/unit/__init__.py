"""Unit tests package."""

