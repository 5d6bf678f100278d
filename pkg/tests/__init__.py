"""Test suite package for deep research agent."""

